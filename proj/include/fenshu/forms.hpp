#ifndef FENSHU_FORMS_HPP
#define FENSHU_FORMS_HPP

#include <optional>
#include <string>
#include <string_view>

namespace fenshu {

/// Surface pattern of a fraction expression.
///  Mono        Den + fen              (numerator 1 implied)
///  A           Den + fen + Num
///  B           Den + fen + MW + Num
///  C           Den + fen + zhi + Num
///  D           Den + fen + MW + zhi + Num
///  LexHalf     ban           (1/2)
///  LexThird    shaoban       (1/3)
///  LexTwoThirds taiban       (2/3)
enum class FractionForm { Mono, A, B, C, D, LexHalf, LexThird, LexTwoThirds };

inline bool form_has_zhi(FractionForm f) {
    return f == FractionForm::C || f == FractionForm::D;
}
inline bool form_has_mw_slot(FractionForm f) {
    return f == FractionForm::Mono || f == FractionForm::B || f == FractionForm::D ||
           f == FractionForm::LexHalf || f == FractionForm::LexThird ||
           f == FractionForm::LexTwoThirds;
}
inline bool form_is_lexical(FractionForm f) {
    return f == FractionForm::LexHalf || f == FractionForm::LexThird ||
           f == FractionForm::LexTwoThirds;
}
inline bool form_is_bidimensional(FractionForm f) {
    return f == FractionForm::A || f == FractionForm::B || f == FractionForm::C ||
           f == FractionForm::D;
}

std::string form_name(FractionForm f);
std::optional<FractionForm> form_from_name(std::string_view name);

/// Surface pattern crossed with the unit-fraction flag: a1..d2 etc.
struct PatternCategory {
    FractionForm form;
    bool unit_fraction = false;

    bool operator==(const PatternCategory&) const = default;
};

std::string category_name(const PatternCategory& c);
std::optional<PatternCategory> category_from_name(std::string_view name);

/// Syntactic position of a fraction expression. Inserted means used as
/// the predicate of a quantified noun or as the object of a verb.
enum class InsertionContext { Uninserted, PredicateOfNoun, ObjectOfVerb, Unknown };

inline bool is_inserted(InsertionContext c) {
    return c == InsertionContext::PredicateOfNoun || c == InsertionContext::ObjectOfVerb;
}

std::string insertion_name(InsertionContext c);
std::optional<InsertionContext> insertion_from_name(std::string_view name);

enum class LigatureStyle { Manuscript, Plain };

} // namespace fenshu

#endif
