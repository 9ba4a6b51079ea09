#include "fenshu/forms.hpp"

namespace fenshu {

std::string form_name(FractionForm f) {
    switch (f) {
    case FractionForm::Mono: return "mono";
    case FractionForm::A: return "a";
    case FractionForm::B: return "b";
    case FractionForm::C: return "c";
    case FractionForm::D: return "d";
    case FractionForm::LexHalf: return "lex_half";
    case FractionForm::LexThird: return "lex_third";
    case FractionForm::LexTwoThirds: return "lex_two_thirds";
    }
    return "?";
}

std::optional<FractionForm> form_from_name(std::string_view name) {
    if (name == "mono" || name == "M" || name == "m") return FractionForm::Mono;
    if (name == "a" || name == "A") return FractionForm::A;
    if (name == "b" || name == "B") return FractionForm::B;
    if (name == "c" || name == "C") return FractionForm::C;
    if (name == "d" || name == "D") return FractionForm::D;
    if (name == "lex_half" || name == "H" || name == "half") return FractionForm::LexHalf;
    if (name == "lex_third" || name == "S" || name == "third") return FractionForm::LexThird;
    if (name == "lex_two_thirds" || name == "T" || name == "two_thirds")
        return FractionForm::LexTwoThirds;
    return std::nullopt;
}

std::string category_name(const PatternCategory& c) {
    if (form_is_bidimensional(c.form))
        return form_name(c.form) + (c.unit_fraction ? "1" : "2");
    return form_name(c.form);
}

std::optional<PatternCategory> category_from_name(std::string_view name) {
    if (name == "mono") return PatternCategory{FractionForm::Mono, true};
    if (name == "lex_half" || name == "half") return PatternCategory{FractionForm::LexHalf, true};
    if (name == "lex_third" || name == "third")
        return PatternCategory{FractionForm::LexThird, true};
    if (name == "lex_two_thirds" || name == "two_thirds")
        return PatternCategory{FractionForm::LexTwoThirds, false};
    if (name.size() == 2 && (name[1] == '1' || name[1] == '2')) {
        auto f = form_from_name(name.substr(0, 1));
        if (f && form_is_bidimensional(*f)) return PatternCategory{*f, name[1] == '1'};
    }
    return std::nullopt;
}

std::string insertion_name(InsertionContext c) {
    switch (c) {
    case InsertionContext::Uninserted: return "uninserted";
    case InsertionContext::PredicateOfNoun: return "predicate_of_noun";
    case InsertionContext::ObjectOfVerb: return "object_of_verb";
    case InsertionContext::Unknown: return "unknown";
    }
    return "?";
}

std::optional<InsertionContext> insertion_from_name(std::string_view name) {
    if (name == "uninserted" || name == "U" || name == "u") return InsertionContext::Uninserted;
    if (name == "predicate_of_noun" || name == "P" || name == "p")
        return InsertionContext::PredicateOfNoun;
    if (name == "object_of_verb" || name == "O" || name == "o")
        return InsertionContext::ObjectOfVerb;
    if (name == "unknown" || name == "X" || name == "x") return InsertionContext::Unknown;
    return std::nullopt;
}

} // namespace fenshu
