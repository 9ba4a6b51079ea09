#ifndef FENSHU_QUANTITY_HPP
#define FENSHU_QUANTITY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fenshu/bigrat.hpp"
#include "fenshu/forms.hpp"
#include "fenshu/units.hpp"

namespace fenshu {

enum class QuantityFlag {
    MwOmitted,       // measure word contextually absent from the fraction
    MwTripled,       // superfluous measure word repeated after the numerator
    CopyistError,    // surface anomaly; a corrected value travels alongside
    IllegibleDigits, // digits lost on the strip
    ImproperLiteral, // stated numerator >= denominator
    AmbiguousYiBan,  // 一半 read as the single numeral 1/2
    ElidedDen,       // denominator understood from the series context
    LeadingOneWarning,
};

std::string flag_name(QuantityFlag f);
std::optional<QuantityFlag> flag_from_name(std::string_view name);

struct IntPart {
    BigInt coeff{1};
    std::optional<Unit> unit;
    bool implicit_one = false; // the 1 is not written, e.g. ∅尺二寸
};

struct FracPart {
    BigInt num{0};
    BigInt den{0}; // 0 = elided denominator awaiting resolution
    std::optional<Unit> unit;
    FractionForm form = FractionForm::Mono;

    bool elided() const { return den == 0; }
    bool has_zhi() const { return form_has_zhi(form); }
    Rational value() const {
        if (elided()) throw DomainError("fraction has an unresolved elided denominator");
        return Rational(num, den);
    }
};

/// One quantification phrase: optional noun, integer parts with strictly
/// descending units, optional proper-fraction tail.
struct Quantity {
    std::optional<std::string> noun;
    std::vector<IntPart> int_parts;
    std::optional<FracPart> frac;
    bool linker_you = false;
    std::set<QuantityFlag> flags;

    bool has_flag(QuantityFlag f) const { return flags.count(f) > 0; }

    /// Total value in the smallest unit involved (or bare value when no
    /// units); throws on elided fractions.
    Rational magnitude() const;
    std::optional<Unit> magnitude_unit() const;

    /// Structural equality used by the round-trip harness: nouns, parts,
    /// units, fraction (literal num/den) and form; flags are ignored.
    bool same_shape(const Quantity& o) const;
};

/// Compact ASCII spec for a quantity, used in the corpus table and by the
/// CLI: segments separated by ';'.
///   n:金        noun
///   i:3:zhu     integer part (coefficient, pinyin unit or '-')
///   i:~:chi     implicit leading 1
///   f:5/9:zhu:B fraction (num/den, unit or '-', form M|A|B|C|D|H|S|T)
///   f:9/?:dou:A elided denominator
///   y:1         linker you present
///   g:a,b       flags
Quantity quantity_from_spec(const std::string& spec, const UnitRegistry& reg);
std::string quantity_to_spec(const Quantity& q);

} // namespace fenshu

#endif
