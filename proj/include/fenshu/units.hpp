#ifndef FENSHU_UNITS_HPP
#define FENSHU_UNITS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fenshu/bigrat.hpp"
#include "fenshu/forms.hpp"

namespace fenshu {

enum class Dimension { Length, Area, Volume, Capacity, Weight, Currency, Count };

std::string dimension_name(Dimension d);
std::optional<Dimension> dimension_from_name(std::string_view name);

/// A Qin-Han measure word. ratio_to_base is exact (base units per one of
/// this unit). Units convert only within the same island: lengths share a
/// chi base, capacities a sheng base, and so on; every count-like noun is
/// its own island. Square and cubic units reuse the length glyph with a
/// promoted dimension and no special marker.
struct Unit {
    std::string glyph;       // plain form used when rendering Plain style
    std::string glyph_ms;    // manuscript spelling (朱 for 銖)
    std::string pinyin;      // tone-stripped, for terminals without CJK input
    Dimension dimension = Dimension::Length;
    Rational ratio_to_base{BigInt(1), BigInt(1)};
    std::string island;      // conversion family key

    bool operator==(const Unit& o) const {
        return glyph == o.glyph && dimension == o.dimension && island == o.island;
    }
    const std::string& render_glyph(LigatureStyle style) const {
        return style == LigatureStyle::Manuscript ? glyph_ms : glyph;
    }
};

struct UnitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class UnitRegistry {
public:
    /// Registry with the attested units and their exact ratios.
    static const UnitRegistry& builtin();

    /// Plain-text table: glyph, pinyin, dimension, ratio numerator, ratio
    /// denominator, then optional manuscript glyph and comma-separated
    /// aliases. Tab-separated, # comments.
    static UnitRegistry load(const std::string& path);

    UnitRegistry() = default;

    void add(Unit u, const std::vector<std::string>& aliases = {});

    /// Lookup by glyph or alias. 石 is ambiguous between capacity and
    /// weight; pass a hint to resolve it, otherwise both entries return.
    std::vector<Unit> find_glyph(std::string_view glyph) const;
    std::optional<Unit> find_glyph(std::string_view glyph, Dimension hint) const;
    std::vector<Unit> find_pinyin(std::string_view name) const;

    bool is_unit_glyph_prefix(std::u32string_view text) const; // longest-match helper
    std::optional<size_t> match_unit(std::u32string_view text) const; // glyph length in cps

    const std::vector<Unit>& all() const { return units_; }

private:
    std::vector<Unit> units_;
    std::vector<std::pair<std::string, size_t>> aliases_; // alias glyph -> index
};

/// Exact rescale between units of the same dimension and island.
Rational convert(const Rational& value, const Unit& from, const Unit& to);

struct DecomposedPart {
    BigInt coeff;
    Unit unit;
};

struct Decomposition {
    std::vector<DecomposedPart> parts; // zero ranks omitted
    Rational remainder;                // proper fraction of the last chain unit
    Unit remainder_unit;
};

/// Greedy integer extraction along a strictly descending unit chain with an
/// exact proper-fraction remainder; recomposition equals the input.
Decomposition decompose(const Rational& value, const Unit& unit, const std::vector<Unit>& chain);

/// Length x Length = Area, Length x Area = Volume; scalars pass through.
Dimension dim_product(Dimension a, Dimension b);

/// Grain-like nouns pull the ambiguous 石 towards capacity, metal towards
/// weight.
std::optional<Dimension> noun_dimension_hint(std::u32string_view noun);

/// Unit for the square/cubic reuse of a length glyph.
Unit promote_unit(const Unit& length_unit, Dimension target);

} // namespace fenshu

#endif
