#ifndef FENSHU_FRACTIONS_HPP
#define FENSHU_FRACTIONS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fenshu/bigrat.hpp"
#include "fenshu/forms.hpp"
#include "fenshu/numerals.hpp"
#include "fenshu/quantity.hpp"
#include "fenshu/units.hpp"

namespace fenshu {

enum class ZhiPolicy { Auto, Force, Suppress };
enum class YouPolicy { Auto, Force, Suppress };

struct RenderOptions {
    std::optional<FractionForm> form; // fixed surface pattern
    bool auto_form = false;           // pick via select_form; wins over the quantity's own form
    ZhiPolicy zhi = ZhiPolicy::Auto;
    YouPolicy you = YouPolicy::Auto;
    LigatureStyle ligatures = LigatureStyle::Manuscript;
    InsertionContext insertion = InsertionContext::Uninserted;
    char32_t seventy = kDefaultSeventyLigature;
};

struct FormChoice {
    FractionForm form;
    bool zhi = false;
};

/// Deterministic surface choice for a proper fraction: 1/2 is always 半;
/// 1/3 and 2/3 prefer the lexical word next to a measure word and the
/// regular 三分 forms without one; other unit fractions without a measure
/// word stay monodimensional when uninserted; insertion draws zhi.
FormChoice select_form(const Rational& value, const std::optional<Unit>& unit,
                       InsertionContext insertion);

/// Majority linker choice when a quantity is built from a bare value.
bool default_you(FractionForm form, bool mixed);

/// One fraction expression. Patterns: Mono Den+分(+MW); A Den+分+Num;
/// B Den+分+MW+Num; C Den+分+之+Num; D Den+分+MW+之+Num; lexical 半,
/// 少半, 大半 (+MW).
std::string render_fraction(const Rational& value, const std::optional<Unit>& unit,
                            const RenderOptions& opts = {});

/// Noun, integer parts, optional 有/又, fraction with the measure word
/// repeated after 分 in forms B and D.
std::string render_quantity(const Quantity& q, const RenderOptions& opts = {});

struct ParseOptions {
    const UnitRegistry* registry = nullptr; // builtin when null
    char32_t seventy = kDefaultSeventyLigature;
    /// Read a trailing "N 分" as a numerator over an elided denominator
    /// (series like wild cat 8 卌九分 = 8 49/[72]).
    bool elision_series = false;
    /// Accept improper stated numerators and missing illegible numerators,
    /// flagging instead of failing.
    bool allow_anomalies = false;
    std::optional<Dimension> shi_dimension; // caller hint for 石
};

/// Inverse of render_quantity, plus the attested irregularities: implicit
/// leading 1 before a unit, omitted and tripled measure words, elided
/// denominators.
Quantity parse_quantity(std::string_view text, const ParseOptions& opts = {});

PatternCategory classify(const Quantity& q);
PatternCategory classify(std::string_view text, const ParseOptions& opts = {});

/// Fills elided denominators from the most recent explicit one (or a
/// divisor announced beforehand by n 成). Inputs stay untouched; results
/// must be proper.
std::vector<Quantity> resolve_elision(const std::vector<Quantity>& seq,
                                      const std::optional<BigInt>& divisor = std::nullopt);

struct ProductOperand {
    Rational value;
    bool bare_integer = false; // parsed as a plain integer name
};

struct InferenceResult {
    Rational left;
    Rational right;
    int reinterpreted = -1; // -1 none, 0 left, 1 right
    bool matches = false;   // product equals the stated result
};

/// An integer name k standing where a factor is expected may mean 1/k;
/// the stated result decides (e.g. 1/6 x "7" = 1/42 reads 7 as 1/7).
InferenceResult infer_product_operand(const ProductOperand& a, const ProductOperand& b,
                                      const Rational& stated_result);

} // namespace fenshu

#endif
