#ifndef FENSHU_STATEMENTS_HPP
#define FENSHU_STATEMENTS_HPP

#include <optional>
#include <string_view>

#include "fenshu/fractions.hpp"

namespace fenshu {

/// The three arithmetical statement templates:
///   product    "X (而)? 乘 Y Z (也)?"  -- X may be carried from context
///   reduction  "約之 Z"
///   division   "n 成"
struct Statement {
    enum class Kind { Product, Reduction, Division };
    Kind kind = Kind::Product;
    std::optional<Quantity> lhs; // empty when the first factor is contextual
    std::optional<Quantity> rhs;
    std::optional<Quantity> result;
    BigInt divisor{0};
};

Statement parse_statement(std::string_view text, const ParseOptions& opts = {});

/// Value check for a product statement; applies the integer-as-fraction
/// reading when the plain one fails. lhs may be supplied from context.
struct ProductCheck {
    bool matches = false;
    int reinterpreted = -1; // operand index read as 1/k
    Rational left{BigInt(0), BigInt(1)};
    Rational right{BigInt(0), BigInt(1)};
    Rational product{BigInt(0), BigInt(1)};
};

ProductCheck check_product(const Quantity& lhs, const Quantity& rhs, const Quantity& result);

} // namespace fenshu

#endif
