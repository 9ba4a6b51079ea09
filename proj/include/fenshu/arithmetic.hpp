#ifndef FENSHU_ARITHMETIC_HPP
#define FENSHU_ARITHMETIC_HPP

#include "fenshu/bigrat.hpp"
#include "fenshu/units.hpp"

namespace fenshu {

/// num/gcd over den/gcd.
Rational reduce(const Rational& f);

/// Halves numerator and denominator; both must be even. Iterating to a
/// fixed point and then reducing equals reduce() directly.
Rational halve_both(const Rational& f);

/// Exact product, unreduced unless asked.
Rational mul(const Rational& a, const Rational& b, bool reduce_result = false);

/// Exact sum over the lcm denominator.
Rational add(const Rational& a, const Rational& b);

/// total / n, reduced.
Rational share(const Rational& total, const BigInt& n);

/// value / n, left unreduced: 74000/36 keeps its remainder as 20/36.
Rational divide_by(const Rational& value, const BigInt& n);

struct Measured {
    Rational value;
    std::optional<Unit> unit; // empty = dimensionless
};

/// Product of dimensioned quantities. Same-dimension operands are first
/// brought to the larger of the two units, and the dimension is promoted
/// (length x length = area). A dimensionless operand scales the other.
Measured mul_quantities(const Measured& a, const Measured& b);

} // namespace fenshu

#endif
