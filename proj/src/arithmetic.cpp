#include "fenshu/arithmetic.hpp"

namespace fenshu {

Rational reduce(const Rational& f) {
    BigInt g = boost::multiprecision::gcd(f.num(), f.den());
    if (g == 0) return f; // 0/n reduces to 0/n via den/g below; gcd(0,d)=d
    return Rational(f.num() / g, f.den() / g);
}

Rational halve_both(const Rational& f) {
    if (f.num() % 2 != 0) throw DomainError("halve_both: numerator is odd");
    if (f.den() % 2 != 0) throw DomainError("halve_both: denominator is odd");
    return Rational(f.num() / 2, f.den() / 2);
}

Rational mul(const Rational& a, const Rational& b, bool reduce_result) {
    Rational p(a.num() * b.num(), a.den() * b.den());
    return reduce_result ? reduce(p) : p;
}

Rational add(const Rational& a, const Rational& b) {
    BigInt l = boost::multiprecision::lcm(a.den(), b.den());
    return Rational(a.num() * (l / a.den()) + b.num() * (l / b.den()), l);
}

Rational share(const Rational& total, const BigInt& n) {
    if (n < 1) throw DomainError("share: divisor must be >= 1");
    return reduce(Rational(total.num(), total.den() * n));
}

Rational divide_by(const Rational& value, const BigInt& n) {
    if (n < 1) throw DomainError("divide_by: divisor must be >= 1");
    return Rational(value.num(), value.den() * n);
}

Measured mul_quantities(const Measured& a, const Measured& b) {
    if (!a.unit && !b.unit) return {mul(a.value, b.value), std::nullopt};
    if (!a.unit) return {mul(a.value, b.value), b.unit};
    if (!b.unit) return {mul(a.value, b.value), a.unit};

    Dimension promoted = dim_product(a.unit->dimension, b.unit->dimension);
    if (a.unit->dimension == Dimension::Length && b.unit->dimension == Dimension::Length) {
        // 1/5 cun x 1 chi is stated as 1/50 [square] chi: work in the
        // larger unit
        const Unit& common = a.unit->ratio_to_base < b.unit->ratio_to_base ? *b.unit : *a.unit;
        Rational va = convert(a.value, *a.unit, common);
        Rational vb = convert(b.value, *b.unit, common);
        return {mul(va, vb), promote_unit(common, promoted)};
    }
    // length x area and the mirror case: both sides must already share the
    // underlying length unit glyph
    const Unit& area_side = a.unit->dimension == Dimension::Area ? *a.unit : *b.unit;
    const Unit& len_side = a.unit->dimension == Dimension::Length ? *a.unit : *b.unit;
    if (area_side.island != "area:" + len_side.island || area_side.glyph != len_side.glyph)
        throw UnitError("length x area product needs matching units, got " + len_side.glyph +
                        " and " + area_side.glyph);
    return {mul(a.value, b.value), promote_unit(len_side, promoted)};
}

} // namespace fenshu
