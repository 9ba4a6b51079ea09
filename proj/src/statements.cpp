#include "fenshu/statements.hpp"

#include "fenshu/arithmetic.hpp"
#include "fenshu/text.hpp"

namespace fenshu {

namespace {

bool is_bare_integer(const Quantity& q) {
    return !q.frac && q.int_parts.size() == 1 && !q.int_parts[0].unit;
}

Measured measured_of(const Quantity& q) {
    return {q.magnitude(), q.magnitude_unit()};
}

} // namespace

ProductCheck check_product(const Quantity& lhs, const Quantity& rhs, const Quantity& result) {
    ProductCheck out;
    Measured want = measured_of(result);

    auto attempt = [&](const Measured& a, const Measured& b, int which) {
        Measured got;
        try {
            got = mul_quantities(a, b);
        } catch (const UnitError&) {
            return false;
        }
        if (!(got.value == want.value)) return false;
        // a stated result may carry the base length glyph of a promoted
        // square/cubic unit, or no unit at all
        if (want.unit && got.unit && want.unit->glyph != got.unit->glyph) return false;
        out.matches = true;
        out.reinterpreted = which;
        out.left = a.value;
        out.right = b.value;
        out.product = got.value;
        return true;
    };

    Measured a = measured_of(lhs);
    Measured b = measured_of(rhs);
    if (attempt(a, b, -1)) return out;
    if (is_bare_integer(lhs) && a.value.den() == 1 && a.value.num() >= 1) {
        Measured flipped{Rational(BigInt(1), a.value.num()), a.unit};
        if (attempt(flipped, b, 0)) return out;
    }
    if (is_bare_integer(rhs) && b.value.den() == 1 && b.value.num() >= 1) {
        Measured flipped{Rational(BigInt(1), b.value.num()), b.unit};
        if (attempt(a, flipped, 1)) return out;
    }
    out.left = a.value;
    out.right = b.value;
    return out;
}

namespace {

std::u32string strip_ye(std::u32string s) {
    while (!s.empty() && (s.back() == U'也' || s.back() == U' ')) s.pop_back();
    return s;
}

std::optional<Quantity> try_parse(const std::u32string& cps, const ParseOptions& opts) {
    if (cps.empty()) return std::nullopt;
    try {
        return parse_quantity(encode_utf8(cps), opts);
    } catch (const ParseError&) {
        return std::nullopt;
    } catch (const UnitError&) {
        return std::nullopt;
    }
}

} // namespace

Statement parse_statement(std::string_view text, const ParseOptions& opts) {
    std::u32string cps = strip_ye(decode_utf8(Normalizer{opts.seventy}(text)));
    if (cps.empty()) throw ParseError("empty statement");

    // "n 成": a division by n announced ahead of the result
    if (cps.back() == U'成') {
        Statement st;
        st.kind = Statement::Kind::Division;
        st.divisor = parse_integer(encode_utf8(cps.substr(0, cps.size() - 1)), opts.seventy);
        if (st.divisor < 1) throw ParseError("division by zero");
        return st;
    }

    // "約之 Z": the result of a reduction, 之 resuming the fraction at hand
    if (cps.size() >= 2 && cps[0] == U'約' && cps[1] == U'之') {
        Statement st;
        st.kind = Statement::Kind::Reduction;
        st.result = parse_quantity(encode_utf8(cps.substr(2)), opts);
        return st;
    }

    size_t cheng = cps.find(U'乘');
    if (cheng == std::u32string::npos)
        throw ParseError("no statement template matches \"" + std::string(text) + "\"");

    Statement st;
    st.kind = Statement::Kind::Product;
    std::u32string lhs_text = cps.substr(0, cheng);
    if (!lhs_text.empty() && lhs_text.back() == U'而') lhs_text.pop_back();
    if (!lhs_text.empty()) st.lhs = parse_quantity(encode_utf8(lhs_text), opts);

    // Y and Z are juxtaposed; try every split where both sides parse, and
    // prefer the one the arithmetic confirms.
    std::u32string rest = cps.substr(cheng + 1);
    std::vector<std::pair<Quantity, Quantity>> valid;
    for (size_t cut = 1; cut < rest.size(); ++cut) {
        auto y = try_parse(rest.substr(0, cut), opts);
        if (!y) continue;
        auto z = try_parse(rest.substr(cut), opts);
        if (!z) continue;
        valid.emplace_back(std::move(*y), std::move(*z));
    }
    if (valid.empty())
        throw ParseError("cannot split factor and result in \"" + std::string(text) + "\"");
    size_t chosen = 0;
    if (valid.size() > 1 && st.lhs) {
        for (size_t k = 0; k < valid.size(); ++k) {
            if (check_product(*st.lhs, valid[k].first, valid[k].second).matches) {
                chosen = k;
                break;
            }
        }
    }
    st.rhs = std::move(valid[chosen].first);
    st.result = std::move(valid[chosen].second);
    return st;
}

} // namespace fenshu
