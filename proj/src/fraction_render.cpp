#include "fenshu/fractions.hpp"

#include "fenshu/text.hpp"

namespace fenshu {

namespace {

const Rational kHalf{BigInt(1), BigInt(2)};
const Rational kThird{BigInt(1), BigInt(3)};
const Rational kTwoThirds{BigInt(2), BigInt(3)};

FractionForm apply_zhi_policy(FractionForm f, ZhiPolicy policy) {
    switch (policy) {
    case ZhiPolicy::Auto:
        return f;
    case ZhiPolicy::Force:
        if (f == FractionForm::A) return FractionForm::C;
        if (f == FractionForm::B) return FractionForm::D;
        if (form_has_zhi(f)) return f;
        throw DomainError("zhi cannot be forced on a " + form_name(f) + " form");
    case ZhiPolicy::Suppress:
        if (f == FractionForm::C) return FractionForm::A;
        if (f == FractionForm::D) return FractionForm::B;
        return f;
    }
    return f;
}

std::string lex_word(FractionForm f) {
    switch (f) {
    case FractionForm::LexHalf: return "半";
    case FractionForm::LexThird: return "少半";
    case FractionForm::LexTwoThirds: return "大半";
    default: return "";
    }
}

} // namespace

bool default_you(FractionForm form, bool mixed) {
    // mixed numbers link with you mostly before zhi-marked fractions
    return mixed && form == FractionForm::D;
}

FormChoice select_form(const Rational& value, const std::optional<Unit>& unit,
                       InsertionContext insertion) {
    bool inserted = is_inserted(insertion);
    if (value == kHalf) return {FractionForm::LexHalf, false};
    if (value == kThird || value == kTwoThirds) {
        if (unit) return {value == kThird ? FractionForm::LexThird : FractionForm::LexTwoThirds,
                          false};
        // without a measure word the regular 三分 family is preferred;
        // insertion still decides zhi
        return inserted ? FormChoice{FractionForm::C, true} : FormChoice{FractionForm::A, false};
    }
    if (value.num() == 1 && !unit && !inserted) return {FractionForm::Mono, false};
    if (inserted)
        return unit ? FormChoice{FractionForm::D, true} : FormChoice{FractionForm::C, true};
    return unit ? FormChoice{FractionForm::B, false} : FormChoice{FractionForm::A, false};
}

namespace {

// Shared by render_fraction and render_quantity; form already resolved.
std::string render_fraction_form(const BigInt& num, const BigInt& den,
                                 const std::optional<Unit>& unit, FractionForm form,
                                 const RenderOptions& opts, bool suppress_mw) {
    if (den == 0) throw DomainError("cannot render an unresolved elided denominator");
    Rational value(num, den);
    if (!value.is_proper())
        throw DomainError("fraction must be proper, got " + value.str());

    if (form_is_lexical(form)) {
        const Rational& want = form == FractionForm::LexHalf    ? kHalf
                               : form == FractionForm::LexThird ? kThird
                                                                : kTwoThirds;
        if (value != want)
            throw DomainError("lexicalized form does not name " + value.str());
        std::string out = lex_word(form);
        if (unit && !suppress_mw) out += unit->render_glyph(opts.ligatures);
        return out;
    }

    if (form == FractionForm::Mono && num != 1)
        throw DomainError("monodimensional form implies numerator 1, got " + num.str());
    if ((form == FractionForm::B || form == FractionForm::D) && !unit)
        throw DomainError("form " + form_name(form) + " needs a measure word");
    if (den == 2)
        throw DomainError("1/2 is always the lexicalized 半; 二分 forms are unattested");

    std::string out = render_integer(den, opts.ligatures, opts.seventy);
    out += "分";
    bool mw = (form == FractionForm::Mono || form == FractionForm::B ||
               form == FractionForm::D) &&
              unit && !suppress_mw;
    if (mw) out += unit->render_glyph(opts.ligatures);
    if (form_has_zhi(form)) out += "之";
    if (form != FractionForm::Mono) out += render_integer(num, opts.ligatures, opts.seventy);
    return out;
}

} // namespace

std::string render_fraction(const Rational& value, const std::optional<Unit>& unit,
                            const RenderOptions& opts) {
    FractionForm form;
    if (opts.form) {
        form = *opts.form;
    } else {
        form = select_form(value, unit, opts.insertion).form;
    }
    form = apply_zhi_policy(form, opts.zhi);
    return render_fraction_form(value.num(), value.den(), unit, form, opts, false);
}

std::string render_quantity(const Quantity& q, const RenderOptions& opts) {
    if (q.frac && q.frac->elided())
        throw DomainError("quantity still carries an elided denominator");
    // unit chain sanity: shared dimension, strictly descending, fraction last
    const Unit* prev = nullptr;
    for (const auto& p : q.int_parts) {
        if (p.unit && prev) {
            if (p.unit->island != prev->island)
                throw UnitError("unit dimensions differ inside one quantity");
            if (!(p.unit->ratio_to_base < prev->ratio_to_base))
                throw UnitError("integer part units must strictly descend");
        }
        if (p.unit) prev = &*p.unit;
    }
    if (q.frac && q.frac->unit && prev) {
        if (q.frac->unit->island != prev->island)
            throw UnitError("unit dimensions differ inside one quantity");
        if (prev->ratio_to_base < q.frac->unit->ratio_to_base)
            throw UnitError("fraction unit may not exceed the last integer unit");
    }

    std::string out;
    if (q.noun) out += *q.noun;
    for (const auto& p : q.int_parts) {
        if (!p.implicit_one) out += render_integer(p.coeff, opts.ligatures, opts.seventy);
        if (p.unit) out += p.unit->render_glyph(opts.ligatures);
    }
    if (!q.frac) {
        if (q.int_parts.empty()) throw DomainError("empty quantity");
        return out;
    }

    FractionForm form = q.frac->form;
    if (opts.form) form = *opts.form;
    else if (opts.auto_form) {
        Rational v(q.frac->num, q.frac->den);
        form = select_form(v, q.frac->unit, opts.insertion).form;
    }
    form = apply_zhi_policy(form, opts.zhi);

    bool you = false;
    switch (opts.you) {
    case YouPolicy::Force: you = true; break;
    case YouPolicy::Suppress: you = false; break;
    case YouPolicy::Auto: you = q.linker_you; break;
    }
    // the linker joins an integer and a fraction; a bare fraction takes none
    if (you && !q.int_parts.empty())
        out += opts.ligatures == LigatureStyle::Manuscript ? "有" : "又";

    // forms A and C have no measure-word slot, which is how omitted-MW
    // surfaces reproduce; the semantic unit stays on the fraction
    out += render_fraction_form(q.frac->num, q.frac->den, q.frac->unit, form, opts, false);
    return out;
}

InferenceResult infer_product_operand(const ProductOperand& a, const ProductOperand& b,
                                      const Rational& stated_result) {
    InferenceResult r{a.value, b.value, -1, false};
    Rational direct(a.value.num() * b.value.num(), a.value.den() * b.value.den());
    if (direct == stated_result) {
        r.matches = true;
        return r;
    }
    if (a.bare_integer && a.value.den() == 1 && a.value.num() >= 1) {
        Rational flipped(BigInt(1), a.value.num());
        Rational p(flipped.num() * b.value.num(), flipped.den() * b.value.den());
        if (p == stated_result) return {flipped, b.value, 0, true};
    }
    if (b.bare_integer && b.value.den() == 1 && b.value.num() >= 1) {
        Rational flipped(BigInt(1), b.value.num());
        Rational p(a.value.num() * flipped.num(), a.value.den() * flipped.den());
        if (p == stated_result) return {a.value, flipped, 1, true};
    }
    return r; // unchanged, mismatch reported by matches=false
}

} // namespace fenshu
