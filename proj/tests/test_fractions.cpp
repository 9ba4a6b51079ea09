#include "doctest.h"

#include "fenshu/arithmetic.hpp"
#include "fenshu/fractions.hpp"
#include "fenshu/text.hpp"

using namespace fenshu;

namespace {

Rational rat(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

std::optional<Unit> u(const char* glyph) {
    auto found = UnitRegistry::builtin().find_glyph(glyph);
    REQUIRE(!found.empty());
    REQUIRE(found.size() == 1);
    return found.front();
}

RenderOptions with_form(FractionForm f, LigatureStyle style = LigatureStyle::Manuscript) {
    RenderOptions o;
    o.form = f;
    o.ligatures = style;
    return o;
}

} // namespace

TEST_CASE("render_fraction golden") {
    CHECK(render_fraction(rat(12, 18), u("尺"), with_form(FractionForm::D)) == "十八分尺之十二");
    CHECK(render_fraction(rat(1, 3), std::nullopt, with_form(FractionForm::Mono)) == "三分");
    CHECK(render_fraction(rat(23, 30), std::nullopt, with_form(FractionForm::C)) == "卅分之廿三");
    CHECK(render_fraction(rat(23, 30), std::nullopt,
                          with_form(FractionForm::C, LigatureStyle::Plain)) == "三十分之二十三");
    CHECK(render_fraction(rat(2, 3), u("斗"), with_form(FractionForm::LexTwoThirds)) == "大半斗");
    CHECK(render_fraction(rat(1, 2), std::nullopt) == "半"); // auto form
    CHECK(render_fraction(rat(1, 5), u("寸"), with_form(FractionForm::Mono)) == "五分寸");
    CHECK(render_fraction(rat(5, 40), u("斗"), with_form(FractionForm::B)) == "卌分斗五");
    CHECK(render_fraction(rat(1, 3), std::nullopt, with_form(FractionForm::LexThird)) == "少半");
}

TEST_CASE("render_fraction rejects bad combinations") {
    CHECK_THROWS_AS(render_fraction(rat(5, 4), std::nullopt, with_form(FractionForm::A)),
                    DomainError); // improper
    CHECK_THROWS_AS(render_fraction(rat(4, 4), std::nullopt, with_form(FractionForm::A)),
                    DomainError);
    CHECK_THROWS_AS(render_fraction(rat(2, 5), std::nullopt, with_form(FractionForm::Mono)),
                    DomainError); // mono implies numerator 1
    CHECK_THROWS_AS(render_fraction(rat(2, 5), std::nullopt, with_form(FractionForm::LexHalf)),
                    DomainError); // lexical value mismatch
    CHECK_THROWS_AS(render_fraction(rat(3, 7), std::nullopt, with_form(FractionForm::B)),
                    DomainError); // B needs a measure word
    CHECK_THROWS_AS(render_fraction(rat(1, 2), std::nullopt, with_form(FractionForm::A)),
                    DomainError); // 二分 forms are unattested
    RenderOptions force_zhi_on_mono = with_form(FractionForm::Mono);
    force_zhi_on_mono.zhi = ZhiPolicy::Force;
    CHECK_THROWS_AS(render_fraction(rat(1, 5), std::nullopt, force_zhi_on_mono), DomainError);
}

TEST_CASE("zhi policy rewrites the form") {
    RenderOptions o = with_form(FractionForm::B);
    o.zhi = ZhiPolicy::Force;
    CHECK(render_fraction(rat(3, 10), u("升"), o) == "十分升之三");
    o.form = FractionForm::D;
    o.zhi = ZhiPolicy::Suppress;
    CHECK(render_fraction(rat(3, 10), u("升"), o) == "十分升三");
}

TEST_CASE("select_form") {
    using IC = InsertionContext;
    CHECK(select_form(rat(3, 10), u("升"), IC::PredicateOfNoun).form == FractionForm::D);
    CHECK(select_form(rat(3, 10), u("升"), IC::PredicateOfNoun).zhi);
    CHECK(select_form(rat(5, 40), u("斗"), IC::Uninserted).form == FractionForm::B);
    CHECK(select_form(rat(1, 2), u("斗"), IC::ObjectOfVerb).form == FractionForm::LexHalf);
    CHECK(select_form(rat(1, 2), std::nullopt, IC::Uninserted).form == FractionForm::LexHalf);
    CHECK(select_form(rat(1, 3), u("斗"), IC::Uninserted).form == FractionForm::LexThird);
    CHECK(select_form(rat(2, 3), u("斗"), IC::Uninserted).form == FractionForm::LexTwoThirds);
    CHECK(select_form(rat(1, 3), std::nullopt, IC::Uninserted).form == FractionForm::A);
    CHECK(select_form(rat(2, 3), std::nullopt, IC::PredicateOfNoun).form == FractionForm::C);
    CHECK(select_form(rat(1, 7), std::nullopt, IC::Uninserted).form == FractionForm::Mono);
    CHECK(select_form(rat(1, 7), std::nullopt, IC::ObjectOfVerb).form == FractionForm::C);
    CHECK(select_form(rat(4, 7), std::nullopt, IC::Uninserted).form == FractionForm::A);
    CHECK(select_form(rat(4, 7), u("步"), IC::PredicateOfNoun).form == FractionForm::D);
    // determinism
    for (int k = 0; k < 3; ++k)
        CHECK(select_form(rat(3, 10), u("升"), IC::PredicateOfNoun).form == FractionForm::D);
}

TEST_CASE("render_quantity golden") {
    const auto& reg = UnitRegistry::builtin();
    RenderOptions ms;

    // 16 chi + 12/18 chi, linker forced, form B
    Quantity q = quantity_from_spec("i:16:chi;f:12/18:chi:B", reg);
    RenderOptions o = ms;
    o.you = YouPolicy::Force;
    CHECK(render_quantity(q, o) == "十六尺有十八分尺十二");
    o.ligatures = LigatureStyle::Plain;
    CHECK(render_quantity(q, o) == "十六尺又十八分尺十二");

    // same value, form D: the default linker heuristic places 有
    Quantity qd = quantity_from_spec("i:16:chi;f:12/18:chi:D", reg);
    qd.linker_you = default_you(qd.frac->form, !qd.int_parts.empty());
    CHECK(qd.linker_you);
    CHECK(render_quantity(qd, ms) == "十六尺有十八分尺之十二");

    // 7 dou + 1/3 sheng, form B, no linker by default
    Quantity q20 = quantity_from_spec("i:7:dou;f:1/3:sheng:B", reg);
    CHECK(render_quantity(q20, ms) == "七斗三分升一");

    // degenerate single integer
    CHECK(render_quantity(quantity_from_spec("i:1:-", reg), ms) == "一");

    // noun + weight chain
    Quantity q34 = quantity_from_spec("n:金;i:3:zhu;f:5/9:zhu:B", reg);
    CHECK(render_quantity(q34, ms) == "金三朱九分朱五");
    RenderOptions plain;
    plain.ligatures = LigatureStyle::Plain;
    CHECK(render_quantity(q34, plain) == "金三銖九分銖五");

    // implicit leading one
    Quantity q42 = quantity_from_spec("i:~:chi;i:2:cun;f:56/62:cun:B", reg);
    CHECK(render_quantity(q42, ms) == "尺二寸六十二分寸五十六");

    // lexical fraction with repeated measure word
    Quantity q123 = quantity_from_spec("i:2:dou;f:2/3:dou:T", reg);
    CHECK(render_quantity(q123, ms) == "二斗大半斗");

    // forms A/C leave the inherited unit unwritten
    Quantity q28 = quantity_from_spec("n:糲;i:7:dou;f:3/5:dou:A;g:mw_omitted", reg);
    CHECK(render_quantity(q28, ms) == "糲七斗五分三");
}

TEST_CASE("render_quantity errors") {
    const auto& reg = UnitRegistry::builtin();
    Quantity elided = quantity_from_spec("i:3:dou;f:9/?:dou:A;g:elided_den", reg);
    CHECK_THROWS_AS(render_quantity(elided, {}), DomainError);
    Quantity mixed_dims = quantity_from_spec("i:3:dou;f:1/4:chi:B", reg);
    CHECK_THROWS_AS(render_quantity(mixed_dims, {}), UnitError);
    Quantity ascending = quantity_from_spec("i:2:cun;i:3:chi", reg);
    CHECK_THROWS_AS(render_quantity(ascending, {}), UnitError);
}

TEST_CASE("parse_quantity golden") {
    // gold, 3 zhu + 5/9 zhu, form B
    Quantity q34 = parse_quantity("金三朱九分朱五");
    CHECK(q34.noun == "金");
    REQUIRE(q34.int_parts.size() == 1);
    CHECK(q34.int_parts[0].coeff == 3);
    CHECK(q34.int_parts[0].unit->glyph == "銖");
    REQUIRE(q34.frac);
    CHECK(q34.frac->num == 5);
    CHECK(q34.frac->den == 9);
    CHECK(q34.frac->form == FractionForm::B);
    CHECK(q34.frac->unit->glyph == "銖");

    // husked millet, 6 sheng + 1/4 sheng, form D
    Quantity q25 = parse_quantity("米六升四分升之一");
    CHECK(q25.noun == "米");
    CHECK(q25.int_parts[0].coeff == 6);
    CHECK(q25.frac->form == FractionForm::D);
    CHECK(q25.frac->num == 1);
    CHECK(q25.frac->den == 4);
    CHECK(q25.frac->has_zhi());

    // bare lexical half
    Quantity half = parse_quantity("半");
    REQUIRE(half.frac);
    CHECK(half.frac->form == FractionForm::LexHalf);
    CHECK(half.frac->num == 1);
    CHECK(half.frac->den == 2);
    CHECK(half.int_parts.empty());

    // elided denominator stays a placeholder
    ParseOptions series;
    series.elision_series = true;
    Quantity q130 = parse_quantity("三斗分九", series);
    CHECK(q130.int_parts[0].coeff == 3);
    REQUIRE(q130.frac);
    CHECK(q130.frac->num == 9);
    CHECK(q130.frac->elided());
    CHECK(q130.has_flag(QuantityFlag::ElidedDen));
    CHECK(q130.has_flag(QuantityFlag::MwOmitted)); // dou understood
    CHECK(q130.frac->unit->glyph == "斗");
}

TEST_CASE("parse_quantity attested irregularities") {
    // lard 5/9, measure word understood from context
    Quantity q77 = parse_quantity("盾九分之五");
    CHECK(q77.noun == "盾");
    CHECK(q77.frac->form == FractionForm::C);
    CHECK(q77.has_flag(QuantityFlag::MwOmitted));
    CHECK(!q77.frac->unit);

    // the unit repeated a third time after the numerator
    Quantity q31 = parse_quantity("十一步有九十七分步\U0002010E九步");
    CHECK(q31.linker_you);
    CHECK(q31.has_flag(QuantityFlag::MwTripled));
    CHECK(q31.frac->num == 79);
    CHECK(q31.frac->den == 97);
    CHECK(q31.frac->form == FractionForm::B);

    // implicit 1 before the first measure word
    Quantity q42 = parse_quantity("尺二寸六十二分寸五十六");
    REQUIRE(q42.int_parts.size() == 2);
    CHECK(q42.int_parts[0].implicit_one);
    CHECK(q42.int_parts[0].unit->glyph == "尺");
    CHECK(q42.int_parts[1].coeff == 2);
    CHECK(q42.frac->num == 56);

    // bare unit = one of it
    Quantity chi = parse_quantity("尺");
    REQUIRE(chi.int_parts.size() == 1);
    CHECK(chi.int_parts[0].implicit_one);
    CHECK(chi.int_parts[0].coeff == 1);

    // noun-order currency
    Quantity q3 = parse_quantity("錢百五十");
    CHECK(q3.noun == "錢");
    REQUIRE(q3.int_parts.size() == 1);
    CHECK(q3.int_parts[0].coeff == 150);
    CHECK(!q3.int_parts[0].unit);

    // count noun in the measure-word slot, fraction inherits it
    Quantity q76 = parse_quantity("十三盧唐四分之三");
    CHECK(q76.int_parts[0].coeff == 13);
    CHECK(q76.int_parts[0].unit->pinyin == "lutang");
    CHECK(q76.frac->form == FractionForm::C);
    CHECK(q76.has_flag(QuantityFlag::MwOmitted));
    CHECK(q76.frac->unit->pinyin == "lutang");

    // 一半 at phrase start is the single numeral 1/2
    Quantity yiban = parse_quantity("一半");
    REQUIRE(yiban.frac);
    CHECK(yiban.frac->form == FractionForm::LexHalf);
    CHECK(yiban.int_parts.empty());
    CHECK(yiban.has_flag(QuantityFlag::AmbiguousYiBan));

    // 石 resolves through the grain noun
    Quantity q103 = parse_quantity("米卌六石廿七分石之八");
    CHECK(q103.int_parts[0].unit->dimension == Dimension::Capacity);
    CHECK(q103.frac->den == 27);

    // or through a caller hint
    ParseOptions weight;
    weight.shi_dimension = Dimension::Weight;
    Quantity qw = parse_quantity("三石", weight);
    CHECK(qw.int_parts[0].unit->dimension == Dimension::Weight);
}

TEST_CASE("parse_quantity error paths") {
    CHECK_THROWS_AS(parse_quantity(""), ParseError);
    CHECK_THROWS_AS(parse_quantity("水"), ParseError); // no numeral content
    CHECK_THROWS_AS(parse_quantity("三斗二尺"), ParseError); // conflicting dimensions
    CHECK_THROWS_AS(parse_quantity("二寸三尺"), ParseError); // ascending
    CHECK_THROWS_AS(parse_quantity("三尺三尺"), ParseError); // not strictly descending
    CHECK_THROWS_AS(parse_quantity("七分步七步"), ParseError); // improper 7/7... rejected early
    CHECK_THROWS_AS(parse_quantity("五分七"), ParseError);     // improper 7/5
    CHECK_THROWS_AS(parse_quantity("之三"), ParseError);
    CHECK_THROWS_AS(parse_quantity("三斗半四分一"), ParseError); // two fractions
    CHECK_THROWS_AS(parse_quantity("三石"), ParseError); // unresolved 石
    // improper numerator reported with the parsed values attached
    try {
        parse_quantity("百卌七分步五百卌一");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("541/147") != std::string::npos);
    }
    // relaxed mode keeps the literal and flags it
    ParseOptions relaxed;
    relaxed.allow_anomalies = true;
    Quantity q71 = parse_quantity("百卌七分步五百卌一", relaxed);
    CHECK(q71.has_flag(QuantityFlag::ImproperLiteral));
    CHECK(q71.frac->num == 541);
    // missing numerator after 之 only passes in relaxed mode
    CHECK_THROWS_AS(parse_quantity("廣七步卌九分步之"), ParseError);
    Quantity q114 = parse_quantity("廣七步卌九分步之", relaxed);
    CHECK(q114.has_flag(QuantityFlag::IllegibleDigits));
    CHECK(q114.frac->den == 49);
    CHECK(q114.frac->num == 0);
}

TEST_CASE("classify") {
    CHECK(classify("十八分尺之十二") == PatternCategory{FractionForm::D, false});
    CHECK(classify("四分步一") == PatternCategory{FractionForm::B, true});
    CHECK(classify("三十分之一") == PatternCategory{FractionForm::C, true});
    CHECK(classify("三分") == PatternCategory{FractionForm::Mono, true});
    CHECK(classify("半") == PatternCategory{FractionForm::LexHalf, true});
    CHECK(classify("大半斗") == PatternCategory{FractionForm::LexTwoThirds, false});
    CHECK(category_name(classify("十八分尺之十二")) == "d2");
    CHECK(category_name(classify("四分步一")) == "b1");
    CHECK(category_name(classify("糲七斗五分三")) == "a2");
    CHECK_THROWS_AS(classify("七斗"), DomainError); // integer only
}

TEST_CASE("resolve_elision") {
    ParseOptions series;
    series.elision_series = true;

    // wild cat 8 49/72, dog 4 12/72 after the explicit 11/72
    std::vector<Quantity> pelts = {
        parse_quantity("十二\U0002010E二分十一", series),
        parse_quantity("八卌九分", series),
        parse_quantity("四十二分", series),
    };
    CHECK(pelts[0].frac->den == 72);
    CHECK(pelts[1].frac->elided());
    CHECK(pelts[1].frac->num == 49);
    CHECK(pelts[2].int_parts[0].coeff == 4); // shortest-integer series split
    CHECK(pelts[2].frac->num == 12);
    auto resolved = resolve_elision(pelts);
    CHECK(resolved[1].frac->den == 72);
    CHECK(resolved[2].frac->den == 72);
    CHECK(resolved[1].frac->value().is_proper());
    CHECK(pelts[1].frac->elided()); // originals untouched

    // divisor announced by n 成 supplies the denominator
    std::vector<Quantity> vol = {parse_quantity("二千五十五尺分廿", series)};
    auto rv = resolve_elision(vol, BigInt(36));
    CHECK(rv[0].frac->den == 36);
    CHECK(rv[0].frac->num == 20);

    // fully explicit input passes through unchanged
    std::vector<Quantity> plain = {parse_quantity("七斗三分升一")};
    auto rp = resolve_elision(plain);
    CHECK(rp[0].same_shape(plain[0]));

    // idempotent
    auto twice = resolve_elision(resolved);
    for (size_t k = 0; k < twice.size(); ++k) CHECK(twice[k].same_shape(resolved[k]));

    // error paths
    std::vector<Quantity> orphan = {parse_quantity("三斗分九", series)};
    CHECK_THROWS_AS(resolve_elision(orphan), DomainError);
    CHECK_THROWS_AS(resolve_elision(orphan, BigInt(5)), DomainError); // 9/5 improper
}

TEST_CASE("infer_product_operand") {
    auto frac = [](long n, long d) { return ProductOperand{rat(n, d), false}; };
    auto bare = [](long k) { return ProductOperand{Rational(BigInt(k)), true}; };

    auto r1 = infer_product_operand(frac(1, 6), bare(7), rat(1, 42));
    CHECK(r1.matches);
    CHECK(r1.reinterpreted == 1);
    CHECK(r1.right.identical(rat(1, 7)));

    auto r2 = infer_product_operand(bare(4), frac(1, 5), rat(1, 20));
    CHECK(r2.matches);
    CHECK(r2.reinterpreted == 0);
    CHECK(r2.left.identical(rat(1, 4)));

    auto r3 = infer_product_operand(frac(1, 2), frac(1, 2), rat(1, 4));
    CHECK(r3.matches);
    CHECK(r3.reinterpreted == -1);

    auto r4 = infer_product_operand(frac(1, 2), bare(3), rat(1, 5));
    CHECK(!r4.matches);
    CHECK(r4.left.identical(rat(1, 2))); // unchanged
    CHECK(r4.right.identical(Rational(BigInt(3))));
}
