#include <algorithm>

#include "fenshu/fractions.hpp"
#include "fenshu/text.hpp"

namespace fenshu {

namespace {

struct Token {
    enum class Type {
        Digit,
        Pivot,
        Fen,     // 分
        Zhi,     // 之
        You,     // 又 (有 normalizes to it)
        Ban,     // 半
        ShaoBan, // 少半
        TaiBan,  // 大半
        Cheng,   // 乘
        Ye,      // 也
        Yue,     // 約
        ChengDiv,// 成
        Er,      // 而
        Unit,
        Noun,
    };
    Type type;
    std::u32string glyphs;
    std::vector<Unit> candidates; // Unit tokens; 石 carries two
};

bool is_numeral_token(const Token& t) {
    return t.type == Token::Type::Digit || t.type == Token::Type::Pivot;
}

std::vector<Token> tokenize(const std::u32string& cps, const UnitRegistry& reg) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < cps.size()) {
        char32_t cp = cps[i];
        if (cp == U' ' || cp == U'\t') {
            ++i;
            continue;
        }
        if (i + 1 < cps.size() && cps[i + 1] == U'半' && (cp == U'少' || cp == U'大')) {
            out.push_back({cp == U'少' ? Token::Type::ShaoBan : Token::Type::TaiBan,
                           cps.substr(i, 2),
                           {}});
            i += 2;
            continue;
        }
        if (digit_value(cp)) {
            out.push_back({Token::Type::Digit, cps.substr(i, 1), {}});
            ++i;
            continue;
        }
        if (pivot_value(cp)) {
            out.push_back({Token::Type::Pivot, cps.substr(i, 1), {}});
            ++i;
            continue;
        }
        Token::Type special = Token::Type::Noun;
        switch (cp) {
        case U'分': special = Token::Type::Fen; break;
        case U'之': special = Token::Type::Zhi; break;
        case U'又': special = Token::Type::You; break;
        case U'半': special = Token::Type::Ban; break;
        case U'乘': special = Token::Type::Cheng; break;
        case U'也': special = Token::Type::Ye; break;
        case U'約': special = Token::Type::Yue; break;
        case U'成': special = Token::Type::ChengDiv; break;
        case U'而': special = Token::Type::Er; break;
        default: break;
        }
        if (special != Token::Type::Noun) {
            out.push_back({special, cps.substr(i, 1), {}});
            ++i;
            continue;
        }
        if (auto len = reg.match_unit(std::u32string_view(cps).substr(i))) {
            Token t{Token::Type::Unit, cps.substr(i, *len), {}};
            t.candidates = reg.find_glyph(encode_utf8(t.glyphs));
            out.push_back(std::move(t));
            i += *len;
            continue;
        }
        // unknown glyphs adjacent to a numeral head are noun material;
        // consecutive ones merge
        if (!out.empty() && out.back().type == Token::Type::Noun) {
            out.back().glyphs.push_back(cp);
        } else {
            out.push_back({Token::Type::Noun, std::u32string(1, cp), {}});
        }
        ++i;
    }
    return out;
}

// Longest prefix of the digit/pivot run starting at `i` that names an
// integer; returns token count consumed (0 when none works).
struct NumScan {
    BigInt value;
    size_t consumed = 0;
    bool leading_one_warning = false;
};

NumScan scan_numeral(const std::vector<Token>& toks, size_t i, char32_t seventy) {
    size_t run = 0;
    std::u32string glyphs;
    while (i + run < toks.size() && is_numeral_token(toks[i + run])) {
        glyphs += toks[i + run].glyphs;
        ++run;
    }
    for (size_t len = run; len >= 1; --len) {
        try {
            auto parsed = parse_integer_checked(encode_utf8(glyphs.substr(0, len)), seventy);
            return {parsed.value, len, !parsed.warnings.empty()};
        } catch (const ParseError&) {
            if (len == 1) break;
        }
    }
    return {};
}

struct Parser {
    const std::vector<Token>& toks;
    const ParseOptions& opts;
    const UnitRegistry& reg;
    std::string surface; // for diagnostics

    Quantity q;
    size_t i = 0;
    bool pending_you = false;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " in \"" + surface + "\"");
    }

    bool done() const { return i >= toks.size(); }
    const Token& cur() const { return toks[i]; }

    Unit resolve_unit(const Token& t, std::optional<Dimension> fixed,
                      std::optional<Dimension> noun_hint) const {
        if (t.candidates.empty()) fail("unregistered unit glyph");
        if (t.candidates.size() == 1) return t.candidates.front();
        for (const auto& hint : {fixed, opts.shi_dimension, noun_hint})
            if (hint)
                for (const auto& u : t.candidates)
                    if (u.dimension == *hint) return u;
        fail("ambiguous unit " + encode_utf8(t.glyphs) + " needs a dimension hint");
    }

    // dimension pinned by the unambiguous unit tokens, if any
    std::optional<Dimension> fixed_dimension() const {
        for (const auto& t : toks)
            if (t.type == Token::Type::Unit && t.candidates.size() == 1)
                return t.candidates.front().dimension;
        return std::nullopt;
    }

    void set_fraction(FracPart f) {
        if (q.frac) fail("more than one fraction");
        q.frac = std::move(f);
        if (pending_you) {
            q.linker_you = true;
            pending_you = false;
        }
    }

    void expect_end() const {
        if (!done()) fail("trailing content after the fraction");
    }

    // den 分 [MW] [之] [Num] [tripled MW]
    void parse_fraction_after_den(const BigInt& den, std::optional<Dimension> fixed,
                                  std::optional<Dimension> noun_hint) {
        ++i; // 分
        FracPart f;
        if (!done() && cur().type == Token::Type::Unit) {
            f.unit = resolve_unit(cur(), fixed, noun_hint);
            ++i;
        }
        bool zhi = false;
        if (!done() && cur().type == Token::Type::Zhi) {
            zhi = true;
            ++i;
        }
        std::optional<BigInt> num;
        if (!done() && is_numeral_token(cur())) {
            NumScan s = scan_numeral(toks, i, opts.seventy);
            if (s.consumed == 0) fail("bad numerator");
            if (s.leading_one_warning) q.flags.insert(QuantityFlag::LeadingOneWarning);
            num = s.value;
            i += s.consumed;
        }
        if (f.unit && !done() && cur().type == Token::Type::Unit) {
            // the unique over-repetition: the measure word shows up a third
            // time after the numerator (a likely copyist slip)
            if (cur().glyphs != decode_utf8(f.unit->glyph) &&
                cur().glyphs != decode_utf8(f.unit->glyph_ms))
                fail("unexpected unit after the numerator");
            if (!num) fail("unexpected unit after 分");
            q.flags.insert(QuantityFlag::MwTripled);
            ++i;
        }

        if (zhi) {
            if (!num) {
                if (!opts.allow_anomalies) fail("numerator missing after 之");
                q.flags.insert(QuantityFlag::IllegibleDigits);
                num = BigInt(0);
            }
            f.form = f.unit ? FractionForm::D : FractionForm::C;
            f.num = *num;
            f.den = den;
        } else if (num) {
            f.form = f.unit ? FractionForm::B : FractionForm::A;
            f.num = *num;
            f.den = den;
        } else if (opts.elision_series && !f.unit && done()) {
            // series member "N 分": N is the numerator, denominator elided
            f.form = FractionForm::A;
            f.num = den;
            f.den = 0;
            q.flags.insert(QuantityFlag::ElidedDen);
        } else {
            f.form = FractionForm::Mono;
            f.num = 1;
            f.den = den;
        }

        if (f.den != 0 && f.num >= f.den) {
            if (!opts.allow_anomalies)
                throw ParseError("improper fraction " + f.num.str() + "/" + f.den.str() +
                                 " in \"" + surface + "\"");
            q.flags.insert(QuantityFlag::ImproperLiteral);
        }
        set_fraction(std::move(f));
        expect_end();
    }

    // bare 分 + Num: denominator understood from the series
    void parse_elided_fen() {
        ++i;
        if (done() || !is_numeral_token(cur())) fail("numerator missing after bare 分");
        NumScan s = scan_numeral(toks, i, opts.seventy);
        if (s.consumed == 0) fail("bad numerator after bare 分");
        i += s.consumed;
        FracPart f;
        f.form = FractionForm::A;
        f.num = s.value;
        f.den = 0;
        q.flags.insert(QuantityFlag::ElidedDen);
        set_fraction(std::move(f));
        expect_end();
    }

    void parse_lex(FractionForm form, std::optional<Dimension> fixed,
                   std::optional<Dimension> noun_hint) {
        ++i;
        FracPart f;
        f.form = form;
        f.num = form == FractionForm::LexTwoThirds ? 2 : 1;
        f.den = form == FractionForm::LexHalf ? 2 : 3;
        if (!done() && cur().type == Token::Type::Unit) {
            f.unit = resolve_unit(cur(), fixed, noun_hint);
            ++i;
        }
        set_fraction(std::move(f));
        expect_end();
    }

    // In an elision series "Int + Num分" the shortest integer reading wins:
    // 四十二分 is 4 then 12 parts, not 42 parts.
    bool try_series_split(std::optional<Dimension>, std::optional<Dimension>) {
        if (!opts.elision_series || q.frac) return false;
        size_t run = 0;
        std::u32string glyphs;
        while (i + run < toks.size() && is_numeral_token(toks[i + run])) {
            glyphs += toks[i + run].glyphs;
            ++run;
        }
        if (run == 0 || i + run >= toks.size()) return false;
        if (toks[i + run].type != Token::Type::Fen) return false;
        if (i + run + 1 != toks.size()) return false; // shape is Num 分 END
        // series members state an integer first (fox pays 12, then 11
        // parts), so the shortest nonempty integer reading wins; a bare
        // numerator is the fallback
        std::vector<size_t> order;
        for (size_t k = 1; k < run; ++k) order.push_back(k);
        order.push_back(0);
        for (size_t intlen : order) {
            BigInt intval;
            if (intlen > 0) {
                try {
                    intval = parse_integer(encode_utf8(glyphs.substr(0, intlen)), opts.seventy);
                } catch (const ParseError&) {
                    continue;
                }
            }
            BigInt numval;
            try {
                numval = parse_integer(encode_utf8(glyphs.substr(intlen)), opts.seventy);
            } catch (const ParseError&) {
                continue;
            }
            if (intlen > 0) q.int_parts.push_back({intval, std::nullopt, false});
            FracPart f;
            f.form = FractionForm::A;
            f.num = numval;
            f.den = 0;
            q.flags.insert(QuantityFlag::ElidedDen);
            i += run + 1;
            set_fraction(std::move(f));
            return true;
        }
        return false;
    }

    Quantity run(bool leading_unit_as_noun) {
        auto fixed = fixed_dimension();

        if (!done() && cur().type == Token::Type::Noun) {
            q.noun = encode_utf8(cur().glyphs);
            ++i;
        }
        auto noun_hint = q.noun ? noun_dimension_hint(decode_utf8(*q.noun)) : std::nullopt;

        if (!done() && cur().type == Token::Type::Unit) {
            if (leading_unit_as_noun) {
                // noun-order currency: 錢百五十 is "qian: 150"
                if (q.noun) fail("two nouns");
                q.noun = encode_utf8(cur().glyphs);
                ++i;
            } else {
                // the numeral 1 is not always stated before a measure word
                IntPart p;
                p.coeff = 1;
                p.implicit_one = true;
                p.unit = resolve_unit(cur(), fixed, noun_hint);
                ++i;
                q.int_parts.push_back(std::move(p));
            }
        }

        while (!done()) {
            const Token& t = cur();
            switch (t.type) {
            case Token::Type::You:
                if (q.frac || pending_you) fail("misplaced 又");
                pending_you = true;
                ++i;
                break;
            case Token::Type::Ban:
                parse_lex(FractionForm::LexHalf, fixed, noun_hint);
                break;
            case Token::Type::ShaoBan:
                parse_lex(FractionForm::LexThird, fixed, noun_hint);
                break;
            case Token::Type::TaiBan:
                parse_lex(FractionForm::LexTwoThirds, fixed, noun_hint);
                break;
            case Token::Type::Fen:
                parse_elided_fen();
                break;
            case Token::Type::Digit:
            case Token::Type::Pivot: {
                if (q.frac) fail("content after the fraction");
                if (try_series_split(fixed, noun_hint)) break;
                NumScan s = scan_numeral(toks, i, opts.seventy);
                if (s.consumed == 0) fail("bad numeral");
                if (s.leading_one_warning) q.flags.insert(QuantityFlag::LeadingOneWarning);
                size_t j = i + s.consumed;
                if (j < toks.size() && toks[j].type == Token::Type::Fen) {
                    i = j;
                    parse_fraction_after_den(s.value, fixed, noun_hint);
                    break;
                }
                if (s.value == 1 && s.consumed == 1 && q.int_parts.empty() && !q.noun &&
                    j < toks.size() && toks[j].type == Token::Type::Ban) {
                    // 一半 at phrase start is the numeral 1/2
                    i = j;
                    parse_lex(FractionForm::LexHalf, fixed, noun_hint);
                    q.flags.insert(QuantityFlag::AmbiguousYiBan);
                    break;
                }
                if (pending_you) fail("又 must directly precede the fraction");
                IntPart p;
                p.coeff = s.value;
                i = j;
                if (!done() && cur().type == Token::Type::Unit) {
                    p.unit = resolve_unit(cur(), fixed, noun_hint);
                    ++i;
                }
                q.int_parts.push_back(std::move(p));
                break;
            }
            case Token::Type::Unit:
                fail("bare measure word");
            case Token::Type::Noun:
                fail("noun glyphs may only open the phrase");
            default:
                fail("unexpected glyph '" + encode_utf8(t.glyphs) + "'");
            }
        }
        if (pending_you) fail("dangling 又");
        if (q.int_parts.empty() && !q.frac) fail("no numeral content");

        finish();
        return std::move(q);
    }

    void finish() {
        // contextual measure word: a bare fraction after measured integer
        // parts inherits the unit; after a plain noun the unit stays
        // unknown but the omission is recorded
        if (q.frac && !q.frac->unit &&
            (q.frac->form == FractionForm::A || q.frac->form == FractionForm::C)) {
            if (!q.int_parts.empty() && q.int_parts.back().unit) {
                q.frac->unit = q.int_parts.back().unit;
                q.flags.insert(QuantityFlag::MwOmitted);
            } else if (q.noun) {
                q.flags.insert(QuantityFlag::MwOmitted);
            }
        }

        // unit chain: one dimension, strictly descending, fraction last
        const Unit* prev = nullptr;
        for (const auto& p : q.int_parts) {
            if (!p.unit) {
                if (prev) fail("bare integer part after a measured one");
                continue;
            }
            if (prev) {
                if (p.unit->island != prev->island) fail("conflicting unit dimensions");
                if (!(p.unit->ratio_to_base < prev->ratio_to_base))
                    fail("units must strictly descend");
            }
            prev = &*p.unit;
        }
        if (q.frac && q.frac->unit && prev) {
            if (q.frac->unit->island != prev->island) fail("conflicting unit dimensions");
            if (prev->ratio_to_base < q.frac->unit->ratio_to_base)
                fail("fraction unit exceeds the integer unit");
        }
    }
};

} // namespace

Quantity parse_quantity(std::string_view text, const ParseOptions& opts) {
    const UnitRegistry& reg = opts.registry ? *opts.registry : UnitRegistry::builtin();
    std::string normalized = Normalizer{opts.seventy}(text);
    std::u32string cps = decode_utf8(normalized);
    std::vector<Token> toks = tokenize(cps, reg);
    if (toks.empty()) throw ParseError("no numeral content in \"" + std::string(text) + "\"");

    Parser first{toks, opts, reg, std::string(text), {}, 0, false};
    try {
        return first.run(false);
    } catch (const ParseError&) {
        // 錢百五十 style: the measure word itself opens the phrase as a noun
        if (toks[0].type != Token::Type::Unit) throw;
        Parser second{toks, opts, reg, std::string(text), {}, 0, false};
        return second.run(true);
    }
}

PatternCategory classify(const Quantity& q) {
    if (!q.frac) throw DomainError("no fraction present (integer-only quantity)");
    const FracPart& f = *q.frac;
    switch (f.form) {
    case FractionForm::Mono: return {FractionForm::Mono, true};
    case FractionForm::LexHalf: return {FractionForm::LexHalf, true};
    case FractionForm::LexThird: return {FractionForm::LexThird, true};
    case FractionForm::LexTwoThirds: return {FractionForm::LexTwoThirds, false};
    default: return {f.form, f.num == 1};
    }
}

PatternCategory classify(std::string_view text, const ParseOptions& opts) {
    return classify(parse_quantity(text, opts));
}

std::vector<Quantity> resolve_elision(const std::vector<Quantity>& seq,
                                      const std::optional<BigInt>& divisor) {
    std::vector<Quantity> out = seq;
    std::optional<BigInt> den = divisor;
    for (Quantity& q : out) {
        if (!q.frac) continue;
        if (!q.frac->elided()) {
            den = q.frac->den;
            continue;
        }
        if (!den)
            throw DomainError("no denominator available for the elided fraction " +
                              q.frac->num.str() + "/?");
        if (q.frac->num >= *den)
            throw DomainError("resolving " + q.frac->num.str() + "/" + den->str() +
                              " yields an improper fraction");
        q.frac->den = *den;
    }
    return out;
}

} // namespace fenshu
