#include "fenshu.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "json.hpp"

#include "fenshu/arithmetic.hpp"
#include "fenshu/corpus.hpp"
#include "fenshu/fractions.hpp"
#include "fenshu/text.hpp"

using namespace fenshu;

struct fen_ctx {
    UnitRegistry registry = UnitRegistry::builtin();
    LigatureStyle ligatures = LigatureStyle::Manuscript;
    char32_t seventy = kDefaultSeventyLigature;
    std::optional<Dimension> shi_dimension;
    std::string last_error;
};

struct fen_quantity {
    Quantity q;
};

struct fen_corpus {
    Corpus c;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fen_status classify_exception(fen_ctx* ctx, const std::exception& e) {
    ctx->last_error = e.what();
    if (dynamic_cast<const UnitError*>(&e)) return FEN_ERR_UNIT;
    if (dynamic_cast<const ParseError*>(&e)) return FEN_ERR_PARSE;
    if (dynamic_cast<const DomainError*>(&e)) return FEN_ERR_DOMAIN;
    return FEN_ERR_DOMAIN;
}

template <typename F>
fen_status guarded(fen_ctx* ctx, F&& body) {
    if (!ctx) return FEN_ERR_ARG;
    try {
        return body();
    } catch (const std::exception& e) {
        return classify_exception(ctx, e);
    }
}

ParseOptions parse_options(const fen_ctx* ctx) {
    ParseOptions o;
    o.registry = &ctx->registry;
    o.seventy = ctx->seventy;
    o.shi_dimension = ctx->shi_dimension;
    return o;
}

// "4147 1/5", "1/5" or "3" as an exact rational
Rational rational_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string a, b;
    in >> a >> b;
    if (a.empty()) throw ParseError("empty value");
    auto parse_one = [](const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    };
    Rational v = parse_one(a);
    if (!b.empty()) v = add(v, parse_one(b));
    return v;
}

nlohmann::json rational_json(const Rational& r) {
    return {{"num", r.num().str()}, {"den", r.den().str()}};
}

} // namespace

extern "C" {

fen_ctx* fen_ctx_new(void) { return new fen_ctx; }

void fen_ctx_free(fen_ctx* ctx) { delete ctx; }

const char* fen_last_error(const fen_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

fen_status fen_ctx_load_units(fen_ctx* ctx, const char* path) {
    return guarded(ctx, [&]() {
        if (!path) return FEN_ERR_ARG;
        try {
            ctx->registry = UnitRegistry::load(path);
        } catch (const UnitError& e) {
            ctx->last_error = e.what();
            return std::string(e.what()).find("cannot open") != std::string::npos ? FEN_ERR_IO
                                                                                  : FEN_ERR_UNIT;
        }
        return FEN_OK;
    });
}

fen_status fen_ctx_set_ligatures(fen_ctx* ctx, int manuscript) {
    if (!ctx) return FEN_ERR_ARG;
    ctx->ligatures = manuscript ? LigatureStyle::Manuscript : LigatureStyle::Plain;
    return FEN_OK;
}

fen_status fen_ctx_set_seventy(fen_ctx* ctx, const char* glyph) {
    return guarded(ctx, [&]() {
        if (!glyph) return FEN_ERR_ARG;
        std::u32string cps = decode_utf8(glyph);
        if (cps.size() != 1) {
            ctx->last_error = "the 70-ligature must be a single glyph";
            return FEN_ERR_ARG;
        }
        ctx->seventy = cps[0];
        return FEN_OK;
    });
}

fen_status fen_ctx_set_shi_dimension(fen_ctx* ctx, const char* dimension) {
    if (!ctx || !dimension) return FEN_ERR_ARG;
    std::string d = dimension;
    if (d.empty()) {
        ctx->shi_dimension.reset();
        return FEN_OK;
    }
    auto dim = dimension_from_name(d);
    if (!dim) {
        ctx->last_error = "unknown dimension: " + d;
        return FEN_ERR_ARG;
    }
    ctx->shi_dimension = *dim;
    return FEN_OK;
}

void fen_string_free(char* s) { std::free(s); }

fen_status fen_normalize(fen_ctx* ctx, const char* text, char** out) {
    return guarded(ctx, [&]() {
        if (!text || !out) return FEN_ERR_ARG;
        *out = dup_string(Normalizer{ctx->seventy}(text));
        return FEN_OK;
    });
}

fen_status fen_render_integer(fen_ctx* ctx, const char* decimal, char** out) {
    return guarded(ctx, [&]() {
        if (!decimal || !out) return FEN_ERR_ARG;
        *out = dup_string(render_integer(BigInt(decimal), ctx->ligatures, ctx->seventy));
        return FEN_OK;
    });
}

fen_status fen_parse_integer(fen_ctx* ctx, const char* text, char** decimal_out) {
    return guarded(ctx, [&]() {
        if (!text || !decimal_out) return FEN_ERR_ARG;
        *decimal_out = dup_string(parse_integer(text, ctx->seventy).str());
        return FEN_OK;
    });
}

fen_status fen_parse_quantity(fen_ctx* ctx, const char* text, fen_quantity** out) {
    return guarded(ctx, [&]() {
        if (!text || !out) return FEN_ERR_ARG;
        *out = new fen_quantity{parse_quantity(text, parse_options(ctx))};
        return FEN_OK;
    });
}

fen_status fen_quantity_from_spec(fen_ctx* ctx, const char* spec, fen_quantity** out) {
    return guarded(ctx, [&]() {
        if (!spec || !out) return FEN_ERR_ARG;
        *out = new fen_quantity{quantity_from_spec(spec, ctx->registry)};
        return FEN_OK;
    });
}

void fen_quantity_free(fen_quantity* q) { delete q; }

fen_status fen_quantity_spec(fen_ctx* ctx, const fen_quantity* q, char** out) {
    return guarded(ctx, [&]() {
        if (!q || !out) return FEN_ERR_ARG;
        *out = dup_string(quantity_to_spec(q->q));
        return FEN_OK;
    });
}

fen_status fen_quantity_json(fen_ctx* ctx, const fen_quantity* fq, char** out) {
    return guarded(ctx, [&]() {
        if (!fq || !out) return FEN_ERR_ARG;
        const Quantity& q = fq->q;
        nlohmann::json j;
        j["noun"] = q.noun ? nlohmann::json(*q.noun) : nlohmann::json(nullptr);
        j["parts"] = nlohmann::json::array();
        for (const auto& p : q.int_parts) {
            nlohmann::json part{{"coeff", p.coeff.str()}};
            part["unit"] = p.unit ? nlohmann::json(p.unit->pinyin) : nlohmann::json(nullptr);
            part["implicit_one"] = p.implicit_one;
            j["parts"].push_back(part);
        }
        if (q.frac) {
            const auto& f = *q.frac;
            nlohmann::json fj{{"num", f.num.str()},
                              {"form", form_name(f.form)},
                              {"zhi", f.has_zhi()},
                              {"elided", f.elided()}};
            fj["den"] = f.elided() ? nlohmann::json(nullptr) : nlohmann::json(f.den.str());
            fj["unit"] = f.unit ? nlohmann::json(f.unit->pinyin) : nlohmann::json(nullptr);
            j["fraction"] = fj;
            if (!f.elided()) j["category"] = category_name(classify(q));
        } else {
            j["fraction"] = nullptr;
        }
        bool elided = q.frac && q.frac->elided();
        if (!elided) {
            Rational m = q.magnitude();
            j["value"] = rational_json(m);
            j["value_reduced"] = rational_json(reduce(m));
            auto u = q.magnitude_unit();
            j["unit"] = u ? nlohmann::json(u->pinyin) : nlohmann::json(nullptr);
        } else {
            j["value"] = nullptr;
        }
        j["linker_you"] = q.linker_you;
        j["flags"] = nlohmann::json::array();
        for (auto f : q.flags) j["flags"].push_back(flag_name(f));
        *out = dup_string(j.dump());
        return FEN_OK;
    });
}

fen_status fen_render_quantity(fen_ctx* ctx, const fen_quantity* q, const char* form,
                               const char* zhi, const char* you, const char* insertion,
                               char** out) {
    return guarded(ctx, [&]() {
        if (!q || !out) return FEN_ERR_ARG;
        RenderOptions opts;
        opts.ligatures = ctx->ligatures;
        opts.seventy = ctx->seventy;
        std::string f = form ? form : "";
        if (f == "auto") {
            opts.auto_form = true;
        } else if (!f.empty()) {
            auto parsed = form_from_name(f);
            if (!parsed) {
                ctx->last_error = "unknown form: " + f;
                return FEN_ERR_ARG;
            }
            opts.form = parsed;
        }
        std::string z = zhi ? zhi : "auto";
        if (z == "force") opts.zhi = ZhiPolicy::Force;
        else if (z == "suppress") opts.zhi = ZhiPolicy::Suppress;
        else if (z == "auto" || z.empty()) opts.zhi = ZhiPolicy::Auto;
        else {
            ctx->last_error = "zhi policy must be auto, force or suppress";
            return FEN_ERR_ARG;
        }
        std::string y = you ? you : "auto";
        if (y == "force") opts.you = YouPolicy::Force;
        else if (y == "suppress") opts.you = YouPolicy::Suppress;
        else if (y == "auto" || y.empty()) opts.you = YouPolicy::Auto;
        else {
            ctx->last_error = "you policy must be auto, force or suppress";
            return FEN_ERR_ARG;
        }
        std::string ins = insertion && *insertion ? insertion : "u";
        auto ic = insertion_from_name(ins);
        if (!ic) {
            ctx->last_error = "insertion must be u, p, o or x";
            return FEN_ERR_ARG;
        }
        opts.insertion = *ic;
        *out = dup_string(render_quantity(q->q, opts));
        return FEN_OK;
    });
}

fen_status fen_classify(fen_ctx* ctx, const char* text, char** out) {
    return guarded(ctx, [&]() {
        if (!text || !out) return FEN_ERR_ARG;
        *out = dup_string(category_name(classify(text, parse_options(ctx))));
        return FEN_OK;
    });
}

fen_status fen_reduce(fen_ctx* ctx, const char* fraction, char** out) {
    return guarded(ctx, [&]() {
        if (!fraction || !out) return FEN_ERR_ARG;
        *out = dup_string(reduce(rational_from_text(fraction)).str());
        return FEN_OK;
    });
}

fen_status fen_convert(fen_ctx* ctx, const char* value, const char* from_unit,
                       const char* to_unit, char** out) {
    return guarded(ctx, [&]() {
        if (!value || !from_unit || !to_unit || !out) return FEN_ERR_ARG;
        auto lookup = [&](const std::string& name) -> Unit {
            auto found = ctx->registry.find_pinyin(name);
            if (found.empty()) found = ctx->registry.find_glyph(name);
            if (found.empty()) throw UnitError("unknown unit: " + name);
            if (found.size() > 1) {
                if (ctx->shi_dimension)
                    for (const auto& u : found)
                        if (u.dimension == *ctx->shi_dimension) return u;
                throw UnitError("ambiguous unit " + name + "; set a dimension");
            }
            return found.front();
        };
        Unit from = lookup(from_unit);
        Unit to = lookup(to_unit);
        Rational got = convert(rational_from_text(value), from, to);
        *out = dup_string(got.str() + " " + to.pinyin);
        return FEN_OK;
    });
}

fen_status fen_corpus_load(fen_ctx* ctx, const char* corpus_path, const char* statements_path,
                           fen_corpus** out) {
    return guarded(ctx, [&]() {
        if (!corpus_path || !out) return FEN_ERR_ARG;
        try {
            Corpus c =
                load_corpus(corpus_path, statements_path ? statements_path : "", ctx->registry);
            if (!c.load_issues.empty()) {
                std::string msg = "corpus loaded with issues:";
                for (const auto& i : c.load_issues) msg += " [" + i.record_id + "] " + i.what;
                ctx->last_error = msg;
            }
            *out = new fen_corpus{std::move(c)};
        } catch (const ParseError& e) {
            ctx->last_error = e.what();
            return std::string(e.what()).find("cannot open") != std::string::npos
                       ? FEN_ERR_IO
                       : FEN_ERR_PARSE;
        }
        return FEN_OK;
    });
}

void fen_corpus_free(fen_corpus* c) { delete c; }

fen_status fen_corpus_stats(fen_ctx* ctx, const fen_corpus* c, int as_json, char** out) {
    return guarded(ctx, [&]() {
        if (!c || !out) return FEN_ERR_ARG;
        StatsReport r = stats(c->c);
        *out = dup_string(as_json ? stats_to_json(r) : stats_to_text(r));
        return FEN_OK;
    });
}

fen_status fen_corpus_verify(fen_ctx* ctx, const fen_corpus* c, int as_json, char** out,
                             int* failures) {
    return guarded(ctx, [&]() {
        if (!c || !out) return FEN_ERR_ARG;
        RoundtripReport rt = roundtrip_verify(c->c, ctx->registry);
        SeriesReport se = verify_series(c->c);
        StatementReport st = verify_statements(c->c, ctx->registry);
        int fails = rt.failed + st.failed;
        for (const auto& s : se.series)
            if (!s.passed) ++fails;
        fails += static_cast<int>(c->c.load_issues.size());
        if (failures) *failures = fails;
        if (as_json) {
            *out = dup_string(verify_to_json(rt, se, st));
        } else {
            std::string text =
                roundtrip_to_text(rt) + series_to_text(se) + statements_to_text(st);
            for (const auto& i : c->c.load_issues)
                text += "LOAD ISSUE " + i.record_id + ": " + i.what + "\n";
            *out = dup_string(text);
        }
        return FEN_OK;
    });
}

} // extern "C"
