// Command-line front end. Links the shared C API only.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fenshu.h"

namespace {

struct CtxGuard {
    fen_ctx* ctx = fen_ctx_new();
    ~CtxGuard() { fen_ctx_free(ctx); }
};

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { fen_string_free(s); }
};

int fail(const fen_ctx* ctx, fen_status rc) {
    std::cerr << "error: " << fen_last_error(ctx) << "\n";
    return rc == FEN_ERR_ARG ? 1 : 2;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"codec, exact arithmetic and corpus statistics for Qin-Han "
                 "numeral and fraction expressions"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string ligatures = "manuscript";
    std::string units_path;
    std::string seventy;
    std::string output = "text";
    app.add_option("--ligatures", ligatures, "manuscript or plain surfaces")
        ->check(CLI::IsMember({"manuscript", "plain"}));
    app.add_option("--units", units_path, "unit table to load instead of the builtin one");
    app.add_option("--seventy", seventy, "glyph standing in for the 70-ligature");
    app.add_option("--output", output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // parse
    auto* cmd_parse = app.add_subcommand("parse", "parse quantification phrases");
    std::vector<std::string> parse_texts;
    std::string dimension;
    cmd_parse->add_option("text", parse_texts, "expressions (stdin lines when absent)");
    cmd_parse->add_option("--dimension", dimension, "capacity or weight, resolves 石")
        ->check(CLI::IsMember({"capacity", "weight"}));

    // render
    auto* cmd_render = app.add_subcommand("render", "render a value as manuscript text");
    std::string r_int, r_frac, r_unit, r_noun, r_spec;
    std::string r_form = "auto", r_zhi = "auto", r_you, r_insertion = "u";
    cmd_render->add_option("--int", r_int, "integer part");
    cmd_render->add_option("--frac", r_frac, "proper fraction a/b");
    cmd_render->add_option("--unit", r_unit, "measure word (pinyin), shared by both parts");
    cmd_render->add_option("--noun", r_noun, "leading noun");
    cmd_render->add_option("--spec", r_spec, "full quantity spec, overrides the flags above");
    cmd_render->add_option("--form", r_form,
                           "auto, mono, a, b, c, d, half, third or two_thirds");
    cmd_render->add_option("--zhi", r_zhi, "auto, force or suppress")
        ->check(CLI::IsMember({"auto", "force", "suppress"}));
    cmd_render->add_option("--you", r_you, "auto, force or suppress")
        ->check(CLI::IsMember({"auto", "force", "suppress"}));
    cmd_render->add_option("--insertion", r_insertion, "u, p or o (drives auto form)")
        ->check(CLI::IsMember({"u", "p", "o"}));

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "name the surface pattern");
    std::string c_text;
    cmd_classify->add_option("text", c_text)->required();
    cmd_classify->add_option("--dimension", dimension, "capacity or weight, resolves 石")
        ->check(CLI::IsMember({"capacity", "weight"}));

    // convert
    auto* cmd_convert = app.add_subcommand("convert", "exact unit conversion");
    std::string conv_value, conv_to;
    cmd_convert->add_option("value", conv_value, "e.g. \"1/5 cun\" or \"3 jin\"")->required();
    cmd_convert->add_option("--to", conv_to, "target unit")->required();
    cmd_convert->add_option("--dimension", dimension, "capacity or weight, resolves 石")
        ->check(CLI::IsMember({"capacity", "weight"}));

    // reduce
    auto* cmd_reduce = app.add_subcommand("reduce", "reduce a fraction");
    std::string red_value;
    cmd_reduce->add_option("fraction", red_value, "e.g. 162/2016")->required();

    // stats / verify
    std::string corpus_path = "data/corpus.tsv";
    std::string statements_path;
    auto* cmd_stats = app.add_subcommand("stats", "distribution tables over the corpus");
    cmd_stats->add_option("corpus", corpus_path, "corpus table");
    auto* cmd_verify =
        app.add_subcommand("verify", "round-trip, series and statement checks");
    cmd_verify->add_option("corpus", corpus_path, "corpus table");
    cmd_verify->add_option("--statements", statements_path, "statement table");

    CLI11_PARSE(app, argc, argv);

    CtxGuard g;
    fen_ctx* ctx = g.ctx;
    fen_ctx_set_ligatures(ctx, ligatures == "manuscript" ? 1 : 0);
    if (!units_path.empty()) {
        if (auto rc = fen_ctx_load_units(ctx, units_path.c_str())) return fail(ctx, rc);
    }
    if (!seventy.empty()) {
        if (auto rc = fen_ctx_set_seventy(ctx, seventy.c_str())) return fail(ctx, rc);
    }
    if (!dimension.empty()) fen_ctx_set_shi_dimension(ctx, dimension.c_str());
    bool json = output == "json";

    if (cmd_parse->parsed()) {
        std::vector<std::string> inputs = parse_texts;
        if (inputs.empty()) {
            std::string line;
            while (std::getline(std::cin, line))
                if (!line.empty()) inputs.push_back(line);
        }
        int failures = 0;
        for (const auto& text : inputs) {
            fen_quantity* q = nullptr;
            fen_status rc = fen_parse_quantity(ctx, text.c_str(), &q);
            if (rc != FEN_OK) {
                std::cerr << text << ": " << fen_last_error(ctx) << "\n";
                ++failures;
                continue;
            }
            if (json) {
                StringGuard s;
                fen_quantity_json(ctx, q, &s.s);
                std::cout << "{\"input\":\"" << json_escape(text) << "\",\"quantity\":" << s.s
                          << "}\n";
            } else {
                StringGuard spec, info;
                fen_quantity_spec(ctx, q, &spec.s);
                fen_quantity_json(ctx, q, &info.s);
                auto j = nlohmann::json::parse(info.s);
                std::string cat = j.value("category", std::string("-"));
                std::string value = "elided";
                if (!j["value"].is_null()) {
                    value = std::string(j["value"]["num"]) + "/" +
                            std::string(j["value"]["den"]);
                    if (!j["unit"].is_null()) value += " " + std::string(j["unit"]);
                    std::string red = std::string(j["value_reduced"]["num"]) + "/" +
                                      std::string(j["value_reduced"]["den"]);
                    value += " (reduced " + red + ")";
                }
                std::string flags;
                for (const auto& f : j["flags"]) flags += (flags.empty() ? "" : ",") +
                                                          std::string(f);
                std::cout << text << "\t" << cat << "\t" << value << "\t" << spec.s
                          << (flags.empty() ? "" : "\t" + flags) << "\n";
            }
            fen_quantity_free(q);
        }
        return failures == 0 ? 0 : 2;
    }

    if (cmd_render->parsed()) {
        std::string spec = r_spec;
        if (spec.empty()) {
            if (r_int.empty() && r_frac.empty()) {
                std::cerr << "error: give --int and/or --frac, or --spec\n";
                return 1;
            }
            std::string unit = r_unit.empty() ? "-" : r_unit;
            if (!r_noun.empty()) spec += "n:" + r_noun + ";";
            if (!r_int.empty()) spec += "i:" + r_int + ":" + unit + ";";
            if (!r_frac.empty()) {
                std::string form_code = "A";
                if (r_form == "mono") form_code = "M";
                else if (r_form == "b") form_code = "B";
                else if (r_form == "c") form_code = "C";
                else if (r_form == "d") form_code = "D";
                else if (r_form == "half") form_code = "H";
                else if (r_form == "third") form_code = "S";
                else if (r_form == "two_thirds") form_code = "T";
                else if (r_form == "auto") form_code = unit == "-" ? "A" : "B";
                spec += "f:" + r_frac + ":" + unit + ":" + form_code + ";";
            }
            if (!spec.empty() && spec.back() == ';') spec.pop_back();
        }
        fen_quantity* q = nullptr;
        if (auto rc = fen_quantity_from_spec(ctx, spec.c_str(), &q)) return fail(ctx, rc);
        // mixed numbers default to the linker before zhi-marked fractions
        std::string you = r_you;
        if (you.empty()) you = (r_form == "d" && !r_int.empty()) ? "force" : "auto";
        StringGuard out;
        fen_status rc = fen_render_quantity(ctx, q, r_form == "auto" && r_frac.empty()
                                                        ? ""
                                                        : r_form.c_str(),
                                            r_zhi.c_str(), you.c_str(), r_insertion.c_str(),
                                            &out.s);
        fen_quantity_free(q);
        if (rc != FEN_OK) return fail(ctx, rc);
        if (json) std::cout << "{\"surface\":\"" << json_escape(out.s) << "\"}\n";
        else std::cout << out.s << "\n";
        return 0;
    }

    if (cmd_classify->parsed()) {
        StringGuard out;
        if (auto rc = fen_classify(ctx, c_text.c_str(), &out.s)) return fail(ctx, rc);
        std::cout << out.s << "\n";
        return 0;
    }

    if (cmd_convert->parsed()) {
        auto space = conv_value.find_last_of(' ');
        if (space == std::string::npos) {
            std::cerr << "error: value must be \"<number> <unit>\"\n";
            return 1;
        }
        std::string value = conv_value.substr(0, space);
        std::string unit = conv_value.substr(space + 1);
        StringGuard out;
        if (auto rc = fen_convert(ctx, value.c_str(), unit.c_str(), conv_to.c_str(), &out.s))
            return fail(ctx, rc);
        std::cout << out.s << "\n";
        return 0;
    }

    if (cmd_reduce->parsed()) {
        StringGuard out;
        if (auto rc = fen_reduce(ctx, red_value.c_str(), &out.s)) return fail(ctx, rc);
        std::cout << out.s << "\n";
        return 0;
    }

    if (cmd_stats->parsed() || cmd_verify->parsed()) {
        if (statements_path.empty()) {
            auto slash = corpus_path.find_last_of('/');
            std::string dir = slash == std::string::npos ? "." : corpus_path.substr(0, slash);
            statements_path = dir + "/statements.tsv";
        }
        fen_corpus* corpus = nullptr;
        if (auto rc =
                fen_corpus_load(ctx, corpus_path.c_str(), statements_path.c_str(), &corpus))
            return fail(ctx, rc);
        int code = 0;
        StringGuard out;
        if (cmd_stats->parsed()) {
            fen_status rc = fen_corpus_stats(ctx, corpus, json ? 1 : 0, &out.s);
            if (rc != FEN_OK) code = fail(ctx, rc);
            else std::cout << out.s;
        } else {
            int failures = 0;
            fen_status rc = fen_corpus_verify(ctx, corpus, json ? 1 : 0, &out.s, &failures);
            if (rc != FEN_OK) {
                code = fail(ctx, rc);
            } else {
                std::cout << out.s;
                if (!json)
                    std::cout << (failures == 0 ? "all checks passed\n"
                                                : std::to_string(failures) + " failures\n");
                code = failures == 0 ? 0 : 2;
            }
        }
        fen_corpus_free(corpus);
        return code;
    }

    return 1;
}
