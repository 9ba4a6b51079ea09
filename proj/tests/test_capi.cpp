// Exercises the shared-library surface through fenshu.h alone.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "fenshu.h"

namespace {

struct Ctx {
    fen_ctx* c = fen_ctx_new();
    ~Ctx() { fen_ctx_free(c); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    fen_string_free(s);
    return out;
}

} // namespace

TEST_CASE("integers through the C API") {
    Ctx g;
    char* out = nullptr;
    REQUIRE(fen_render_integer(g.c, "7129", &out) == FEN_OK);
    CHECK(take(out) == "七千一百廿九");
    fen_ctx_set_ligatures(g.c, 0);
    REQUIRE(fen_render_integer(g.c, "7129", &out) == FEN_OK);
    CHECK(take(out) == "七千一百二十九");
    REQUIRE(fen_parse_integer(g.c, "萬一千五百廿", &out) == FEN_OK);
    CHECK(take(out) == "11520");
    CHECK(fen_render_integer(g.c, "0", &out) == FEN_ERR_DOMAIN);
    CHECK(std::string(fen_last_error(g.c)).find("out of range") != std::string::npos);
    CHECK(fen_parse_integer(g.c, "十百", &out) == FEN_ERR_PARSE);
}

TEST_CASE("normalize and the configurable seventy glyph") {
    Ctx g;
    char* out = nullptr;
    REQUIRE(fen_normalize(g.c, "廿三有泰半", &out) == FEN_OK);
    CHECK(take(out) == "二十三又大半");
    REQUIRE(fen_ctx_set_seventy(g.c, "兀") == FEN_OK);
    REQUIRE(fen_normalize(g.c, "兀二", &out) == FEN_OK);
    CHECK(take(out) == "七十二");
    CHECK(fen_ctx_set_seventy(g.c, "七十") == FEN_ERR_ARG);
}

TEST_CASE("quantities through the C API") {
    Ctx g;
    fen_quantity* q = nullptr;
    REQUIRE(fen_parse_quantity(g.c, "金三朱九分朱五", &q) == FEN_OK);
    char* out = nullptr;
    REQUIRE(fen_quantity_spec(g.c, q, &out) == FEN_OK);
    CHECK(take(out) == "n:金;i:3:zhu;f:5/9:zhu:B");
    REQUIRE(fen_quantity_json(g.c, q, &out) == FEN_OK);
    std::string j = take(out);
    CHECK(j.find("\"category\":\"b2\"") != std::string::npos);
    CHECK(j.find("\"num\":\"32\"") != std::string::npos); // magnitude 32/9 zhu
    REQUIRE(fen_render_quantity(g.c, q, "", "auto", "auto", "u", &out) == FEN_OK);
    CHECK(take(out) == "金三朱九分朱五");
    REQUIRE(fen_render_quantity(g.c, q, "", "force", "auto", "u", &out) == FEN_OK);
    CHECK(take(out) == "金三朱九分朱之五");
    CHECK(fen_render_quantity(g.c, q, "nonsense", "auto", "auto", "u", &out) == FEN_ERR_ARG);
    fen_quantity_free(q);

    REQUIRE(fen_quantity_from_spec(g.c, "i:16:chi;f:12/18:chi:D;y:1", &q) == FEN_OK);
    REQUIRE(fen_render_quantity(g.c, q, "", "auto", "auto", "u", &out) == FEN_OK);
    CHECK(take(out) == "十六尺有十八分尺之十二");
    fen_quantity_free(q);

    CHECK(fen_parse_quantity(g.c, "五分七", &q) == FEN_ERR_PARSE);
    CHECK(std::string(fen_last_error(g.c)).find("7/5") != std::string::npos);
}

TEST_CASE("loading the unit table") {
    Ctx g;
    std::string path = std::string(FENSHU_DATA_DIR) + "/units.tsv";
    REQUIRE(fen_ctx_load_units(g.c, path.c_str()) == FEN_OK);
    char* out = nullptr;
    REQUIRE(fen_convert(g.c, "1", "jin", "zhu", &out) == FEN_OK);
    CHECK(take(out) == "384 zhu");
    CHECK(fen_ctx_load_units(g.c, "/nonexistent") == FEN_ERR_IO);
}

TEST_CASE("classify, reduce and convert") {
    Ctx g;
    char* out = nullptr;
    REQUIRE(fen_classify(g.c, "卅分之廿三", &out) == FEN_OK);
    CHECK(take(out) == "c2");
    REQUIRE(fen_reduce(g.c, "162/2016", &out) == FEN_OK);
    CHECK(take(out) == "9/112");
    REQUIRE(fen_convert(g.c, "1/5", "cun", "chi", &out) == FEN_OK);
    CHECK(take(out) == "1/50 chi");
    REQUIRE(fen_convert(g.c, "1", "jin", "zhu", &out) == FEN_OK);
    CHECK(take(out) == "384 zhu");
    CHECK(fen_convert(g.c, "1", "chi", "dou", &out) == FEN_ERR_UNIT);
    CHECK(fen_convert(g.c, "1", "shi", "dou", &out) == FEN_ERR_UNIT); // ambiguous
    REQUIRE(fen_ctx_set_shi_dimension(g.c, "capacity") == FEN_OK);
    REQUIRE(fen_convert(g.c, "1", "shi", "dou", &out) == FEN_OK);
    CHECK(take(out) == "10 dou");
}

TEST_CASE("corpus through the C API") {
    Ctx g;
    fen_corpus* corpus = nullptr;
    std::string dir = FENSHU_DATA_DIR;
    REQUIRE(fen_corpus_load(g.c, (dir + "/corpus.tsv").c_str(),
                            (dir + "/statements.tsv").c_str(), &corpus) == FEN_OK);
    char* out = nullptr;
    REQUIRE(fen_corpus_stats(g.c, corpus, 0, &out) == FEN_OK);
    std::string text = take(out);
    CHECK(text.find("a:35 b:54 c:7 d:47") != std::string::npos);
    REQUIRE(fen_corpus_stats(g.c, corpus, 1, &out) == FEN_OK);
    CHECK(take(out).find("\"table2\"") != std::string::npos);
    int failures = -1;
    REQUIRE(fen_corpus_verify(g.c, corpus, 0, &out, &failures) == FEN_OK);
    take(out);
    CHECK(failures == 0);
    fen_corpus_free(corpus);
    CHECK(fen_corpus_load(g.c, "/nonexistent.tsv", nullptr, &corpus) == FEN_ERR_IO);
}

TEST_CASE("null argument handling") {
    Ctx g;
    char* out = nullptr;
    CHECK(fen_normalize(nullptr, "x", &out) == FEN_ERR_ARG);
    CHECK(fen_normalize(g.c, nullptr, &out) == FEN_ERR_ARG);
    CHECK(fen_parse_quantity(g.c, "半", nullptr) == FEN_ERR_ARG);
    fen_string_free(nullptr); // harmless
    fen_quantity_free(nullptr);
}
