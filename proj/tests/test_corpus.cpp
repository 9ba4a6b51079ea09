#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <thread>

#include "fenshu/corpus.hpp"

using namespace fenshu;

namespace {

const Corpus& corpus() {
    static Corpus c = load_corpus(std::string(FENSHU_DATA_DIR) + "/corpus.tsv",
                                  std::string(FENSHU_DATA_DIR) + "/statements.tsv");
    return c;
}

const CorpusRecord& record(const std::string& id) {
    for (const auto& r : corpus().records)
        if (r.id == id) return r;
    REQUIRE(false);
    static CorpusRecord dummy;
    return dummy;
}

} // namespace

TEST_CASE("corpus loads without schema issues") {
    const Corpus& c = corpus();
    for (const auto& issue : c.load_issues) {
        CAPTURE(issue.record_id);
        CAPTURE(issue.what);
        CHECK(false);
    }
    CHECK(c.records.size() > 150);
    CHECK(c.statements.size() == 13);
}

TEST_CASE("spot checks on annotated records") {
    const CorpusRecord& r75 = record("ex075");
    CHECK(r75.insertion == InsertionContext::ObjectOfVerb);
    CHECK(category_name(*r75.category) == "c2");
    CHECK(r75.has_zhi);

    const CorpusRecord& r17 = record("ex017");
    CHECK(category_name(*r17.category) == "b1");

    const CorpusRecord& r22 = record("ex022");
    CHECK(r22.count == 4);

    const CorpusRecord& r115 = record("ex115");
    CHECK(r115.insertion == InsertionContext::Unknown);
    CHECK(r115.flagged("illegible_prefix"));
}

TEST_CASE("pattern distribution and subtotals") {
    StatsReport s = stats(corpus());
    CHECK(s.pattern_counts.at("mono") == 82);
    CHECK(s.pattern_counts.at("a") == 35);
    CHECK(s.pattern_counts.at("b") == 54);
    CHECK(s.pattern_counts.at("c") == 7);
    CHECK(s.pattern_counts.at("d") == 47);
    CHECK(s.pattern_counts.at("lex_half") == 47);
    CHECK(s.pattern_counts.at("lex_third") == 24);
    CHECK(s.pattern_counts.at("lex_two_thirds") == 4);

    CHECK(s.section_subtotals.at("a1") == 24);
    CHECK(s.section_subtotals.at("b1") == 11);
    CHECK(s.section_subtotals.at("c1") == 0);
    CHECK(s.section_subtotals.at("d1") == 11);
    CHECK(s.section_subtotals.at("a2") == 11);
    CHECK(s.section_subtotals.at("b2") == 43);
    CHECK(s.section_subtotals.at("c2") == 7);
    CHECK(s.section_subtotals.at("d2") == 36);

    // the classifier sees the 1/8 strip instance as a unit fraction
    CHECK(s.classified_subtotals.at("b1") == 12);
    CHECK(s.classified_subtotals.at("b2") == 42);

    CHECK(s.regular_total == 300);
}

TEST_CASE("table 2 with marginals and rates") {
    StatsReport s = stats(corpus());
    CHECK(s.table2[0][0] == 76);
    CHECK(s.table2[0][1] == 2);
    CHECK(s.table2[1][0] == 13);
    CHECK(s.table2[1][1] == 51);
    CHECK(s.table2_total == 142);
    CHECK(s.table2[0][0] + s.table2[0][1] == 78);
    CHECK(s.table2[1][0] + s.table2[1][1] == 64);
    CHECK(s.table2[0][0] + s.table2[1][0] == 89);
    CHECK(s.table2[0][1] + s.table2[1][1] == 53);
    CHECK(s.zhi_when_inserted.num == 51);
    CHECK(s.zhi_when_inserted.den == 64);
    CHECK(s.zhi_when_inserted.percent() == 80);
    CHECK(s.uninserted_when_no_zhi.num == 76);
    CHECK(s.uninserted_when_no_zhi.den == 89);
    CHECK(s.uninserted_when_no_zhi.percent() == 85);
}

TEST_CASE("table 1 and its rates") {
    StatsReport s = stats(corpus());
    CHECK(s.table1[0][0] == 18);
    CHECK(s.table1[0][1] == 10);
    CHECK(s.table1[1][0] == 4);
    CHECK(s.table1[1][1] == 18);
    CHECK(s.lexical_with_mw.num == 18);
    CHECK(s.lexical_with_mw.den == 22);
    CHECK(s.lexical_with_mw.percent() == 82);
    CHECK(s.regular_without_mw.num == 18);
    CHECK(s.regular_without_mw.den == 28);
    CHECK(s.regular_without_mw.percent() == 64);
}

TEST_CASE("monodimensionality rate and the documented gap") {
    StatsReport s = stats(corpus());
    CHECK(s.mono_unit_rate_stated.num == 83);
    CHECK(s.mono_unit_rate_stated.den == 129);
    CHECK(s.mono_unit_rate_stated.percent() == 64);
    CHECK(s.mono_unit_rate_computed.num == 82);
    CHECK(s.mono_unit_rate_computed.den == 129);
    REQUIRE(!s.discrepancies.empty());
    bool mono_gap = false;
    for (const auto& d : s.discrepancies)
        if (d.claim.find("83 monodimensional") != std::string::npos) mono_gap = true;
    CHECK(mono_gap);
}

TEST_CASE("statistics are order independent") {
    Corpus shuffled = corpus();
    std::mt19937 rng(5);
    std::shuffle(shuffled.records.begin(), shuffled.records.end(), rng);
    StatsReport a = stats(corpus());
    StatsReport b = stats(shuffled);
    CHECK(a.pattern_counts == b.pattern_counts);
    CHECK(a.table2_total == b.table2_total);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(a.table1[i][j] == b.table1[i][j]);
            CHECK(a.table2[i][j] == b.table2[i][j]);
        }
}

TEST_CASE("round trip over the whole transcription") {
    RoundtripReport r = roundtrip_verify(corpus());
    for (const auto& c : r.checks) {
        CAPTURE(c.id);
        CAPTURE(c.detail);
        CHECK(c.passed);
    }
    CHECK(r.failed == 0);
    // the illegible and elided records run parse-only
    CHECK(r.parse_only == 12);
}

TEST_CASE("series resolution") {
    SeriesReport r = verify_series(corpus());
    REQUIRE(r.series.size() == 4);
    std::map<int, std::string> dens;
    for (const auto& s : r.series) {
        CAPTURE(s.group);
        CAPTURE(s.detail);
        CHECK(s.passed);
        dens[s.group] = s.denominator.str();
    }
    CHECK(dens[128] == "7");
    CHECK(dens[129] == "72");
    CHECK(dens[130] == "47");
    CHECK(dens[131] == "36");
}

TEST_CASE("statement verification") {
    StatementReport r = verify_statements(corpus());
    for (const auto& c : r.checks) {
        CAPTURE(c.id);
        CAPTURE(c.detail);
        CHECK(c.passed);
    }
    CHECK(r.failed == 0);
    int reinterpretations = 0;
    for (const auto& c : r.checks)
        if (c.reinterpreted) ++reinterpretations;
    CHECK(reinterpretations == 2); // the two integer-as-fraction readings
}

TEST_CASE("load error paths") {
    std::string dir = std::string(FENSHU_DATA_DIR);
    CHECK_THROWS_AS(load_corpus(dir + "/nonexistent.tsv"), ParseError);

    // an empty file (header only) yields an empty corpus
    std::string tmp = "/tmp/fenshu_empty.tsv";
    {
        std::ofstream out(tmp);
        out << "id\texample\n";
    }
    Corpus empty = load_corpus(tmp);
    CHECK(empty.records.empty());
    CHECK(empty.load_issues.empty());

    // a record whose surface cannot carry its category is reported, the
    // load continues
    std::string bad = "/tmp/fenshu_bad.tsv";
    {
        std::ofstream out(bad);
        out << "id\tex\tsec\tstrips\tseries\tins\tcount\tzhi\tmw\tsurface\tctx\tvalue\tcorr\tsurfc\tcat\tflags\tnote\n";
        out << "bad1\t-\t41\t1\t-\tU\t1\t0\t0\t七分朱六\t-\tf:6/7:zhu:B\t-\t-\tc2\t-\t-\n";
        out << "good1\t-\t41\t1\t-\tU\t1\t0\t0\t九分二\t-\tf:2/9:-:A\t-\t-\ta2\t-\t-\n";
    }
    Corpus mixed = load_corpus(bad);
    CHECK(mixed.load_issues.size() == 1);
    CHECK(mixed.load_issues[0].record_id == "bad1");
    CHECK(mixed.records.size() == 1);
}

TEST_CASE("stats over a single-record corpus") {
    Corpus single;
    for (const auto& r : corpus().records)
        if (r.id == "ex017") single.records.push_back(r);
    REQUIRE(single.records.size() == 1);
    StatsReport s = stats(single);
    CHECK(s.pattern_counts.at("b") == 1);
    CHECK(s.section_subtotals.at("b1") == 1);
    for (const char* k : {"mono", "a", "c", "d", "lex_half", "lex_third", "lex_two_thirds"})
        CHECK(s.pattern_counts.at(k) == 0);
    CHECK(s.regular_total == 1);
}

TEST_CASE("parsing and statistics are safe from concurrent callers") {
    std::vector<std::thread> threads;
    std::vector<std::string> outputs(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&outputs, t] {
            Quantity q = parse_quantity("米六升四分升之一");
            RenderOptions opts;
            StatsReport s = stats(corpus());
            outputs[t] = render_quantity(q, opts) + "/" +
                         std::to_string(s.pattern_counts.at("d"));
        });
    for (auto& th : threads) th.join();
    for (const auto& o : outputs) CHECK(o == outputs[0]);
    CHECK(outputs[0] == "米六升四分升之一/47");
}

TEST_CASE("report emitters") {
    StatsReport s = stats(corpus());
    std::string text = stats_to_text(s);
    CHECK(text.find("a:35 b:54 c:7 d:47") != std::string::npos);
    CHECK(text.find("51/64") != std::string::npos);
    std::string json = stats_to_json(s);
    CHECK(json.find("\"table2\"") != std::string::npos);
    RoundtripReport rt = roundtrip_verify(corpus());
    SeriesReport se = verify_series(corpus());
    StatementReport st = verify_statements(corpus());
    CHECK(verify_to_json(rt, se, st).find("\"roundtrip\"") != std::string::npos);
    CHECK(roundtrip_to_text(rt).find("failed") != std::string::npos);
}
