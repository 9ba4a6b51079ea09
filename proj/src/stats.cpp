#include <cmath>
#include <sstream>

#include "json.hpp"

#include "fenshu/corpus.hpp"

namespace fenshu {

int ExactRate::percent() const {
    if (den == 0) return 0;
    return static_cast<int>(std::lround(100.0 * num / den));
}

std::string ExactRate::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

bool counted(const CorpusRecord& r) {
    return r.category.has_value() && !r.flagged("pattern_uncounted") && !r.flagged("elided_den");
}

std::string section_key(const std::string& section) {
    if (section == "321") return "a1";
    if (section == "322") return "b1";
    if (section == "323") return "c1";
    if (section == "324") return "d1";
    if (section == "41") return "a2";
    if (section == "42") return "b2";
    if (section == "43") return "c2";
    if (section == "44") return "d2";
    return "";
}

} // namespace

StatsReport stats(const Corpus& corpus) {
    StatsReport rep;
    for (const char* k : {"mono", "a", "b", "c", "d", "lex_half", "lex_third", "lex_two_thirds"})
        rep.pattern_counts[k] = 0;
    for (const char* k : {"a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2"}) {
        rep.section_subtotals[k] = 0;
        rep.classified_subtotals[k] = 0;
    }

    long mono_nomw = 0, mono_mw = 0, uncounted_instances = 0;
    for (const auto& r : corpus.records) {
        if (!r.category) continue;
        if (r.flagged("elided_den")) continue;
        if (r.flagged("pattern_uncounted")) {
            uncounted_instances += r.count;
            // still part of the 1/3-2/3 distribution, handled below
        }
        bool in = counted(r);
        const PatternCategory& cat = *r.category;
        long n = r.count;

        if (in) {
            switch (cat.form) {
            case FractionForm::Mono:
                rep.pattern_counts["mono"] += n;
                (r.has_mw ? mono_mw : mono_nomw) += n;
                break;
            case FractionForm::A: rep.pattern_counts["a"] += n; break;
            case FractionForm::B: rep.pattern_counts["b"] += n; break;
            case FractionForm::C: rep.pattern_counts["c"] += n; break;
            case FractionForm::D: rep.pattern_counts["d"] += n; break;
            case FractionForm::LexHalf: rep.pattern_counts["lex_half"] += n; break;
            case FractionForm::LexThird: rep.pattern_counts["lex_third"] += n; break;
            case FractionForm::LexTwoThirds: rep.pattern_counts["lex_two_thirds"] += n; break;
            }
            std::string sec = section_key(r.section);
            if (!sec.empty()) rep.section_subtotals[sec] += n;
            if (form_is_bidimensional(cat.form)) rep.classified_subtotals[category_name(cat)] += n;
            rep.regular_total += n;

            // the insertion table covers bidimensional expressions with a
            // legible context
            if (form_is_bidimensional(cat.form) && r.insertion != InsertionContext::Unknown) {
                int row = is_inserted(r.insertion) ? 1 : 0;
                int col = r.has_zhi ? 1 : 0;
                rep.table2[row][col] += n;
                rep.table2_total += n;
            }
        }

        // distribution of the expressions for 1/3 and 2/3
        if (cat.form == FractionForm::LexThird || cat.form == FractionForm::LexTwoThirds) {
            rep.table1[0][r.has_mw ? 0 : 1] += n;
        } else if (cat.form != FractionForm::LexHalf && r.value.frac &&
                   r.value.frac->den == 3) {
            rep.table1[1][r.has_mw ? 0 : 1] += n;
        }
    }

    rep.zhi_when_inserted = {rep.table2[1][1], rep.table2[1][0] + rep.table2[1][1]};
    rep.uninserted_when_no_zhi = {rep.table2[0][0], rep.table2[0][0] + rep.table2[1][0]};
    rep.lexical_with_mw = {rep.table1[0][0], rep.table1[0][0] + rep.table1[1][0]};
    rep.regular_without_mw = {rep.table1[1][1], rep.table1[0][1] + rep.table1[1][1]};

    long unit_bidim = rep.classified_subtotals["a1"] + rep.classified_subtotals["b1"] +
                      rep.classified_subtotals["c1"] + rep.classified_subtotals["d1"];
    long mono_total = rep.pattern_counts["mono"];
    rep.mono_unit_rate_computed = {mono_total, mono_total + unit_bidim};
    rep.mono_unit_rate_stated = {83, 129};

    // Published headline figures the transcription cannot reproduce exactly;
    // this list is the one place where the two may differ.
    rep.discrepancies.push_back(
        {"83 monodimensional instances, stated as 76 without and 8 with a measure word",
         std::to_string(mono_nomw) + " + " + std::to_string(mono_mw) + " = " +
             std::to_string(mono_total) + " from the itemized lists",
         "the published rate 83/129 is kept as stated; the transcription gives " +
             rep.mono_unit_rate_computed.str()});
    rep.discrepancies.push_back(
        {"11 unit-fraction instances of the MW-without-zhi pattern",
         std::to_string(rep.classified_subtotals["b1"]) + " by the classifier",
         "the 1/8 strip instance is listed among the non-unit patterns"});
    if (uncounted_instances > 0)
        rep.discrepancies.push_back(
            {"pattern totals a 35, b 54, c 7, d 47 and a grand total of 301",
             std::to_string(rep.regular_total) + " itemized instances plus " +
                 std::to_string(uncounted_instances) + " attested but unitemized",
             "2/3 qian twice, and the series-opening fractions 6/7 qian and 12/47 dou"});
    return rep;
}

std::string stats_to_text(const StatsReport& r) {
    std::ostringstream out;
    auto get = [&](const char* k) { return r.pattern_counts.at(k); };
    out << "pattern distribution\n";
    out << "  mono:" << get("mono") << "  a:" << get("a") << " b:" << get("b") << " c:"
        << get("c") << " d:" << get("d") << "\n";
    out << "  lexicalized  half:" << get("lex_half") << " third:" << get("lex_third")
        << " two_thirds:" << get("lex_two_thirds") << "\n";
    out << "  unit-fraction lists     a1:" << r.section_subtotals.at("a1")
        << " b1:" << r.section_subtotals.at("b1") << " c1:" << r.section_subtotals.at("c1")
        << " d1:" << r.section_subtotals.at("d1") << "\n";
    out << "  non-unit lists          a2:" << r.section_subtotals.at("a2")
        << " b2:" << r.section_subtotals.at("b2") << " c2:" << r.section_subtotals.at("c2")
        << " d2:" << r.section_subtotals.at("d2") << "\n";
    out << "  counted instances: " << r.regular_total << "\n";
    out << "expressions for 1/3 and 2/3 (rows lexical/regular, cols MW+/MW-)\n";
    out << "  lexical  " << r.table1[0][0] << "  " << r.table1[0][1] << "\n";
    out << "  regular  " << r.table1[1][0] << "  " << r.table1[1][1] << "\n";
    out << "  lexical rate with MW " << r.lexical_with_mw.str() << " = "
        << r.lexical_with_mw.percent() << "%, regular rate without MW "
        << r.regular_without_mw.str() << " = " << r.regular_without_mw.percent() << "%\n";
    out << "insertion and zhi (rows uninserted/inserted, cols zhi-/zhi+)\n";
    out << "  uninserted  " << r.table2[0][0] << "  " << r.table2[0][1] << "\n";
    out << "  inserted    " << r.table2[1][0] << "  " << r.table2[1][1] << "\n";
    out << "  total " << r.table2_total << ", zhi rate when inserted "
        << r.zhi_when_inserted.str() << " = " << r.zhi_when_inserted.percent()
        << "%, uninserted rate among the zhi-less " << r.uninserted_when_no_zhi.str() << " = "
        << r.uninserted_when_no_zhi.percent() << "%\n";
    out << "monodimensional unit fractions: stated " << r.mono_unit_rate_stated.str() << " = "
        << r.mono_unit_rate_stated.percent() << "%, transcription "
        << r.mono_unit_rate_computed.str() << " = " << r.mono_unit_rate_computed.percent()
        << "%\n";
    out << "discrepancies with the published tallies\n";
    for (const auto& d : r.discrepancies)
        out << "  stated: " << d.claim << "\n    found: " << d.computed << "\n    note:  "
            << d.note << "\n";
    return out.str();
}

namespace {

nlohmann::json rate_json(const ExactRate& r) {
    return {{"num", r.num}, {"den", r.den}, {"percent", r.percent()}};
}

} // namespace

std::string stats_to_json(const StatsReport& r) {
    nlohmann::json j;
    j["pattern_counts"] = r.pattern_counts;
    j["section_subtotals"] = r.section_subtotals;
    j["classified_subtotals"] = r.classified_subtotals;
    j["table1"] = {{r.table1[0][0], r.table1[0][1]}, {r.table1[1][0], r.table1[1][1]}};
    j["table2"] = {{r.table2[0][0], r.table2[0][1]}, {r.table2[1][0], r.table2[1][1]}};
    j["table2_total"] = r.table2_total;
    j["rates"] = {{"zhi_when_inserted", rate_json(r.zhi_when_inserted)},
                  {"uninserted_when_no_zhi", rate_json(r.uninserted_when_no_zhi)},
                  {"lexical_with_mw", rate_json(r.lexical_with_mw)},
                  {"regular_without_mw", rate_json(r.regular_without_mw)},
                  {"mono_unit_stated", rate_json(r.mono_unit_rate_stated)},
                  {"mono_unit_computed", rate_json(r.mono_unit_rate_computed)}};
    j["regular_total"] = r.regular_total;
    j["discrepancies"] = nlohmann::json::array();
    for (const auto& d : r.discrepancies)
        j["discrepancies"].push_back({{"claim", d.claim}, {"computed", d.computed},
                                      {"note", d.note}});
    return j.dump(2);
}

std::string roundtrip_to_text(const RoundtripReport& r) {
    std::ostringstream out;
    out << "round trip: " << r.passed << " passed (" << r.parse_only << " parse-only), "
        << r.failed << " failed\n";
    for (const auto& c : r.checks)
        if (!c.passed) out << "  FAIL " << c.id << ": " << c.detail << "\n";
    return out.str();
}

std::string roundtrip_to_json(const RoundtripReport& r) {
    nlohmann::json j;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["parse_only"] = r.parse_only;
    j["failures"] = nlohmann::json::array();
    for (const auto& c : r.checks)
        if (!c.passed) j["failures"].push_back({{"id", c.id}, {"detail", c.detail}});
    return j.dump(2);
}

std::string series_to_text(const SeriesReport& r) {
    std::ostringstream out;
    for (const auto& s : r.series) {
        out << "series " << s.group << ": ";
        if (s.passed) {
            out << "denominator " << s.denominator.str() << ", " << s.member_values.size()
                << " fractions proper\n";
        } else {
            out << "FAIL " << s.detail << "\n";
        }
    }
    return out.str();
}

std::string statements_to_text(const StatementReport& r) {
    std::ostringstream out;
    out << "statements: " << r.passed << " passed, " << r.failed << " failed\n";
    for (const auto& c : r.checks) {
        if (!c.passed) out << "  FAIL " << c.id << ": " << c.detail << "\n";
        else if (c.reinterpreted) out << "  " << c.id << ": integer read as its reciprocal\n";
    }
    return out.str();
}

std::string verify_to_json(const RoundtripReport& rt, const SeriesReport& se,
                           const StatementReport& st) {
    nlohmann::json j;
    j["roundtrip"] = nlohmann::json::parse(roundtrip_to_json(rt));
    j["series"] = nlohmann::json::array();
    for (const auto& s : se.series) {
        nlohmann::json e{{"group", s.group}, {"passed", s.passed}};
        if (s.passed) {
            e["denominator"] = s.denominator.str();
            e["members"] = s.member_values;
        } else {
            e["detail"] = s.detail;
        }
        j["series"].push_back(e);
    }
    j["statements"] = {{"passed", st.passed}, {"failed", st.failed}};
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& c : st.checks)
        if (!c.passed) fails.push_back({{"id", c.id}, {"detail", c.detail}});
    j["statements"]["failures"] = fails;
    return j.dump(2);
}

} // namespace fenshu
