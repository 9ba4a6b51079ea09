#ifndef FENSHU_CORPUS_HPP
#define FENSHU_CORPUS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fenshu/fractions.hpp"
#include "fenshu/statements.hpp"

namespace fenshu {

struct CorpusRecord {
    std::string id;
    std::string example;            // printed example number, when any
    std::string section;            // 2, 31, 321..324, 41..44, 5, 6
    std::vector<int> strips;
    int series_group = -1;          // contextual-denominator series
    int series_order = 0;
    std::optional<BigInt> series_divisor; // announced by n 成
    InsertionContext insertion = InsertionContext::Unknown;
    int count = 1;                  // identical instances
    bool has_zhi = false;
    bool has_mw = false;
    std::string surface;            // manuscript spelling
    std::string context;            // surrounding words, for provenance
    Quantity value;
    std::optional<Quantity> corrected;
    std::string surface_corrected;
    std::optional<PatternCategory> category;
    std::set<std::string> flags;    // record-level editorial flags
    std::string note;

    bool flagged(const std::string& f) const { return flags.count(f) > 0; }
    bool illegible() const {
        return flagged("illegible_digits") || flagged("illegible_prefix") ||
               flagged("illegible_context");
    }
};

struct StatementRecord {
    enum class Kind { Product, Reduction, Division, Share };
    std::string id;
    std::string example;
    std::vector<int> strips;
    Kind kind = Kind::Product;
    std::string surface;
    std::vector<Quantity> lhs; // share statements list several addends
    std::optional<Quantity> rhs;
    Quantity result;
    BigInt divisor{0};
    std::set<std::string> flags;
    std::string note;

    bool flagged(const std::string& f) const { return flags.count(f) > 0; }
};

struct RecordIssue {
    std::string record_id;
    std::string what;
};

struct Corpus {
    std::vector<CorpusRecord> records;
    std::vector<StatementRecord> statements;
    std::vector<RecordIssue> load_issues; // schema errors; loading continues
};

/// Reads the tab-separated corpus (and optional statements table). Records
/// are validated as far as possible; per-record problems land in
/// load_issues rather than aborting the load.
Corpus load_corpus(const std::string& corpus_path, const std::string& statements_path = "",
                   const UnitRegistry& reg = UnitRegistry::builtin());

// ---- verification -------------------------------------------------------

struct CheckResult {
    std::string id;
    bool passed = false;
    bool render_checked = false; // false = parse-only (illegible or elided)
    std::string detail;          // filled on failure
};

struct RoundtripReport {
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
    int parse_only = 0;
    bool all_passed() const { return failed == 0; }
};

/// parse(surface) must reproduce the annotated value and
/// render(value, plain style) the normalized surface; records with
/// illegible text are parse-only, copyist errors check literal and
/// corrected readings.
RoundtripReport roundtrip_verify(const Corpus& corpus,
                                 const UnitRegistry& reg = UnitRegistry::builtin());

struct SeriesResult {
    int group = -1;
    BigInt denominator{0};
    bool passed = false;
    std::string detail;
    std::vector<std::string> member_values; // resolved, for the report
};

struct SeriesReport {
    std::vector<SeriesResult> series;
    bool all_passed() const {
        for (const auto& s : series)
            if (!s.passed) return false;
        return true;
    }
};

/// Resolves every contextual-denominator series and checks the results
/// are proper.
SeriesReport verify_series(const Corpus& corpus);

struct StatementResult {
    std::string id;
    bool passed = false;
    bool reinterpreted = false; // an integer name was read as 1/k
    std::string detail;
};

struct StatementReport {
    std::vector<StatementResult> checks;
    int passed = 0;
    int failed = 0;
    bool all_passed() const { return failed == 0; }
};

/// Re-parses each statement surface and evaluates it exactly.
StatementReport verify_statements(const Corpus& corpus,
                                  const UnitRegistry& reg = UnitRegistry::builtin());

// ---- statistics ----------------------------------------------------------

struct ExactRate {
    long num = 0;
    long den = 0;
    int percent() const; // rounded to the whole percent
    std::string str() const;
};

struct Discrepancy {
    std::string claim;    // the published figure
    std::string computed; // what the transcription yields
    std::string note;
};

struct StatsReport {
    std::map<std::string, long> pattern_counts;     // mono, a, b, c, d, lex_*
    std::map<std::string, long> section_subtotals;  // a1..d1, a2..d2 per itemized list
    std::map<std::string, long> classified_subtotals; // same keys, by classifier
    long table1[2][2] = {{0, 0}, {0, 0}}; // rows lexical/regular, cols MW+/MW-
    long table2[2][2] = {{0, 0}, {0, 0}}; // rows uninserted/inserted, cols zhi-/zhi+
    long table2_total = 0;
    ExactRate zhi_when_inserted;       // 51/64
    ExactRate uninserted_when_no_zhi;  // 76/89, of the zhi-less instances
    ExactRate lexical_with_mw;         // 18/22
    ExactRate regular_without_mw;      // 18/28
    ExactRate mono_unit_rate_stated;   // 83/129, the published figure
    ExactRate mono_unit_rate_computed; // from the transcription
    long regular_total = 0;            // instances counted in the distribution
    std::vector<Discrepancy> discrepancies;
};

StatsReport stats(const Corpus& corpus);

std::string stats_to_text(const StatsReport& r);
std::string stats_to_json(const StatsReport& r);
std::string roundtrip_to_text(const RoundtripReport& r);
std::string roundtrip_to_json(const RoundtripReport& r);
std::string series_to_text(const SeriesReport& r);
std::string statements_to_text(const StatementReport& r);
std::string verify_to_json(const RoundtripReport& rt, const SeriesReport& se,
                           const StatementReport& st);

} // namespace fenshu

#endif
