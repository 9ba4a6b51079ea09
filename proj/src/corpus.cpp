#include "fenshu/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fenshu/arithmetic.hpp"
#include "fenshu/text.hpp"

namespace fenshu {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

bool blank(const std::string& s) { return s.empty() || s == "-"; }

std::vector<int> parse_strips(const std::string& s) {
    std::vector<int> out;
    if (blank(s)) return out;
    for (const auto& part : split(s, ',')) out.push_back(std::stoi(part));
    return out;
}

std::set<std::string> parse_flags(const std::string& s) {
    std::set<std::string> out;
    if (blank(s)) return out;
    for (const auto& f : split(s, ',')) out.insert(f);
    return out;
}

} // namespace

Corpus load_corpus(const std::string& corpus_path, const std::string& statements_path,
                   const UnitRegistry& reg) {
    std::ifstream in(corpus_path);
    if (!in) throw ParseError("cannot open corpus: " + corpus_path);
    Corpus corpus;
    std::string line;
    size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) { // column header
            header_seen = true;
            continue;
        }
        auto cols = split(line, '\t');
        std::string id = cols.empty() ? ("line " + std::to_string(lineno)) : cols[0];
        if (cols.size() != 17) {
            corpus.load_issues.push_back(
                {id, "expected 17 columns, got " + std::to_string(cols.size())});
            continue;
        }
        try {
            CorpusRecord r;
            r.id = cols[0];
            r.example = blank(cols[1]) ? "" : cols[1];
            r.section = cols[2];
            r.strips = parse_strips(cols[3]);
            if (!blank(cols[4])) {
                std::string s = cols[4];
                auto at = s.find('@');
                if (at != std::string::npos) {
                    r.series_divisor = BigInt(s.substr(at + 1));
                    s = s.substr(0, at);
                }
                auto parts = split(s, ':');
                r.series_group = std::stoi(parts.at(0));
                r.series_order = std::stoi(parts.at(1));
            }
            auto ins = insertion_from_name(cols[5]);
            if (!ins) throw ParseError("bad insertion: " + cols[5]);
            r.insertion = *ins;
            r.count = std::stoi(cols[6]);
            if (r.count < 1) throw ParseError("count must be >= 1");
            r.has_zhi = cols[7] == "1";
            r.has_mw = cols[8] == "1";
            r.surface = cols[9];
            r.context = blank(cols[10]) ? "" : cols[10];
            r.value = quantity_from_spec(cols[11], reg);
            if (!blank(cols[12])) r.corrected = quantity_from_spec(cols[12], reg);
            r.surface_corrected = blank(cols[13]) ? "" : cols[13];
            if (!blank(cols[14])) {
                auto cat = category_from_name(cols[14]);
                if (!cat) throw ParseError("bad category: " + cols[14]);
                r.category = *cat;
            }
            r.flags = parse_flags(cols[15]);
            r.note = blank(cols[16]) ? "" : cols[16];

            // annotated category must agree with the classifier
            if (r.category) {
                PatternCategory got = classify(r.value);
                if (!(got == *r.category))
                    throw ParseError("category " + category_name(*r.category) +
                                     " disagrees with classifier " + category_name(got));
            }
            if (r.value.frac && r.value.frac->has_zhi() != r.has_zhi)
                throw ParseError("has_zhi column disagrees with the form");
            corpus.records.push_back(std::move(r));
        } catch (const std::exception& e) {
            corpus.load_issues.push_back({id, e.what()});
        }
    }

    if (statements_path.empty()) return corpus;
    std::ifstream sin(statements_path);
    if (!sin) throw ParseError("cannot open statements: " + statements_path);
    lineno = 0;
    header_seen = false;
    while (std::getline(sin, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        auto cols = split(line, '\t');
        std::string id = cols.empty() ? ("line " + std::to_string(lineno)) : cols[0];
        if (cols.size() != 11) {
            corpus.load_issues.push_back(
                {id, "expected 11 columns, got " + std::to_string(cols.size())});
            continue;
        }
        try {
            StatementRecord s;
            s.id = cols[0];
            s.example = blank(cols[1]) ? "" : cols[1];
            s.strips = parse_strips(cols[2]);
            if (cols[3] == "product") s.kind = StatementRecord::Kind::Product;
            else if (cols[3] == "reduction") s.kind = StatementRecord::Kind::Reduction;
            else if (cols[3] == "division") s.kind = StatementRecord::Kind::Division;
            else if (cols[3] == "share") s.kind = StatementRecord::Kind::Share;
            else throw ParseError("bad statement kind: " + cols[3]);
            s.surface = cols[4];
            if (!blank(cols[5]))
                for (const auto& part : split(cols[5], '+'))
                    s.lhs.push_back(quantity_from_spec(part, reg));
            if (!blank(cols[6])) s.rhs = quantity_from_spec(cols[6], reg);
            if (!blank(cols[7])) s.result = quantity_from_spec(cols[7], reg);
            if (!blank(cols[8])) s.divisor = BigInt(cols[8]);
            s.flags = parse_flags(cols[9]);
            s.note = blank(cols[10]) ? "" : cols[10];
            corpus.statements.push_back(std::move(s));
        } catch (const std::exception& e) {
            corpus.load_issues.push_back({id, e.what()});
        }
    }
    return corpus;
}

RoundtripReport roundtrip_verify(const Corpus& corpus, const UnitRegistry& reg) {
    RoundtripReport report;
    for (const auto& r : corpus.records) {
        CheckResult c;
        c.id = r.id;
        try {
            ParseOptions popts;
            popts.registry = &reg;
            popts.allow_anomalies = r.illegible() || r.flagged("copyist_error");
            popts.elision_series = r.flagged("elided_den");
            Quantity parsed = parse_quantity(r.surface, popts);
            if (!parsed.same_shape(r.value))
                throw ParseError("parse produced " + quantity_to_spec(parsed) + ", annotated " +
                                 quantity_to_spec(r.value));
            if (r.category) {
                PatternCategory got = classify(parsed);
                if (!(got == *r.category))
                    throw ParseError("classified " + category_name(got) + ", annotated " +
                                     category_name(*r.category));
            }

            bool elided = r.value.frac && r.value.frac->elided();
            if (r.illegible() || elided || r.flagged("irregular_surface")) {
                c.render_checked = false; // parse-only
            } else {
                RenderOptions ropts;
                ropts.ligatures = LigatureStyle::Plain;
                const Quantity& q = r.corrected ? *r.corrected : r.value;
                const std::string& target = r.corrected ? r.surface_corrected : r.surface;
                std::string rendered = render_quantity(q, ropts);
                std::string want = normalize(target);
                if (rendered != want)
                    throw ParseError("rendered " + rendered + ", normalized surface " + want);
                c.render_checked = true;
            }
            c.passed = true;
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = e.what();
        }
        if (c.passed && !c.render_checked) ++report.parse_only;
        (c.passed ? report.passed : report.failed) += 1;
        report.checks.push_back(std::move(c));
    }
    return report;
}

SeriesReport verify_series(const Corpus& corpus) {
    SeriesReport report;
    std::map<int, std::vector<const CorpusRecord*>> groups;
    for (const auto& r : corpus.records)
        if (r.series_group >= 0) groups[r.series_group].push_back(&r);
    for (auto& [group, members] : groups) {
        std::sort(members.begin(), members.end(),
                  [](const CorpusRecord* a, const CorpusRecord* b) {
                      return a->series_order < b->series_order;
                  });
        SeriesResult res;
        res.group = group;
        try {
            std::optional<BigInt> divisor;
            std::vector<Quantity> seq;
            for (const auto* m : members) {
                if (m->series_divisor) divisor = m->series_divisor;
                seq.push_back(m->value);
            }
            std::vector<Quantity> resolved = resolve_elision(seq, divisor);
            for (const auto& q : resolved) {
                if (!q.frac) continue;
                if (!q.frac->value().is_proper())
                    throw DomainError("resolved fraction is not proper");
                if (res.denominator == 0) res.denominator = q.frac->den;
                res.member_values.push_back(quantity_to_spec(q));
            }
            res.passed = true;
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = e.what();
        }
        report.series.push_back(std::move(res));
    }
    return report;
}

namespace {

bool same_magnitude(const Quantity& a, const Quantity& b) {
    try {
        return a.magnitude() == b.magnitude();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

StatementReport verify_statements(const Corpus& corpus, const UnitRegistry& reg) {
    StatementReport report;
    ParseOptions popts;
    popts.registry = &reg;
    for (const auto& s : corpus.statements) {
        StatementResult res;
        res.id = s.id;
        try {
            switch (s.kind) {
            case StatementRecord::Kind::Product: {
                Statement st = parse_statement(s.surface, popts);
                if (st.kind != Statement::Kind::Product)
                    throw ParseError("expected a product template");
                if (s.flagged("context_lhs")) {
                    if (st.lhs) throw ParseError("surface states a first factor");
                } else {
                    if (s.lhs.empty() || !st.lhs || !same_magnitude(*st.lhs, s.lhs.front()))
                        throw ParseError("first factor disagrees with the annotation");
                }
                if (!st.rhs || !same_magnitude(*st.rhs, *s.rhs))
                    throw ParseError("second factor disagrees with the annotation");
                if (!st.result || !same_magnitude(*st.result, s.result))
                    throw ParseError("stated result disagrees with the annotation");
                ProductCheck chk = check_product(s.lhs.front(), *s.rhs, s.result);
                if (!chk.matches)
                    throw DomainError("product " + chk.left.str() + " x " + chk.right.str() +
                                      " does not equal the stated result");
                res.reinterpreted = chk.reinterpreted >= 0;
                if (s.flagged("infer") && !res.reinterpreted)
                    throw DomainError("expected an integer-as-fraction reading");
                break;
            }
            case StatementRecord::Kind::Reduction: {
                Statement st = parse_statement(s.surface, popts);
                if (st.kind != Statement::Kind::Reduction)
                    throw ParseError("expected a reduction template");
                if (!st.result || !same_magnitude(*st.result, s.result))
                    throw ParseError("stated result disagrees with the annotation");
                Rational got = reduce(s.lhs.front().magnitude());
                Rational want = s.result.frac->value();
                if (!got.identical(want))
                    throw DomainError("reduce gives " + got.str() + ", stated " + want.str());
                break;
            }
            case StatementRecord::Kind::Division: {
                Statement st = parse_statement(s.surface, popts);
                if (st.kind != Statement::Kind::Division || st.divisor != s.divisor)
                    throw ParseError("divisor disagrees with the annotation");
                Rational quotient = divide_by(s.lhs.front().magnitude(), s.divisor);
                auto [whole, rem] = to_mixed(quotient);
                BigInt want_whole =
                    s.result.int_parts.empty() ? BigInt(0) : s.result.int_parts[0].coeff;
                if (whole != want_whole)
                    throw DomainError("integer part " + whole.str() + ", stated " +
                                      want_whole.str());
                if (s.result.frac && !rem.identical(s.result.frac->value()))
                    throw DomainError("remainder " + rem.str() + ", stated " +
                                      s.result.frac->value().str());
                break;
            }
            case StatementRecord::Kind::Share: {
                Rational total(BigInt(0), BigInt(1));
                for (const auto& q : s.lhs) total = add(total, q.magnitude());
                Rational got = share(total, s.divisor);
                Rational want = s.result.frac->value();
                if (!got.identical(want))
                    throw DomainError("share gives " + got.str() + ", stated " + want.str());
                break;
            }
            }
            res.passed = true;
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = e.what();
        }
        (res.passed ? report.passed : report.failed) += 1;
        report.checks.push_back(std::move(res));
    }
    return report;
}

} // namespace fenshu
