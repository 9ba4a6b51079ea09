#include "fenshu/units.hpp"

#include <fstream>
#include <sstream>

#include "fenshu/text.hpp"

namespace fenshu {

std::string dimension_name(Dimension d) {
    switch (d) {
    case Dimension::Length: return "length";
    case Dimension::Area: return "area";
    case Dimension::Volume: return "volume";
    case Dimension::Capacity: return "capacity";
    case Dimension::Weight: return "weight";
    case Dimension::Currency: return "currency";
    case Dimension::Count: return "count";
    }
    return "?";
}

std::optional<Dimension> dimension_from_name(std::string_view name) {
    if (name == "length") return Dimension::Length;
    if (name == "area") return Dimension::Area;
    if (name == "volume") return Dimension::Volume;
    if (name == "capacity") return Dimension::Capacity;
    if (name == "weight") return Dimension::Weight;
    if (name == "currency") return Dimension::Currency;
    if (name == "count") return Dimension::Count;
    return std::nullopt;
}

void UnitRegistry::add(Unit u, const std::vector<std::string>& aliases) {
    if (u.glyph_ms.empty()) u.glyph_ms = u.glyph;
    if (u.island.empty()) {
        // count-like measure words do not interconvert
        u.island = u.dimension == Dimension::Count ? "count:" + u.glyph
                                                   : dimension_name(u.dimension);
    }
    units_.push_back(std::move(u));
    size_t idx = units_.size() - 1;
    aliases_.emplace_back(units_[idx].glyph, idx);
    if (units_[idx].glyph_ms != units_[idx].glyph) aliases_.emplace_back(units_[idx].glyph_ms, idx);
    for (const auto& a : aliases) aliases_.emplace_back(a, idx);
}

std::vector<Unit> UnitRegistry::find_glyph(std::string_view glyph) const {
    std::vector<Unit> out;
    for (const auto& [g, idx] : aliases_)
        if (g == glyph) {
            bool dup = false;
            for (const auto& u : out) dup = dup || u == units_[idx];
            if (!dup) out.push_back(units_[idx]);
        }
    return out;
}

std::optional<Unit> UnitRegistry::find_glyph(std::string_view glyph, Dimension hint) const {
    for (const auto& u : find_glyph(glyph))
        if (u.dimension == hint) return u;
    return std::nullopt;
}

std::vector<Unit> UnitRegistry::find_pinyin(std::string_view name) const {
    std::vector<Unit> out;
    for (const auto& u : units_)
        if (u.pinyin == name) out.push_back(u);
    return out;
}

std::optional<size_t> UnitRegistry::match_unit(std::u32string_view text) const {
    size_t best = 0;
    for (const auto& [g, idx] : aliases_) {
        (void)idx;
        std::u32string gc = decode_utf8(g);
        if (gc.size() > best && text.substr(0, gc.size()) == gc) best = gc.size();
    }
    if (best == 0) return std::nullopt;
    return best;
}

bool UnitRegistry::is_unit_glyph_prefix(std::u32string_view text) const {
    return match_unit(text).has_value();
}

const UnitRegistry& UnitRegistry::builtin() {
    static const UnitRegistry reg = [] {
        UnitRegistry r;
        auto rat = [](long n, long d) { return Rational(BigInt(n), BigInt(d)); };
        // lengths, base chi: 1 li = 180 zhang, 1 zhang = 10 chi, 1 bu = 6 chi,
        // 1 chi = 10 cun, 1 wei = 3 chi
        r.add({"寸", "寸", "cun", Dimension::Length, rat(1, 10), ""});
        r.add({"尺", "尺", "chi", Dimension::Length, rat(1, 1), ""});
        r.add({"韋", "韋", "wei", Dimension::Length, rat(3, 1), ""}, {"圍"});
        r.add({"步", "步", "bu", Dimension::Length, rat(6, 1), ""});
        r.add({"丈", "丈", "zhang", Dimension::Length, rat(10, 1), ""});
        r.add({"里", "里", "li", Dimension::Length, rat(1800, 1), ""});
        // areas, base mu: 1 qing = 100 mu (no mu <-> square-bu ratio attested)
        r.add({"畝", "畝", "mu", Dimension::Area, rat(1, 1), "area:mu"});
        r.add({"頃", "頃", "qing", Dimension::Area, rat(100, 1), "area:mu"});
        // capacities, base sheng: 1 shi = 10 dou, 1 dou = 10 sheng
        r.add({"升", "升", "sheng", Dimension::Capacity, rat(1, 1), ""});
        r.add({"斗", "斗", "dou", Dimension::Capacity, rat(10, 1), ""});
        r.add({"石", "石", "shi", Dimension::Capacity, rat(100, 1), ""});
        // weights, base zhu: 1 shi = 4 jun, 1 jun = 30 jin, 1 jin = 16 liang,
        // 1 liang = 24 zhu
        r.add({"銖", "朱", "zhu", Dimension::Weight, rat(1, 1), ""});
        r.add({"兩", "兩", "liang", Dimension::Weight, rat(24, 1), ""});
        r.add({"斤", "斤", "jin", Dimension::Weight, rat(384, 1), ""});
        r.add({"鈞", "鈞", "jun", Dimension::Weight, rat(11520, 1), ""});
        r.add({"石", "石", "shi", Dimension::Weight, rat(46080, 1), ""});
        // currency
        r.add({"錢", "錢", "qian", Dimension::Currency, rat(1, 1), ""});
        // count-like measure words
        r.add({"簡", "簡", "jian", Dimension::Count, rat(1, 1), ""});
        r.add({"筭", "筭", "suan", Dimension::Count, rat(1, 1), ""}, {"算"});
        r.add({"盧唐", "盧唐", "lutang", Dimension::Count, rat(1, 1), ""});
        r.add({"人", "人", "ren", Dimension::Count, rat(1, 1), ""});
        return r;
    }();
    return reg;
}

UnitRegistry UnitRegistry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnitError("cannot open unit table: " + path);
    UnitRegistry r;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, '\t')) cols.push_back(col);
        if (cols.size() < 5)
            throw UnitError(path + ":" + std::to_string(lineno) + ": expected 5+ columns");
        auto dim = dimension_from_name(cols[2]);
        if (!dim)
            throw UnitError(path + ":" + std::to_string(lineno) + ": unknown dimension " + cols[2]);
        Unit u;
        u.glyph = cols[0];
        u.pinyin = cols[1];
        u.dimension = *dim;
        u.ratio_to_base = Rational(BigInt(cols[3]), BigInt(cols[4]));
        u.glyph_ms = cols.size() > 5 && !cols[5].empty() && cols[5] != "-" ? cols[5] : cols[0];
        std::vector<std::string> aliases;
        if (cols.size() > 6 && !cols[6].empty() && cols[6] != "-") {
            std::stringstream as(cols[6]);
            std::string a;
            while (std::getline(as, a, ',')) aliases.push_back(a);
        }
        r.add(std::move(u), aliases);
    }
    return r;
}

Rational convert(const Rational& value, const Unit& from, const Unit& to) {
    if (from.dimension != to.dimension || from.island != to.island)
        throw UnitError("cannot convert " + from.glyph + " (" + dimension_name(from.dimension) +
                        ") to " + to.glyph + " (" + dimension_name(to.dimension) + ")");
    // only the scale factor is cancelled; the value keeps its stated shape,
    // so an identity conversion is literal
    BigInt sn = from.ratio_to_base.num() * to.ratio_to_base.den();
    BigInt sd = from.ratio_to_base.den() * to.ratio_to_base.num();
    BigInt g = boost::multiprecision::gcd(sn, sd);
    return Rational(value.num() * (sn / g), value.den() * (sd / g));
}

Decomposition decompose(const Rational& value, const Unit& unit, const std::vector<Unit>& chain) {
    if (chain.empty()) throw UnitError("decompose: empty unit chain");
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i].island != chain[i + 1].island)
            throw UnitError("decompose: mixed dimensions in chain");
        if (!(chain[i + 1].ratio_to_base < chain[i].ratio_to_base))
            throw UnitError("decompose: chain must strictly descend");
    }
    Decomposition out;
    Rational rest = convert(value, unit, chain.front());
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i > 0) rest = convert(rest, chain[i - 1], chain[i]);
        BigInt whole = rest.num() / rest.den();
        if (whole > 0) out.parts.push_back({whole, chain[i]});
        rest = Rational(rest.num() % rest.den(), rest.den());
        BigInt g = boost::multiprecision::gcd(rest.num(), rest.den());
        if (g > 1) rest = Rational(rest.num() / g, rest.den() / g);
    }
    out.remainder = rest;
    out.remainder_unit = chain.back();
    return out;
}

std::optional<Dimension> noun_dimension_hint(std::u32string_view noun) {
    static const std::u32string grain = U"粟米麥禾荅稻菽糲粺毀粳穀";
    for (char32_t cp : noun) {
        if (grain.find(cp) != std::u32string::npos) return Dimension::Capacity;
        if (cp == U'金') return Dimension::Weight;
    }
    return std::nullopt;
}

Dimension dim_product(Dimension a, Dimension b) {
    if (a == Dimension::Length && b == Dimension::Length) return Dimension::Area;
    if ((a == Dimension::Length && b == Dimension::Area) ||
        (a == Dimension::Area && b == Dimension::Length))
        return Dimension::Volume;
    throw UnitError("undefined dimension product: " + dimension_name(a) + " x " +
                    dimension_name(b));
}

Unit promote_unit(const Unit& length_unit, Dimension target) {
    if (length_unit.dimension != Dimension::Length)
        throw UnitError("only length units promote to square/cubic use");
    Unit u = length_unit;
    u.dimension = target;
    const Rational& r = length_unit.ratio_to_base;
    if (target == Dimension::Area) {
        u.ratio_to_base = Rational(r.num() * r.num(), r.den() * r.den());
        u.island = "area:" + length_unit.island;
    } else if (target == Dimension::Volume) {
        u.ratio_to_base = Rational(r.num() * r.num() * r.num(), r.den() * r.den() * r.den());
        u.island = "volume:" + length_unit.island;
    } else {
        throw UnitError("promotion target must be area or volume");
    }
    return u;
}

} // namespace fenshu
