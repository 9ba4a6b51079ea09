#include "fenshu/quantity.hpp"

#include <sstream>

#include "fenshu/arithmetic.hpp"
#include "fenshu/numerals.hpp"
#include "fenshu/text.hpp"

namespace fenshu {

std::string flag_name(QuantityFlag f) {
    switch (f) {
    case QuantityFlag::MwOmitted: return "mw_omitted";
    case QuantityFlag::MwTripled: return "mw_tripled";
    case QuantityFlag::CopyistError: return "copyist_error";
    case QuantityFlag::IllegibleDigits: return "illegible_digits";
    case QuantityFlag::ImproperLiteral: return "improper_literal";
    case QuantityFlag::AmbiguousYiBan: return "ambiguous_yi_ban";
    case QuantityFlag::ElidedDen: return "elided_den";
    case QuantityFlag::LeadingOneWarning: return "leading_one";
    }
    return "?";
}

std::optional<QuantityFlag> flag_from_name(std::string_view name) {
    for (QuantityFlag f :
         {QuantityFlag::MwOmitted, QuantityFlag::MwTripled, QuantityFlag::CopyistError,
          QuantityFlag::IllegibleDigits, QuantityFlag::ImproperLiteral,
          QuantityFlag::AmbiguousYiBan, QuantityFlag::ElidedDen,
          QuantityFlag::LeadingOneWarning})
        if (flag_name(f) == name) return f;
    return std::nullopt;
}

std::optional<Unit> Quantity::magnitude_unit() const {
    if (frac && frac->unit) return frac->unit;
    if (frac && !frac->unit && !int_parts.empty() && int_parts.back().unit)
        return int_parts.back().unit; // contextually shared unit
    if (!int_parts.empty()) return int_parts.back().unit;
    return std::nullopt;
}

Rational Quantity::magnitude() const {
    std::optional<Unit> target = magnitude_unit();
    Rational total(BigInt(0), BigInt(1));
    for (const auto& p : int_parts) {
        Rational v{p.coeff};
        if (p.unit && target) v = convert(v, *p.unit, *target);
        total = add(total, v);
    }
    if (frac) {
        Rational v = frac->value();
        if (frac->unit && target) v = convert(v, *frac->unit, *target);
        total = add(total, v);
    }
    return total;
}

bool Quantity::same_shape(const Quantity& o) const {
    if (noun != o.noun || linker_you != o.linker_you) return false;
    if (int_parts.size() != o.int_parts.size()) return false;
    for (size_t i = 0; i < int_parts.size(); ++i) {
        const auto& a = int_parts[i];
        const auto& b = o.int_parts[i];
        if (a.coeff != b.coeff || a.implicit_one != b.implicit_one) return false;
        if (a.unit.has_value() != b.unit.has_value()) return false;
        if (a.unit && !(*a.unit == *b.unit)) return false;
    }
    if (frac.has_value() != o.frac.has_value()) return false;
    if (frac) {
        const auto& a = *frac;
        const auto& b = *o.frac;
        if (a.num != b.num || a.den != b.den || a.form != b.form) return false;
        if (a.unit.has_value() != b.unit.has_value()) return false;
        if (a.unit && !(*a.unit == *b.unit)) return false;
    }
    return true;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Unit lookup_unit(const std::string& name, const UnitRegistry& reg, Dimension* hint) {
    auto found = reg.find_pinyin(name);
    if (found.empty()) found = reg.find_glyph(name);
    if (found.empty()) throw UnitError("unknown unit: " + name);
    if (found.size() > 1) {
        if (hint) {
            for (const auto& u : found)
                if (u.dimension == *hint) return u;
        }
        throw UnitError("ambiguous unit " + name + "; give a dimension hint");
    }
    return found.front();
}

char form_code(FractionForm f) {
    switch (f) {
    case FractionForm::Mono: return 'M';
    case FractionForm::A: return 'A';
    case FractionForm::B: return 'B';
    case FractionForm::C: return 'C';
    case FractionForm::D: return 'D';
    case FractionForm::LexHalf: return 'H';
    case FractionForm::LexThird: return 'S';
    case FractionForm::LexTwoThirds: return 'T';
    }
    return '?';
}

} // namespace

Quantity quantity_from_spec(const std::string& spec, const UnitRegistry& reg) {
    Quantity q;
    Dimension dim_hint = Dimension::Capacity;
    bool have_hint = false;
    for (const std::string& seg : split(spec, ';')) {
        if (seg.empty()) continue;
        if (seg.size() < 2 || seg[1] != ':')
            throw ParseError("bad quantity spec segment: " + seg);
        std::string body = seg.substr(2);
        switch (seg[0]) {
        case 'n':
            q.noun = body;
            if (auto hint = noun_dimension_hint(decode_utf8(body))) {
                dim_hint = *hint;
                have_hint = true;
            }
            break;
        case 'i': {
            auto cols = split(body, ':');
            if (cols.empty() || cols.size() > 2)
                throw ParseError("bad int part: " + seg);
            IntPart p;
            if (cols[0] == "~") {
                p.coeff = 1;
                p.implicit_one = true;
            } else {
                p.coeff = BigInt(cols[0]);
            }
            if (cols.size() == 2 && cols[1] != "-")
                p.unit = lookup_unit(cols[1], reg, have_hint ? &dim_hint : nullptr);
            if (p.unit) {
                dim_hint = p.unit->dimension;
                have_hint = true;
            }
            q.int_parts.push_back(std::move(p));
            break;
        }
        case 'f': {
            auto cols = split(body, ':');
            if (cols.size() != 3) throw ParseError("bad fraction part: " + seg);
            auto nd = split(cols[0], '/');
            if (nd.size() != 2) throw ParseError("bad fraction value: " + seg);
            FracPart f;
            f.num = BigInt(nd[0]);
            f.den = nd[1] == "?" ? BigInt(0) : BigInt(nd[1]);
            if (cols[1] != "-") f.unit = lookup_unit(cols[1], reg, have_hint ? &dim_hint : nullptr);
            auto form = form_from_name(cols[2]);
            if (!form) throw ParseError("bad form code: " + seg);
            f.form = *form;
            q.frac = std::move(f);
            break;
        }
        case 'y':
            q.linker_you = body == "1";
            break;
        case 'g':
            for (const std::string& fl : split(body, ',')) {
                auto f = flag_from_name(fl);
                if (!f) throw ParseError("unknown flag: " + fl);
                q.flags.insert(*f);
            }
            break;
        default:
            throw ParseError("bad quantity spec segment: " + seg);
        }
    }
    return q;
}

std::string quantity_to_spec(const Quantity& q) {
    std::string out;
    auto push = [&](const std::string& seg) {
        if (!out.empty()) out += ';';
        out += seg;
    };
    if (q.noun) push("n:" + *q.noun);
    for (const auto& p : q.int_parts) {
        std::string seg = "i:";
        seg += p.implicit_one ? "~" : p.coeff.str();
        seg += ':';
        seg += p.unit ? p.unit->pinyin : "-";
        push(seg);
    }
    if (q.frac) {
        const auto& f = *q.frac;
        std::string seg = "f:" + f.num.str() + "/" + (f.elided() ? "?" : f.den.str()) + ":";
        seg += f.unit ? f.unit->pinyin : "-";
        seg += ':';
        seg += form_code(f.form);
        push(seg);
    }
    if (q.linker_you) push("y:1");
    if (!q.flags.empty()) {
        std::string seg = "g:";
        bool first = true;
        for (auto f : q.flags) {
            if (!first) seg += ',';
            seg += flag_name(f);
            first = false;
        }
        push(seg);
    }
    return out;
}

} // namespace fenshu
