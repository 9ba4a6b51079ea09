#include "fenshu/numerals.hpp"

namespace fenshu {

namespace {

const char32_t kDigits[10] = {0, U'一', U'二', U'三', U'四', U'五',
                              U'六', U'七', U'八', U'九'};

char32_t tens_ligature(int digit, char32_t seventy) {
    switch (digit) {
    case 2: return U'廿';
    case 3: return U'卅';
    case 4: return U'卌';
    case 7: return seventy;
    default: return 0;
    }
}

// x in 1..9999. When omit_head is set, a leading coefficient 1 before a
// pivot is dropped (the highest-pivot rule for the numeral as a whole).
void render_small(int x, bool omit_head, LigatureStyle style, char32_t seventy,
                  std::u32string& out) {
    bool head = true;
    for (int rank = 1000; rank >= 1; rank /= 10) {
        int d = x / rank;
        x %= rank;
        if (d == 0) continue; // zero ranks are skipped, no filler
        if (rank == 1) {
            out.push_back(kDigits[d]);
            head = false;
            continue;
        }
        if (rank == 10 && style == LigatureStyle::Manuscript) {
            if (char32_t lig = tens_ligature(d, seventy)) {
                out.push_back(lig);
                head = false;
                continue;
            }
        }
        if (!(head && omit_head && d == 1)) out.push_back(kDigits[d]);
        out.push_back(rank == 1000 ? U'千' : rank == 100 ? U'百' : U'十');
        head = false;
    }
}

} // namespace

int digit_value(char32_t cp) {
    for (int d = 1; d <= 9; ++d)
        if (kDigits[d] == cp) return d;
    return 0;
}

int pivot_value(char32_t cp) {
    switch (cp) {
    case U'十': return 10;
    case U'百': return 100;
    case U'千': return 1000;
    case U'萬': return 10000;
    default: return 0;
    }
}

bool is_numeral_glyph(char32_t cp) {
    return digit_value(cp) != 0 || pivot_value(cp) != 0;
}

std::string render_integer(const BigInt& n, LigatureStyle style, char32_t seventy) {
    if (n < 1 || n > 10'000'000)
        throw DomainError("render_integer: value out of range 1..10^7: " + n.str());
    int v = static_cast<int>(n);
    std::u32string out;
    if (v >= 10000) {
        int w = v / 10000;
        int r = v % 10000;
        // coefficient 1 of the topmost pivot is omitted, so 11520 opens
        // with a bare 萬
        if (w != 1) render_small(w, true, style, seventy, out);
        out.push_back(U'萬');
        if (r != 0) render_small(r, false, style, seventy, out);
    } else {
        render_small(v, true, style, seventy, out);
    }
    return encode_utf8(out);
}

namespace {

// One section of a numeral (no 萬 inside): pivots 十百千, strictly
// descending. Bare pivots default to coefficient 1 only when the section
// opens the whole string.
long parse_section(const std::u32string& cps, size_t begin, size_t end, bool at_string_start,
                   std::string_view whole) {
    if (begin >= end) throw ParseError("empty numeral section in \"" + std::string(whole) + "\"");
    long total = 0;
    int pending = -1;
    int last_rank = 100000;
    bool first = true;
    for (size_t i = begin; i < end; ++i) {
        char32_t cp = cps[i];
        if (int d = digit_value(cp)) {
            if (pending != -1)
                throw ParseError("digit run without pivot in \"" + std::string(whole) + "\"");
            pending = d;
        } else if (int p = pivot_value(cp)) {
            if (p >= 10000)
                throw ParseError("unexpected pivot in section of \"" + std::string(whole) + "\"");
            int coeff;
            if (pending != -1) {
                coeff = pending;
            } else if (first && at_string_start) {
                coeff = 1; // string-initial bare pivot, e.g. 百五十
            } else {
                throw ParseError("bare pivot with no coefficient in \"" + std::string(whole) +
                                 "\"");
            }
            if (p >= last_rank)
                throw ParseError("non-descending pivot sequence in \"" + std::string(whole) +
                                 "\"");
            total += static_cast<long>(coeff) * p;
            last_rank = p;
            pending = -1;
        } else {
            throw ParseError("not a numeral glyph in \"" + std::string(whole) + "\"");
        }
        first = false;
    }
    if (pending != -1) total += pending;
    return total;
}

} // namespace

IntegerParse parse_integer_checked(std::string_view text, char32_t seventy) {
    std::u32string cps = decode_utf8(Normalizer{seventy}(text));
    if (cps.empty()) throw ParseError("empty numeral");

    IntegerParse result;
    size_t wan = cps.find(U'萬');
    long value;
    if (wan == std::u32string::npos) {
        value = parse_section(cps, 0, cps.size(), true, text);
    } else {
        if (cps.find(U'萬', wan + 1) != std::u32string::npos)
            throw ParseError("more than one 萬 in \"" + std::string(text) + "\"");
        long w = wan == 0 ? 1 : parse_section(cps, 0, wan, true, text);
        long r = wan + 1 == cps.size() ? 0 : parse_section(cps, wan + 1, cps.size(), false, text);
        value = w * 10000 + r;
    }
    if (value < 1 || value > 10'000'000)
        throw ParseError("numeral out of range 1..10^7: \"" + std::string(text) + "\"");

    // The corpus never writes an explicit 1 before the highest pivot; accept
    // it leniently but report it.
    if (cps.size() >= 2 && digit_value(cps[0]) == 1 && pivot_value(cps[1]) != 0)
        result.warnings.push_back("explicit coefficient 1 before the highest pivot");

    result.value = value;
    return result;
}

} // namespace fenshu
