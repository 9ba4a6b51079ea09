#ifndef FENSHU_NUMERALS_HPP
#define FENSHU_NUMERALS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fenshu/bigrat.hpp"
#include "fenshu/forms.hpp"
#include "fenshu/text.hpp"

namespace fenshu {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Names integers 1..10'000'000 with digits, the pivots 十百千萬 and,
/// in Manuscript style, the tens ligatures 廿卅卌 plus the 70-ligature.
/// The coefficient 1 is omitted before the highest pivot of the whole
/// numeral and written before every lower pivot.
std::string render_integer(const BigInt& n, LigatureStyle style = LigatureStyle::Manuscript,
                           char32_t seventy = kDefaultSeventyLigature);

struct IntegerParse {
    BigInt value;
    std::vector<std::string> warnings; // e.g. explicit one before the highest pivot
};

IntegerParse parse_integer_checked(std::string_view text,
                                   char32_t seventy = kDefaultSeventyLigature);

inline BigInt parse_integer(std::string_view text,
                            char32_t seventy = kDefaultSeventyLigature) {
    return parse_integer_checked(text, seventy).value;
}

bool is_numeral_glyph(char32_t cp);
int digit_value(char32_t cp);  // 1..9 or 0 when not a digit
int pivot_value(char32_t cp);  // 10/100/1000/10000 or 0

} // namespace fenshu

#endif
