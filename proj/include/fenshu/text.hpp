#ifndef FENSHU_TEXT_HPP
#define FENSHU_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fenshu {

// Minimal UTF-8 handling over a fixed glyph table; no general segmentation.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view cps);
std::string encode_utf8(char32_t cp);

/// Default codepoint for the 70-ligature as printed in the source corpus
/// (U+2010E). The true manuscript codepoint is unsettled, so it stays
/// configurable.
inline constexpr char32_t kDefaultSeventyLigature = U'\U0002010E';

/// Maps manuscript variants and ligatures to plain forms:
/// 有->又, 泰->大, 朱->銖, 廿->二十, 卅->三十, 卌->四十, 70-lig->七十.
/// Idempotent; unknown glyphs pass through.
class Normalizer {
public:
    explicit Normalizer(char32_t seventy = kDefaultSeventyLigature)
        : seventy_(seventy) {}

    std::string operator()(std::string_view text) const;
    char32_t seventy_ligature() const { return seventy_; }

private:
    char32_t seventy_;
};

inline std::string normalize(std::string_view text) { return Normalizer{}(text); }

} // namespace fenshu

#endif
