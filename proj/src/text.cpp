#include "fenshu/text.hpp"

#include <stdexcept>

namespace fenshu {

std::u32string decode_utf8(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        char32_t cp = 0;
        size_t len = 0;
        if (c < 0x80) {
            cp = c;
            len = 1;
        } else if ((c & 0xE0) == 0xC0) {
            cp = c & 0x1F;
            len = 2;
        } else if ((c & 0xF0) == 0xE0) {
            cp = c & 0x0F;
            len = 3;
        } else if ((c & 0xF8) == 0xF0) {
            cp = c & 0x07;
            len = 4;
        } else {
            throw std::invalid_argument("invalid UTF-8 lead byte");
        }
        if (i + len > s.size()) throw std::invalid_argument("truncated UTF-8 sequence");
        for (size_t k = 1; k < len; ++k) {
            unsigned char cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) throw std::invalid_argument("invalid UTF-8 continuation");
            cp = (cp << 6) | (cc & 0x3F);
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string encode_utf8(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size() * 3);
    for (char32_t cp : cps) out += encode_utf8(cp);
    return out;
}

std::string Normalizer::operator()(std::string_view text) const {
    std::u32string cps = decode_utf8(text);
    std::u32string out;
    out.reserve(cps.size() + 4);
    for (char32_t cp : cps) {
        switch (cp) {
        case U'有': out.push_back(U'又'); break;
        case U'泰': out.push_back(U'大'); break;
        case U'朱': out.push_back(U'銖'); break;
        case U'廿': out += U"二十"; break;
        case U'卅': out += U"三十"; break;
        case U'卌': out += U"四十"; break;
        default:
            if (cp == seventy_) {
                out += U"七十";
            } else {
                out.push_back(cp);
            }
        }
    }
    return encode_utf8(out);
}

} // namespace fenshu
