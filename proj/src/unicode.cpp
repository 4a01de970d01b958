#include "ewom/unicode.hpp"

namespace ewom::uni {

namespace {

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

Decoded decode_utf8(std::string_view text) {
    Decoded out;
    out.codepoints.reserve(text.size());
    out.byte_offsets.reserve(text.size() + 1);

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const unsigned char b0 = static_cast<unsigned char>(text[i]);
        char32_t cp = b0;
        std::size_t len = 1;

        if (b0 < 0x80) {
            // ASCII
        } else if ((b0 & 0xE0) == 0xC0 && i + 1 < n && is_continuation(text[i + 1])) {
            cp = (char32_t(b0 & 0x1F) << 6) | (text[i + 1] & 0x3F);
            len = 2;
            if (cp < 0x80) { cp = b0; len = 1; }  // overlong
        } else if ((b0 & 0xF0) == 0xE0 && i + 2 < n && is_continuation(text[i + 1]) &&
                   is_continuation(text[i + 2])) {
            cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(text[i + 1] & 0x3F) << 6) |
                 (text[i + 2] & 0x3F);
            len = 3;
            if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) { cp = b0; len = 1; }
        } else if ((b0 & 0xF8) == 0xF0 && i + 3 < n && is_continuation(text[i + 1]) &&
                   is_continuation(text[i + 2]) && is_continuation(text[i + 3])) {
            cp = (char32_t(b0 & 0x07) << 18) | (char32_t(text[i + 1] & 0x3F) << 12) |
                 (char32_t(text[i + 2] & 0x3F) << 6) | (text[i + 3] & 0x3F);
            len = 4;
            if (cp < 0x10000 || cp > 0x10FFFF) { cp = b0; len = 1; }
        }
        // anything else: keep the single raw byte

        out.codepoints.push_back(cp);
        out.byte_offsets.push_back(static_cast<std::uint32_t>(i));
        i += len;
    }
    out.byte_offsets.push_back(static_cast<std::uint32_t>(n));
    return out;
}

CharClass char_class(char32_t cp) {
    if (cp >= 0x3040 && cp <= 0x309F) return CharClass::Hiragana;
    if (cp >= 0x30A0 && cp <= 0x30FF) return CharClass::Katakana;  // includes U+30FC
    if ((cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF))
        return CharClass::Kanji;
    if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z') ||
        (cp >= 0xFF21 && cp <= 0xFF3A) || (cp >= 0xFF41 && cp <= 0xFF5A))
        return CharClass::Latin;
    if ((cp >= '0' && cp <= '9') || (cp >= 0xFF10 && cp <= 0xFF19))
        return CharClass::Digit;
    return CharClass::Other;
}

bool is_space(char32_t cp) {
    switch (cp) {
        case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
        case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
        case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_punct_or_symbol(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= '!' && cp <= '/') || (cp >= ':' && cp <= '@') ||
               (cp >= '[' && cp <= '`') || (cp >= '{' && cp <= '~');
    }
    if (cp >= 0x00A1 && cp <= 0x00BF) return true;   // Latin-1 punctuation & signs
    if (cp >= 0x2000 && cp <= 0x206F) return !is_space(cp);  // general punctuation
    if (cp >= 0x20A0 && cp <= 0x20CF) return true;   // currency
    if (cp >= 0x2190 && cp <= 0x2BFF) return true;   // arrows, math, box drawing, shapes
    if (cp >= 0x2E00 && cp <= 0x2E7F) return true;   // supplemental punctuation
    if (cp >= 0x3001 && cp <= 0x303F) return true;   // CJK punctuation (U+3000 is space)
    if (cp == 0x30FB) return true;                   // katakana middle dot
    if (cp >= 0xFE30 && cp <= 0xFE6F) return true;   // CJK compat / small form variants
    if (cp >= 0xFF01 && cp <= 0xFF0F) return true;   // fullwidth punctuation runs
    if (cp >= 0xFF1A && cp <= 0xFF20) return true;
    if (cp >= 0xFF3B && cp <= 0xFF40) return true;
    if (cp >= 0xFF5B && cp <= 0xFF65) return true;   // incl. halfwidth CJK punctuation
    if (cp >= 0xFFE0 && cp <= 0xFFEE) return true;   // fullwidth signs
    if (cp >= 0x1F000 && cp <= 0x1FAFF) return true; // emoji & pictographs
    return false;
}

bool all_punct_or_symbol(std::string_view text) {
    if (text.empty()) return false;
    const Decoded d = decode_utf8(text);
    for (char32_t cp : d.codepoints) {
        if (!is_punct_or_symbol(cp)) return false;
    }
    return true;
}

}  // namespace ewom::uni
