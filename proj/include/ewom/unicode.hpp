#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ewom::uni {

enum class CharClass { Kanji, Hiragana, Katakana, Latin, Digit, Other };

// One entry per character; byte_offsets has size()+1 entries so that character k
// occupies bytes [byte_offsets[k], byte_offsets[k+1]) of the source.
struct Decoded {
    std::vector<char32_t> codepoints;
    std::vector<std::uint32_t> byte_offsets;

    std::size_t size() const { return codepoints.size(); }
};

// Lenient UTF-8 decode: an invalid or truncated sequence is consumed one byte
// at a time, each byte becoming its own character, so the original bytes are
// always recoverable from the offsets.
Decoded decode_utf8(std::string_view text);

CharClass char_class(char32_t cp);
bool is_space(char32_t cp);
bool is_punct_or_symbol(char32_t cp);

// True when the (non-empty) string decodes to punctuation/symbol characters only.
bool all_punct_or_symbol(std::string_view text);

}  // namespace ewom::uni
