#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ewom {

// Surface forms to prefer during matching plus function words to drop afterwards.
// Entries are plain UTF-8 strings; empty strings are never stored.
struct Lexicon {
    std::set<std::string, std::less<>> entries;
    std::set<std::string, std::less<>> stopwords;
};

// One word list per file, one surface form per line (UTF-8, blank lines ignored).
std::set<std::string, std::less<>> load_word_list(const std::string& path);

// Built-in list of common Japanese particles, auxiliaries and other function
// words, used when no stopword file is supplied.
const std::set<std::string, std::less<>>& default_stopwords();

// Character range [begin, end) into the source text, counted in characters.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const Span&) const = default;
};

struct TokenStream {
    std::vector<std::string> tokens;
    std::vector<Span> source_spans;  // parallel to tokens

    std::size_t size() const { return tokens.size(); }
};

class Segmenter {
public:
    virtual ~Segmenter() = default;
    virtual TokenStream segment(std::string_view text) const = 0;
};

// Deterministic baseline segmenter: greedy longest match against the lexicon,
// scanning left to right. Stretches where no entry matches are split into
// maximal runs of a single character class (kanji, hiragana, katakana, Latin,
// digits, other); a run also ends where a lexicon entry starts matching.
// Whitespace always terminates a token and is never emitted.
class LongestMatchSegmenter final : public Segmenter {
public:
    explicit LongestMatchSegmenter(Lexicon lexicon);

    TokenStream segment(std::string_view text) const override;

    const Lexicon& lexicon() const { return lexicon_; }

private:
    Lexicon lexicon_;
    std::size_t max_entry_chars_ = 0;
};

TokenStream segment(std::string_view text, const Lexicon& lexicon);

// Drops stopwords and tokens made of punctuation/symbols only. Order and the
// spans of kept tokens are preserved; applying it twice changes nothing.
TokenStream filter_content_words(const TokenStream& stream, const Lexicon& lexicon);

}  // namespace ewom
