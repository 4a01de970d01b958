#include "ewom/segment.hpp"

#include <algorithm>
#include <fstream>

#include "ewom/errors.hpp"
#include "ewom/unicode.hpp"

namespace ewom {

std::set<std::string, std::less<>> load_word_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open word list: " + path);
    std::set<std::string, std::less<>> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                                 line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
        if (start > 0) line.erase(0, start);
        if (!line.empty()) words.insert(line);
    }
    return words;
}

const std::set<std::string, std::less<>>& default_stopwords() {
    static const std::set<std::string, std::less<>> words = {
        // case particles / conjunctive particles
        "が", "の", "を", "に", "へ", "と", "で", "や", "から", "まで", "より",
        "は", "も", "か", "し", "て", "ても", "ば", "ながら", "つつ", "たり",
        "ので", "のに", "けど", "けれど", "けれども", "ほど", "だけ", "など",
        "くらい", "ぐらい", "ばかり", "こそ", "しか", "でも", "なら", "って",
        // sentence-final particles
        "ね", "よ", "な", "ぞ", "ぜ", "さ", "わ", "かな", "っけ",
        // auxiliaries / copula forms
        "だ", "です", "でし", "でした", "だっ", "だろ", "だろう", "でしょ",
        "でしょう", "ます", "ませ", "ました", "ません", "た", "ない", "なかっ",
        "なく", "ず", "ぬ", "う", "まい", "たい", "たく", "らしい", "そうだ",
        "ようだ", "みたい", "れる", "られる", "せる", "させる", "れ", "られ",
        // light verbs / existence
        "する", "し", "いる", "い", "ある", "あり", "なる", "なり", "でき",
        // demonstratives and formal nouns
        "これ", "それ", "あれ", "どれ", "この", "その", "あの", "どの",
        "ここ", "そこ", "あそこ", "どこ", "こと", "もの", "ため", "よう",
        "はず", "わけ", "とき", "ところ",
    };
    return words;
}

LongestMatchSegmenter::LongestMatchSegmenter(Lexicon lexicon) : lexicon_(std::move(lexicon)) {
    lexicon_.entries.erase("");
    lexicon_.stopwords.erase("");
    for (const auto& entry : lexicon_.entries) {
        max_entry_chars_ = std::max(max_entry_chars_, uni::decode_utf8(entry).size());
    }
}

TokenStream LongestMatchSegmenter::segment(std::string_view text) const {
    TokenStream out;
    const uni::Decoded d = uni::decode_utf8(text);
    const std::size_t n = d.size();

    auto emit = [&](std::size_t from, std::size_t to) {
        const std::size_t b0 = d.byte_offsets[from];
        const std::size_t b1 = d.byte_offsets[to];
        out.tokens.emplace_back(text.substr(b0, b1 - b0));
        out.source_spans.push_back({from, to});
    };

    // Length (in characters) of the longest lexicon entry starting at pos, or 0.
    // Candidates never cross whitespace. With stop_at_first set, returns as soon
    // as any entry matches (used to cut script runs short).
    auto match_at = [&](std::size_t pos, bool stop_at_first) -> std::size_t {
        if (max_entry_chars_ == 0) return 0;
        const std::size_t limit = std::min(max_entry_chars_, n - pos);
        std::string candidate;
        std::size_t best = 0;
        for (std::size_t len = 1; len <= limit; ++len) {
            const std::size_t last = pos + len - 1;
            if (uni::is_space(d.codepoints[last])) break;
            const std::size_t b0 = d.byte_offsets[last];
            candidate.append(text.substr(b0, d.byte_offsets[last + 1] - b0));
            if (lexicon_.entries.count(candidate)) {
                best = len;
                if (stop_at_first) return best;
            }
        }
        return best;
    };

    std::size_t i = 0;
    while (i < n) {
        if (uni::is_space(d.codepoints[i])) {
            ++i;
            continue;
        }
        if (const std::size_t matched = match_at(i, false); matched > 0) {
            emit(i, i + matched);
            i += matched;
            continue;
        }
        const uni::CharClass cls = uni::char_class(d.codepoints[i]);
        std::size_t j = i + 1;
        while (j < n && !uni::is_space(d.codepoints[j]) &&
               uni::char_class(d.codepoints[j]) == cls && match_at(j, true) == 0)
            ++j;
        emit(i, j);
        i = j;
    }
    return out;
}

TokenStream segment(std::string_view text, const Lexicon& lexicon) {
    return LongestMatchSegmenter(lexicon).segment(text);
}

TokenStream filter_content_words(const TokenStream& stream, const Lexicon& lexicon) {
    TokenStream out;
    for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
        const std::string& token = stream.tokens[i];
        if (lexicon.stopwords.count(token)) continue;
        if (uni::all_punct_or_symbol(token)) continue;
        out.tokens.push_back(token);
        out.source_spans.push_back(stream.source_spans[i]);
    }
    return out;
}

}  // namespace ewom
