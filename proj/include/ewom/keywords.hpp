#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ewom/ingest.hpp"

namespace ewom {

// One partition's occurrence column for a word: (document index, count) pairs
// with indices ascending and every stored count >= 1.
struct SparseCounts {
    std::vector<std::uint32_t> doc_index;
    std::vector<std::uint32_t> count;
};

// Per-word, per-document occurrence counts split by impression label.
// Documents keep their input order (index i); the vocabulary is sorted
// lexicographically (index j) so downstream artifacts are byte-stable.
struct CountMatrix {
    std::vector<std::string> vocabulary;
    std::vector<std::string> doc_ids;
    std::vector<SparseCounts> pos_counts;  // one column per word
    std::vector<SparseCounts> neg_counts;

    std::size_t num_docs() const { return doc_ids.size(); }
    std::size_t num_words() const { return vocabulary.size(); }
};

// Every document must carry tokens and a sentiment label.
CountMatrix build_counts(const std::vector<Document>& docs);

// Dense per-document probabilities for word j, one value per document.
// A partition whose column sums to zero yields all zeros.
struct WordProbabilities {
    std::vector<double> pos;
    std::vector<double> neg;
};

WordProbabilities word_probabilities(const CountMatrix& m, std::size_t word);

// Base-2 Shannon entropy; terms with probability zero contribute nothing.
double entropy(std::span<const double> probabilities);

struct KeywordScore {
    std::string word;
    double h_pos = 0.0;  // entropy over positive documents, bits
    double h_neg = 0.0;  // entropy over negative documents, bits
    bool is_positive_keyword = false;
    bool is_negative_keyword = false;
};

struct KeywordReport {
    double alpha = 0.0;
    double alpha_prime = 0.0;
    std::vector<KeywordScore> words;  // vocabulary order
};

// A word is a positive keyword when h_pos > alpha * h_neg, a negative keyword
// when h_neg > alpha_prime * h_pos. Both thresholds must exceed 1, which also
// makes the two verdicts mutually exclusive.
KeywordReport select_keywords(const CountMatrix& m, double alpha, double alpha_prime);

// TSV with header word/h_pos/h_neg/pos_keyword/neg_keyword; entropies with
// 6 decimals, verdicts as 1/0.
void write_keyword_tsv(std::ostream& out, const KeywordReport& report);

}  // namespace ewom
