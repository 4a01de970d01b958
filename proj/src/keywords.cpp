#include "ewom/keywords.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "ewom/errors.hpp"

namespace ewom {

CountMatrix build_counts(const std::vector<Document>& docs) {
    if (docs.empty()) throw DataError("empty corpus");

    CountMatrix m;
    m.doc_ids.reserve(docs.size());
    for (const Document& doc : docs) {
        if (!doc.sentiment)
            throw DataError("document \"" + doc.id + "\" has no sentiment label");
        m.doc_ids.push_back(doc.id);
    }

    std::map<std::string, std::uint32_t> word_index;  // sorted -> vocabulary order
    for (const Document& doc : docs)
        for (const std::string& token : doc.tokens) word_index[token];
    m.vocabulary.reserve(word_index.size());
    std::uint32_t next = 0;
    for (auto& [word, index] : word_index) {
        index = next++;
        m.vocabulary.push_back(word);
    }

    m.pos_counts.resize(m.vocabulary.size());
    m.neg_counts.resize(m.vocabulary.size());

    std::map<std::uint32_t, std::uint32_t> doc_counts;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        doc_counts.clear();
        for (const std::string& token : docs[i].tokens) ++doc_counts[word_index[token]];
        auto& partition =
            *docs[i].sentiment == Sentiment::Positive ? m.pos_counts : m.neg_counts;
        for (const auto& [j, count] : doc_counts) {
            partition[j].doc_index.push_back(static_cast<std::uint32_t>(i));
            partition[j].count.push_back(count);
        }
    }
    return m;
}

WordProbabilities word_probabilities(const CountMatrix& m, std::size_t word) {
    if (word >= m.num_words()) throw DataError("word index out of range");

    WordProbabilities p;
    p.pos.assign(m.num_docs(), 0.0);
    p.neg.assign(m.num_docs(), 0.0);

    auto fill = [&](const SparseCounts& column, std::vector<double>& out) {
        std::uint64_t sum = 0;
        for (std::uint32_t c : column.count) sum += c;
        if (sum == 0) return;  // word absent from this partition: all zeros
        for (std::size_t k = 0; k < column.doc_index.size(); ++k)
            out[column.doc_index[k]] = double(column.count[k]) / double(sum);
    };
    fill(m.pos_counts[word], p.pos);
    fill(m.neg_counts[word], p.neg);
    return p;
}

double entropy(std::span<const double> probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0 && p <= 1.0)) throw DataError("invalid probability");
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

KeywordReport select_keywords(const CountMatrix& m, double alpha, double alpha_prime) {
    if (!(alpha > 1.0) || !(alpha_prime > 1.0))
        throw DataError("threshold must exceed 1");

    KeywordReport report;
    report.alpha = alpha;
    report.alpha_prime = alpha_prime;
    report.words.reserve(m.num_words());
    for (std::size_t j = 0; j < m.num_words(); ++j) {
        const WordProbabilities p = word_probabilities(m, j);
        KeywordScore score;
        score.word = m.vocabulary[j];
        score.h_pos = entropy(p.pos);
        score.h_neg = entropy(p.neg);
        score.is_positive_keyword = score.h_pos > alpha * score.h_neg;
        score.is_negative_keyword = score.h_neg > alpha_prime * score.h_pos;
        report.words.push_back(std::move(score));
    }
    return report;
}

void write_keyword_tsv(std::ostream& out, const KeywordReport& report) {
    out << "word\th_pos\th_neg\tpos_keyword\tneg_keyword\n";
    char buf[64];
    for (const KeywordScore& s : report.words) {
        std::snprintf(buf, sizeof buf, "%.6f\t%.6f", s.h_pos, s.h_neg);
        out << s.word << '\t' << buf << '\t' << (s.is_positive_keyword ? 1 : 0) << '\t'
            << (s.is_negative_keyword ? 1 : 0) << '\n';
    }
}

}  // namespace ewom
