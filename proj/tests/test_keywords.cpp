#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "ewom/errors.hpp"
#include "ewom/keywords.hpp"
#include "oracles.hpp"

using namespace ewom;

namespace {

Document doc(std::string id, std::vector<std::string> tokens, Sentiment s) {
    Document d;
    d.id = std::move(id);
    d.tokens = std::move(tokens);
    d.sentiment = s;
    return d;
}

// Convenience: dense column of one partition for a word.
std::vector<std::uint32_t> dense_column(const SparseCounts& col, std::size_t num_docs) {
    std::vector<std::uint32_t> out(num_docs, 0);
    for (std::size_t k = 0; k < col.doc_index.size(); ++k) out[col.doc_index[k]] = col.count[k];
    return out;
}

}  // namespace

TEST_CASE("counting a single positive document") {
    const CountMatrix m = build_counts({doc("d0", {"a", "a", "b"}, Sentiment::Positive)});
    CHECK(m.vocabulary == std::vector<std::string>{"a", "b"});
    CHECK(m.doc_ids == std::vector<std::string>{"d0"});
    CHECK(dense_column(m.pos_counts[0], 1) == std::vector<std::uint32_t>{2});
    CHECK(dense_column(m.pos_counts[1], 1) == std::vector<std::uint32_t>{1});
    CHECK(m.neg_counts[0].doc_index.empty());
    CHECK(m.neg_counts[1].doc_index.empty());
}

TEST_CASE("counts split by partition") {
    const CountMatrix m = build_counts({doc("p", {"a"}, Sentiment::Positive),
                                        doc("n", {"a"}, Sentiment::Negative)});
    CHECK(dense_column(m.pos_counts[0], 2) == std::vector<std::uint32_t>{1, 0});
    CHECK(dense_column(m.neg_counts[0], 2) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("counting errors") {
    CHECK_THROWS_WITH_AS(build_counts({}), "empty corpus", DataError);
    Document unlabeled;
    unlabeled.id = "u";
    unlabeled.tokens = {"a"};
    CHECK_THROWS_AS(build_counts({unlabeled}), DataError);
}

TEST_CASE("counts match the dense generator grid on random corpora") {
    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 100; ++iter) {
        const oracle::DenseCorpus c = oracle::random_corpus(rng);
        const CountMatrix m = build_counts(oracle::corpus_documents(c));
        REQUIRE(m.num_docs() == c.num_docs);
        REQUIRE(m.num_words() == c.num_words);
        for (std::size_t j = 0; j < c.num_words; ++j) {
            CHECK(m.vocabulary[j] == oracle::word_name(j));
            const auto pos = dense_column(m.pos_counts[j], c.num_docs);
            const auto neg = dense_column(m.neg_counts[j], c.num_docs);
            for (std::size_t i = 0; i < c.num_docs; ++i) {
                CHECK(pos[i] == (c.positive[i] ? c.counts[i][j] : 0u));
                CHECK(neg[i] == (c.positive[i] ? 0u : c.counts[i][j]));
            }
        }
        // stored sparsity: zeros are never stored
        for (std::size_t j = 0; j < m.num_words(); ++j) {
            for (std::uint32_t v : m.pos_counts[j].count) CHECK(v >= 1);
            for (std::uint32_t v : m.neg_counts[j].count) CHECK(v >= 1);
        }
    }
}

TEST_CASE("vocabulary is sorted regardless of token order") {
    const CountMatrix m = build_counts({doc("d0", {"zebra", "apple", "mango"}, Sentiment::Positive),
                                        doc("d1", {"apple", "banana"}, Sentiment::Negative)});
    CHECK(m.vocabulary == std::vector<std::string>{"apple", "banana", "mango", "zebra"});
}

TEST_CASE("word probabilities normalize per partition") {
    // pos counts [1,1,2] over three positive docs
    const CountMatrix m = build_counts({doc("a", {"w"}, Sentiment::Positive),
                                        doc("b", {"w"}, Sentiment::Positive),
                                        doc("c", {"w", "w"}, Sentiment::Positive)});
    const WordProbabilities p = word_probabilities(m, 0);
    CHECK(p.pos == std::vector<double>{0.25, 0.25, 0.5});
    CHECK(p.neg == std::vector<double>{0.0, 0.0, 0.0});  // empty partition: all zeros
}

TEST_CASE("single-document mass") {
    const CountMatrix m =
        build_counts({doc("a", {"w", "w", "w", "w", "w"}, Sentiment::Positive),
                      doc("b", {"x"}, Sentiment::Positive),
                      doc("c", {"x"}, Sentiment::Positive)});
    const WordProbabilities p = word_probabilities(m, 0);  // vocabulary: w < x
    CHECK(p.pos == std::vector<double>{1.0, 0.0, 0.0});
    CHECK_THROWS_AS(word_probabilities(m, 2), DataError);
}

TEST_CASE("entropy hand values") {
    CHECK(entropy(std::vector<double>{1.0, 0.0, 0.0}) == 0.0);
    CHECK(entropy(std::vector<double>{0.25, 0.25, 0.25, 0.25}) == 2.0);
    CHECK(entropy(std::vector<double>{0.25, 0.25, 0.5}) == 1.5);
    CHECK(entropy(std::vector<double>{}) == 0.0);
    CHECK_THROWS_WITH_AS(entropy(std::vector<double>{1.5}), "invalid probability", DataError);
    CHECK_THROWS_WITH_AS(entropy(std::vector<double>{-0.1}), "invalid probability", DataError);
}

TEST_CASE("keyword selection thresholds") {
    // "hot": pos counts [1,1,2] (entropy 1.5 bits), absent from negative docs.
    // "mild": appears once in one positive and once in one negative doc.
    // "cold": negative twin of "hot".
    const std::vector<Document> docs = {
        doc("p0", {"hot", "mild"}, Sentiment::Positive),
        doc("p1", {"hot"}, Sentiment::Positive),
        doc("p2", {"hot", "hot"}, Sentiment::Positive),
        doc("n0", {"cold", "mild"}, Sentiment::Negative),
        doc("n1", {"cold"}, Sentiment::Negative),
        doc("n2", {"cold", "cold"}, Sentiment::Negative),
    };
    const CountMatrix m = build_counts(docs);
    const KeywordReport report = select_keywords(m, 2.0, 2.0);
    REQUIRE(report.words.size() == 3);  // cold < hot < mild

    const KeywordScore& cold = report.words[0];
    CHECK(cold.h_neg == 1.5);
    CHECK(cold.h_pos == 0.0);
    CHECK(!cold.is_positive_keyword);
    CHECK(cold.is_negative_keyword);

    const KeywordScore& hot = report.words[1];
    CHECK(hot.h_pos == 1.5);
    CHECK(hot.h_neg == 0.0);
    CHECK(hot.is_positive_keyword);  // 1.5 > 2.0 * 0
    CHECK(!hot.is_negative_keyword);

    const KeywordScore& mild = report.words[2];
    CHECK(mild.h_pos == 0.0);  // single positive doc
    CHECK(mild.h_neg == 0.0);
    CHECK(!mild.is_positive_keyword);  // 0 > alpha*0 is false: never a keyword
    CHECK(!mild.is_negative_keyword);
}

TEST_CASE("selection ratio arithmetic is strict") {
    // h_pos = 1.5 (counts [1,1,2]), h_neg = 1.0 (counts [1,1])
    const std::vector<Document> docs = {
        doc("p0", {"w"}, Sentiment::Positive), doc("p1", {"w"}, Sentiment::Positive),
        doc("p2", {"w", "w"}, Sentiment::Positive), doc("n0", {"w"}, Sentiment::Negative),
        doc("n1", {"w"}, Sentiment::Negative),
    };
    const CountMatrix m = build_counts(docs);
    CHECK(select_keywords(m, 1.4, 1.4).words[0].is_positive_keyword);   // 1.5 > 1.4
    CHECK(!select_keywords(m, 1.5, 1.5).words[0].is_positive_keyword);  // 1.5 > 1.5 false
    CHECK(!select_keywords(m, 1.6, 1.6).words[0].is_positive_keyword);
}

TEST_CASE("thresholds must exceed 1") {
    const CountMatrix m = build_counts({doc("d", {"a"}, Sentiment::Positive)});
    CHECK_THROWS_WITH_AS(select_keywords(m, 1.0, 2.0), "threshold must exceed 1", DataError);
    CHECK_THROWS_WITH_AS(select_keywords(m, 2.0, 0.5), "threshold must exceed 1", DataError);
}

TEST_CASE("entropies match the dense reference within 1e-12") {
    std::mt19937_64 rng(202);
    for (int iter = 0; iter < 200; ++iter) {
        const oracle::DenseCorpus c = oracle::random_corpus(rng);
        const oracle::EntropyRef ref = oracle::reference_entropies(c);
        const CountMatrix m = build_counts(oracle::corpus_documents(c));
        const KeywordReport report = select_keywords(m, 1.5, 1.5);
        const double bound = std::log2(double(c.num_docs)) + 1e-12;
        for (std::size_t j = 0; j < c.num_words; ++j) {
            CHECK(std::fabs(report.words[j].h_pos - ref.h_pos[j]) <= 1e-12);
            CHECK(std::fabs(report.words[j].h_neg - ref.h_neg[j]) <= 1e-12);
            CHECK(report.words[j].h_pos >= 0.0);
            CHECK(report.words[j].h_pos <= bound);
            CHECK(report.words[j].h_neg >= 0.0);
            CHECK(report.words[j].h_neg <= bound);
        }
    }
}

TEST_CASE("zero law and uniform law hold exactly") {
    std::mt19937_64 rng(303);
    for (int iter = 0; iter < 100; ++iter) {
        const oracle::DenseCorpus c = oracle::random_corpus(rng);
        const CountMatrix m = build_counts(oracle::corpus_documents(c));
        const KeywordReport report = select_keywords(m, 1.5, 1.5);
        for (std::size_t j = 0; j < c.num_words; ++j) {
            if (oracle::partition_occupancy(c, j, true) == 1)
                CHECK(report.words[j].h_pos == 0.0);
            if (oracle::partition_occupancy(c, j, false) == 1)
                CHECK(report.words[j].h_neg == 0.0);
        }
    }

    // uniform count across every document of a single-partition corpus
    for (std::size_t m_docs = 1; m_docs <= 10; ++m_docs) {
        for (std::uint32_t count : {1u, 3u}) {
            std::vector<Document> docs;
            for (std::size_t i = 0; i < m_docs; ++i)
                docs.push_back(doc("d" + std::to_string(i),
                                   std::vector<std::string>(count, "w"),
                                   Sentiment::Positive));
            const CountMatrix m = build_counts(docs);
            const WordProbabilities p = word_probabilities(m, 0);
            CHECK(entropy(p.pos) == std::log2(double(m_docs)));
        }
    }
}

TEST_CASE("keyword verdicts are exclusive and scale-invariant") {
    std::mt19937_64 rng(404);
    for (int iter = 0; iter < 200; ++iter) {
        oracle::DenseCorpus c = oracle::random_corpus(rng);
        const double alpha = 1.0 + (double(rng() % 400) + 1.0) / 100.0;
        const double alpha_prime = 1.0 + (double(rng() % 400) + 1.0) / 100.0;
        const KeywordReport before =
            select_keywords(build_counts(oracle::corpus_documents(c)), alpha, alpha_prime);
        for (const KeywordScore& s : before.words)
            CHECK(!(s.is_positive_keyword && s.is_negative_keyword));

        // scale one word's counts inside one partition by an integer factor
        const std::size_t word = rng() % c.num_words;
        const bool scale_positive = rng() % 2 == 0;
        const std::uint32_t factor = 2 + static_cast<std::uint32_t>(rng() % 5);
        for (std::size_t i = 0; i < c.num_docs; ++i)
            if (c.positive[i] == scale_positive) c.counts[i][word] *= factor;

        const KeywordReport after =
            select_keywords(build_counts(oracle::corpus_documents(c)), alpha, alpha_prime);
        CHECK(after.words[word].h_pos == before.words[word].h_pos);
        CHECK(after.words[word].h_neg == before.words[word].h_neg);
        CHECK(after.words[word].is_positive_keyword == before.words[word].is_positive_keyword);
        CHECK(after.words[word].is_negative_keyword == before.words[word].is_negative_keyword);
    }
}

TEST_CASE("keyword report TSV shape") {
    const CountMatrix m = build_counts({doc("p", {"a", "b"}, Sentiment::Positive),
                                        doc("n", {"b"}, Sentiment::Negative)});
    std::ostringstream out;
    write_keyword_tsv(out, select_keywords(m, 1.5, 1.5));
    const std::string tsv = out.str();
    CHECK(tsv.starts_with("word\th_pos\th_neg\tpos_keyword\tneg_keyword\n"));
    CHECK(tsv.find("a\t0.000000\t0.000000\t0\t0\n") != std::string::npos);
}
