#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ewom {

struct EvalReport {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Quadrant counts for +1/-1 predictions against +1/-1 truths. Derived metrics
// are left at zero; run the counts through metrics() to fill them.
EvalReport confusion(std::span<const int> predictions, std::span<const int> truths);

// precision = tp/(tp+fp), recall = tp/(tp+fn), f1 = 2PR/(P+R); any metric with
// a zero denominator is 0.
EvalReport metrics(EvalReport counts);

struct Fold {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

// Seeded permutation of 0..n-1 cut into k near-equal test folds (the first
// n mod k folds get one extra element). Every index lands in exactly one test
// fold; identical seeds give identical splits.
std::vector<Fold> kfold_split(std::size_t n, std::size_t k, std::uint64_t seed);

// TSV row(s) with 4-decimal metrics, plus a human-readable block.
void write_eval_tsv_header(std::ostream& out, bool with_fold_column);
void write_eval_tsv_row(std::ostream& out, const EvalReport& report,
                        const std::string& fold_label = "");
std::string format_eval_text(const EvalReport& report);

}  // namespace ewom
