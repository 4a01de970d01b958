#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ewom/classifier.hpp"
#include "ewom/eval.hpp"
#include "ewom/ingest.hpp"
#include "ewom/keywords.hpp"
#include "ewom/segment.hpp"
#include "ewom/vectorize.hpp"

namespace ewom {

// Everything a pipeline run needs beyond its input files. All randomness
// funnels through `seed`.
struct PipelineConfig {
    double alpha = 1.5;
    double alpha_prime = 1.5;
    double learning_rate = 1.0;
    std::uint32_t epochs = 10;
    std::uint64_t seed = 42;
    FeatureMode feature_mode = FeatureMode::Binary;
    std::string lexicon_path;   // empty: no lexicon, script runs only
    std::string stopword_path;  // empty: built-in stopword list
    std::string positive_class = "positive";  // which sentiment maps to +1
    bool literal_sign_update = false;

    void validate() const;  // throws UsageError
};

Lexicon load_pipeline_lexicon(const PipelineConfig& cfg);

int sentiment_to_label(Sentiment s, const PipelineConfig& cfg);
Sentiment label_to_sentiment(int label, const PipelineConfig& cfg);

struct RouteStats {
    std::array<std::uint64_t, kTopicCount> per_topic{};
    std::uint64_t total = 0;
    std::uint64_t skipped = 0;
};

// Streams posts one line at a time: parse, route, emit the record as JSONL
// with topic/rule fields attached. Malformed records are counted and dropped.
RouteStats cmd_route(std::istream& in, ExportFormat format, std::ostream& out);

struct TrainStats {
    std::size_t documents = 0;
    std::size_t skipped = 0;
    std::size_t positive_keywords = 0;
    std::size_t negative_keywords = 0;
    std::size_t features = 0;
    std::uint64_t updates = 0;
};

// Labeled input -> segmentation -> keyword selection -> training. Writes the
// model and the keyword report; reruns with the same input and config are
// byte-identical.
TrainStats cmd_train(std::istream& in, ExportFormat format, const PipelineConfig& cfg,
                     std::ostream& model_out, std::ostream& keywords_out);

struct ClassifyStats {
    std::uint64_t total = 0;
    std::uint64_t skipped = 0;
    std::uint64_t classified = 0;
    std::uint64_t predicted_positive = 0;
    std::uint64_t predicted_negative = 0;
};

// Streams posts: routes every record, and attaches a predicted sentiment only
// to AboutImpressions documents. Other topics pass through labeled by rule.
ClassifyStats cmd_classify(std::istream& in, ExportFormat format, const PipelineConfig& cfg,
                           const LinearModel& model, std::ostream& out);

struct EvaluateStats {
    EvalReport report;
    std::size_t documents = 0;
    std::size_t skipped = 0;
};

// Holdout evaluation: score the model on every labeled row of the input.
EvaluateStats cmd_evaluate(std::istream& in, ExportFormat format, const PipelineConfig& cfg,
                           const LinearModel& model);

struct KfoldStats {
    std::vector<EvalReport> folds;
    EvalReport mean;  // counts summed, metrics averaged over folds
    std::size_t documents = 0;
    std::size_t skipped = 0;
};

// Cross-validation: for each fold, retrain the full keyword-selection +
// training pipeline on the training split and score the held-out split.
KfoldStats cmd_evaluate_kfold(std::istream& in, ExportFormat format,
                              const PipelineConfig& cfg, std::size_t k);

}  // namespace ewom
