#include "ewom/pipeline.hpp"

#include <istream>
#include <numeric>
#include <ostream>

#include "json.hpp"

#include "ewom/errors.hpp"

namespace ewom {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json post_json(const RawPost& post) {
    ordered_json j;
    j["id"] = post.id;
    j["text"] = post.text;
    if (!post.expanded_urls.empty()) j["expanded_urls"] = post.expanded_urls;
    if (!post.media_types.empty()) j["media_types"] = post.media_types;
    if (post.label) j["label"] = sentiment_name(*post.label);
    return j;
}

// Line-at-a-time record reader shared by the streaming commands.
template <typename Fn>
void for_each_record(std::istream& in, ExportFormat format, std::uint64_t& skipped, Fn&& fn) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto post = format == ExportFormat::Jsonl ? parse_jsonl_record(line)
                                                  : parse_tsv_record(line);
        if (!post) {
            ++skipped;
            continue;
        }
        fn(std::move(*post));
    }
}

std::vector<std::string> segment_content_words(const Segmenter& segmenter,
                                               const Lexicon& lexicon,
                                               std::string_view text) {
    return filter_content_words(segmenter.segment(text), lexicon).tokens;
}

// Labeled documents for train/evaluate; rows without a label count as skipped.
std::vector<Document> read_labeled_documents(std::istream& in, ExportFormat format,
                                             const Segmenter& segmenter,
                                             const Lexicon& lexicon, std::size_t& skipped) {
    std::vector<Document> docs;
    std::uint64_t bad = 0;
    for_each_record(in, format, bad, [&](RawPost post) {
        if (!post.label) {
            ++bad;
            return;
        }
        Document doc;
        doc.id = std::move(post.id);
        doc.tokens = segment_content_words(segmenter, lexicon, post.text);
        doc.text = std::move(post.text);
        doc.sentiment = post.label;
        docs.push_back(std::move(doc));
    });
    skipped = static_cast<std::size_t>(bad);
    return docs;
}

struct TrainedPipeline {
    KeywordReport report;
    TrainResult result;
};

TrainedPipeline train_on_documents(const std::vector<Document>& docs,
                                   const PipelineConfig& cfg) {
    const CountMatrix counts = build_counts(docs);
    KeywordReport report = select_keywords(counts, cfg.alpha, cfg.alpha_prime);
    const FeatureSpace space = build_space(report, cfg.feature_mode);

    std::vector<LabeledSample> samples;
    samples.reserve(docs.size());
    for (const Document& doc : docs)
        samples.push_back({vectorize(doc, space), sentiment_to_label(*doc.sentiment, cfg)});

    TrainConfig tc;
    tc.learning_rate = cfg.learning_rate;
    tc.epochs = cfg.epochs;
    tc.shuffle_seed = cfg.seed;
    tc.literal_sign_update = cfg.literal_sign_update;
    return {std::move(report), train(samples, space, tc)};
}

EvalReport score_documents(const std::vector<Document>& docs,
                           std::span<const std::size_t> indices, const LinearModel& model,
                           const PipelineConfig& cfg) {
    std::vector<int> predictions;
    std::vector<int> truths;
    predictions.reserve(indices.size());
    truths.reserve(indices.size());
    for (const std::size_t i : indices) {
        predictions.push_back(classify(model, vectorize(docs[i], model.space)));
        truths.push_back(sentiment_to_label(*docs[i].sentiment, cfg));
    }
    return metrics(confusion(predictions, truths));
}

}  // namespace

void PipelineConfig::validate() const {
    if (!(alpha > 1.0)) throw UsageError("alpha must exceed 1");
    if (!(alpha_prime > 1.0)) throw UsageError("alpha-prime must exceed 1");
    if (!(learning_rate > 0.0)) throw UsageError("eta must be positive");
    if (epochs < 1) throw UsageError("epochs must be at least 1");
    if (positive_class != "positive" && positive_class != "negative")
        throw UsageError("positive-class must be \"positive\" or \"negative\"");
}

Lexicon load_pipeline_lexicon(const PipelineConfig& cfg) {
    Lexicon lexicon;
    if (!cfg.lexicon_path.empty()) lexicon.entries = load_word_list(cfg.lexicon_path);
    lexicon.stopwords = cfg.stopword_path.empty() ? default_stopwords()
                                                  : load_word_list(cfg.stopword_path);
    return lexicon;
}

int sentiment_to_label(Sentiment s, const PipelineConfig& cfg) {
    const bool positive_is_plus = cfg.positive_class == "positive";
    return (s == Sentiment::Positive) == positive_is_plus ? +1 : -1;
}

Sentiment label_to_sentiment(int label, const PipelineConfig& cfg) {
    const bool positive_is_plus = cfg.positive_class == "positive";
    return (label == +1) == positive_is_plus ? Sentiment::Positive : Sentiment::Negative;
}

RouteStats cmd_route(std::istream& in, ExportFormat format, std::ostream& out) {
    RouteStats stats;
    for_each_record(in, format, stats.skipped, [&](RawPost post) {
        const TopicAssignment assignment = route_topic(post);
        ++stats.per_topic[static_cast<std::size_t>(assignment.topic)];
        ++stats.total;
        ordered_json j = post_json(post);
        j["topic"] = topic_name(assignment.topic);
        j["rule"] = assignment.matched_rule;
        out << j.dump() << '\n';
    });
    return stats;
}

TrainStats cmd_train(std::istream& in, ExportFormat format, const PipelineConfig& cfg,
                     std::ostream& model_out, std::ostream& keywords_out) {
    cfg.validate();
    const Lexicon lexicon = load_pipeline_lexicon(cfg);
    const LongestMatchSegmenter segmenter(lexicon);

    TrainStats stats;
    const std::vector<Document> docs =
        read_labeled_documents(in, format, segmenter, lexicon, stats.skipped);
    if (docs.empty()) throw DataError("no training data");
    stats.documents = docs.size();

    const TrainedPipeline trained = train_on_documents(docs, cfg);
    write_keyword_tsv(keywords_out, trained.report);
    write_model(model_out, trained.result.model);

    for (const KeywordScore& s : trained.report.words) {
        if (s.is_positive_keyword) ++stats.positive_keywords;
        if (s.is_negative_keyword) ++stats.negative_keywords;
    }
    stats.features = trained.result.model.space.size();
    stats.updates = trained.result.updates;
    return stats;
}

ClassifyStats cmd_classify(std::istream& in, ExportFormat format, const PipelineConfig& cfg,
                           const LinearModel& model, std::ostream& out) {
    const Lexicon lexicon = load_pipeline_lexicon(cfg);
    const LongestMatchSegmenter segmenter(lexicon);

    ClassifyStats stats;
    for_each_record(in, format, stats.skipped, [&](RawPost post) {
        const TopicAssignment assignment = route_topic(post);
        ordered_json j = post_json(post);
        j["topic"] = topic_name(assignment.topic);
        j["rule"] = assignment.matched_rule;
        if (assignment.topic == Topic::AboutImpressions) {
            const auto tokens = segment_content_words(segmenter, lexicon, post.text);
            const int label = classify(model, vectorize(tokens, model.space));
            j["sentiment"] = sentiment_name(label_to_sentiment(label, cfg));
            ++stats.classified;
            ++(label == +1 ? stats.predicted_positive : stats.predicted_negative);
        }
        ++stats.total;
        out << j.dump() << '\n';
    });
    return stats;
}

EvaluateStats cmd_evaluate(std::istream& in, ExportFormat format, const PipelineConfig& cfg,
                           const LinearModel& model) {
    const Lexicon lexicon = load_pipeline_lexicon(cfg);
    const LongestMatchSegmenter segmenter(lexicon);

    EvaluateStats stats;
    const std::vector<Document> docs =
        read_labeled_documents(in, format, segmenter, lexicon, stats.skipped);
    if (docs.empty()) throw DataError("no labeled documents");
    stats.documents = docs.size();

    std::vector<std::size_t> all(docs.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    stats.report = score_documents(docs, all, model, cfg);
    return stats;
}

KfoldStats cmd_evaluate_kfold(std::istream& in, ExportFormat format,
                              const PipelineConfig& cfg, std::size_t k) {
    cfg.validate();
    const Lexicon lexicon = load_pipeline_lexicon(cfg);
    const LongestMatchSegmenter segmenter(lexicon);

    KfoldStats stats;
    const std::vector<Document> docs =
        read_labeled_documents(in, format, segmenter, lexicon, stats.skipped);
    if (docs.empty()) throw DataError("no labeled documents");
    stats.documents = docs.size();

    const std::vector<Fold> folds = kfold_split(docs.size(), k, cfg.seed);
    for (const Fold& fold : folds) {
        std::vector<Document> train_docs;
        train_docs.reserve(fold.train.size());
        for (const std::size_t i : fold.train) train_docs.push_back(docs[i]);

        const TrainedPipeline trained = train_on_documents(train_docs, cfg);
        stats.folds.push_back(
            score_documents(docs, fold.test, trained.result.model, cfg));
    }

    for (const EvalReport& r : stats.folds) {
        stats.mean.tp += r.tp;
        stats.mean.fp += r.fp;
        stats.mean.fn += r.fn;
        stats.mean.tn += r.tn;
        stats.mean.precision += r.precision;
        stats.mean.recall += r.recall;
        stats.mean.f1 += r.f1;
    }
    const double n = double(stats.folds.size());
    stats.mean.precision /= n;
    stats.mean.recall /= n;
    stats.mean.f1 /= n;
    return stats;
}

}  // namespace ewom
