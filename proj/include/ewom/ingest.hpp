#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ewom {

enum class Topic { IncludedUrl, IncludePhoto, AboutImpressions, Retweeted, Reply };
inline constexpr std::size_t kTopicCount = 5;

enum class Sentiment { Positive, Negative };

std::string_view topic_name(Topic topic);
std::optional<Topic> topic_from_name(std::string_view name);
std::string_view sentiment_name(Sentiment s);
std::optional<Sentiment> sentiment_from_name(std::string_view name);

// One exported post. `label` is an optional ground-truth impression carried by
// labeled exports; routing and classification never require it.
struct RawPost {
    std::string id;
    std::string text;
    std::vector<std::string> expanded_urls;
    std::vector<std::string> media_types;
    std::optional<Sentiment> label;

    bool operator==(const RawPost&) const = default;
};

struct TopicAssignment {
    Topic topic = Topic::AboutImpressions;
    std::string matched_rule;  // "default" for AboutImpressions

    bool operator==(const TopicAssignment&) const = default;
};

struct Document {
    std::string id;
    std::string text;
    std::vector<std::string> tokens;  // empty until segmentation
    std::optional<TopicAssignment> topic;
    std::optional<Sentiment> sentiment;
};

enum class ExportFormat { Jsonl, Tsv };

// Single-record codecs. Parsers return nullopt for malformed records
// (bad JSON, missing/empty id, missing text, wrong field types, bad label).
std::optional<RawPost> parse_jsonl_record(std::string_view line);
std::optional<RawPost> parse_tsv_record(std::string_view line);
std::string to_jsonl(const RawPost& post);

struct ParseResult {
    std::vector<RawPost> posts;
    std::size_t skipped = 0;
};

// Reads a whole export file; malformed records are counted, never fatal.
// An unreadable file is an IoError.
ParseResult parse_export(const std::string& path, ExportFormat format);

// First matching rule wins, in fixed precedence order:
// Retweeted ("RT" prefix) > Reply ("@" prefix) > IncludedUrl (url marker in
// text or expanded_urls) > IncludePhoto ("photo" in media_types) > default.
TopicAssignment route_topic(const RawPost& post);

}  // namespace ewom
