#include "ewom/ingest.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"

#include "ewom/errors.hpp"

namespace ewom {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool contains_url_marker(std::string_view s) {
    return s.find("http://") != std::string_view::npos ||
           s.find("https://") != std::string_view::npos ||
           s.find(".com") != std::string_view::npos;
}

bool read_string_array(const ordered_json& j, const char* key, std::vector<std::string>& out) {
    auto it = j.find(key);
    if (it == j.end()) return true;  // optional
    if (!it->is_array()) return false;
    for (const auto& item : *it) {
        if (!item.is_string()) return false;
        out.push_back(item.get<std::string>());
    }
    return true;
}

std::vector<std::string> split_list(std::string_view field, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= field.size()) {
        const std::size_t pos = field.find(sep, start);
        const std::string_view piece =
            field.substr(start, pos == std::string_view::npos ? pos : pos - start);
        if (!piece.empty()) out.emplace_back(piece);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::string_view topic_name(Topic topic) {
    switch (topic) {
        case Topic::IncludedUrl: return "IncludedUrl";
        case Topic::IncludePhoto: return "IncludePhoto";
        case Topic::AboutImpressions: return "AboutImpressions";
        case Topic::Retweeted: return "Retweeted";
        case Topic::Reply: return "Reply";
    }
    return "AboutImpressions";
}

std::optional<Topic> topic_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kTopicCount; ++i) {
        const Topic t = static_cast<Topic>(i);
        if (name == topic_name(t)) return t;
    }
    return std::nullopt;
}

std::string_view sentiment_name(Sentiment s) {
    return s == Sentiment::Positive ? "positive" : "negative";
}

std::optional<Sentiment> sentiment_from_name(std::string_view name) {
    const std::string lower = lowercase(name);
    if (lower == "positive") return Sentiment::Positive;
    if (lower == "negative") return Sentiment::Negative;
    return std::nullopt;
}

std::optional<RawPost> parse_jsonl_record(std::string_view line) {
    const ordered_json j = ordered_json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;

    RawPost post;

    auto id = j.find("id");
    if (id == j.end()) return std::nullopt;
    if (id->is_string()) {
        post.id = id->get<std::string>();
    } else if (id->is_number_integer()) {
        post.id = std::to_string(id->get<long long>());
    } else if (id->is_number_unsigned()) {
        post.id = std::to_string(id->get<unsigned long long>());
    } else {
        return std::nullopt;
    }
    if (post.id.empty()) return std::nullopt;

    auto text = j.find("text");
    if (text == j.end() || !text->is_string()) return std::nullopt;
    post.text = text->get<std::string>();

    if (!read_string_array(j, "expanded_urls", post.expanded_urls)) return std::nullopt;
    if (!read_string_array(j, "media_types", post.media_types)) return std::nullopt;

    if (auto label = j.find("label"); label != j.end()) {
        if (!label->is_string()) return std::nullopt;
        post.label = sentiment_from_name(label->get<std::string>());
        if (!post.label) return std::nullopt;
    }
    return post;
}

std::optional<RawPost> parse_tsv_record(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find('\t', start);
        fields.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (fields.size() < 2 || fields.size() > 4) return std::nullopt;
    if (fields[0].empty()) return std::nullopt;

    RawPost post;
    post.id = std::string(fields[0]);
    post.text = std::string(fields[1]);
    if (fields.size() >= 3) post.expanded_urls = split_list(fields[2], ';');
    if (fields.size() >= 4) post.media_types = split_list(fields[3], ';');
    return post;
}

std::string to_jsonl(const RawPost& post) {
    ordered_json j;
    j["id"] = post.id;
    j["text"] = post.text;
    if (!post.expanded_urls.empty()) j["expanded_urls"] = post.expanded_urls;
    if (!post.media_types.empty()) j["media_types"] = post.media_types;
    if (post.label) j["label"] = sentiment_name(*post.label);
    return j.dump();
}

ParseResult parse_export(const std::string& path, ExportFormat format) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input: " + path);

    ParseResult result;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto post = format == ExportFormat::Jsonl ? parse_jsonl_record(line)
                                                  : parse_tsv_record(line);
        if (post) {
            result.posts.push_back(std::move(*post));
        } else {
            ++result.skipped;
        }
    }
    return result;
}

TopicAssignment route_topic(const RawPost& post) {
    if (post.text.starts_with("RT"))
        return {Topic::Retweeted, "text begins with \"RT\""};
    if (post.text.starts_with("@"))
        return {Topic::Reply, "text begins with \"@\""};
    const bool url_in_text = contains_url_marker(post.text);
    const bool url_in_urls =
        std::any_of(post.expanded_urls.begin(), post.expanded_urls.end(),
                    [](const std::string& u) { return contains_url_marker(u); });
    if (url_in_text || url_in_urls)
        return {Topic::IncludedUrl, "url marker in text or expanded_urls"};
    if (std::find(post.media_types.begin(), post.media_types.end(), "photo") !=
        post.media_types.end())
        return {Topic::IncludePhoto, "\"photo\" in media_types"};
    return {Topic::AboutImpressions, "default"};
}

}  // namespace ewom
