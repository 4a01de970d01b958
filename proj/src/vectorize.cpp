#include "ewom/vectorize.hpp"

#include <map>

#include "ewom/errors.hpp"

namespace ewom {

std::string_view feature_mode_name(FeatureMode mode) {
    return mode == FeatureMode::Binary ? "Binary" : "Count";
}

std::optional<FeatureMode> feature_mode_from_name(std::string_view name) {
    if (name == "Binary" || name == "binary") return FeatureMode::Binary;
    if (name == "Count" || name == "count") return FeatureMode::Count;
    return std::nullopt;
}

FeatureSpace::FeatureSpace(std::vector<std::string> features, FeatureMode mode)
    : features_(std::move(features)), mode_(mode) {
    index_.reserve(features_.size());
    for (std::size_t i = 0; i < features_.size(); ++i) {
        if (!index_.emplace(features_[i], i).second)
            throw DataError("duplicate feature: " + features_[i]);
    }
}

std::optional<std::size_t> FeatureSpace::index_of(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

FeatureSpace build_space(const KeywordReport& report, FeatureMode mode) {
    std::vector<std::string> features;
    for (const KeywordScore& s : report.words)
        if (s.is_positive_keyword || s.is_negative_keyword) features.push_back(s.word);
    if (features.empty()) throw DataError("empty feature space");
    return FeatureSpace(std::move(features), mode);
}

SparseVector vectorize(const std::vector<std::string>& tokens, const FeatureSpace& space) {
    std::map<std::uint32_t, std::uint32_t> counts;
    for (const std::string& token : tokens)
        if (auto j = space.index_of(token)) ++counts[static_cast<std::uint32_t>(*j)];

    SparseVector v;
    v.indices.reserve(counts.size());
    v.values.reserve(counts.size());
    for (const auto& [index, count] : counts) {
        v.indices.push_back(index);
        v.values.push_back(space.mode() == FeatureMode::Binary ? 1.0 : double(count));
    }
    return v;
}

SparseVector vectorize(const Document& doc, const FeatureSpace& space) {
    return vectorize(doc.tokens, space);
}

}  // namespace ewom
