#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ewom/ingest.hpp"
#include "ewom/keywords.hpp"

namespace ewom {

enum class FeatureMode { Binary, Count };

std::string_view feature_mode_name(FeatureMode mode);
std::optional<FeatureMode> feature_mode_from_name(std::string_view name);

// Ordered, duplicate-free keyword vocabulary documents are vectorized over.
class FeatureSpace {
public:
    FeatureSpace() = default;
    FeatureSpace(std::vector<std::string> features, FeatureMode mode);

    const std::vector<std::string>& features() const { return features_; }
    FeatureMode mode() const { return mode_; }
    std::size_t size() const { return features_.size(); }
    std::optional<std::size_t> index_of(const std::string& word) const;

private:
    std::vector<std::string> features_;
    FeatureMode mode_ = FeatureMode::Binary;
    std::unordered_map<std::string, std::size_t> index_;
};

struct SparseVector {
    std::vector<std::uint32_t> indices;  // strictly increasing
    std::vector<double> values;          // parallel, never zero

    std::size_t size() const { return indices.size(); }
    bool operator==(const SparseVector&) const = default;
};

// Features = every selected keyword (positive or negative), in report order.
FeatureSpace build_space(const KeywordReport& report, FeatureMode mode);

// Binary mode marks present features with 1; Count mode stores raw occurrence
// counts. Tokens outside the space are ignored.
SparseVector vectorize(const std::vector<std::string>& tokens, const FeatureSpace& space);
SparseVector vectorize(const Document& doc, const FeatureSpace& space);

}  // namespace ewom
