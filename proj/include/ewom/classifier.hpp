#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ewom/vectorize.hpp"

namespace ewom {

// f(x) = w.x + b over the feature space embedded in the model.
struct LinearModel {
    std::vector<double> weights;  // one per feature
    double bias = 0.0;
    FeatureSpace space;
};

struct TrainConfig {
    double learning_rate = 1.0;  // update step size
    std::uint32_t epochs = 1;
    std::uint64_t shuffle_seed = 0;
    std::optional<std::uint64_t> max_updates;
    // Keep the published sign-of-f update direction instead of the label.
    // That variant moves weights away from the correct side on every mistake
    // and is retained for comparison runs only.
    bool literal_sign_update = false;
};

struct LabeledSample {
    SparseVector vector;
    int label = +1;  // +1 or -1
};

double decision(const LinearModel& model, const SparseVector& x);

// +1 when the decision value is >= 0, -1 otherwise.
int classify(const LinearModel& model, const SparseVector& x);

// One pass over `samples` in the given visitation order, updating the model
// in place on every misclassification (perceptron rule: w += eta*y*x,
// b += eta*y). Stops early once `update_cap` updates were applied. Returns the
// number of updates performed.
std::size_t epoch_pass(LinearModel& model, const std::vector<LabeledSample>& samples,
                       std::span<const std::size_t> order, double learning_rate,
                       bool literal_sign_update = false,
                       std::size_t update_cap = std::size_t(-1));

struct TrainResult {
    LinearModel model;
    std::uint64_t updates = 0;
};

// Online training from w = 0, b = 0. Samples are visited in a fresh
// seeded-shuffle order each epoch; identical inputs and config produce a
// bit-identical model.
TrainResult train(const std::vector<LabeledSample>& samples, const FeatureSpace& space,
                  const TrainConfig& cfg);

// Line-oriented UTF-8 model format:
//   ewom-model v1
//   mode Binary|Count
//   bias <decimal>
//   <index>\t<word>\t<weight>      (one line per feature, in index order)
// Weights use 17 significant digits so decisions survive a round-trip exactly.
void write_model(std::ostream& out, const LinearModel& model);
LinearModel read_model(std::istream& in);
void save_model(const LinearModel& model, const std::string& path);
LinearModel load_model(const std::string& path);

}  // namespace ewom
