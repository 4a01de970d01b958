#include "ewom/classifier.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ewom/errors.hpp"
#include "ewom/rng.hpp"

namespace ewom {

namespace {

std::string fmt_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Full-string double parse; rejects trailing garbage and non-finite values.
bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && std::isfinite(out);
}

bool parse_index(const std::string& s, std::size_t& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size()) return false;
    out = static_cast<std::size_t>(v);
    return true;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find('\t', start);
        fields.push_back(line.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return fields;
}

}  // namespace

double decision(const LinearModel& model, const SparseVector& x) {
    double acc = 0.0;
    for (std::size_t k = 0; k < x.indices.size(); ++k) {
        const std::uint32_t j = x.indices[k];
        if (j >= model.weights.size()) throw DataError("feature/model mismatch");
        acc += model.weights[j] * x.values[k];
    }
    return acc + model.bias;
}

int classify(const LinearModel& model, const SparseVector& x) {
    return decision(model, x) >= 0.0 ? +1 : -1;
}

std::size_t epoch_pass(LinearModel& model, const std::vector<LabeledSample>& samples,
                       std::span<const std::size_t> order, double learning_rate,
                       bool literal_sign_update, std::size_t update_cap) {
    std::size_t updates = 0;
    for (const std::size_t idx : order) {
        if (updates >= update_cap) break;
        const LabeledSample& s = samples[idx];
        const int predicted = classify(model, s.vector);
        if (predicted == s.label) continue;
        const double step = learning_rate * (literal_sign_update ? predicted : s.label);
        for (std::size_t k = 0; k < s.vector.indices.size(); ++k)
            model.weights[s.vector.indices[k]] += step * s.vector.values[k];
        model.bias += step;
        ++updates;
    }
    return updates;
}

TrainResult train(const std::vector<LabeledSample>& samples, const FeatureSpace& space,
                  const TrainConfig& cfg) {
    if (samples.empty()) throw DataError("no training data");
    if (!(cfg.learning_rate > 0.0)) throw DataError("learning rate must be positive");
    if (cfg.epochs < 1) throw DataError("epochs must be at least 1");
    if (cfg.max_updates && *cfg.max_updates == 0)
        throw DataError("max updates must be positive");

    bool has_pos = false, has_neg = false;
    for (const LabeledSample& s : samples) {
        if (s.label != +1 && s.label != -1) throw DataError("label must be +1 or -1");
        for (std::uint32_t j : s.vector.indices)
            if (j >= space.size()) throw DataError("feature/model mismatch");
        (s.label == +1 ? has_pos : has_neg) = true;
    }
    if (!has_pos) std::cerr << "warning: training data has no +1 samples\n";
    if (!has_neg) std::cerr << "warning: training data has no -1 samples\n";

    TrainResult result;
    result.model.weights.assign(space.size(), 0.0);
    result.model.bias = 0.0;
    result.model.space = space;

    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(cfg.shuffle_seed);

    for (std::uint32_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        shuffle_indices(order, rng);
        std::size_t cap = std::size_t(-1);
        if (cfg.max_updates) cap = static_cast<std::size_t>(*cfg.max_updates - result.updates);
        const std::size_t made =
            epoch_pass(result.model, samples, order, cfg.learning_rate,
                       cfg.literal_sign_update, cap);
        result.updates += made;
        if (made == 0) break;  // fixed point: later epochs cannot change the model
        if (cfg.max_updates && result.updates >= *cfg.max_updates) break;
    }
    return result;
}

void write_model(std::ostream& out, const LinearModel& model) {
    out << "ewom-model v1\n";
    out << "mode " << feature_mode_name(model.space.mode()) << '\n';
    out << "bias " << fmt_g17(model.bias) << '\n';
    for (std::size_t j = 0; j < model.weights.size(); ++j)
        out << j << '\t' << model.space.features()[j] << '\t' << fmt_g17(model.weights[j])
            << '\n';
}

LinearModel read_model(std::istream& in) {
    auto next_line = [&](std::string& line) {
        if (!std::getline(in, line)) return false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };

    std::string line;
    if (!next_line(line)) throw DataError("malformed model file: empty");
    if (line != "ewom-model v1")
        throw DataError("unsupported model version: \"" + line + "\"");

    if (!next_line(line) || !line.starts_with("mode "))
        throw DataError("malformed model file: expected mode line");
    const auto mode = feature_mode_from_name(line.substr(5));
    if (!mode) throw DataError("malformed model file: unknown mode \"" + line.substr(5) + "\"");

    if (!next_line(line) || !line.starts_with("bias "))
        throw DataError("malformed model file: expected bias line");
    double bias = 0.0;
    if (!parse_double(line.substr(5), bias))
        throw DataError("malformed model file: bad bias value");

    std::vector<std::string> features;
    std::vector<double> weights;
    while (next_line(line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_tabs(line);
        if (fields.size() != 3)
            throw DataError("malformed model file: expected <index>\\t<word>\\t<weight>");
        std::size_t index = 0;
        double weight = 0.0;
        if (!parse_index(fields[0], index) || fields[1].empty() ||
            !parse_double(fields[2], weight))
            throw DataError("malformed model file: bad feature line \"" + line + "\"");
        if (index != features.size())
            throw DataError("weight count does not match feature count");
        features.push_back(fields[1]);
        weights.push_back(weight);
    }
    if (features.empty()) throw DataError("malformed model file: no features");

    LinearModel model;
    model.space = FeatureSpace(std::move(features), *mode);
    model.weights = std::move(weights);
    model.bias = bias;
    return model;
}

void save_model(const LinearModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open model file for writing: " + path);
    write_model(out, model);
    out.flush();
    if (!out) throw IoError("failed writing model file: " + path);
}

LinearModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model file: " + path);
    return read_model(in);
}

}  // namespace ewom
