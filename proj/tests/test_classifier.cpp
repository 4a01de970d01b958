#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <numeric>
#include <random>
#include <sstream>

#include "ewom/classifier.hpp"
#include "ewom/errors.hpp"
#include "oracles.hpp"

using namespace ewom;

namespace {

FeatureSpace space_of(std::size_t n, FeatureMode mode = FeatureMode::Binary) {
    std::vector<std::string> features;
    for (std::size_t i = 0; i < n; ++i) features.push_back("f" + std::to_string(i));
    return FeatureSpace(std::move(features), mode);
}

LinearModel model_of(std::vector<double> weights, double bias) {
    LinearModel m;
    m.space = space_of(weights.size());
    m.weights = std::move(weights);
    m.bias = bias;
    return m;
}

SparseVector sparse(std::vector<std::uint32_t> idx, std::vector<double> val) {
    return {std::move(idx), std::move(val)};
}

}  // namespace

TEST_CASE("decision is the sparse dot product plus bias") {
    const LinearModel m = model_of({1.0, -1.0}, 0.5);
    CHECK(decision(m, sparse({0, 1}, {1.0, 2.0})) == -0.5);
    CHECK(decision(model_of({0.0, 0.0, 0.0}, 0.0), sparse({0, 2}, {3.0, 7.0})) == 0.0);
    CHECK_THROWS_WITH_AS(decision(m, sparse({5}, {1.0})), "feature/model mismatch", DataError);
}

TEST_CASE("decision matches a dense oracle on random models") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t dim = 50;
        std::vector<double> weights(dim);
        for (double& w : weights) w = (double(rng() % 2001) - 1000.0) / 250.0;
        const double bias = (double(rng() % 2001) - 1000.0) / 500.0;

        std::vector<double> dense(dim, 0.0);
        SparseVector x;
        for (std::size_t j = 0; j < dim; ++j) {
            if (rng() % 4 != 0) continue;
            const double v = (double(rng() % 1000) + 1.0) / 100.0;
            dense[j] = v;
            x.indices.push_back(static_cast<std::uint32_t>(j));
            x.values.push_back(v);
        }
        const LinearModel m = model_of(weights, bias);
        CHECK(std::fabs(decision(m, x) - oracle::dense_decision(weights, bias, dense)) <= 1e-12);
    }
}

TEST_CASE("classification boundary goes to +1") {
    const LinearModel m = model_of({1.0}, 0.0);
    CHECK(classify(m, sparse({}, {})) == +1);                // decision exactly 0
    CHECK(classify(model_of({1.0, -1.0}, 0.5), sparse({0, 1}, {1.0, 2.0})) == -1);
    CHECK(classify(model_of({1.0}, 2.2), sparse({0}, {1.0})) == +1);
}

TEST_CASE("training a single correctly-classified sample changes nothing") {
    const std::vector<LabeledSample> samples = {{sparse({0}, {1.0}), +1}};
    TrainConfig cfg;
    cfg.epochs = 3;
    const TrainResult r = train(samples, space_of(1), cfg);
    CHECK(r.model.weights == std::vector<double>{0.0});
    CHECK(r.model.bias == 0.0);
    CHECK(r.updates == 0);
}

TEST_CASE("training updates on a misclassified sample") {
    // zero model classifies everything +1, so a -1 sample triggers one update
    const std::vector<LabeledSample> samples = {{sparse({0}, {1.0}), -1}};
    TrainConfig cfg;
    cfg.learning_rate = 0.5;
    cfg.epochs = 1;
    const TrainResult r = train(samples, space_of(1), cfg);
    CHECK(r.model.weights == std::vector<double>{-0.5});
    CHECK(r.model.bias == -0.5);
    CHECK(r.updates == 1);

    cfg.epochs = 10;  // converges after the first update, later epochs are no-ops
    const TrainResult longer = train(samples, space_of(1), cfg);
    CHECK(longer.model.weights == r.model.weights);
    CHECK(longer.model.bias == r.model.bias);
    CHECK(longer.updates == 1);
}

TEST_CASE("axis-separable pair converges quickly") {
    const std::vector<LabeledSample> samples = {{sparse({0}, {1.0}), +1},
                                                {sparse({1}, {1.0}), -1}};
    TrainConfig cfg;
    cfg.epochs = 10;
    const TrainResult r = train(samples, space_of(2), cfg);
    for (const LabeledSample& s : samples)
        CHECK(classify(r.model, s.vector) == s.label);
}

TEST_CASE("training is deterministic per seed") {
    std::mt19937_64 rng(53);
    std::vector<LabeledSample> samples;
    for (int i = 0; i < 50; ++i) {
        SparseVector x;
        for (std::uint32_t j = 0; j < 8; ++j)
            if (rng() % 2) {
                x.indices.push_back(j);
                x.values.push_back(1.0 + double(rng() % 3));
            }
        samples.push_back({std::move(x), rng() % 2 ? +1 : -1});
    }
    TrainConfig cfg;
    cfg.epochs = 7;
    cfg.shuffle_seed = 99;
    const TrainResult a = train(samples, space_of(8), cfg);
    const TrainResult b = train(samples, space_of(8), cfg);
    CHECK(a.model.weights == b.model.weights);
    CHECK(a.model.bias == b.model.bias);
    CHECK(a.updates == b.updates);
}

TEST_CASE("a single update raises the sample margin by eta*(|x|^2+1)") {
    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 100; ++iter) {
        LinearModel m = model_of({0.0, 0.0, 0.0, 0.0}, 0.0);
        for (double& w : m.weights) w = (double(rng() % 200) - 100.0) / 50.0;
        m.bias = (double(rng() % 200) - 100.0) / 50.0;

        SparseVector x;
        for (std::uint32_t j = 0; j < 4; ++j)
            if (rng() % 2) {
                x.indices.push_back(j);
                x.values.push_back((double(rng() % 300) + 1.0) / 100.0);
            }
        const int y = rng() % 2 ? +1 : -1;
        if (classify(m, x) == y) continue;  // update only fires on mistakes

        const double eta = 0.25;
        const double margin_before = y * decision(m, x);
        double norm_sq = 0.0;
        for (double v : x.values) norm_sq += v * v;

        const std::vector<LabeledSample> samples = {{x, y}};
        const std::vector<std::size_t> order = {0};
        CHECK(epoch_pass(m, samples, order, eta) == 1);
        const double margin_after = y * decision(m, x);
        CHECK(std::fabs(margin_after - margin_before - eta * (norm_sq + 1.0)) <= 1e-12);
    }
}

TEST_CASE("update-only-on-error is a fixed point") {
    const std::vector<LabeledSample> samples = {{sparse({0}, {1.0}), +1},
                                                {sparse({1}, {1.0}), -1}};
    TrainConfig cfg;
    cfg.epochs = 20;
    TrainResult r = train(samples, space_of(2), cfg);

    const std::vector<double> weights = r.model.weights;
    const double bias = r.model.bias;
    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    CHECK(epoch_pass(r.model, samples, order, 1.0) == 0);
    CHECK(r.model.weights == weights);
    CHECK(r.model.bias == bias);
}

TEST_CASE("literal sign update direction cannot fix a mistake") {
    // zero model predicts +1; with the sign-of-f direction the update pushes
    // the decision further up instead of toward the -1 label
    LinearModel m = model_of({0.0}, 0.0);
    const std::vector<LabeledSample> samples = {{sparse({0}, {1.0}), -1}};
    const std::vector<std::size_t> order = {0};
    CHECK(epoch_pass(m, samples, order, 1.0, /*literal_sign_update=*/true) == 1);
    CHECK(m.weights == std::vector<double>{1.0});
    CHECK(m.bias == 1.0);
    CHECK(classify(m, samples[0].vector) == +1);  // still wrong, by construction
}

TEST_CASE("max updates caps training mid-epoch") {
    // alternating contradictory labels on the same point never converge
    const std::vector<LabeledSample> samples = {{sparse({0}, {1.0}), +1},
                                                {sparse({0}, {1.0}), -1}};
    TrainConfig cfg;
    cfg.epochs = 1000;
    cfg.max_updates = 7;
    const TrainResult r = train(samples, space_of(1), cfg);
    CHECK(r.updates == 7);
}

TEST_CASE("training rejects bad inputs") {
    TrainConfig cfg;
    CHECK_THROWS_WITH_AS(train({}, space_of(1), cfg), "no training data", DataError);
    CHECK_THROWS_AS(train({{sparse({0}, {1.0}), 2}}, space_of(1), cfg), DataError);
    CHECK_THROWS_AS(train({{sparse({3}, {1.0}), 1}}, space_of(1), cfg), DataError);
    cfg.learning_rate = 0.0;
    CHECK_THROWS_AS(train({{sparse({0}, {1.0}), 1}}, space_of(1), cfg), DataError);
}

TEST_CASE("model file round-trip preserves decisions bit-exactly") {
    std::mt19937_64 rng(71);
    LinearModel m;
    m.space = FeatureSpace({"つまらない", "面白い", "latin"}, FeatureMode::Count);
    m.weights = {-1.0 / 3.0, 0.1234567890123456789, -7.25};
    m.bias = 1e-17;

    std::ostringstream out;
    write_model(out, m);
    std::istringstream in(out.str());
    const LinearModel back = read_model(in);

    CHECK(back.weights == m.weights);
    CHECK(back.bias == m.bias);
    CHECK(back.space.features() == m.space.features());
    CHECK(back.space.mode() == m.space.mode());

    for (int iter = 0; iter < 50; ++iter) {
        SparseVector x;
        for (std::uint32_t j = 0; j < 3; ++j)
            if (rng() % 2) {
                x.indices.push_back(j);
                x.values.push_back(double(rng() % 100) / 7.0);
            }
        CHECK(decision(back, x) == decision(m, x));
    }
}

TEST_CASE("model loading rejects bad files") {
    auto load_from = [](const std::string& text) {
        std::istringstream in(text);
        return read_model(in);
    };
    CHECK_THROWS_WITH_AS(load_from("ewom-model v9\nmode Binary\nbias 0\n0\tw\t1\n"),
                         "unsupported model version: \"ewom-model v9\"", DataError);
    CHECK_THROWS_AS(load_from(""), DataError);
    CHECK_THROWS_AS(load_from("ewom-model v1\nmode Fancy\nbias 0\n0\tw\t1\n"), DataError);
    CHECK_THROWS_AS(load_from("ewom-model v1\nmode Binary\nbias x\n0\tw\t1\n"), DataError);
    CHECK_THROWS_AS(load_from("ewom-model v1\nmode Binary\nbias 0\n"), DataError);
    CHECK_THROWS_AS(load_from("ewom-model v1\nmode Binary\nbias 0\n0\tw\n"), DataError);
    CHECK_THROWS_AS(load_from("ewom-model v1\nmode Binary\nbias 0\n0\tw\tnan\n"), DataError);
    // index gap: weight count no longer matches the feature count
    CHECK_THROWS_WITH_AS(
        load_from("ewom-model v1\nmode Binary\nbias 0\n0\ta\t1\n2\tb\t1\n"),
        "weight count does not match feature count", DataError);
}

TEST_CASE("save and load through the filesystem") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "ewom_model_test.model";
    LinearModel m;
    m.space = FeatureSpace({"a", "b"}, FeatureMode::Binary);
    m.weights = {0.5, -2.0};
    m.bias = 0.125;
    save_model(m, path.string());
    const LinearModel back = load_model(path.string());
    CHECK(back.weights == m.weights);
    CHECK(back.bias == m.bias);
    fs::remove(path);

    CHECK_THROWS_AS(load_model("/nonexistent/ewom/m.model"), IoError);
}
