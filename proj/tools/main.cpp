#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ewom/errors.hpp"
#include "ewom/pipeline.hpp"

namespace {

using namespace ewom;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitIo = 3;

ExportFormat parse_format(const std::string& name) {
    if (name == "jsonl") return ExportFormat::Jsonl;
    if (name == "tsv") return ExportFormat::Tsv;
    throw UsageError("unknown format: " + name);
}

// "-" means stdin/stdout so commands compose in shell pipelines.
struct InputStream {
    std::ifstream file;
    std::istream* stream = nullptr;

    explicit InputStream(const std::string& path) {
        if (path == "-") {
            stream = &std::cin;
            return;
        }
        file.open(path, std::ios::binary);
        if (!file) throw IoError("cannot open input: " + path);
        stream = &file;
    }
};

struct OutputStream {
    std::ofstream file;
    std::ostream* stream = nullptr;

    explicit OutputStream(const std::string& path) {
        if (path.empty() || path == "-") {
            stream = &std::cout;
            return;
        }
        file.open(path, std::ios::binary);
        if (!file) throw IoError("cannot open output: " + path);
        stream = &file;
    }

    void finish(const std::string& path) {
        if (stream != &file) {
            std::cout.flush();
            return;
        }
        file.flush();
        if (!file) throw IoError("failed writing output: " + path);
    }
};

// Config files are flat key=value lines mirroring the long flags ("alpha=2",
// "lexicon=words.txt"); flags given on the command line win over the file.
struct ConfigBinding {
    std::string key;   // file key
    std::string flag;  // matching long option
    std::function<void(const std::string&)> apply;
};

struct CommonOptions {
    std::string input;
    std::string output;
    std::string format = "jsonl";
    std::string config_path;
    PipelineConfig config;
    std::vector<ConfigBinding> bindings;
};

double config_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size())
        throw UsageError("config: bad value for " + key + ": \"" + value + "\"");
    return v;
}

std::uint64_t config_uint(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (value.empty() || end != value.c_str() + value.size())
        throw UsageError("config: bad value for " + key + ": \"" + value + "\"");
    return v;
}

bool config_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw UsageError("config: bad value for " + key + ": \"" + value + "\"");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);

    std::map<std::string, std::string> values;
    std::string line;
    std::size_t line_no = 0;
    auto trim = [](std::string s) {
        const char* ws = " \t\r";
        const std::size_t a = s.find_first_not_of(ws);
        if (a == std::string::npos) return std::string();
        const std::size_t b = s.find_last_not_of(ws);
        return s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        const std::size_t eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw UsageError("config: line " + std::to_string(line_no) +
                             " is not key=value: \"" + trimmed + "\"");
        const std::string key = trim(trimmed.substr(0, eq));
        std::string value = trim(trimmed.substr(eq + 1));
        if (value.size() >= 2 && ((value.front() == '"' && value.back() == '"') ||
                                  (value.front() == '\'' && value.back() == '\'')))
            value = value.substr(1, value.size() - 2);
        if (key.empty())
            throw UsageError("config: empty key on line " + std::to_string(line_no));
        values[key] = value;
    }
    return values;
}

// Keys any subcommand may see; one config file can serve the whole pipeline,
// so keys a particular subcommand has no flag for are skipped, not errors.
const std::set<std::string>& all_config_keys() {
    static const std::set<std::string> keys = {
        "format", "lexicon",      "stopwords", "positive-class", "alpha", "alpha-prime",
        "eta",    "epochs",       "seed",      "mode",           "literal-eq8",
    };
    return keys;
}

void apply_config_file(const CLI::App* cmd, CommonOptions& opts) {
    if (opts.config_path.empty()) return;
    const auto values = read_config_file(opts.config_path);
    for (const auto& [key, value] : values) {
        const auto binding =
            std::find_if(opts.bindings.begin(), opts.bindings.end(),
                         [&key](const ConfigBinding& b) { return b.key == key; });
        if (binding == opts.bindings.end()) {
            if (!all_config_keys().count(key))
                throw UsageError("config: unknown key \"" + key + "\"");
            continue;
        }
        if (cmd->count(binding->flag) > 0) continue;  // the flag wins
        binding->apply(value);
    }
}

void add_io_options(CLI::App* cmd, CommonOptions& opts, bool with_output) {
    cmd->add_option("--input", opts.input, "input file (\"-\" for stdin)")->required();
    cmd->add_option("--format", opts.format, "input format (jsonl|tsv)")
        ->check(CLI::IsMember({"jsonl", "tsv"}));
    if (with_output)
        cmd->add_option("--output", opts.output, "output file (default stdout)");
    cmd->add_option("--config", opts.config_path,
                    "key=value config file; flags override it");
    opts.bindings.push_back({"format", "--format", [&opts](const std::string& v) {
                                 if (v != "jsonl" && v != "tsv")
                                     throw UsageError("config: bad value for format: \"" + v +
                                                      "\"");
                                 opts.format = v;
                             }});
}

void add_segmenter_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--lexicon", opts.config.lexicon_path,
                    "surface-form list, one word per line");
    cmd->add_option("--stopwords", opts.config.stopword_path,
                    "stopword list (default: built-in Japanese function words)");
    cmd->add_option("--positive-class", opts.config.positive_class,
                    "sentiment mapped to +1 (positive|negative)");
    opts.bindings.push_back({"lexicon", "--lexicon",
                             [&opts](const std::string& v) { opts.config.lexicon_path = v; }});
    opts.bindings.push_back({"stopwords", "--stopwords", [&opts](const std::string& v) {
                                 opts.config.stopword_path = v;
                             }});
    opts.bindings.push_back({"positive-class", "--positive-class",
                             [&opts](const std::string& v) { opts.config.positive_class = v; }});
}

void add_training_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--alpha", opts.config.alpha, "positive-keyword entropy ratio (> 1)");
    cmd->add_option("--alpha-prime", opts.config.alpha_prime,
                    "negative-keyword entropy ratio (> 1)");
    cmd->add_option("--eta", opts.config.learning_rate, "learning rate (> 0)");
    cmd->add_option("--epochs", opts.config.epochs, "training epochs");
    cmd->add_option("--seed", opts.config.seed, "seed for all shuffling");
    cmd->add_option_function<std::string>(
           "--mode",
           [&opts](const std::string& value) {
               opts.config.feature_mode = *feature_mode_from_name(value);
           },
           "feature encoding (binary|count)")
        ->check(CLI::IsMember({"binary", "count", "Binary", "Count"}));
    cmd->add_flag("--literal-eq8", opts.config.literal_sign_update,
                  "use the sign-of-f update direction instead of the label");

    opts.bindings.push_back({"alpha", "--alpha", [&opts](const std::string& v) {
                                 opts.config.alpha = config_double("alpha", v);
                             }});
    opts.bindings.push_back({"alpha-prime", "--alpha-prime", [&opts](const std::string& v) {
                                 opts.config.alpha_prime = config_double("alpha-prime", v);
                             }});
    opts.bindings.push_back({"eta", "--eta", [&opts](const std::string& v) {
                                 opts.config.learning_rate = config_double("eta", v);
                             }});
    opts.bindings.push_back({"epochs", "--epochs", [&opts](const std::string& v) {
                                 opts.config.epochs =
                                     static_cast<std::uint32_t>(config_uint("epochs", v));
                             }});
    opts.bindings.push_back({"seed", "--seed", [&opts](const std::string& v) {
                                 opts.config.seed = config_uint("seed", v);
                             }});
    opts.bindings.push_back({"mode", "--mode", [&opts](const std::string& v) {
                                 const auto mode = feature_mode_from_name(v);
                                 if (!mode)
                                     throw UsageError("config: bad value for mode: \"" + v +
                                                      "\"");
                                 opts.config.feature_mode = *mode;
                             }});
    opts.bindings.push_back({"literal-eq8", "--literal-eq8", [&opts](const std::string& v) {
                                 opts.config.literal_sign_update = config_bool("literal-eq8", v);
                             }});
}

int run_route(const CommonOptions& opts) {
    InputStream in(opts.input);
    OutputStream out(opts.output);
    const RouteStats stats = cmd_route(*in.stream, parse_format(opts.format), *out.stream);
    out.finish(opts.output);
    for (std::size_t t = 0; t < kTopicCount; ++t)
        std::cerr << topic_name(static_cast<Topic>(t)) << '\t' << stats.per_topic[t] << '\n';
    std::cerr << "total\t" << stats.total << "\nskipped\t" << stats.skipped << '\n';
    return kExitOk;
}

int run_train(const CommonOptions& opts, const std::string& model_path,
              std::string keywords_path) {
    opts.config.validate();
    if (keywords_path.empty()) keywords_path = model_path + ".keywords.tsv";

    InputStream in(opts.input);
    std::ofstream model_out(model_path, std::ios::binary);
    if (!model_out) throw IoError("cannot open model file for writing: " + model_path);
    std::ofstream keywords_out(keywords_path, std::ios::binary);
    if (!keywords_out) throw IoError("cannot open keyword file for writing: " + keywords_path);

    const TrainStats stats = cmd_train(*in.stream, parse_format(opts.format), opts.config,
                                       model_out, keywords_out);
    model_out.flush();
    keywords_out.flush();
    if (!model_out) throw IoError("failed writing model file: " + model_path);
    if (!keywords_out) throw IoError("failed writing keyword file: " + keywords_path);

    std::cerr << "documents\t" << stats.documents << '\n'
              << "skipped\t" << stats.skipped << '\n'
              << "positive_keywords\t" << stats.positive_keywords << '\n'
              << "negative_keywords\t" << stats.negative_keywords << '\n'
              << "features\t" << stats.features << '\n'
              << "updates\t" << stats.updates << '\n';
    return kExitOk;
}

int run_classify(const CommonOptions& opts, const std::string& model_path) {
    opts.config.validate();
    const LinearModel model = load_model(model_path);
    InputStream in(opts.input);
    OutputStream out(opts.output);
    const ClassifyStats stats =
        cmd_classify(*in.stream, parse_format(opts.format), opts.config, model, *out.stream);
    out.finish(opts.output);
    std::cerr << "total\t" << stats.total << "\nskipped\t" << stats.skipped
              << "\nclassified\t" << stats.classified << "\npredicted_positive\t"
              << stats.predicted_positive << "\npredicted_negative\t"
              << stats.predicted_negative << '\n';
    return kExitOk;
}

int run_evaluate(const CommonOptions& opts, const std::string& model_path,
                 std::optional<std::size_t> kfold) {
    opts.config.validate();
    InputStream in(opts.input);
    OutputStream out(opts.output);

    if (kfold) {
        const KfoldStats stats =
            cmd_evaluate_kfold(*in.stream, parse_format(opts.format), opts.config, *kfold);
        write_eval_tsv_header(*out.stream, true);
        for (std::size_t f = 0; f < stats.folds.size(); ++f)
            write_eval_tsv_row(*out.stream, stats.folds[f], std::to_string(f));
        write_eval_tsv_row(*out.stream, stats.mean, "mean");
        out.finish(opts.output);
        std::cerr << "documents\t" << stats.documents << "\nskipped\t" << stats.skipped
                  << '\n'
                  << format_eval_text(stats.mean);
        return kExitOk;
    }

    if (model_path.empty())
        throw UsageError("evaluate requires --model unless --kfold is given");
    const LinearModel model = load_model(model_path);
    const EvaluateStats stats =
        cmd_evaluate(*in.stream, parse_format(opts.format), opts.config, model);
    write_eval_tsv_header(*out.stream, false);
    write_eval_tsv_row(*out.stream, stats.report);
    out.finish(opts.output);
    std::cerr << "documents\t" << stats.documents << "\nskipped\t" << stats.skipped << '\n'
              << format_eval_text(stats.report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eWOM topic routing and impression classification toolkit"};
    app.require_subcommand(1);

    CommonOptions route_opts;
    CLI::App* route = app.add_subcommand("route", "assign each post to a topic");
    add_io_options(route, route_opts, true);

    CommonOptions train_opts;
    std::string train_model, train_keywords;
    CLI::App* train = app.add_subcommand("train", "select keywords and train a model");
    add_io_options(train, train_opts, false);
    add_segmenter_options(train, train_opts);
    add_training_options(train, train_opts);
    train->add_option("--model", train_model, "model output path")->required();
    train->add_option("--keywords", train_keywords,
                      "keyword report path (default <model>.keywords.tsv)");

    CommonOptions classify_opts;
    std::string classify_model;
    CLI::App* classify =
        app.add_subcommand("classify", "route posts and predict impressions");
    add_io_options(classify, classify_opts, true);
    add_segmenter_options(classify, classify_opts);
    classify->add_option("--model", classify_model, "trained model path")->required();

    CommonOptions eval_opts;
    std::string eval_model;
    std::optional<std::size_t> eval_kfold;
    CLI::App* evaluate = app.add_subcommand("evaluate", "score predictions against labels");
    add_io_options(evaluate, eval_opts, true);
    add_segmenter_options(evaluate, eval_opts);
    add_training_options(evaluate, eval_opts);
    evaluate->add_option("--model", eval_model, "trained model path (holdout mode)");
    evaluate->add_option("--kfold", eval_kfold,
                         "cross-validate with this many folds (retrains per fold)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (route->parsed()) {
            apply_config_file(route, route_opts);
            return run_route(route_opts);
        }
        if (train->parsed()) {
            apply_config_file(train, train_opts);
            return run_train(train_opts, train_model, train_keywords);
        }
        if (classify->parsed()) {
            apply_config_file(classify, classify_opts);
            return run_classify(classify_opts, classify_model);
        }
        if (evaluate->parsed()) {
            apply_config_file(evaluate, eval_opts);
            return run_evaluate(eval_opts, eval_model, eval_kfold);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
