#include "ewom/eval.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "ewom/errors.hpp"
#include "ewom/rng.hpp"

namespace ewom {

EvalReport confusion(std::span<const int> predictions, std::span<const int> truths) {
    if (predictions.size() != truths.size())
        throw DataError("prediction/truth length mismatch");
    if (predictions.empty()) throw DataError("empty evaluation set");

    EvalReport r;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const int p = predictions[i];
        const int t = truths[i];
        if ((p != +1 && p != -1) || (t != +1 && t != -1))
            throw DataError("label must be +1 or -1");
        if (p == +1)
            ++(t == +1 ? r.tp : r.fp);
        else
            ++(t == +1 ? r.fn : r.tn);
    }
    return r;
}

EvalReport metrics(EvalReport counts) {
    const double tp = double(counts.tp);
    counts.precision = counts.tp + counts.fp > 0 ? tp / double(counts.tp + counts.fp) : 0.0;
    counts.recall = counts.tp + counts.fn > 0 ? tp / double(counts.tp + counts.fn) : 0.0;
    const double pr = counts.precision + counts.recall;
    counts.f1 = pr > 0.0 ? 2.0 * counts.precision * counts.recall / pr : 0.0;
    return counts;
}

std::vector<Fold> kfold_split(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 2 || k > n) throw DataError("fold count out of range");

    const std::vector<std::size_t> perm = seeded_permutation(n, seed);
    const std::size_t base = n / k;
    const std::size_t extra = n % k;

    std::vector<Fold> folds(k);
    std::size_t pos = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t size = base + (f < extra ? 1 : 0);
        folds[f].test.assign(perm.begin() + pos, perm.begin() + pos + size);
        folds[f].train.reserve(n - size);
        folds[f].train.insert(folds[f].train.end(), perm.begin(), perm.begin() + pos);
        folds[f].train.insert(folds[f].train.end(), perm.begin() + pos + size, perm.end());
        pos += size;
    }
    return folds;
}

namespace {

std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

void write_eval_tsv_header(std::ostream& out, bool with_fold_column) {
    if (with_fold_column) out << "fold\t";
    out << "tp\tfp\tfn\ttn\tprecision\trecall\tf1\n";
}

void write_eval_tsv_row(std::ostream& out, const EvalReport& r, const std::string& fold_label) {
    if (!fold_label.empty()) out << fold_label << '\t';
    out << r.tp << '\t' << r.fp << '\t' << r.fn << '\t' << r.tn << '\t'
        << fmt4(r.precision) << '\t' << fmt4(r.recall) << '\t' << fmt4(r.f1) << '\n';
}

std::string format_eval_text(const EvalReport& r) {
    std::ostringstream out;
    out << "tp=" << r.tp << " fp=" << r.fp << " fn=" << r.fn << " tn=" << r.tn << '\n'
        << "precision " << fmt4(r.precision) << '\n'
        << "recall    " << fmt4(r.recall) << '\n'
        << "f1        " << fmt4(r.f1) << '\n';
    return out.str();
}

}  // namespace ewom
