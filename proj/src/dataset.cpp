#include "sggnn/dataset.hpp"

#include <algorithm>

namespace sggnn {

int LabeledDataset::n_classes() const {
    int c = 0;
    for (int y : labels) c = std::max(c, y);
    return c;
}

DenseMatrix LabeledDataset::one_hot() const {
    const int n = n_nodes();
    const int c = n_classes();
    DenseMatrix y = DenseMatrix::Zero(n, c);
    for (int i = 0; i < n; ++i) y(i, labels[static_cast<std::size_t>(i)] - 1) = 1.0;
    return y;
}

void LabeledDataset::validate() const {
    const auto n = static_cast<std::size_t>(n_nodes());
    if (labels.size() != n) throw InconsistentNodeCount("labels length != node count");
    if (features.size() > 0 && static_cast<std::size_t>(features.rows()) != n)
        throw InconsistentNodeCount("feature rows != node count");
    const int c = n_classes();
    if (c < 1) throw Error("labels must be in {1..C}");
    std::vector<int> counts(static_cast<std::size_t>(c), 0);
    for (int y : labels) {
        if (y < 1 || y > c) throw Error("label outside {1..C}");
        counts[static_cast<std::size_t>(y) - 1]++;
    }
    for (int k = 0; k < c; ++k)
        if (counts[static_cast<std::size_t>(k)] == 0) throw EmptyClass(k + 1);
    for (const Mask* m : {&train_mask, &val_mask, &test_mask})
        if (!m->empty() && m->size() != n) throw InconsistentNodeCount("mask length != node count");
    for (std::size_t i = 0; i < n; ++i) {
        int hits = 0;
        if (!train_mask.empty() && train_mask[i]) ++hits;
        if (!val_mask.empty() && val_mask[i]) ++hits;
        if (!test_mask.empty() && test_mask[i]) ++hits;
        if (hits > 1) throw Error("masks overlap at node " + std::to_string(i));
    }
    if (features.size() > 0 && !all_finite(features)) throw Error("non-finite feature entries");
}

void stratified_split(LabeledDataset& ds, std::uint64_t seed, double train_frac, double val_frac) {
    const auto n = static_cast<std::size_t>(ds.n_nodes());
    const int c = ds.n_classes();
    ds.train_mask.assign(n, 0);
    ds.val_mask.assign(n, 0);
    ds.test_mask.assign(n, 0);
    Rng rng(Rng::mix(seed, 0x5117));
    for (int k = 1; k <= c; ++k) {
        std::vector<int> nodes;
        for (std::size_t i = 0; i < n; ++i)
            if (ds.labels[i] == k) nodes.push_back(static_cast<int>(i));
        rng.shuffle(nodes);
        const auto nc = nodes.size();
        auto n_train = static_cast<std::size_t>(train_frac * static_cast<double>(nc));
        n_train = std::max<std::size_t>(n_train, 1);
        auto n_val = static_cast<std::size_t>(val_frac * static_cast<double>(nc));
        for (std::size_t idx = 0; idx < nc; ++idx) {
            const auto node = static_cast<std::size_t>(nodes[idx]);
            if (idx < n_train)
                ds.train_mask[node] = 1;
            else if (idx < n_train + n_val)
                ds.val_mask[node] = 1;
            else
                ds.test_mask[node] = 1;
        }
    }
}

int count_mask(const Mask& m) {
    int c = 0;
    for (auto b : m) c += b ? 1 : 0;
    return c;
}

}  // namespace sggnn
