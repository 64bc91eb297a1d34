#pragma once

#include <vector>

#include "sggnn/graph.hpp"
#include "sggnn/matrix.hpp"
#include "sggnn/rng.hpp"

namespace sggnn {

using Mask = std::vector<std::uint8_t>;

// Node-classification dataset: graph + features (N x M) + labels in {1..C}
// + disjoint train/val/test masks.
struct LabeledDataset {
    Graph graph;
    DenseMatrix features;
    std::vector<int> labels;  // 1-based, every class 1..C present
    Mask train_mask, val_mask, test_mask;

    int n_nodes() const { return graph.n_nodes(); }
    int n_classes() const;

    // One-hot N x C matrix Y.
    DenseMatrix one_hot() const;

    void validate() const;  // throws on any invariant violation
};

// Per-class 60/20/20 split (at least one train node per class). Masks
// partition all nodes.
void stratified_split(LabeledDataset& ds, std::uint64_t seed, double train_frac = 0.6,
                      double val_frac = 0.2);

int count_mask(const Mask& m);

}  // namespace sggnn
