#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sggnn/dataset.hpp"
#include "sggnn/graph.hpp"

namespace sggnn {

// Fraction of unordered edges joining same-class endpoints. Throws EmptyGraph.
double edge_homophily(const Graph& g, const std::vector<int>& labels);

// Per-node fraction of same-class neighbors. Isolated nodes get the 1.0
// sentinel (excluded from histograms).
std::vector<double> node_homophily(const Graph& g, const std::vector<int>& labels);

// (1/M) * || S - A_hat S ||_1 with A_hat from normalize_sym.
double total_variation(const Graph& g, const DenseMatrix& signal);

// A* keeps only same-label edges; second member is ||A - A*||_F
// = sqrt(2 * #false-positive edges).
std::pair<Graph, double> ideal_adjacency(const Graph& g, const std::vector<int>& labels);

// Row i of X* is the mean feature vector of node i's class.
DenseMatrix ideal_features(const LabeledDataset& ds);

// (#unordered cross-label edges) / (#unordered cross-label node pairs).
// Throws SingleClass when the denominator vanishes.
double q_hat(const Graph& g, const std::vector<int>& labels);

// 10 equal bins on [0, 1] (last bin right-closed); isolated nodes excluded.
std::array<std::int64_t, 10> node_homophily_histogram(const Graph& g,
                                                      const std::vector<int>& labels);

struct HomophilyReport {
    double edge_homophily = 0.0;
    std::vector<double> node_homophily;
    double tv = 0.0;
    double fp_norm = 0.0;  // ||Delta||_F / N
    double q_hat = 0.0;
    std::array<std::int64_t, 10> histogram{};
};

// All label-vs-graph diagnostics in one pass; `signal` is typically the
// one-hot label matrix Y.
HomophilyReport homophily_report(const Graph& g, const std::vector<int>& labels,
                                 const DenseMatrix& signal);

}  // namespace sggnn
