#include "sggnn/homophily.hpp"

#include <cmath>

#include "sggnn/operators.hpp"

namespace sggnn {

namespace {

void check_labels(const Graph& g, const std::vector<int>& labels) {
    if (labels.size() != static_cast<std::size_t>(g.n_nodes()))
        throw InconsistentNodeCount("labels length != node count");
}

}  // namespace

double edge_homophily(const Graph& g, const std::vector<int>& labels) {
    check_labels(g, labels);
    if (g.n_edges() == 0) throw EmptyGraph();
    std::int64_t same = 0;
    for (const auto& [i, j] : g.edge_list())
        if (labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)]) ++same;
    return static_cast<double>(same) / static_cast<double>(g.n_edges());
}

std::vector<double> node_homophily(const Graph& g, const std::vector<int>& labels) {
    check_labels(g, labels);
    std::vector<double> h(static_cast<std::size_t>(g.n_nodes()));
    for (int i = 0; i < g.n_nodes(); ++i) {
        const auto nb = g.neighbors(i);
        if (nb.empty()) {
            h[static_cast<std::size_t>(i)] = 1.0;  // sentinel for |N(i)| = 0
            continue;
        }
        int same = 0;
        for (int j : nb)
            if (labels[static_cast<std::size_t>(j)] == labels[static_cast<std::size_t>(i)]) ++same;
        h[static_cast<std::size_t>(i)] = static_cast<double>(same) / static_cast<double>(nb.size());
    }
    return h;
}

double total_variation(const Graph& g, const DenseMatrix& signal) {
    if (signal.rows() != g.n_nodes()) throw ShapeMismatch("signal rows != node count");
    if (signal.cols() < 1) throw ShapeMismatch("signal needs at least one column");
    const DenseMatrix smooth = normalize_sym(g).apply(signal);
    return (signal - smooth).cwiseAbs().sum() / static_cast<double>(signal.cols());
}

std::pair<Graph, double> ideal_adjacency(const Graph& g, const std::vector<int>& labels) {
    check_labels(g, labels);
    std::vector<std::pair<int, int>> kept;
    std::int64_t false_pos = 0;
    for (const auto& [i, j] : g.edge_list()) {
        if (labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)])
            kept.emplace_back(i, j);
        else
            ++false_pos;
    }
    return {Graph::from_edges(g.n_nodes(), kept),
            std::sqrt(2.0 * static_cast<double>(false_pos))};
}

DenseMatrix ideal_features(const LabeledDataset& ds) {
    const int n = ds.n_nodes();
    const int c = ds.n_classes();
    const auto m = ds.features.cols();
    DenseMatrix class_mean = DenseMatrix::Zero(c, m);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(c), 0);
    for (int i = 0; i < n; ++i) {
        const int k = ds.labels[static_cast<std::size_t>(i)] - 1;
        class_mean.row(k) += ds.features.row(i);
        counts[static_cast<std::size_t>(k)]++;
    }
    for (int k = 0; k < c; ++k) {
        if (counts[static_cast<std::size_t>(k)] == 0) throw EmptyClass(k + 1);
        class_mean.row(k) /= static_cast<double>(counts[static_cast<std::size_t>(k)]);
    }
    DenseMatrix ideal(n, m);
    for (int i = 0; i < n; ++i)
        ideal.row(i) = class_mean.row(ds.labels[static_cast<std::size_t>(i)] - 1);
    return ideal;
}

double q_hat(const Graph& g, const std::vector<int>& labels) {
    check_labels(g, labels);
    int max_label = 0;
    for (int y : labels) max_label = std::max(max_label, y);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(max_label) + 1, 0);
    for (int y : labels) counts[static_cast<std::size_t>(y)]++;
    const auto n = static_cast<std::int64_t>(g.n_nodes());
    std::int64_t same_pairs = 0;
    for (std::int64_t c : counts) same_pairs += c * (c - 1) / 2;
    const std::int64_t cross_pairs = n * (n - 1) / 2 - same_pairs;
    if (cross_pairs == 0) throw SingleClass();
    std::int64_t cross_edges = 0;
    for (const auto& [i, j] : g.edge_list())
        if (labels[static_cast<std::size_t>(i)] != labels[static_cast<std::size_t>(j)])
            ++cross_edges;
    return static_cast<double>(cross_edges) / static_cast<double>(cross_pairs);
}

std::array<std::int64_t, 10> node_homophily_histogram(const Graph& g,
                                                      const std::vector<int>& labels) {
    const auto h = node_homophily(g, labels);
    std::array<std::int64_t, 10> bins{};
    for (int i = 0; i < g.n_nodes(); ++i) {
        if (g.degree(i) == 0) continue;
        auto b = static_cast<int>(h[static_cast<std::size_t>(i)] * 10.0);
        if (b > 9) b = 9;  // right-closed last bin
        bins[static_cast<std::size_t>(b)]++;
    }
    return bins;
}

HomophilyReport homophily_report(const Graph& g, const std::vector<int>& labels,
                                 const DenseMatrix& signal) {
    HomophilyReport r;
    r.edge_homophily = edge_homophily(g, labels);
    r.node_homophily = node_homophily(g, labels);
    r.tv = total_variation(g, signal);
    r.fp_norm = ideal_adjacency(g, labels).second / static_cast<double>(g.n_nodes());
    r.q_hat = q_hat(g, labels);
    r.histogram = node_homophily_histogram(g, labels);
    return r;
}

}  // namespace sggnn
