#include "sggnn/discovery.hpp"

#include <algorithm>
#include <numeric>

namespace sggnn {

DistanceMatrix distance_matrix(const DenseMatrix& rows, std::size_t cap) {
    const auto n = rows.rows();
    if (static_cast<std::size_t>(n) > cap) throw CapExceeded(static_cast<std::size_t>(n), cap);
    DistanceMatrix b;
    b.values = DenseMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d = (rows.row(i) - rows.row(j)).squaredNorm();
            b.values(i, j) = d;
            b.values(j, i) = d;
        }
    }
    return b;
}

DistanceMatrix distance_matrix(const AttributeMatrix& attrs, std::size_t cap) {
    return distance_matrix(attrs.values, cap);
}

Graph knn_graph(const DistanceMatrix& b, int k) {
    const int n = b.n();
    if (k < 1 || k > n - 1) throw InvalidK(k, n);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> order(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n; ++i) {
        order.clear();
        for (int j = 0; j < n; ++j)
            if (j != i) order.push_back(j);
        std::partial_sort(order.begin(), order.begin() + k, order.end(),
                          [&](int a, int c) {
                              const double da = b.values(i, a), dc = b.values(i, c);
                              return da < dc || (da == dc && a < c);
                          });
        for (int t = 0; t < k; ++t) edges.emplace_back(i, order[static_cast<std::size_t>(t)]);
    }
    return Graph::from_edges(n, edges);
}

Graph ball_graph(const DistanceMatrix& b, double eps) {
    if (!(eps > 0.0)) throw Error("eps must be positive");
    const int n = b.n();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (b.values(i, j) < eps) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

double eps_from_quantile(const DistanceMatrix& b, double q) {
    if (!(q > 0.0) || !(q < 1.0)) throw InvalidQuantile(q);
    const int n = b.n();
    std::vector<double> dists;
    dists.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) dists.push_back(b.values(i, j));
    if (dists.empty()) throw Error("quantile of an empty distance set");
    std::sort(dists.begin(), dists.end());
    const double pos = q * static_cast<double>(dists.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= dists.size()) return dists.back();
    return dists[lo] + frac * (dists[lo + 1] - dists[lo]);
}

void GraphBundle::add(Graph g, std::string name) {
    if (!graphs.empty() && g.n_nodes() != n_nodes())
        throw InconsistentNodeCount("bundle graphs must share the node count");
    graphs.push_back(std::move(g));
    names.push_back(std::move(name));
}

}  // namespace sggnn
