#include "sggnn/attributes.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>

namespace sggnn {

namespace {

// Single-source BFS distances; -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.n_nodes()), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

// Largest adjacency eigenvalue via power iteration on A + I (shift keeps the
// iteration convergent on bipartite graphs); lambda_max(A) = mu - 1.
double adjacency_spectral_radius(const Graph& g, double tol, int max_iters) {
    const int n = g.n_nodes();
    Vector x = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double mu = 1.0;
    for (int it = 0; it < max_iters; ++it) {
        Vector y = x;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j : g.neighbors(i)) acc += x[j];
            y[i] += acc;
        }
        const double norm = y.norm();
        if (norm == 0.0) return 0.0;
        y /= norm;
        const double mu_new = norm;
        if (std::abs(mu_new - mu) <= tol * std::max(1.0, mu_new) && it > 0) return mu_new - 1.0;
        mu = mu_new;
        x = y;
    }
    throw ConvergenceFailure("spectral radius power iteration did not converge");
}

}  // namespace

std::vector<int> eccentricities(const Graph& g) {
    std::vector<int> ecc(static_cast<std::size_t>(g.n_nodes()), 0);
    for (int i = 0; i < g.n_nodes(); ++i) {
        const auto dist = bfs_distances(g, i);
        int e = 0;
        for (int d : dist) e = std::max(e, d);  // unreachable are -1, ignored
        ecc[static_cast<std::size_t>(i)] = e;
    }
    return ecc;
}

Vector pagerank(const Graph& g, double damping, double tol, int max_iters) {
    const int n = g.n_nodes();
    Vector pr = Vector::Constant(n, 1.0 / n);
    Vector next(n);
    for (int it = 0; it < max_iters; ++it) {
        double dangling = 0.0;
        for (int i = 0; i < n; ++i)
            if (g.degree(i) == 0) dangling += pr[i];
        const double base = (1.0 - damping) / n + damping * dangling / n;
        next.setConstant(base);
        for (int u = 0; u < n; ++u) {
            if (g.degree(u) == 0) continue;
            const double share = damping * pr[u] / g.degree(u);
            for (int v : g.neighbors(u)) next[v] += share;
        }
        const double delta = (next - pr).lpNorm<1>();
        pr.swap(next);
        if (delta <= tol) return pr;
    }
    throw ConvergenceFailure("pagerank did not converge");
}

Vector eigenvector_centrality(const Graph& g, double tol, int max_iters) {
    const int n = g.n_nodes();
    Vector x = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int it = 0; it < max_iters; ++it) {
        Vector y = x;  // iterate on A + I so bipartite components cannot cycle
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j : g.neighbors(i)) acc += x[j];
            y[i] += acc;
        }
        y /= y.norm();
        if ((y - x).norm() <= tol) return y;
        x = y;
    }
    throw ConvergenceFailure("eigenvector centrality did not converge");
}

Vector betweenness_centrality(const Graph& g) {
    // Brandes (2001), unweighted. Dependencies accumulated per source; the
    // final halving converts ordered (s, t) pairs to unordered.
    const int n = g.n_nodes();
    Vector bc = Vector::Zero(n);
    std::vector<int> stack_order;
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<double> delta(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        stack_order.clear();
        for (int i = 0; i < n; ++i) {
            preds[static_cast<std::size_t>(i)].clear();
            sigma[static_cast<std::size_t>(i)] = 0.0;
            dist[static_cast<std::size_t>(i)] = -1;
        }
        sigma[static_cast<std::size_t>(s)] = 1.0;
        dist[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            stack_order.push_back(u);
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
                if (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(u)] + 1) {
                    sigma[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(u)];
                    preds[static_cast<std::size_t>(v)].push_back(u);
                }
            }
        }
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = stack_order.rbegin(); it != stack_order.rend(); ++it) {
            const int w = *it;
            for (int u : preds[static_cast<std::size_t>(w)]) {
                delta[static_cast<std::size_t>(u)] +=
                    sigma[static_cast<std::size_t>(u)] / sigma[static_cast<std::size_t>(w)] *
                    (1.0 + delta[static_cast<std::size_t>(w)]);
            }
            if (w != s) bc[w] += delta[static_cast<std::size_t>(w)];
        }
    }
    return bc / 2.0;
}

Vector closeness_centrality(const Graph& g) {
    const int n = g.n_nodes();
    Vector cc = Vector::Zero(n);
    for (int i = 0; i < n; ++i) {
        const auto dist = bfs_distances(g, i);
        std::int64_t total = 0;
        int reachable = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i || dist[static_cast<std::size_t>(j)] < 0) continue;
            total += dist[static_cast<std::size_t>(j)];
            ++reachable;
        }
        cc[i] = reachable > 0 ? static_cast<double>(reachable) / static_cast<double>(total) : 0.0;
    }
    return cc;
}

Vector katz_centrality(const Graph& g, double tol, int max_iters) {
    const int n = g.n_nodes();
    const double lambda_max = adjacency_spectral_radius(g, tol, max_iters);
    const double atten = lambda_max > 1e-12 ? 0.9 / lambda_max : 0.0;
    Vector x = Vector::Ones(n);  // fixed point of x = atten * A x + 1
    for (int it = 0; it < max_iters; ++it) {
        Vector y = Vector::Ones(n);
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j : g.neighbors(i)) acc += x[j];
            y[i] += atten * acc;
        }
        if ((y - x).lpNorm<Eigen::Infinity>() <= tol) return y;
        x = y;
    }
    throw ConvergenceFailure("katz centrality did not converge");
}

std::vector<int> core_numbers(const Graph& g) {
    // Batagelj-Zaversnik peeling with bucketed degrees.
    const int n = g.n_nodes();
    std::vector<int> deg(static_cast<std::size_t>(n));
    int max_deg = 0;
    for (int i = 0; i < n; ++i) {
        deg[static_cast<std::size_t>(i)] = g.degree(i);
        max_deg = std::max(max_deg, deg[static_cast<std::size_t>(i)]);
    }
    std::vector<int> bin(static_cast<std::size_t>(max_deg) + 2, 0);
    for (int d : deg) bin[static_cast<std::size_t>(d)]++;
    int start = 0;
    for (int d = 0; d <= max_deg; ++d) {
        const int count = bin[static_cast<std::size_t>(d)];
        bin[static_cast<std::size_t>(d)] = start;
        start += count;
    }
    std::vector<int> pos(static_cast<std::size_t>(n)), order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pos[static_cast<std::size_t>(i)] = bin[static_cast<std::size_t>(deg[static_cast<std::size_t>(i)])]++;
        order[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = i;
    }
    for (int d = max_deg; d > 0; --d) bin[static_cast<std::size_t>(d)] = bin[static_cast<std::size_t>(d) - 1];
    bin[0] = 0;

    std::vector<int> core = deg;
    for (int idx = 0; idx < n; ++idx) {
        const int u = order[static_cast<std::size_t>(idx)];
        for (int v : g.neighbors(u)) {
            if (core[static_cast<std::size_t>(v)] > core[static_cast<std::size_t>(u)]) {
                const int dv = core[static_cast<std::size_t>(v)];
                const int pv = pos[static_cast<std::size_t>(v)];
                const int pw = bin[static_cast<std::size_t>(dv)];
                const int w = order[static_cast<std::size_t>(pw)];
                if (v != w) {
                    std::swap(order[static_cast<std::size_t>(pv)], order[static_cast<std::size_t>(pw)]);
                    pos[static_cast<std::size_t>(v)] = pw;
                    pos[static_cast<std::size_t>(w)] = pv;
                }
                bin[static_cast<std::size_t>(dv)]++;
                core[static_cast<std::size_t>(v)]--;
            }
        }
    }
    return core;
}

std::vector<std::int64_t> triangle_participation(const Graph& g) {
    const int n = g.n_nodes();
    std::vector<std::int64_t> tri(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const auto nb = g.neighbors(i);
        std::int64_t closed = 0;
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (g.has_edge(nb[a], nb[b])) ++closed;
        tri[static_cast<std::size_t>(i)] = 2 * closed;  // [A^3]_ii counts both orientations
    }
    return tri;
}

AttributeMatrix global_attributes(const Graph& g) {
    const int n = g.n_nodes();
    AttributeMatrix out;
    out.names = {"eccentricity", "pagerank",  "eigenvector", "betweenness",
                 "closeness",    "katz",      "core_number"};
    out.values.resize(n, 7);
    const auto ecc = eccentricities(g);
    const Vector pr = pagerank(g);
    const Vector ev = eigenvector_centrality(g);
    const Vector bc = betweenness_centrality(g);
    const Vector cc = closeness_centrality(g);
    const Vector kz = katz_centrality(g);
    const auto core = core_numbers(g);
    for (int i = 0; i < n; ++i) {
        out.values(i, 0) = ecc[static_cast<std::size_t>(i)];
        out.values(i, 1) = pr[i];
        out.values(i, 2) = ev[i];
        out.values(i, 3) = bc[i];
        out.values(i, 4) = cc[i];
        out.values(i, 5) = kz[i];
        out.values(i, 6) = core[static_cast<std::size_t>(i)];
    }
    return out;
}

AttributeMatrix role_attributes(const Graph& g) {
    const int n = g.n_nodes();
    AttributeMatrix out;
    out.names = {"degree",          "egonet_edge_sum", "egonet_total_degree",
                 "egonet_internal", "egonet_external", "triangle_participation",
                 "scaled_clustering"};
    out.values.resize(n, 7);
    const auto tri = triangle_participation(g);
    for (int i = 0; i < n; ++i) {
        const auto nb = g.neighbors(i);
        const auto deg = static_cast<double>(nb.size());

        // Egonet = induced subgraph on {i} U N(i). Internal edges: those
        // among neighbors (triangles through i) plus the spokes to i.
        const std::int64_t neighbor_pairs = tri[static_cast<std::size_t>(i)] / 2;
        const std::int64_t internal_edges = neighbor_pairs + static_cast<std::int64_t>(nb.size());
        const auto edge_sum = static_cast<double>(2 * internal_edges);
        double total_degree = deg;
        for (int j : nb) total_degree += g.degree(j);
        const double internal = total_degree > 0.0 ? edge_sum / total_degree : 0.0;
        const double external = total_degree > 0.0 ? 1.0 - internal : 0.0;

        const double clustering =
            nb.size() >= 2 ? static_cast<double>(neighbor_pairs) /
                                 (deg * (deg - 1.0) / 2.0)
                           : 0.0;

        out.values(i, 0) = deg;
        out.values(i, 1) = edge_sum;
        out.values(i, 2) = total_degree;
        out.values(i, 3) = internal;
        out.values(i, 4) = external;
        out.values(i, 5) = static_cast<double>(tri[static_cast<std::size_t>(i)]);
        out.values(i, 6) = 2.0 * clustering;
    }
    return out;
}

AttributeMatrix combined_attributes(const Graph& g) {
    const AttributeMatrix glob = global_attributes(g);
    const AttributeMatrix role = role_attributes(g);
    AttributeMatrix out;
    out.values.resize(g.n_nodes(), glob.values.cols() + role.values.cols());
    out.values << glob.values, role.values;
    out.names = glob.names;
    out.names.insert(out.names.end(), role.names.begin(), role.names.end());
    return out;
}

AttributeMatrix standardize(const AttributeMatrix& attrs) {
    AttributeMatrix out = attrs;
    const auto n = static_cast<double>(attrs.values.rows());
    for (Eigen::Index c = 0; c < attrs.values.cols(); ++c) {
        const double mean = attrs.values.col(c).mean();
        const double var = (attrs.values.col(c).array() - mean).square().sum() / n;
        if (var <= 1e-24) {
            out.values.col(c).setZero();
        } else {
            out.values.col(c) = (attrs.values.col(c).array() - mean) / std::sqrt(var);
        }
    }
    out.standardized = true;
    return out;
}

}  // namespace sggnn
