#pragma once

#include <string>
#include <vector>

#include "sggnn/graph.hpp"
#include "sggnn/matrix.hpp"

namespace sggnn {

struct AttributeMatrix {
    DenseMatrix values;  // N x F
    std::vector<std::string> names;
    bool standardized = false;
};

// Global attributes (F = 7): eccentricity, pagerank, eigenvector,
// betweenness, closeness, katz, core_number.
AttributeMatrix global_attributes(const Graph& g);

// Role attributes (F = 7): degree, egonet_edge_sum, egonet_total_degree,
// egonet_internal, egonet_external, triangle_participation,
// scaled_clustering.
AttributeMatrix role_attributes(const Graph& g);

// Column-stacked [global | role].
AttributeMatrix combined_attributes(const Graph& g);

// Per-column z-score (population variance); constant columns map to zero.
AttributeMatrix standardize(const AttributeMatrix& attrs);

// Individual kernels, exposed for direct use and testing.
std::vector<int> eccentricities(const Graph& g);     // 0 for isolated nodes
Vector pagerank(const Graph& g, double damping = 0.85, double tol = 1e-10,
                int max_iters = 10000);
Vector eigenvector_centrality(const Graph& g, double tol = 1e-10, int max_iters = 10000);
Vector betweenness_centrality(const Graph& g);       // exact, unordered pairs
Vector closeness_centrality(const Graph& g);         // inverse mean distance over reachable
Vector katz_centrality(const Graph& g, double tol = 1e-10, int max_iters = 10000);
std::vector<int> core_numbers(const Graph& g);
std::vector<std::int64_t> triangle_participation(const Graph& g);  // diag of A^3

}  // namespace sggnn
