#pragma once

#include <string>
#include <vector>

#include "sggnn/attributes.hpp"
#include "sggnn/graph.hpp"
#include "sggnn/matrix.hpp"

namespace sggnn {

inline constexpr std::size_t kDefaultDistanceCap = 20000;

// Symmetric N x N matrix of squared Euclidean distances, zero diagonal.
struct DistanceMatrix {
    DenseMatrix values;
    int n() const { return static_cast<int>(values.rows()); }
};

// B_ij = || f_i - f_j ||_2^2 over attribute rows. O(N^2 F).
DistanceMatrix distance_matrix(const AttributeMatrix& attrs,
                               std::size_t cap = kDefaultDistanceCap);
DistanceMatrix distance_matrix(const DenseMatrix& rows, std::size_t cap = kDefaultDistanceCap);

// D_k(i) = k nearest nodes by distance (ties to the lowest id, self
// excluded); undirected edge (i, j) iff i in D_k(j) or j in D_k(i).
Graph knn_graph(const DistanceMatrix& b, int k);

// Edge (i, j) iff B_ij < eps, i != j.
Graph ball_graph(const DistanceMatrix& b, double eps);

// q-th quantile (linear interpolation) of the off-diagonal distances.
double eps_from_quantile(const DistanceMatrix& b, double q);

// Ordered set of graphs over one node set.
struct GraphBundle {
    std::vector<Graph> graphs;
    std::vector<std::string> names;

    int size() const { return static_cast<int>(graphs.size()); }
    int n_nodes() const { return graphs.empty() ? 0 : graphs.front().n_nodes(); }
    void add(Graph g, std::string name);
};

}  // namespace sggnn
