#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sggnn/errors.hpp"
#include "sggnn/matrix.hpp"

namespace sggnn {

// Undirected simple graph in CSR form. Neighbor lists are sorted ascending,
// edges are stored in both directions, and self-loops are never stored
// (normalization operators add them on the fly). Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Edges are unordered pairs; duplicates, reversed duplicates and
    // self-loops are dropped. Node ids must lie in [0, n).
    static Graph from_edges(int n_nodes, const std::vector<std::pair<int, int>>& edges);

    int n_nodes() const { return n_; }
    std::int64_t n_edges() const { return static_cast<std::int64_t>(neighbors_.size()) / 2; }

    std::span<const int> neighbors(int i) const {
        return {neighbors_.data() + offsets_[static_cast<std::size_t>(i)],
                neighbors_.data() + offsets_[static_cast<std::size_t>(i) + 1]};
    }
    int degree(int i) const {
        return static_cast<int>(offsets_[static_cast<std::size_t>(i) + 1] -
                                offsets_[static_cast<std::size_t>(i)]);
    }
    bool has_edge(int i, int j) const;

    // Unordered edge list, (i, j) with i < j, lexicographically sorted.
    std::vector<std::pair<int, int>> edge_list() const;

    DenseMatrix dense_adjacency() const;

    // Consistent relabeling: node i becomes perm[i].
    Graph permuted(const std::vector<int>& perm) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && offsets_ == other.offsets_ && neighbors_ == other.neighbors_;
    }

private:
    int n_ = 0;
    std::vector<std::size_t> offsets_ = {0};
    std::vector<int> neighbors_;
};

// One `src dst` pair per whitespace-separated line; '#' starts a comment.
// Duplicates and reversed duplicates are deduplicated, self-loops dropped.
// If n_nodes < 0 the node count is max id + 1.
Graph load_edge_list(const std::string& path, int n_nodes = -1);
void save_edge_list(const Graph& g, const std::string& path);

}  // namespace sggnn
