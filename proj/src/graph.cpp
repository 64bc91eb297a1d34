#include "sggnn/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sggnn {

Graph Graph::from_edges(int n_nodes, const std::vector<std::pair<int, int>>& edges) {
    if (n_nodes < 0) throw Error("negative node count");
    std::vector<std::pair<int, int>> sym;
    sym.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n_nodes || b >= n_nodes)
            throw Error("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") outside node range [0, " + std::to_string(n_nodes) + ")");
        if (a == b) continue;
        sym.emplace_back(a, b);
        sym.emplace_back(b, a);
    }
    std::sort(sym.begin(), sym.end());
    sym.erase(std::unique(sym.begin(), sym.end()), sym.end());

    Graph g;
    g.n_ = n_nodes;
    g.offsets_.assign(static_cast<std::size_t>(n_nodes) + 1, 0);
    g.neighbors_.reserve(sym.size());
    for (const auto& [a, b] : sym) {
        g.offsets_[static_cast<std::size_t>(a) + 1]++;
        g.neighbors_.push_back(b);
    }
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
    return g;
}

bool Graph::has_edge(int i, int j) const {
    auto nb = neighbors(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n_edges()));
    for (int i = 0; i < n_; ++i)
        for (int j : neighbors(i))
            if (i < j) out.emplace_back(i, j);
    return out;
}

DenseMatrix Graph::dense_adjacency() const {
    DenseMatrix a = DenseMatrix::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j : neighbors(i)) a(i, j) = 1.0;
    return a;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw Error("permutation size mismatch");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n_edges()));
    for (const auto& [i, j] : edge_list())
        edges.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    return from_edges(n_, edges);
}

Graph load_edge_list(const std::string& path, int n_nodes) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::vector<std::pair<int, int>> edges;
    std::string line;
    std::size_t lineno = 0;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        long long a, b;
        if (!(ss >> a)) continue;  // blank line
        if (!(ss >> b)) throw ParseError(path, lineno, "expected two node ids");
        long long extra;
        if (ss >> extra) throw ParseError(path, lineno, "expected exactly two node ids");
        if (a < 0 || b < 0) throw ParseError(path, lineno, "negative node id");
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        max_id = std::max(max_id, static_cast<int>(std::max(a, b)));
    }
    const int n = n_nodes >= 0 ? n_nodes : max_id + 1;
    if (max_id >= n)
        throw InconsistentNodeCount(path + ": node id " + std::to_string(max_id) +
                                    " outside expected count " + std::to_string(n));
    return Graph::from_edges(n, edges);
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    for (const auto& [i, j] : g.edge_list()) out << i << " " << j << "\n";
}

}  // namespace sggnn
