#pragma once

#include "sggnn/graph.hpp"
#include "sggnn/matrix.hpp"

namespace sggnn {

// Sparse normalized operator over the pattern of A + I, CSR with sorted
// columns. apply() accumulates in ascending column order so results are
// bit-reproducible.
class SparseOperator {
public:
    SparseOperator(int n, std::vector<std::size_t> offsets, std::vector<int> cols,
                   std::vector<double> vals)
        : n_(n), offsets_(std::move(offsets)), cols_(std::move(cols)), vals_(std::move(vals)) {}

    int n() const { return n_; }

    // Op * H for any N x k matrix.
    DenseMatrix apply(const DenseMatrix& h) const;
    Vector apply(const Vector& x) const;

    DenseMatrix to_dense() const;

    // Row-accumulation with the operator transposed (columns scatter).
    // Needed for gradients through row-normalized operators.
    DenseMatrix apply_transposed(const DenseMatrix& h) const;

private:
    int n_;
    std::vector<std::size_t> offsets_;
    std::vector<int> cols_;
    std::vector<double> vals_;
};

// A_hat = D^{-1/2} (A + I) D^{-1/2} with D = diag((A + I) 1). Symmetric.
SparseOperator normalize_sym(const Graph& g);

// A_hat_rw = D^{-1} (A + I). Every row sums to 1.
SparseOperator normalize_rw(const Graph& g);

}  // namespace sggnn
