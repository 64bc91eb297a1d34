#include "sggnn/operators.hpp"

#include <cmath>

namespace sggnn {

DenseMatrix SparseOperator::apply(const DenseMatrix& h) const {
    if (h.rows() != n_) throw ShapeMismatch("operator expects " + std::to_string(n_) + " rows");
    DenseMatrix out = DenseMatrix::Zero(h.rows(), h.cols());
    for (int i = 0; i < n_; ++i) {
        auto row = out.row(i);
        for (std::size_t p = offsets_[static_cast<std::size_t>(i)];
             p < offsets_[static_cast<std::size_t>(i) + 1]; ++p) {
            row += vals_[p] * h.row(cols_[p]);
        }
    }
    return out;
}

Vector SparseOperator::apply(const Vector& x) const {
    if (x.size() != n_) throw ShapeMismatch("operator expects " + std::to_string(n_) + " rows");
    Vector out = Vector::Zero(n_);
    for (int i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (std::size_t p = offsets_[static_cast<std::size_t>(i)];
             p < offsets_[static_cast<std::size_t>(i) + 1]; ++p) {
            acc += vals_[p] * x[cols_[p]];
        }
        out[i] = acc;
    }
    return out;
}

DenseMatrix SparseOperator::apply_transposed(const DenseMatrix& h) const {
    if (h.rows() != n_) throw ShapeMismatch("operator expects " + std::to_string(n_) + " rows");
    DenseMatrix out = DenseMatrix::Zero(h.rows(), h.cols());
    for (int i = 0; i < n_; ++i) {
        for (std::size_t p = offsets_[static_cast<std::size_t>(i)];
             p < offsets_[static_cast<std::size_t>(i) + 1]; ++p) {
            out.row(cols_[p]) += vals_[p] * h.row(i);
        }
    }
    return out;
}

DenseMatrix SparseOperator::to_dense() const {
    DenseMatrix m = DenseMatrix::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (std::size_t p = offsets_[static_cast<std::size_t>(i)];
             p < offsets_[static_cast<std::size_t>(i) + 1]; ++p)
            m(i, cols_[p]) = vals_[p];
    return m;
}

namespace {

// Shared CSR pattern of A + I with per-entry values from f(d_i, d_j).
template <typename F>
SparseOperator build_normalized(const Graph& g, F value) {
    const int n = g.n_nodes();
    std::vector<double> deg_hat(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) deg_hat[static_cast<std::size_t>(i)] = g.degree(i) + 1.0;

    std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> cols;
    std::vector<double> vals;
    cols.reserve(static_cast<std::size_t>(g.n_edges()) * 2 + static_cast<std::size_t>(n));
    vals.reserve(cols.capacity());
    for (int i = 0; i < n; ++i) {
        bool placed_diag = false;
        for (int j : g.neighbors(i)) {
            if (!placed_diag && j > i) {
                cols.push_back(i);
                vals.push_back(value(deg_hat[static_cast<std::size_t>(i)],
                                     deg_hat[static_cast<std::size_t>(i)]));
                placed_diag = true;
            }
            cols.push_back(j);
            vals.push_back(value(deg_hat[static_cast<std::size_t>(i)],
                                 deg_hat[static_cast<std::size_t>(j)]));
        }
        if (!placed_diag) {
            cols.push_back(i);
            vals.push_back(value(deg_hat[static_cast<std::size_t>(i)],
                                 deg_hat[static_cast<std::size_t>(i)]));
        }
        offsets[static_cast<std::size_t>(i) + 1] = cols.size();
    }
    return SparseOperator(n, std::move(offsets), std::move(cols), std::move(vals));
}

}  // namespace

SparseOperator normalize_sym(const Graph& g) {
    return build_normalized(g, [](double di, double dj) { return 1.0 / std::sqrt(di * dj); });
}

SparseOperator normalize_rw(const Graph& g) {
    return build_normalized(g, [](double di, double) { return 1.0 / di; });
}

}  // namespace sggnn
