#include "sggnn/spectral.hpp"

#include <Eigen/Eigenvalues>

#include "sggnn/operators.hpp"

namespace sggnn {

SpectralDecomposition laplacian_eig(const Graph& g, int cap) {
    const int n = g.n_nodes();
    if (n > cap) throw CapExceeded(static_cast<std::size_t>(n), static_cast<std::size_t>(cap));

    DenseMatrix lap = DenseMatrix::Identity(n, n) - normalize_sym(g).to_dense();
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(lap);
    if (solver.info() != Eigen::Success) throw ConvergenceFailure("symmetric eigensolver failed");

    SpectralDecomposition dec{solver.eigenvalues(), solver.eigenvectors()};

    const double resid =
        (lap - dec.eigenvectors * dec.eigenvalues.asDiagonal() * dec.eigenvectors.transpose())
            .norm();
    if (resid > 1e-8 * std::max(lap.norm(), 1e-30))
        throw ConvergenceFailure("eigendecomposition residual too large");
    if (dec.eigenvalues.minCoeff() < -1e-9 || dec.eigenvalues.maxCoeff() > 1.5 + 1e-9)
        throw ConvergenceFailure("Laplacian eigenvalue outside [0, 1.5]");
    return dec;
}

}  // namespace sggnn
