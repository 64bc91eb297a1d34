#pragma once

#include "sggnn/graph.hpp"
#include "sggnn/matrix.hpp"

namespace sggnn {

inline constexpr int kDefaultEigCap = 2000;

// Eigendecomposition of the symmetric Laplacian L_hat = I - A_hat.
// Eigenvalues ascending, eigenvectors orthonormal (columns).
struct SpectralDecomposition {
    Vector eigenvalues;
    DenseMatrix eigenvectors;

    // Graph Fourier transform: x_tilde = V^T x.
    Vector fourier(const Vector& x) const { return eigenvectors.transpose() * x; }
};

// Dense symmetric solve; throws CapExceeded when n_nodes > cap. Validates the
// reconstruction residual and the [0, 1.5] eigenvalue range (1e-9 slack).
SpectralDecomposition laplacian_eig(const Graph& g, int cap = kDefaultEigCap);

}  // namespace sggnn
