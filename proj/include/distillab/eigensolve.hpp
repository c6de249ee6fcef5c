#pragma once

#include <vector>

#include "distillab/matrix.hpp"

namespace distillab {

/// Spectral decomposition of a symmetric matrix. Eigenvalues are sorted
/// descending; eigenvectors are the matching unit-norm columns.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;

    /// V diag(lambda) V^T.
    Matrix reconstruct() const;
};

/// Cyclic Jacobi eigensolver for symmetric matrices. The input must be
/// square and symmetric within 1e-8; it is symmetrized as (M + M^T)/2
/// before iterating. Throws ShapeError for non-square input and
/// ConvergenceError (reporting the residual) if the off-diagonal mass has
/// not vanished after the sweep cap.
EigenDecomposition symmetric_eigen(const Matrix& m);

}  // namespace distillab
