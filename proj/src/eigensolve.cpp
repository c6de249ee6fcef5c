#include "distillab/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "distillab/errors.hpp"

namespace distillab {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTol = 1e-12;  // relative to the input Frobenius norm
constexpr double kSymmetryTol = 1e-8;

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) s += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(s);
}

}  // namespace

Matrix EigenDecomposition::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    Matrix scaled = eigenvectors;  // columns scaled by eigenvalues
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            scaled(i, j) *= eigenvalues[j];
        }
    }
    return matmul(scaled, transpose(eigenvectors));
}

EigenDecomposition symmetric_eigen(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw ShapeError("symmetric_eigen: matrix must be square, got " + m.shape_str());
    }
    const std::size_t n = m.rows();

    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            asym = std::max(asym, std::fabs(m(i, j) - m(j, i)));
        }
    }
    if (asym > kSymmetryTol) {
        throw DomainError("symmetric_eigen: asymmetry " + std::to_string(asym) +
                          " exceeds tolerance 1e-8");
    }

    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (m(i, j) + m(j, i));
        }
    }
    Matrix v = Matrix::identity(n);

    const double scale = std::max(1.0, frobenius_norm(a));
    const double threshold = kOffDiagTol * scale;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    const double residual = off_diagonal_norm(a);
    if (residual > threshold) {
        throw ConvergenceError("symmetric_eigen: off-diagonal residual " +
                               std::to_string(residual) + " after " +
                               std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.eigenvalues[j] = a(src, src);
        // Canonical sign: largest-magnitude component positive.
        std::size_t pivot = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::fabs(v(i, src)) > std::fabs(v(pivot, src))) pivot = i;
        }
        const double flip = v(pivot, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, j) = flip * v(i, src);
        }
    }
    return out;
}

}  // namespace distillab
