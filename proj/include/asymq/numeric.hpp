/**
 * @file numeric.hpp
 * @brief Dense complex matrix kernels: Hermitian eigendecomposition,
 *        Kronecker products, partial traces and matrix exponentials of
 *        Hermitian generators.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace asymq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Absolute tolerance on max entry deviation for Hermiticity checks.
inline constexpr double kHermitianTol = 1e-10;

struct NonHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonConvergentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParamOutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Eigenvalues ascending, eigenvectors as orthonormal columns.
struct SpectralDecomposition {
    RealVector eigenvalues;
    Matrix eigenvectors;
};

inline double max_abs(const Matrix& a) {
    return a.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Matrix& a, double tol = kHermitianTol) {
    if (a.rows() != a.cols()) return false;
    return max_abs(a - a.adjoint()) < tol;
}

/**
 * Diagonalize a Hermitian matrix. The input is symmetrized to
 * (A + A†)/2 before decomposition; eigenvalues come out ascending.
 */
inline SpectralDecomposition hermitian_eigendecomposition(const Matrix& a) {
    if (a.rows() != a.cols())
        throw NonHermitianError("hermitian_eigendecomposition: matrix not square");
    if (!is_hermitian(a))
        throw NonHermitianError("hermitian_eigendecomposition: matrix not Hermitian within 1e-10");
    Matrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw NonConvergentError("hermitian_eigendecomposition: iteration failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Kronecker product, row-major qubit convention (first factor is most significant).
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b, const Matrix& c) {
    return kron(kron(a, b), c);
}

/**
 * Trace out all subsystems not listed in `keep`.
 *
 * @param a              square matrix on the full tensor-product space
 * @param subsystem_dims dimensions of the factors, most significant first
 * @param keep           indices (into subsystem_dims) of the factors to retain
 */
inline Matrix partial_trace(const Matrix& a,
                            const std::vector<Eigen::Index>& subsystem_dims,
                            const std::vector<std::size_t>& keep) {
    if (a.rows() != a.cols())
        throw DimensionMismatchError("partial_trace: matrix not square");
    Eigen::Index full_dim = 1;
    for (Eigen::Index d : subsystem_dims) {
        if (d <= 0) throw DimensionMismatchError("partial_trace: nonpositive subsystem dim");
        full_dim *= d;
    }
    if (full_dim != a.rows())
        throw DimensionMismatchError("partial_trace: subsystem dims do not factor the matrix");

    const std::size_t n = subsystem_dims.size();
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n) throw DimensionMismatchError("partial_trace: keep index out of range");
        kept[k] = true;
    }

    // Strides for the mixed-radix index, most significant subsystem first.
    std::vector<Eigen::Index> stride(n, 1);
    for (std::size_t s = n; s-- > 1;) stride[s - 1] = stride[s] * subsystem_dims[s];

    Eigen::Index keep_dim = 1, trace_dim = 1;
    std::vector<std::size_t> keep_idx, trace_idx;
    for (std::size_t s = 0; s < n; ++s) {
        if (kept[s]) {
            keep_dim *= subsystem_dims[s];
            keep_idx.push_back(s);
        } else {
            trace_dim *= subsystem_dims[s];
            trace_idx.push_back(s);
        }
    }

    auto full_index = [&](Eigen::Index kpart, Eigen::Index tpart) {
        Eigen::Index idx = 0;
        for (std::size_t s = keep_idx.size(); s-- > 0;) {
            std::size_t sub = keep_idx[s];
            idx += (kpart % subsystem_dims[sub]) * stride[sub];
            kpart /= subsystem_dims[sub];
        }
        for (std::size_t s = trace_idx.size(); s-- > 0;) {
            std::size_t sub = trace_idx[s];
            idx += (tpart % subsystem_dims[sub]) * stride[sub];
            tpart /= subsystem_dims[sub];
        }
        return idx;
    };

    Matrix out = Matrix::Zero(keep_dim, keep_dim);
    for (Eigen::Index r = 0; r < keep_dim; ++r)
        for (Eigen::Index c = 0; c < keep_dim; ++c)
            for (Eigen::Index t = 0; t < trace_dim; ++t)
                out(r, c) += a(full_index(r, t), full_index(c, t));
    return out;
}

/// e^{-iHθ} assembled from the spectral decomposition of H.
inline Matrix unitary_from_spectrum(const SpectralDecomposition& spec, double theta) {
    const Eigen::Index d = spec.eigenvalues.size();
    Vector phases(d);
    for (Eigen::Index k = 0; k < d; ++k)
        phases(k) = std::exp(Complex(0.0, -spec.eigenvalues(k) * theta));
    return spec.eigenvectors * phases.asDiagonal() * spec.eigenvectors.adjoint();
}

inline Matrix unitary_from_hermitian(const Matrix& h, double theta) {
    return unitary_from_spectrum(hermitian_eigendecomposition(h), theta);
}

}  // namespace asymq
