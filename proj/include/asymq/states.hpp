/**
 * @file states.hpp
 * @brief Density matrices, Hermitian observables, collective spin
 *        Hamiltonians and the GHZ-diagonal three-qubit family.
 */
#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <vector>

#include "asymq/numeric.hpp"

namespace asymq {

inline const Matrix& pauli_x() {
    static const Matrix m = [] {
        Matrix p(2, 2);
        p << 0, 1, 1, 0;
        return p;
    }();
    return m;
}

inline const Matrix& pauli_y() {
    static const Matrix m = [] {
        Matrix p(2, 2);
        p << 0, Complex(0, -1), Complex(0, 1), 0;
        return p;
    }();
    return m;
}

inline const Matrix& pauli_z() {
    static const Matrix m = [] {
        Matrix p(2, 2);
        p << 1, 0, 0, -1;
        return p;
    }();
    return m;
}

enum class Axis { x, y, z };

inline const Matrix& pauli(Axis axis) {
    switch (axis) {
        case Axis::x: return pauli_x();
        case Axis::y: return pauli_y();
        default: return pauli_z();
    }
}

inline char axis_name(Axis axis) {
    switch (axis) {
        case Axis::x: return 'x';
        case Axis::y: return 'y';
        default: return 'z';
    }
}

/// Hermitian matrix with its spectral decomposition computed on demand.
class HermitianObservable {
public:
    explicit HermitianObservable(Matrix m) : matrix_(std::move(m)) {
        if (!is_hermitian(matrix_))
            throw NonHermitianError("HermitianObservable: matrix not Hermitian within 1e-10");
    }

    const Matrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

    const SpectralDecomposition& spectrum() const {
        if (!spectrum_) spectrum_ = hermitian_eigendecomposition(matrix_);
        return *spectrum_;
    }

    /// e^{-iHθ}
    Matrix phase_shift(double theta) const {
        return unitary_from_spectrum(spectrum(), theta);
    }

private:
    Matrix matrix_;
    mutable std::optional<SpectralDecomposition> spectrum_;
};

/// Unit-trace positive Hermitian matrix; the spectrum is cached lazily.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix m) : matrix_(std::move(m)) {
        if (!is_hermitian(matrix_))
            throw NonHermitianError("DensityMatrix: matrix not Hermitian within 1e-10");
        if (std::abs(matrix_.trace() - Complex(1.0)) > 1e-10)
            throw ParamOutOfRangeError("DensityMatrix: trace differs from 1 beyond 1e-10");
        if (spectrum().eigenvalues.minCoeff() < -1e-10)
            throw ParamOutOfRangeError("DensityMatrix: negative eigenvalue beyond 1e-10");
    }

    const Matrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

    const SpectralDecomposition& spectrum() const {
        if (!spectrum_) spectrum_ = hermitian_eigendecomposition(matrix_);
        return *spectrum_;
    }

private:
    Matrix matrix_;
    mutable std::optional<SpectralDecomposition> spectrum_;
};

inline double purity(const DensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

/// ρ = 1/2 (I + p σ_z) = diag((1+p)/2, (1-p)/2)
inline DensityMatrix single_qubit_polarized(double p) {
    if (p < 0.0 || p > 1.0)
        throw ParamOutOfRangeError("single_qubit_polarized: p must lie in [0, 1]");
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = (1.0 + p) / 2.0;
    m(1, 1) = (1.0 - p) / 2.0;
    return DensityMatrix(m);
}

struct GhzDiagonalParams {
    double p;  // mixing parameter in [0, 1]
};

namespace detail {

inline Matrix hadamard() {
    Matrix h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

/// CNOT on an n-qubit register, qubit 0 most significant.
inline Matrix cnot(int n_qubits, int control, int target) {
    const Eigen::Index d = Eigen::Index(1) << n_qubits;
    Matrix g = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const int cbit = int(i >> (n_qubits - 1 - control)) & 1;
        Eigen::Index j = i;
        if (cbit) j ^= Eigen::Index(1) << (n_qubits - 1 - target);
        g(j, i) = 1.0;
    }
    return g;
}

}  // namespace detail

/**
 * Three-qubit GHZ-diagonal state: ρ_p^⊗3 followed by a Hadamard on
 * qubit A and CNOTs A→B, A→C. Qubit A is the most significant bit.
 */
inline DensityMatrix ghz_diagonal(const GhzDiagonalParams& params) {
    const DensityMatrix rho_p = single_qubit_polarized(params.p);
    Matrix rho = kron(rho_p.matrix(), rho_p.matrix(), rho_p.matrix());
    const Matrix had_a = kron(detail::hadamard(), Matrix::Identity(4, 4));
    const Matrix circuit = detail::cnot(3, 0, 2) * detail::cnot(3, 0, 1) * had_a;
    rho = circuit * rho * circuit.adjoint();
    return DensityMatrix(std::move(rho));
}

inline DensityMatrix ghz_diagonal(double p) { return ghz_diagonal(GhzDiagonalParams{p}); }

/// J_{N,a} = Σ_i I ⊗ … ⊗ σ_a/2 ⊗ … ⊗ I
struct AdditiveSpinHamiltonian {
    int n_qubits;
    Axis axis;
    HermitianObservable matrix;
};

inline AdditiveSpinHamiltonian collective_spin(int n_qubits, Axis axis) {
    if (n_qubits < 1)
        throw ParamOutOfRangeError("collective_spin: n_qubits must be >= 1");
    const Eigen::Index d = Eigen::Index(1) << n_qubits;
    const Matrix half_spin = 0.5 * pauli(axis);
    Matrix sum = Matrix::Zero(d, d);
    for (int i = 0; i < n_qubits; ++i) {
        Matrix term = Matrix::Identity(1, 1);
        for (int q = 0; q < n_qubits; ++q)
            term = kron(term, q == i ? half_spin : Matrix::Identity(2, 2));
        sum += term;
    }
    return {n_qubits, axis, HermitianObservable(std::move(sum))};
}

}  // namespace asymq
