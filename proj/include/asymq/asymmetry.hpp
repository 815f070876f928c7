/**
 * @file asymmetry.hpp
 * @brief Quantum Fisher information, the observable lower bound
 *        O_H(ρ) = -2Tr[[ρ,H]²], its finite-phase-shift approximation with
 *        error band, and exact shift formulas for one to three qubits.
 */
#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "asymq/numeric.hpp"
#include "asymq/states.hpp"

namespace asymq {

struct ThetaZeroError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedNError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Finite phase shift θ expanded about θ0 (the pipeline uses θ0 = 0).
struct ApproximationConfig {
    double theta;
    double theta0 = 0.0;

    void validate() const {
        if (theta == theta0)
            throw ThetaZeroError("ApproximationConfig: theta must differ from theta0");
        if (std::abs(theta) > std::numbers::pi)
            throw ThetaZeroError("ApproximationConfig: |theta| must not exceed pi");
    }
};

struct AsymmetryReport {
    double qfi;           // F_H
    double bound;         // O_H
    double bound_approx;  // O_H^ap
    double approx_error;  // ΔO_H^ap
};

namespace detail {

inline void check_same_dim(const DensityMatrix& rho, const HermitianObservable& h) {
    if (rho.dim() != h.dim())
        throw DimensionMismatchError("state and observable dimensions differ");
}

// Eigenvalue pairs with λ_i + λ_j below this cutoff contribute nothing
// (removable singularity of the SLD quantum Fisher information).
inline constexpr double kQfiPairCutoff = 1e-12;

}  // namespace detail

/**
 * Symmetric-logarithmic-derivative quantum Fisher information,
 * F_H(ρ) = 2 Σ_{i,j} (λ_i - λ_j)² / (λ_i + λ_j) |⟨i|H|j⟩|².
 * Normalized so pure states give 4(⟨H²⟩ - ⟨H⟩²).
 */
inline double qfi(const DensityMatrix& rho, const HermitianObservable& h) {
    detail::check_same_dim(rho, h);
    const SpectralDecomposition& spec = rho.spectrum();
    const Matrix h_eig = spec.eigenvectors.adjoint() * h.matrix() * spec.eigenvectors;
    const Eigen::Index d = rho.dim();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            const double li = spec.eigenvalues(i);
            const double lj = spec.eigenvalues(j);
            if (li + lj < detail::kQfiPairCutoff) continue;
            const double diff = li - lj;
            sum += diff * diff / (li + lj) * std::norm(h_eig(i, j));
        }
    }
    return 2.0 * sum;
}

/// 4(⟨ψ|H²|ψ⟩ - ⟨ψ|H|ψ⟩²) for a pure state.
inline double variance(const DensityMatrix& psi, const HermitianObservable& h) {
    detail::check_same_dim(psi, h);
    if (purity(psi) <= 1.0 - 1e-8)
        throw NotPureError("variance: state is not pure");
    const Matrix& r = psi.matrix();
    const Matrix& hm = h.matrix();
    const double mean_h2 = (r * hm * hm).trace().real();
    const double mean_h = (r * hm).trace().real();
    return 4.0 * (mean_h2 - mean_h * mean_h);
}

/// O_H(ρ) = -2Tr[[ρ,H]²] = 4Tr[ρ²H² - ρHρH]
inline double bound(const DensityMatrix& rho, const HermitianObservable& h) {
    detail::check_same_dim(rho, h);
    const Matrix& r = rho.matrix();
    const Matrix& hm = h.matrix();
    const Matrix rh = r * hm;
    return 4.0 * ((rh * rh.adjoint()).trace().real() - (rh * rh).trace().real());
}

/// Tr[ρ U ρ U†] with U = e^{-iHθ}.
inline double phase_shift_overlap(const DensityMatrix& rho, const HermitianObservable& h,
                                  double theta) {
    detail::check_same_dim(rho, h);
    const Matrix u = h.phase_shift(theta);
    return (rho.matrix() * u * rho.matrix() * u.adjoint()).trace().real();
}

namespace detail {

// Fourth-order Taylor coefficient of Tr[ρ U(θ) ρ U†(θ)]:
// c4 = Tr[ρ (ad_H)⁴ ρ] / 24 with ad_H X = [H, X].
inline double overlap_quartic_coefficient(const DensityMatrix& rho,
                                          const HermitianObservable& h) {
    const Matrix& r = rho.matrix();
    const Matrix& hm = h.matrix();
    Matrix c = hm * r - r * hm;
    for (int k = 0; k < 3; ++k) c = hm * c - c * hm;
    return (r * c).trace().real() / 24.0;
}

}  // namespace detail

/**
 * Finite-phase-shift approximation of the lower bound,
 * O_H^ap = 4(Tr[ρ U(θ0) ρ U†(θ0)] - Tr[ρ U(θ) ρ U†(θ)]) / (θ - θ0)²,
 * together with the error half-width ΔO_H^ap = 4|c4|(θ - θ0)².
 * The error formula is exact for θ0 = 0.
 */
inline std::pair<double, double> bound_approx(const DensityMatrix& rho,
                                              const HermitianObservable& h,
                                              const ApproximationConfig& cfg) {
    cfg.validate();
    detail::check_same_dim(rho, h);
    const double dtheta = cfg.theta - cfg.theta0;
    const double ref = cfg.theta0 == 0.0 ? purity(rho)
                                         : phase_shift_overlap(rho, h, cfg.theta0);
    const double value = 4.0 * (ref - phase_shift_overlap(rho, h, cfg.theta)) / (dtheta * dtheta);
    const double error =
        4.0 * std::abs(detail::overlap_quartic_coefficient(rho, h)) * dtheta * dtheta;
    return {value, error};
}

namespace detail {

/// Product of e^{-i(σ_axis/2)θ} over the qubits in `active`.
inline Matrix local_shift_product(int n_qubits, unsigned active_mask, Axis axis, double theta) {
    const Matrix u1 = unitary_from_hermitian(0.5 * pauli(axis), theta);
    Matrix u = Matrix::Identity(1, 1);
    for (int q = 0; q < n_qubits; ++q) {
        const bool active = (active_mask >> (n_qubits - 1 - q)) & 1u;
        u = kron(u, active ? u1 : Matrix::Identity(2, 2));
    }
    return u;
}

inline double shifted_overlap(const Matrix& rho, const Matrix& u) {
    return (rho * u * rho * u.adjoint()).trace().real();
}

}  // namespace detail

/**
 * Exact finite-shift expression for O with respect to the collective spin
 * J_{N,axis}, valid for N = 1, 2, 3.
 */
inline double bound_closed_form(const DensityMatrix& rho, Axis axis, int n_qubits) {
    if (n_qubits < 1 || n_qubits > 3)
        throw UnsupportedNError("bound_closed_form: only N in {1, 2, 3} is supported");
    if (rho.dim() != (Eigen::Index(1) << n_qubits))
        throw DimensionMismatchError("bound_closed_form: state dimension must be 2^N");

    const double pi = std::numbers::pi;
    const Matrix& r = rho.matrix();
    const double pur = (r * r).trace().real();
    auto overlap = [&](unsigned mask, double theta) {
        return detail::shifted_overlap(r, detail::local_shift_product(n_qubits, mask, axis, theta));
    };

    switch (n_qubits) {
        case 1:
            return pur - overlap(0b1, pi);
        case 2:
            return 3.0 * pur - 4.0 * overlap(0b11, pi / 2) + overlap(0b11, pi);
        default: {
            double result = 6.0 * pur;
            for (unsigned mask : {0b110u, 0b101u, 0b011u})
                result += -4.0 * overlap(mask, pi / 2) + overlap(mask, pi);
            for (unsigned mask : {0b100u, 0b010u, 0b001u}) result += overlap(mask, pi);
            return result;
        }
    }
}

inline AsymmetryReport full_report(const DensityMatrix& rho, const HermitianObservable& h,
                                   const ApproximationConfig& cfg) {
    auto [approx, err] = bound_approx(rho, h, cfg);
    return {qfi(rho, h), bound(rho, h), approx, err};
}

}  // namespace asymq
