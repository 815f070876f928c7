/**
 * @file witnesses.hpp
 * @brief Entanglement witnesses from collective-spin asymmetry: per-axis
 *        k-separability thresholds, the averaged witness, the exact
 *        GHZ-diagonal tripartite condition and threshold location in p.
 */
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>

#include "asymq/asymmetry.hpp"
#include "asymq/states.hpp"

namespace asymq {

struct InvalidKError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotMonotoneError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * k-separable states of N qubits obey F_{J_N}(ρ) <= nk² + (N - nk)²
 * with n = floor(N/k); exceeding the value certifies genuine
 * k-partite entanglement.
 */
inline double witness_threshold(int n_qubits, int k) {
    if (k < 1 || k > n_qubits)
        throw InvalidKError("witness_threshold: k must satisfy 1 <= k <= N");
    const int n = n_qubits / k;
    const int rest = n_qubits - n * k;
    return double(n) * k * k + double(rest) * rest;
}

enum class QuantityKind { qfi, bound, bound_approx };

struct AxisVerdict {
    double value;
    double threshold_k1;
    double threshold_k2;
    bool entangled;               // value > threshold for k = 1
    bool genuinely_multipartite;  // value > threshold for k = 2
};

struct AveragedVerdict {
    double value;      // mean over the three spin axes
    double threshold;  // 2N/3
    bool entangled;
};

struct WitnessVerdict {
    std::array<AxisVerdict, 3> per_axis;  // indexed x, y, z
    AveragedVerdict averaged;
    QuantityKind quantity_kind;
};

/**
 * Evaluate the selected asymmetry quantity against J_{N,x}, J_{N,y},
 * J_{N,z} and fill the witness flags. Flags use strict inequality:
 * boundary values are not witnessed.
 */
inline WitnessVerdict evaluate_witnesses(const DensityMatrix& rho, int n_qubits,
                                         const ApproximationConfig& cfg, QuantityKind kind) {
    if (rho.dim() != (Eigen::Index(1) << n_qubits))
        throw DimensionMismatchError("evaluate_witnesses: state dimension must be 2^N");
    const double thr_k1 = witness_threshold(n_qubits, 1);
    const double thr_k2 = n_qubits >= 2 ? witness_threshold(n_qubits, 2) : thr_k1;

    WitnessVerdict verdict{};
    verdict.quantity_kind = kind;
    double total = 0.0;
    const std::array<Axis, 3> axes{Axis::x, Axis::y, Axis::z};
    for (std::size_t a = 0; a < axes.size(); ++a) {
        const AdditiveSpinHamiltonian j = collective_spin(n_qubits, axes[a]);
        double value = 0.0;
        switch (kind) {
            case QuantityKind::qfi: value = qfi(rho, j.matrix); break;
            case QuantityKind::bound: value = bound(rho, j.matrix); break;
            case QuantityKind::bound_approx: value = bound_approx(rho, j.matrix, cfg).first; break;
        }
        verdict.per_axis[a] = {value, thr_k1, thr_k2, value > thr_k1, value > thr_k2};
        total += value;
    }
    verdict.averaged.value = total / 3.0;
    verdict.averaged.threshold = 2.0 * n_qubits / 3.0;
    verdict.averaged.entangled = verdict.averaged.value > verdict.averaged.threshold;
    return verdict;
}

/**
 * Exact tripartite-entanglement condition for 3-qubit states,
 * |ρ_{1,8}| > sqrt(ρ_{2,2}ρ_{7,7}) + sqrt(ρ_{3,3}ρ_{6,6}) + sqrt(ρ_{4,4}ρ_{5,5})
 * (1-based computational-basis indices, qubit A most significant);
 * necessary and sufficient on GHZ-diagonal states.
 */
inline bool ghz_exact_condition(const DensityMatrix& rho) {
    if (rho.dim() != 8)
        throw DimensionMismatchError("ghz_exact_condition: state must be 8x8");
    const Matrix& m = rho.matrix();
    auto term = [&](int i, int j) {
        return std::sqrt(std::max(0.0, m(i, i).real() * m(j, j).real()));
    };
    return std::abs(m(0, 7)) > term(1, 6) + term(2, 5) + term(3, 4);
}

/// Sentinel result of solve_threshold: no root in [0, 1].
inline constexpr double kThresholdNotReached = -1.0;

/**
 * Bisection root of quantity(p) = target on [0, 1] to absolute tolerance
 * 1e-6, for quantities monotone nondecreasing in p. Returns nullopt when
 * quantity(1) <= target (the threshold is never crossed).
 */
inline std::optional<double> solve_threshold(const std::function<double(double)>& quantity,
                                             double target) {
    double lo = 0.0, hi = 1.0;
    const double f_lo = quantity(lo);
    const double f_hi = quantity(hi);
    if (f_lo >= target)
        throw NotMonotoneError("solve_threshold: quantity(0) must lie below the target");
    if (f_hi <= target) return std::nullopt;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = quantity(mid);
        if (f_mid < f_lo - 1e-12 || f_mid > f_hi + 1e-12)
            throw NotMonotoneError("solve_threshold: bracketing failed, quantity not monotone");
        (f_mid < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace asymq
