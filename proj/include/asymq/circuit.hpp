/**
 * @file circuit.hpp
 * @brief Density-matrix simulation of the seven-qubit swap-test
 *        interferometer: two three-qubit state copies plus one ancilla
 *        whose polarization reads out purity and phase-shifted overlaps.
 */
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "asymq/asymmetry.hpp"
#include "asymq/numeric.hpp"
#include "asymq/states.hpp"

namespace asymq {

struct TargetOutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class GateKind { hadamard, cnot, controlled_swap, local_unitary };

/// Gate on named qubits; `matrix` is consulted for local_unitary only.
struct GateOp {
    GateKind kind;
    std::vector<int> targets;  // qubit indices, 0 = most significant
    Matrix matrix;             // 2^k x 2^k for k targets
};

/// Full register of the interferometer, qubit order
/// (ancilla, A1, B1, C1, A2, B2, C2).
struct CircuitState {
    Matrix register_matrix;
    int n_qubits;

    DensityMatrix as_density_matrix() const { return DensityMatrix(register_matrix); }
};

namespace detail {

/// Embed a 2^k-dimensional gate acting on `targets` into the full register.
inline Matrix embed_gate(int n_qubits, const Matrix& gate, const std::vector<int>& targets) {
    const Eigen::Index d = Eigen::Index(1) << n_qubits;
    const int k = int(targets.size());
    if (gate.rows() != (Eigen::Index(1) << k) || gate.cols() != gate.rows())
        throw TargetOutOfRangeError("embed_gate: gate dimension does not match target count");
    for (std::size_t a = 0; a < targets.size(); ++a) {
        if (targets[a] < 0 || targets[a] >= n_qubits)
            throw TargetOutOfRangeError("embed_gate: target qubit out of range");
        for (std::size_t b = a + 1; b < targets.size(); ++b)
            if (targets[a] == targets[b])
                throw TargetOutOfRangeError("embed_gate: duplicate target qubit");
    }

    auto sub_index = [&](Eigen::Index full) {
        Eigen::Index sub = 0;
        for (int t : targets) sub = (sub << 1) | ((full >> (n_qubits - 1 - t)) & 1);
        return sub;
    };
    Eigen::Index rest_mask = d - 1;
    for (int t : targets) rest_mask &= ~(Eigen::Index(1) << (n_qubits - 1 - t));

    Matrix full = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            if ((i & rest_mask) == (j & rest_mask)) full(i, j) = gate(sub_index(i), sub_index(j));
    return full;
}

inline Matrix cnot_gate() {
    Matrix g = Matrix::Zero(4, 4);
    g(0, 0) = g(1, 1) = g(2, 3) = g(3, 2) = 1.0;
    return g;
}

/// Controlled swap of two qubits, control first.
inline Matrix cswap_gate() {
    Matrix g = Matrix::Identity(8, 8);
    g(5, 5) = g(6, 6) = 0.0;
    g(5, 6) = g(6, 5) = 1.0;
    return g;
}

}  // namespace detail

inline Matrix gate_matrix(const GateOp& gate) {
    switch (gate.kind) {
        case GateKind::hadamard: return detail::hadamard();
        case GateKind::cnot: return detail::cnot_gate();
        case GateKind::controlled_swap: return detail::cswap_gate();
        default:
            if (max_abs(gate.matrix * gate.matrix.adjoint() -
                        Matrix::Identity(gate.matrix.rows(), gate.matrix.rows())) >= 1e-10)
                throw TargetOutOfRangeError("apply_gate: local_unitary matrix is not unitary");
            return gate.matrix;
    }
}

inline CircuitState apply_gate(const CircuitState& state, const GateOp& gate) {
    const Matrix g = detail::embed_gate(state.n_qubits, gate_matrix(gate), gate.targets);
    return {g * state.register_matrix * g.adjoint(), state.n_qubits};
}

/// ⟨σ_z⟩ of the ancilla (qubit 0).
inline double ancilla_polarization(const CircuitState& state) {
    const Eigen::Index d = state.register_matrix.rows();
    double value = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
        value += ((i < d / 2) ? 1.0 : -1.0) * state.register_matrix(i, i).real();
    return value;
}

/// Ancilla |+⟩⟨+| joined with two arbitrary 3-qubit register states.
inline CircuitState inject_register_pair(const DensityMatrix& copy1, const DensityMatrix& copy2) {
    if (copy1.dim() != 8 || copy2.dim() != 8)
        throw DimensionMismatchError("inject_register_pair: copies must be 3-qubit states");
    Matrix plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    return {kron(plus, copy1.matrix(), copy2.matrix()), 7};
}

/**
 * Fig.-style preparation: ancilla in |+⟩, six qubits in ρ_p, then a
 * Hadamard on each copy's A qubit followed by CNOTs A→B and A→C.
 */
inline CircuitState prepare_two_copies(double p) {
    const Matrix rho_p = single_qubit_polarized(p).matrix();
    Matrix plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    Matrix reg = plus;
    for (int q = 0; q < 6; ++q) reg = kron(reg, rho_p);
    CircuitState state{std::move(reg), 7};
    for (int a : {1, 4}) {
        state = apply_gate(state, {GateKind::hadamard, {a}, {}});
        state = apply_gate(state, {GateKind::cnot, {a, a + 1}, {}});
        state = apply_gate(state, {GateKind::cnot, {a, a + 2}, {}});
    }
    return state;
}

namespace detail {

/// Swap test tail: three ancilla-controlled qubit swaps, final Hadamard,
/// ancilla polarization readout.
inline double run_swap_test(CircuitState state) {
    for (int q = 1; q <= 3; ++q)
        state = apply_gate(state, {GateKind::controlled_swap, {0, q, q + 3}, {}});
    state = apply_gate(state, {GateKind::hadamard, {0}, {}});
    return ancilla_polarization(state);
}

}  // namespace detail

/// Circuit evaluation of Tr[ρ σ] for two injected 3-qubit states.
inline double swap_test_pair(const DensityMatrix& rho, const DensityMatrix& sigma) {
    return detail::run_swap_test(inject_register_pair(rho, sigma));
}

/**
 * Full interferometer run: prepare two GHZ-diagonal copies, rotate copy 2
 * by U_j(θ) on each qubit, controlled-swap against copy 1 and read the
 * ancilla. Returns Tr[ρ U(θ) ρ U†(θ)]; θ = 0 yields the purity.
 */
inline double swap_test_overlap(double p, Axis axis, double theta) {
    CircuitState state = prepare_two_copies(p);
    if (theta != 0.0) {
        const Matrix u1 = unitary_from_hermitian(0.5 * pauli(axis), theta);
        for (int q : {4, 5, 6}) state = apply_gate(state, {GateKind::local_unitary, {q}, u1});
    }
    return detail::run_swap_test(state);
}

/// O^ap extracted from circuit runs: 4(purity - overlap(θ))/θ².
inline double measure_bound_via_circuit(double p, Axis axis, double theta) {
    if (theta == 0.0)
        throw ThetaZeroError("measure_bound_via_circuit: theta must be nonzero");
    const double pur = swap_test_overlap(p, axis, 0.0);
    const double overlap = swap_test_overlap(p, axis, theta);
    return 4.0 * (pur - overlap) / (theta * theta);
}

/**
 * Shot-noise model of the ancilla readout: the exact polarization is
 * replaced by the empirical mean of `shots` binomial samples.
 */
inline double sample_polarization(double exact, long shots, std::uint64_t seed) {
    if (shots <= 0)
        throw ParamOutOfRangeError("sample_polarization: shots must be positive");
    const double p_up = std::clamp(0.5 * (1.0 + exact), 0.0, 1.0);
    std::mt19937_64 rng(seed);
    std::binomial_distribution<long> dist(shots, p_up);
    return 2.0 * double(dist(rng)) / double(shots) - 1.0;
}

}  // namespace asymq
