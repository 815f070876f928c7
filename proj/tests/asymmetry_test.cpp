#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "asymq/asymmetry.hpp"
#include "support.hpp"

using namespace asymq;
using namespace asymq::testing;

namespace {
const double pi = std::numbers::pi;

DensityMatrix plus_state() {
    Matrix m(2, 2);
    m << 0.5, 0.5, 0.5, 0.5;
    return DensityMatrix(m);
}
}  // namespace

TEST_CASE("qfi vanishes on incoherent states") {
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.3;
    diag(1, 1) = 0.7;
    CHECK(qfi(DensityMatrix(diag), HermitianObservable(0.5 * pauli_z())) < 1e-12);
}

TEST_CASE("qfi reproduces the GHZ-diagonal polynomials") {
    CHECK(qfi(ghz_diagonal(1.0), collective_spin(3, Axis::z).matrix) ==
          Catch::Approx(9.0).margin(1e-9));
    CHECK(qfi(ghz_diagonal(0.6), collective_spin(3, Axis::x).matrix) ==
          Catch::Approx(ghz_qfi_poly(Axis::x, 0.6)).margin(1e-9));
    CHECK(qfi(ghz_diagonal(0.8), collective_spin(3, Axis::z).matrix) ==
          Catch::Approx(4.7872).margin(1e-9));
}

TEST_CASE("variance of pure states") {
    const auto z_half = HermitianObservable(0.5 * pauli_z());
    Matrix up = Matrix::Zero(2, 2);
    up(0, 0) = 1.0;
    CHECK(variance(DensityMatrix(up), z_half) == Catch::Approx(0.0).margin(1e-12));
    CHECK(variance(plus_state(), z_half) == Catch::Approx(1.0).margin(1e-12));
    CHECK(variance(ghz_diagonal(1.0), collective_spin(3, Axis::z).matrix) ==
          Catch::Approx(9.0).margin(1e-12));

    CHECK_THROWS_AS(variance(ghz_diagonal(0.5), collective_spin(3, Axis::z).matrix), NotPureError);
}

TEST_CASE("bound vanishes iff the state commutes with H") {
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.3;
    diag(1, 1) = 0.7;
    CHECK(bound(DensityMatrix(diag), HermitianObservable(0.5 * pauli_z())) < 1e-12);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = random_density(4, rng);
        const HermitianObservable h = random_observable(4, rng);
        const Matrix comm = rho.matrix() * h.matrix() - h.matrix() * rho.matrix();
        const bool zero_comm = max_abs(comm) < 1e-10;
        CHECK((bound(rho, h) < 1e-10) == zero_comm);
        CHECK((qfi(rho, h) < 1e-10) == zero_comm);
    }
}

TEST_CASE("bound matches the spectral form and Table polynomials") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = random_density(8, rng);
        const HermitianObservable h = random_observable(8, rng);
        // spectral route: 2 sum_{i != j} (l_i - l_j)^2 |H_ij|^2
        const auto& spec = rho.spectrum();
        const Matrix h_eig = spec.eigenvectors.adjoint() * h.matrix() * spec.eigenvectors;
        double spectral = 0.0;
        for (Eigen::Index i = 0; i < 8; ++i)
            for (Eigen::Index j = 0; j < 8; ++j) {
                if (i == j) continue;
                const double d = spec.eigenvalues(i) - spec.eigenvalues(j);
                spectral += d * d * std::norm(h_eig(i, j));
            }
        CHECK(bound(rho, h) == Catch::Approx(2.0 * spectral).margin(1e-10));
    }

    for (double p : {0.3, 0.8, 1.0})
        CHECK(bound(ghz_diagonal(p), collective_spin(3, Axis::z).matrix) ==
              Catch::Approx(ghz_bound_poly(Axis::z, p)).margin(1e-10));
}

TEST_CASE("bound scales with the purity of an appended subsystem") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix ra = random_density(2, rng);
        const DensityMatrix rb = random_density(4, rng);
        const HermitianObservable ha = random_observable(2, rng);
        const DensityMatrix joint{kron(ra.matrix(), rb.matrix())};
        const HermitianObservable h_ext{kron(ha.matrix(), Matrix::Identity(4, 4))};
        CHECK(bound(joint, h_ext) == Catch::Approx(bound(ra, ha) * purity(rb)).margin(1e-10));
    }
}

TEST_CASE("bound_approx on commuting pairs and near theta -> 0") {
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.2;
    diag(1, 1) = 0.8;
    auto [v0, e0] =
        bound_approx(DensityMatrix(diag), HermitianObservable(0.5 * pauli_z()), {pi / 5});
    CHECK(std::abs(v0) < 1e-12);
    CHECK(std::abs(e0) < 1e-12);

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_density(8, rng);
        const HermitianObservable h = collective_spin(3, Axis::z).matrix;
        auto [v, e] = bound_approx(rho, h, {1e-3});
        CHECK(std::abs(v - bound(rho, h)) < 1e-4);
    }
}

TEST_CASE("bound_approx band behavior on the GHZ family") {
    const auto jz = collective_spin(3, Axis::z).matrix;
    const DensityMatrix rho = ghz_diagonal(0.9);
    const double exact = bound(rho, jz);
    auto [value, error] = bound_approx(rho, jz, {pi / 6});
    CHECK(value < exact);
    CHECK(exact >= value - error);
    CHECK(exact <= value + error);
}

TEST_CASE("approximation error matches a finite-difference second derivative") {
    const auto jz = collective_spin(3, Axis::z).matrix;
    for (double p : {0.5, 0.8, 1.0}) {
        const DensityMatrix rho = ghz_diagonal(p);
        const double o = bound(rho, jz);
        // h = 3e-3 balances truncation against the 1/h^4 rounding noise
        // of the overlap difference.
        const double h = 3e-3;
        const double c4 = (o - bound_approx(rho, jz, {h}).first) / (4.0 * h * h);
        const double analytic = bound_approx(rho, jz, {1.0}).second / 4.0;
        CHECK(c4 == Catch::Approx(analytic).epsilon(1e-4));
    }
}

TEST_CASE("bound_approx validates configuration") {
    CHECK_THROWS_AS(bound_approx(ghz_diagonal(0.5), collective_spin(3, Axis::z).matrix, {0.0}),
                    ThetaZeroError);
    CHECK_THROWS_AS(bound_approx(ghz_diagonal(0.5), collective_spin(2, Axis::z).matrix, {pi / 6}),
                    DimensionMismatchError);
}

TEST_CASE("closed forms match the commutator bound") {
    std::mt19937_64 rng(41);

    CHECK(bound_closed_form(DensityMatrix(Matrix::Identity(2, 2) / 2.0), Axis::z, 1) <
          1e-12);
    CHECK(bound_closed_form(plus_state(), Axis::z, 1) == Catch::Approx(1.0).margin(1e-12));
    for (double p : {0.4, 0.9})
        CHECK(bound_closed_form(ghz_diagonal(p), Axis::z, 3) ==
              Catch::Approx(ghz_bound_poly(Axis::z, p)).margin(1e-10));

    for (int n : {1, 2, 3}) {
        for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
            const auto j = collective_spin(n, axis);
            for (int trial = 0; trial < 10; ++trial) {
                const DensityMatrix rho = random_density(Eigen::Index(1) << n, rng);
                CHECK(bound_closed_form(rho, axis, n) ==
                      Catch::Approx(bound(rho, j.matrix)).margin(1e-10));
            }
        }
    }

    CHECK_THROWS_AS(bound_closed_form(ghz_diagonal(0.5), Axis::z, 4), UnsupportedNError);
    CHECK_THROWS_AS(bound_closed_form(ghz_diagonal(0.5), Axis::z, 2), DimensionMismatchError);
}

TEST_CASE("full report invariants") {
    const auto jz = collective_spin(3, Axis::z).matrix;
    const AsymmetryReport report = full_report(ghz_diagonal(0.8), jz, {pi / 6});
    CHECK(report.qfi == Catch::Approx(4.7872).margin(1e-9));
    CHECK(report.bound == Catch::Approx(ghz_bound_poly(Axis::z, 0.8)).margin(1e-9));
    CHECK(report.bound_approx <= report.bound + 1e-9);
    CHECK(report.bound <= report.qfi + 1e-9);

    const AsymmetryReport zero = full_report(ghz_diagonal(0.0), jz, {pi / 6});
    CHECK(std::abs(zero.qfi) < 1e-10);
    CHECK(std::abs(zero.bound) < 1e-10);
    CHECK(std::abs(zero.bound_approx) < 1e-10);

    std::mt19937_64 rng(43);
    const DensityMatrix psi = random_pure_density(4, rng);
    const HermitianObservable h = random_observable(4, rng);
    const AsymmetryReport pure = full_report(psi, h, {pi / 6});
    CHECK(pure.qfi == Catch::Approx(pure.bound).margin(1e-9));
    CHECK(pure.qfi == Catch::Approx(variance(psi, h)).margin(1e-9));
}

TEST_CASE("ordering chain on random states") {
    std::mt19937_64 rng(47);
    for (Eigen::Index d : {2, 4, 8}) {
        for (int trial = 0; trial < 30; ++trial) {
            const DensityMatrix rho = random_density(d, rng);
            const HermitianObservable h = random_observable(d, rng);
            const auto [approx, err] = bound_approx(rho, h, {pi / 6});
            const double o = bound(rho, h);
            const double f = qfi(rho, h);
            CHECK(approx >= -1e-9);
            CHECK(approx <= o + 1e-9);
            CHECK(o <= f + 1e-9);
        }
    }
}

TEST_CASE("qfi convexity spot check") {
    std::mt19937_64 rng(53);
    const HermitianObservable h = random_observable(4, rng);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix a = random_density(4, rng);
        const DensityMatrix b = random_density(4, rng);
        for (double w : {0.1, 0.5, 0.9}) {
            const DensityMatrix mix{w * a.matrix() + (1.0 - w) * b.matrix()};
            CHECK(qfi(mix, h) <= w * qfi(a, h) + (1.0 - w) * qfi(b, h) + 1e-9);
        }
    }
}

TEST_CASE("qfi and bound are unitarily covariant") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_density(4, rng);
        const HermitianObservable h = random_observable(4, rng);
        const Matrix u = random_unitary(4, rng);
        const DensityMatrix rho_u{u * rho.matrix() * u.adjoint()};
        const HermitianObservable h_u{u * h.matrix() * u.adjoint()};
        CHECK(qfi(rho_u, h_u) == Catch::Approx(qfi(rho, h)).margin(1e-9));
        CHECK(bound(rho_u, h_u) == Catch::Approx(bound(rho, h)).margin(1e-9));
    }
}

TEST_CASE("bound equals the Hilbert-Schmidt speed in the zero-shift limit") {
    std::mt19937_64 rng(61);
    const DensityMatrix rho = random_density(8, rng);
    const HermitianObservable h = random_observable(8, rng);
    const double o = bound(rho, h);
    for (double theta : {1e-2, 1e-3}) {
        const Matrix u = h.phase_shift(theta);
        const Matrix diff = u * rho.matrix() * u.adjoint() - rho.matrix();
        const double hs = 2.0 * diff.squaredNorm() / (theta * theta);
        const auto [approx, err] = bound_approx(rho, h, {theta});
        CHECK(hs == Catch::Approx(approx).margin(1e-8));
        CHECK(std::abs(hs - o) <= 2.0 * err + 1e-6);
    }
}
