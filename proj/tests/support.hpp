// Shared helpers for the test suites: random states and observables,
// an eigensolver-independent characteristic-polynomial root oracle, and
// the known asymmetry polynomials of the GHZ-diagonal family.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "asymq/numeric.hpp"
#include "asymq/states.hpp"

namespace asymq::testing {

inline Matrix random_ginibre(Eigen::Index d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return g;
}

inline HermitianObservable random_observable(Eigen::Index d, std::mt19937_64& rng) {
    const Matrix g = random_ginibre(d, rng);
    return HermitianObservable(0.5 * (g + g.adjoint()));
}

/// Full-rank random mixed state (Ginibre ensemble).
inline DensityMatrix random_density(Eigen::Index d, std::mt19937_64& rng) {
    const Matrix g = random_ginibre(d, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    return DensityMatrix(std::move(rho));
}

inline DensityMatrix random_pure_density(Eigen::Index d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector psi(d);
    for (Eigen::Index i = 0; i < d; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
    psi.normalize();
    return DensityMatrix(psi * psi.adjoint());
}

inline Matrix random_unitary(Eigen::Index d, std::mt19937_64& rng) {
    Eigen::HouseholderQR<Matrix> qr(random_ginibre(d, rng));
    Matrix q = qr.householderQ();
    return q;
}

/// det(xI - A) coefficients via Faddeev-LeVerrier (matrix products and
/// traces only, no eigensolver). Returns {1, c1, ..., cn}.
inline std::vector<double> characteristic_polynomial(const Matrix& a) {
    const Eigen::Index n = a.rows();
    std::vector<double> coeffs(std::size_t(n) + 1);
    coeffs[0] = 1.0;
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = a * (m + coeffs[std::size_t(k) - 1] * Matrix::Identity(n, n));
        coeffs[std::size_t(k)] = -m.trace().real() / double(k);
    }
    return coeffs;
}

inline double eval_poly(const std::vector<double>& coeffs, double x) {
    double v = 0.0;
    for (double c : coeffs) v = v * x + c;
    return v;
}

/// All real roots of a polynomial with only real roots, by grid scan and
/// bisection over [lo, hi]. Assumes simple roots.
inline std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi,
                                      int grid = 200000) {
    std::vector<double> roots;
    double x_prev = lo, f_prev = eval_poly(coeffs, lo);
    for (int i = 1; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double f = eval_poly(coeffs, x);
        if (f_prev == 0.0) roots.push_back(x_prev);
        else if (f_prev * f < 0.0) {
            double a = x_prev, b = x;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (a + b);
                if (eval_poly(coeffs, mid) * eval_poly(coeffs, a) <= 0.0) b = mid;
                else a = mid;
            }
            roots.push_back(0.5 * (a + b));
        }
        x_prev = x;
        f_prev = f;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Known asymmetry values of ghz_diagonal(p) for J_{3,x(y,z)}.
inline double ghz_qfi_poly(Axis axis, double p) {
    const double p2 = p * p;
    switch (axis) {
        case Axis::x: return 2.0 * p2 * (p2 + 2.0) / (p2 + 1.0);
        case Axis::y:
            return (-2.0 * std::pow(p, 8) + std::pow(p, 6) + 18.0 * p2 * p2 + 7.0 * p2) /
                   (3.0 * p2 * p2 + 4.0 * p2 + 1.0);
        default: return 2.0 * p2 * p2 + 4.0 * p2 * p + 3.0 * p2;
    }
}

inline double ghz_bound_poly(Axis axis, double p) {
    const double p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p5 = p4 * p, p6 = p4 * p2;
    switch (axis) {
        case Axis::x: return (2.0 * p2 + 3.0 * p4 + p6) / 2.0;
        case Axis::y: return (p6 + 4.0 * p4 + 7.0 * p2) / 4.0;
        default: return (3.0 * p6 + 8.0 * p5 + 14.0 * p4 + 8.0 * p3 + 3.0 * p2) / 4.0;
    }
}

}  // namespace asymq::testing
