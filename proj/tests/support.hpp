#pragma once

// Generators and independent reference computations shared by the unit and
// acceptance tests. Nothing here calls into the closed-form code paths that the
// tests are meant to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>

#include "tetra/membership.hpp"
#include "tetra/numerics.hpp"
#include "tetra/random.hpp"
#include "tetra/schwarz.hpp"

namespace tetra::testing {

inline double cdist(Complex a, Complex b) { return std::abs(a - b); }

inline Complex circle_point(int k, int n, double radius = 1.0) {
    return std::polar(radius, 2.0 * std::numbers::pi * k / n);
}

/// Feasible target with indicatrix norm drawn from [0, max_norm).
inline TangentTarget random_feasible(std::mt19937_64& rng, double max_norm = 1.0) {
    const double norm = max_norm * random_unit(rng);
    const double dom = norm * random_unit(rng);
    const double sub = dom * random_unit(rng);
    TangentTarget y{std::polar(dom, 2.0 * std::numbers::pi * random_unit(rng)),
                    std::polar(sub, 2.0 * std::numbers::pi * random_unit(rng)),
                    std::polar(norm - dom, 2.0 * std::numbers::pi * random_unit(rng))};
    if (random_bit(rng)) {
        std::swap(y.y1, y.y2);
    }
    return y;
}

/// Target with indicatrix norm exactly 1, obtained by rescaling a random target.
inline TangentTarget random_extremal(std::mt19937_64& rng) {
    TangentTarget y;
    double n = 0.0;
    do {
        y = random_feasible(rng);
        n = std::max(std::abs(y.y1), std::abs(y.y2)) + std::abs(y.y3);
    } while (n < 1e-3 || std::max(std::abs(y.y1), std::abs(y.y2)) < 1e-3);
    return {y.y1 / n, y.y2 / n, y.y3 / n};
}

/// |y1| = |y2| = 1 - |y3| with y1 != 0.
inline TangentTarget random_doubly_extremal(std::mt19937_64& rng) {
    const double m = random_range(rng, 0.01, 1.0);
    return {std::polar(m, 2.0 * std::numbers::pi * random_unit(rng)),
            std::polar(m, 2.0 * std::numbers::pi * random_unit(rng)),
            std::polar(1.0 - m, 2.0 * std::numbers::pi * random_unit(rng))};
}

/// Target with indicatrix norm in (1 + gap, 2].
inline TangentTarget random_infeasible(std::mt19937_64& rng, double gap = 1e-3) {
    TangentTarget y;
    double n = 0.0;
    do {
        y = {random_in_disc(rng, 1.3), random_in_disc(rng, 1.3), random_in_disc(rng, 1.0)};
        n = std::max(std::abs(y.y1), std::abs(y.y2)) + std::abs(y.y3);
    } while (!(n > 1.0 + gap));
    return y;
}

inline Matrix2 random_matrix(std::mt19937_64& rng, double radius) {
    return {random_in_disc(rng, radius), random_in_disc(rng, radius), random_in_disc(rng, radius),
            random_in_disc(rng, radius)};
}

/// Largest singular value by power iteration on M*M.
inline double power_norm(const Matrix2& m, int iterations = 200) {
    const Matrix2 g = m.adjoint() * m;
    Complex v1 = {0.6, 0.1}, v2 = {0.3, -0.7};
    double lambda = 0.0;
    for (int i = 0; i < iterations; ++i) {
        const Complex w1 = g.a11 * v1 + g.a12 * v2;
        const Complex w2 = g.a21 * v1 + g.a22 * v2;
        const double len = std::sqrt(std::norm(w1) + std::norm(w2));
        if (len == 0.0) {
            return 0.0;
        }
        lambda = len / std::sqrt(std::norm(v1) + std::norm(v2));
        v1 = w1 / len;
        v2 = w2 / len;
    }
    return std::sqrt(lambda);
}

/// A random matrix rescaled to operator norm uniform in [0, max_norm).
inline Matrix2 random_contraction(std::mt19937_64& rng, double max_norm = 0.95) {
    const Matrix2 m = random_matrix(rng, 1.0);
    const double n = power_norm(m);
    return m * Complex(max_norm * random_unit(rng) / n);
}

/// Inequality (ii), evaluated inline for use as a reference.
inline double inequality_margin(const TetraPoint& x) {
    return (1.0 - std::norm(x.x2)) - std::abs(x.x1 - std::conj(x.x2) * x.x3) - std::abs(x.x1 * x.x2 - x.x3);
}

/// The four closed-form predicates accept x, or x sits inside the boundary band.
inline bool formula_accepts(const TetraPoint& x, double band = 1e-6) {
    const Verdict ii = in_e_inequality(x);
    if (std::abs(ii.margin) < band) {
        return true;
    }
    return ii.inside && in_e_lft(x).inside && in_e_symmetric(x).inside && in_e_beta(x).inside;
}

}  // namespace tetra::testing
