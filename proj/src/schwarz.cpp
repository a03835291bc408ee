#include "tetra/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tetra {

namespace {

constexpr double kShapeTol = 1e-12;

void require_feasible(const TangentTarget& y, const char* where) {
    if (!feasible(y)) {
        throw std::invalid_argument(std::string(where) + ": target violates max(|y1|,|y2|) + |y3| <= 1");
    }
}

// C(y) for |y2| <= |y1|, y1 != 0.
Complex c_dominant(const TangentTarget& y) {
    const double m = std::abs(y.y1);
    const double gap = std::max(1.0 - m, 0.0) - std::norm(y.y3);
    if (gap <= 0.0) {
        // only reachable with |y1| = 1 and y3 = 0; continuous extension
        return y.y1 * y.y2;
    }
    return y.y1 * y.y2 * std::max(1.0 - m, 0.0) / (m * gap);
}

}  // namespace

double indicatrix_norm(const TangentTarget& y) {
    return std::max(std::abs(y.y1), std::abs(y.y2)) + std::abs(y.y3);
}

bool feasible(const TangentTarget& y) { return indicatrix_norm(y) <= 1.0 + kFeasibilityTol; }

Complex c_coefficient(const TangentTarget& y) {
    require_feasible(y, "c_coefficient");
    if (y.y1 == 0.0 && y.y2 == 0.0) {
        return 0.0;
    }
    // the formula is symmetric in (y1, y2) once the dominant entry is chosen
    return std::abs(y.y1) >= std::abs(y.y2) ? c_dominant(y) : c_dominant(flip(y));
}

TetraPoint phi_eval(const TangentTarget& y, Complex lambda) {
    if (std::abs(lambda) > 1.0 + 1e-12) {
        throw std::invalid_argument("phi_eval: lambda outside the closed unit disc");
    }
    const Complex c = c_coefficient(y);
    const Complex den = 1.0 + lambda * std::conj(y.y3) * c;
    if (std::abs(den) < 1e-15) {
        throw PoleError("phi_eval: pole of the prefactor");
    }
    const Complex s = lambda / den;
    return {s * y.y1, s * y.y2, s * (c * lambda + y.y3)};
}

SchwarzSolution build_matricial(const TangentTarget& y) {
    require_feasible(y, "build_matricial");
    SchwarzSolution sol;
    sol.y = y;
    sol.c = c_coefficient(y);
    if (y.y1 == 0.0 && y.y2 == 0.0) {
        return sol;
    }
    sol.flipped = std::abs(y.y1) < std::abs(y.y2);
    const TangentTarget d = sol.flipped ? flip(y) : y;
    const double m = std::abs(d.y1);
    const double root_m = std::sqrt(m);

    MatricialData md;
    md.zeta = std::sqrt(std::max(1.0 - m, 0.0));
    const double gap = m * (std::max(1.0 - m, 0.0) - std::norm(d.y3));
    md.xi = gap > 0.0 ? d.y1 * d.y2 * std::conj(d.y3) * md.zeta / gap : Complex{};
    md.z_mat = Matrix2{0.0, md.zeta, 0.0, 0.0};
    // |y3| <= zeta^2 forces y3/zeta -> 0 as zeta -> 0
    const Complex lower = md.zeta > 0.0 ? -d.y3 / md.zeta : Complex{};
    md.y_mat = Matrix2{d.y1 / root_m, md.xi, lower, d.y2 / root_m};
    sol.matricial = md;
    return sol;
}

Matrix2 f_eval(const SchwarzSolution& sol, Complex lambda) {
    if (sol.degenerate()) {
        throw std::logic_error("f_eval: degenerate solution has no matricial lift");
    }
    if (std::abs(lambda) > 1.0 + 1e-12) {
        throw std::invalid_argument("f_eval: lambda outside the closed unit disc");
    }
    const MatricialData& md = *sol.matricial;
    const TangentTarget d = sol.flipped ? flip(sol.y) : sol.y;
    const double zeta = md.zeta;
    const Complex w = (zeta > 0.0 ? -d.y3 / zeta : Complex{}) - lambda * zeta * sol.c;
    const Complex den = 1.0 + lambda * md.xi * zeta;
    if (std::abs(den) < 1e-15) {
        throw PoleError("f_eval: pole");
    }
    const Complex s = lambda / den;
    Matrix2 f = md.z_mat + s * Matrix2{d.y1, md.xi * std::abs(d.y1), w, d.y2};
    if (sol.flipped) {
        // conjugate by the coordinate swap: exchanges the diagonal, keeps det
        f = Matrix2{f.a22, f.a21, f.a12, f.a11};
    }
    return f;
}

Complex ExtremalLeftInverse::operator()(const TetraPoint& x) const {
    return omega1 * psi(omega, flipped ? flip_point(x) : x);
}

ExtremalLeftInverse extremal_left_inverse(const TangentTarget& y, double tol) {
    if (std::abs(indicatrix_norm(y) - 1.0) > tol) {
        throw std::invalid_argument("extremal_left_inverse: target is not extremal");
    }
    if (y.y1 == 0.0 && y.y2 == 0.0) {
        throw std::invalid_argument("extremal_left_inverse: requires y1 or y2 nonzero");
    }
    ExtremalLeftInverse inv;
    inv.flipped = std::abs(y.y1) < std::abs(y.y2);
    const TangentTarget d = inv.flipped ? flip(y) : y;
    inv.omega1 = std::conj(d.y1) / std::abs(d.y1);
    const Complex omega3 = d.y3 == 0.0 ? Complex{1.0} : std::conj(d.y3) / std::abs(d.y3);
    inv.omega = -std::conj(inv.omega1) * omega3;
    return inv;
}

bool is_doubly_extremal(const TangentTarget& y, double tol) {
    const double r = 1.0 - std::abs(y.y3);
    return std::abs(std::abs(y.y1) - r) <= tol && std::abs(std::abs(y.y2) - r) <= tol;
}

Complex mu_wedge(const Matrix2& a, const Matrix2& b) {
    // det[A1 B2] + det[A2 B1]
    return (a.a11 * b.a22 - a.a21 * b.a12) + (a.a12 * b.a21 - a.a22 * b.a11);
}

bool mu_feasible(const Matrix2& a, const Matrix2& b) {
    const bool zero_diagonal = std::abs(a.a11) <= kShapeTol && std::abs(a.a22) <= kShapeTol;
    const bool one_sided = std::min(std::abs(a.a12), std::abs(a.a21)) <= kShapeTol;
    const bool nonzero = std::max(std::abs(a.a12), std::abs(a.a21)) > kShapeTol;
    if (!(zero_diagonal && one_sided && nonzero)) {
        throw std::invalid_argument("mu_feasible: a must be strictly triangular and nonzero");
    }
    if (std::max(std::abs(b.a12), std::abs(b.a21)) <= kShapeTol) {
        throw std::invalid_argument("mu_feasible: b must not be diagonal");
    }
    return std::max(std::abs(b.a11), std::abs(b.a22)) + std::abs(mu_wedge(a, b)) <= 1.0 + kFeasibilityTol;
}

}  // namespace tetra
