#pragma once

// Analytic discs phi: D -> E with phi(0) = 0 and prescribed phi'(0) = y.
//
// A disc exists iff max(|y1|, |y2|) + |y3| <= 1. Two constructions are given:
// the closed-form rational map and the matricial one, phi = pi o F with
// F = M_{-Z}(lambda Y(xi)) a Schur-class 2x2 function.

#include <optional>

#include "tetra/numerics.hpp"

namespace tetra {

struct TangentTarget {
    Complex y1{}, y2{}, y3{};
};

inline TangentTarget flip(const TangentTarget& y) { return {y.y2, y.y1, y.y3}; }

constexpr double kFeasibilityTol = 1e-12;

/// max(|y1|, |y2|) + |y3|
double indicatrix_norm(const TangentTarget& y);

bool feasible(const TangentTarget& y);

/// The coefficient C(y) of the closed-form disc.
/// Throws std::invalid_argument for infeasible y.
Complex c_coefficient(const TangentTarget& y);

/// phi(lambda) = lambda / (1 + lambda conj(y3) C) (y1, y2, C lambda + y3).
/// Accepts the closed disc so that boundary values can be inspected.
TetraPoint phi_eval(const TangentTarget& y, Complex lambda);

/// Data of the matricial construction, stored for the dominant orientation
/// (|y1| >= |y2| after an optional flip).
struct MatricialData {
    double zeta = 0.0;   // sqrt(1 - |y_dom|)
    Complex xi{};        // free entry of Y chosen by Parrott's theorem
    Matrix2 z_mat;       // F(0)
    Matrix2 y_mat;       // Y(xi) = (M_Z o F)'(0)
};

struct SchwarzSolution {
    TangentTarget y;
    bool flipped = false;  // true when |y1| < |y2|
    Complex c{};
    /// Empty when y1 = y2 = 0, where phi(lambda) = (0, 0, lambda y3).
    std::optional<MatricialData> matricial;

    bool degenerate() const { return !matricial.has_value(); }
};

SchwarzSolution build_matricial(const TangentTarget& y);

/// F(lambda) in the orientation of the original target, so that
/// pi(F(lambda)) = phi(lambda). Throws std::logic_error for degenerate solutions.
Matrix2 f_eval(const SchwarzSolution& sol, Complex lambda);

/// Left inverse x -> omega1 Psi(omega, x) of an extremal disc (indicatrix norm 1).
/// When |y1| < |y2| the flip is applied to x first.
struct ExtremalLeftInverse {
    Complex omega{};
    Complex omega1{};
    bool flipped = false;

    Complex operator()(const TetraPoint& x) const;
};

ExtremalLeftInverse extremal_left_inverse(const TangentTarget& y, double tol = 1e-10);

/// |y1| = |y2| = 1 - |y3| within `tol`.
bool is_doubly_extremal(const TangentTarget& y, double tol = 1e-10);

/// Wedge term A1 ^ B2 + A2 ^ B1 of the column pairs of a and b.
Complex mu_wedge(const Matrix2& a, const Matrix2& b);

/// Solvability of the mu-synthesis problem F(0) = a, F'(0) = b, for a
/// strictly triangular nonzero and b non-diagonal.
bool mu_feasible(const Matrix2& a, const Matrix2& b);

}  // namespace tetra
