#pragma once

// Membership tests for the tetrablock
//
//   E = { x in C^3 : 1 - x1 z - x2 w + x3 z w != 0 for all |z|, |w| <= 1 }.
//
// Five characterizations are implemented independently so that they can be
// cross-checked against each other: the defining condition (sampled), the
// modulus inequality, the linear-fractional supremum, the symmetric-contraction
// lift, and the beta-parametrization.

#include "tetra/numerics.hpp"

namespace tetra {

struct MembershipTolerances {
    double triangular = 1e-10;     // |x1 x2 - x3| at or below this counts as triangular
    double boundary_band = 1e-6;   // |margin| below this flags a point as borderline
    double definition = 1e-9;      // min |1 - x1 z - x2 w + x3 z w| must exceed this
    int grid = 200;                // torus grid resolution for the defining condition
};

struct Verdict {
    bool inside = false;
    double margin = 0.0;
};

struct DefinitionVerdict {
    bool inside = false;
    double min_modulus = 0.0;
};

bool is_triangular(const TetraPoint& x, double tol = 1e-10);

/// |x1 - conj(x2) x3| + |x1 x2 - x3| < 1 - |x2|^2, with margin (rhs - lhs).
Verdict in_e_inequality(const TetraPoint& x);

/// sup |Psi(., x)| < 1 over the disc (plus |x2| < 1 for triangular x).
Verdict in_e_lft(const TetraPoint& x, double triangular_tol = 1e-10);

/// x = pi(A) for some symmetric strict contraction A.
Verdict in_e_symmetric(const TetraPoint& x);

/// x = (b1 + conj(b2) x3, b2 + conj(b1) x3, x3) with |b1| + |b2| < 1.
Verdict in_e_beta(const TetraPoint& x);

/// Defining condition, sampled on the closed bidisc and then locally refined.
/// A one-sided test: the returned minimum is attained at actual bidisc points,
/// so it bounds the true minimum from above.
DefinitionVerdict in_e_definition(const TetraPoint& x, int grid_size, double tol = 1e-9);

/// Pure grid minimum of |1 - x1 z - x2 w + x3 z w|: an n x n torus grid plus 8
/// interior radial shells in each variable (the other variable minimized in
/// closed form). Nested grids give non-increasing values as n doubles.
double bidisc_grid_min(const TetraPoint& x, int n);

/// x1 = conj(x2) x3, |x2| <= 1, |x3| = 1 within `tol`.
bool in_distinguished_boundary(const TetraPoint& x, double tol = 1e-10);

struct MembershipReport {
    Verdict definition;  // margin holds the sampled minimum modulus
    Verdict inequality;
    Verdict lft;
    Verdict symmetric;
    Verdict beta;
    bool consensus = false;   // all five verdicts agree
    bool borderline = false;  // some margin lies inside the boundary band
    bool inside = false;      // verdict of the modulus inequality
};

MembershipReport classify(const TetraPoint& x, const MembershipTolerances& tol = {});

}  // namespace tetra
