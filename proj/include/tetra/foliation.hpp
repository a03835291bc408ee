#pragma once

// The beta-foliation of the tetrablock by the complex geodesics
//
//   lambda -> (b1 + conj(b2) lambda, b2 + conj(b1) lambda, lambda),  |b1| + |b2| < 1,
//
// and the orbit invariant it yields: every point is equivalent under Aut E to
// exactly one point (0, 0, r) with r in [0, 1).

#include "tetra/autgroup.hpp"
#include "tetra/numerics.hpp"

namespace tetra {

/// Raised for points outside the domain of an operation (e.g. |x3| >= 1).
class NotInDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct BetaLeaf {
    Complex beta1{}, beta2{};

    /// |beta1| + |beta2| < 1 - band.
    bool is_admissible(double band = 1e-6) const;
};

struct LeafPosition {
    BetaLeaf leaf;
    Complex lambda{};
};

/// Image of a leaf under a group action, with the induced parameter map
/// lambda -> eta (lambda + c) / (conj(c) lambda + 1).
struct LeafTransport {
    BetaLeaf target;
    Complex eta{1.0};
    Complex c{};

    Complex parameter(Complex lambda) const { return eta * (lambda + c) / (std::conj(c) * lambda + 1.0); }
};

/// The unique leaf through x and the parameter (= x3) locating x on it.
/// Throws NotInDomainError when |x3| >= 1.
LeafPosition beta_coords(const TetraPoint& x);

TetraPoint leaf_eval(const BetaLeaf& leaf, Complex lambda);

/// Leaf and parameter of leaf(lambda) . chi.
LeafTransport transport_right(const BetaLeaf& leaf, const DiscAutomorphism& chi);

/// Leaf and parameter of upsilon . leaf(lambda).
LeafTransport transport_left(const DiscAutomorphism& upsilon, const BetaLeaf& leaf);

struct NormalParams {
    Complex alpha{};
    Complex theta{};
};

/// Parameters of upsilon(z) = (z - alpha)/(conj(alpha) z - 1) and
/// chi(z) = (z - theta)/(conj(theta) z - 1) carrying the leaf (0, 0) onto `leaf`.
/// Throws NotInDomainError for leaves inside the boundary band.
NormalParams normal_params(const BetaLeaf& leaf);

/// The r in [0, 1) with (0, 0, r) in the orbit of x.
double canonical_radius(const TetraPoint& x);

/// A group element h with apply(h, x) = (0, 0, canonical_radius(x)).
TetraAutomorphism normalizing_automorphism(const TetraPoint& x);

bool same_orbit(const TetraPoint& x, const TetraPoint& y, double tol = 1e-8);

}  // namespace tetra
