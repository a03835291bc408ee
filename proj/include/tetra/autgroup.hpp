#pragma once

// The automorphism group of the tetrablock, in the normal form L_u R_v F^nu.
//
// Points x correspond to linear fractional maps Psi(., x). The diamond product
// realizes composition, Psi(., x <> y) = Psi(., x) o Psi(., y), and a disc
// automorphism u acts on the left by tau(u) <> x and on the right by x <> tau(u).

#include <cstdint>
#include <random>

#include "tetra/numerics.hpp"

namespace tetra {

/// x <> y. Throws PoleError when x2 y1 = 1.
TetraPoint diamond(const TetraPoint& x, const TetraPoint& y);

/// The point whose linear fractional map is u: Psi(., tau(u)) = u.
TetraPoint tau(const DiscAutomorphism& u);

TetraPoint act_left(const DiscAutomorphism& u, const TetraPoint& x);
TetraPoint act_right(const TetraPoint& x, const DiscAutomorphism& u);

/// The involution u -> u_* with F o L_u = R_{u_*} o F.
DiscAutomorphism star(const DiscAutomorphism& u);

/// x -> L_upsilon(R_chi(F^flip(x))): the flip acts first, then the right
/// factor, then the left factor.
struct TetraAutomorphism {
    DiscAutomorphism upsilon;
    DiscAutomorphism chi;
    bool flip = false;

    static TetraAutomorphism identity() { return {}; }
    static TetraAutomorphism pure_flip() { return {{}, {}, true}; }
    static TetraAutomorphism left(const DiscAutomorphism& u) { return {u, {}, false}; }
    static TetraAutomorphism right(const DiscAutomorphism& u) { return {{}, u, false}; }
};

TetraPoint apply(const TetraAutomorphism& g, const TetraPoint& x);

/// Normal form of g o h.
TetraAutomorphism compose(const TetraAutomorphism& g, const TetraAutomorphism& h);

TetraAutomorphism inverse(const TetraAutomorphism& g);

/// Uniform unimodular omegas, alphas uniform in the disc of radius 0.95, and a
/// fair flip bit.
TetraAutomorphism random_automorphism(std::mt19937_64& rng);

/// Agreement of two group elements as maps, on a fixed set of sample points.
double map_distance(const TetraAutomorphism& g, const TetraAutomorphism& h);

}  // namespace tetra
