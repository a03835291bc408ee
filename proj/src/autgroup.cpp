#include "tetra/autgroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tetra/random.hpp"

namespace tetra {

TetraPoint diamond(const TetraPoint& x, const TetraPoint& y) {
    const Complex den = 1.0 - x.x2 * y.x1;
    if (std::abs(den) < 1e-15) {
        throw PoleError("diamond: product undefined (x2 y1 = 1)");
    }
    return {(x.x1 - x.x3 * y.x1) / den, (y.x2 - x.x2 * y.x3) / den, (x.x1 * y.x2 - x.x3 * y.x3) / den};
}

TetraPoint tau(const DiscAutomorphism& u) { return {u.omega * u.alpha, std::conj(u.alpha), u.omega}; }

TetraPoint act_left(const DiscAutomorphism& u, const TetraPoint& x) { return diamond(tau(u), x); }

TetraPoint act_right(const TetraPoint& x, const DiscAutomorphism& u) { return diamond(x, tau(u)); }

DiscAutomorphism star(const DiscAutomorphism& u) {
    // tau(u_*) = flip(tau(u))
    return {u.omega, std::conj(u.omega) * std::conj(u.alpha)};
}

TetraPoint apply(const TetraAutomorphism& g, const TetraPoint& x) {
    const TetraPoint f = g.flip ? flip_point(x) : x;
    return act_left(g.upsilon, act_right(f, g.chi));
}

TetraAutomorphism compose(const TetraAutomorphism& g, const TetraAutomorphism& h) {
    // L_a R_b F^m L_c R_d F^n, with L_a L_c = L_{a o c}, R_b R_d = R_{d o b}
    // and F L_c R_d = L_{d*} R_{c*} F.
    if (!g.flip) {
        return {disc_compose(g.upsilon, h.upsilon), disc_compose(h.chi, g.chi), h.flip};
    }
    return {disc_compose(g.upsilon, star(h.chi)), disc_compose(star(h.upsilon), g.chi), !h.flip};
}

TetraAutomorphism inverse(const TetraAutomorphism& g) {
    const DiscAutomorphism ui = disc_inverse(g.upsilon);
    const DiscAutomorphism ci = disc_inverse(g.chi);
    if (!g.flip) {
        return {ui, ci, false};
    }
    // F R_{c^-1} L_{u^-1} = L_{(c^-1)*} R_{(u^-1)*} F
    return {star(ci), star(ui), true};
}

TetraAutomorphism random_automorphism(std::mt19937_64& rng) {
    auto disc = [&rng]() {
        return DiscAutomorphism{random_unimodular(rng), random_in_disc(rng, 0.95)};
    };
    TetraAutomorphism g;
    g.upsilon = disc();
    g.chi = disc();
    g.flip = random_bit(rng);
    return g;
}

double map_distance(const TetraAutomorphism& g, const TetraAutomorphism& h) {
    static const std::array<TetraPoint, 6> probes{{
        {0.0, 0.0, 0.0},
        {0.0, 0.0, 0.5},
        {{0.3, 0.0}, {0.0, 0.1}, {0.2, 0.0}},
        {{0.2, 0.1}, {-0.3, 0.0}, {0.1, -0.4}},
        {{-0.4, 0.2}, {0.1, 0.3}, {0.05, -0.1}},
        {{0.1, -0.3}, {0.25, 0.0}, {0.0, 0.2}},
    }};
    double worst = 0.0;
    for (const TetraPoint& x : probes) {
        worst = std::max(worst, distance(apply(g, x), apply(h, x)));
    }
    return worst;
}

}  // namespace tetra
