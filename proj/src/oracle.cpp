#include "tetra/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "tetra/autgroup.hpp"
#include "tetra/foliation.hpp"
#include "tetra/random.hpp"

namespace tetra {

namespace {

// Runs body(i) for i in [0, count) on all hardware threads. Results must be
// written to per-index slots so that the reduction order is fixed.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (std::size_t i = next++; i < count; i = next++) {
            body(i);
        }
    };
    if (workers == 1) {
        run();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(run);
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

enum Property : std::size_t {
    kMembershipPreserved,
    kTriangularPreserved,
    kNonTriangularPreserved,
    kDiamondHomomorphism,
    kLeftActionComposition,
    kActionsCommute,
    kStarRelation,
    kStarInvolution,
    kFlipDiamond,
    kComposePointwise,
    kInversePointwise,
    kTransportRight,
    kTransportLeft,
    kRadiusInvariance,
    kNormalizingImage,
    kPropertyCount
};

struct PropertySpec {
    const char* name;
    double tolerance;
};

constexpr std::array<PropertySpec, kPropertyCount> kProperties{{
    {"membership_preserved", 0.0},
    {"triangular_preserved", 1e-9},
    {"non_triangular_preserved", 0.0},
    {"diamond_homomorphism", 1e-11},
    {"left_action_composition", 1e-11},
    {"actions_commute", 1e-11},
    {"star_relation", 1e-12},
    {"star_involution", 1e-12},
    {"flip_diamond", 1e-12},
    {"compose_pointwise", 1e-10},
    {"inverse_pointwise", 1e-10},
    {"leaf_transport_right", 1e-10},
    {"leaf_transport_left", 1e-10},
    {"canonical_radius_invariance", 1e-9},
    {"normalizing_image", 1e-9},
}};

struct SampleOutcome {
    std::array<double, kPropertyCount> deviation{};
    TetraPoint point;
};

SampleOutcome invariance_sample(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SampleOutcome out;
    auto& dev = out.deviation;

    const TetraPoint x = random_interior_point(rng);
    const TetraPoint y = random_interior_point(rng);
    const Complex t1 = random_in_disc(rng, 0.95);
    const Complex t2 = random_in_disc(rng, 0.95);
    const TetraPoint tri{t1, t2, t1 * t2};
    const TetraAutomorphism g = random_automorphism(rng);
    const TetraAutomorphism h = random_automorphism(rng);
    const DiscAutomorphism u = g.upsilon;
    const DiscAutomorphism v = g.chi;
    std::array<Complex, 4> zs{};
    for (auto& z : zs) {
        z = random_in_disc(rng, 1.0);
    }
    out.point = x;

    auto guarded = [&dev](Property p, auto&& fn) {
        try {
            dev[p] = fn();
        } catch (const std::exception&) {
            dev[p] = std::numeric_limits<double>::infinity();
        }
    };

    guarded(kMembershipPreserved, [&] { return std::max(0.0, -in_e_inequality(apply(g, x)).margin); });
    guarded(kTriangularPreserved, [&] {
        const TetraPoint img = apply(g, tri);
        return std::abs(img.x1 * img.x2 - img.x3);
    });
    guarded(kNonTriangularPreserved, [&] {
        if (is_triangular(x, 1e-6)) {
            return 0.0;
        }
        return is_triangular(apply(g, x), 1e-9) ? 1.0 : 0.0;
    });
    guarded(kDiamondHomomorphism, [&] {
        double worst = 0.0;
        const TetraPoint xy = diamond(x, y);
        for (const Complex z : zs) {
            worst = std::max(worst, std::abs(psi(z, xy) - psi(psi(z, y), x)));
        }
        return worst;
    });
    guarded(kLeftActionComposition,
            [&] { return distance(act_left(u, act_left(v, x)), act_left(disc_compose(u, v), x)); });
    guarded(kActionsCommute, [&] { return distance(act_left(u, act_right(x, v)), act_right(act_left(u, x), v)); });
    guarded(kStarRelation, [&] { return distance(flip_point(act_left(u, x)), act_right(flip_point(x), star(u))); });
    guarded(kStarInvolution, [&] {
        const DiscAutomorphism ss = star(star(u));
        return std::max(std::abs(ss.omega - u.omega), std::abs(ss.alpha - u.alpha));
    });
    guarded(kFlipDiamond, [&] { return distance(flip_point(diamond(x, y)), diamond(flip_point(y), flip_point(x))); });
    guarded(kComposePointwise, [&] { return distance(apply(compose(g, h), x), apply(g, apply(h, x))); });
    guarded(kInversePointwise, [&] { return distance(apply(inverse(g), apply(g, x)), x); });
    guarded(kTransportRight, [&] {
        const BetaLeaf leaf = beta_coords(x).leaf;
        const LeafTransport tr = transport_right(leaf, v);
        double worst = 0.0;
        for (const Complex z : zs) {
            const Complex lam = 0.98 * z;
            worst = std::max(worst, distance(act_right(leaf_eval(leaf, lam), v), leaf_eval(tr.target, tr.parameter(lam))));
        }
        return worst;
    });
    guarded(kTransportLeft, [&] {
        const BetaLeaf leaf = beta_coords(x).leaf;
        const LeafTransport tr = transport_left(u, leaf);
        double worst = 0.0;
        for (const Complex z : zs) {
            const Complex lam = 0.98 * z;
            worst = std::max(worst, distance(act_left(u, leaf_eval(leaf, lam)), leaf_eval(tr.target, tr.parameter(lam))));
        }
        return worst;
    });
    guarded(kRadiusInvariance, [&] { return std::abs(canonical_radius(apply(g, x)) - canonical_radius(x)); });
    guarded(kNormalizingImage, [&] {
        const double r = canonical_radius(x);
        return distance(apply(normalizing_automorphism(x), x), TetraPoint{0.0, 0.0, r});
    });
    return out;
}

}  // namespace

double def_min_modulus(const TetraPoint& x, int n) { return bidisc_grid_min(x, n); }

double sup_psi_sampled(const TetraPoint& x, int n) {
    if (n < 1) {
        throw std::invalid_argument("sup_psi_sampled: need at least one sample");
    }
    if (!(std::abs(x.x2) < 1.0) || is_triangular(x)) {
        throw std::domain_error("sup_psi_sampled: requires |x2| < 1 and a non-triangular point");
    }
    double best = 0.0;
    for (int k = 0; k < n; ++k) {
        best = std::max(best, std::abs(psi(std::polar(1.0, 2.0 * std::numbers::pi * k / n), x)));
    }
    return best;
}

TetraPoint random_interior_point(std::mt19937_64& rng) {
    constexpr double kCap = 0.98;
    Complex b1, b2;
    do {
        b1 = random_in_disc(rng, kCap);
        b2 = random_in_disc(rng, kCap);
    } while (std::abs(b1) + std::abs(b2) > kCap);
    return leaf_eval({b1, b2}, random_in_disc(rng, kCap));
}

TetraPoint random_box_point(std::mt19937_64& rng) {
    auto c = [&rng]() { return Complex(random_range(rng, -1.2, 1.2), random_range(rng, -1.2, 1.2)); };
    TetraPoint x;
    x.x1 = c();
    x.x2 = c();
    x.x3 = c();
    return x;
}

SuiteReport cross_validate(const CrossValidateOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<TetraPoint> points(opts.count);
    std::vector<MembershipReport> reports(opts.count);
    parallel_for(opts.count, [&](std::size_t i) {
        std::mt19937_64 rng(derive_seed(opts.seed, i));
        points[i] = (i % 2 == 0) ? random_interior_point(rng) : random_box_point(rng);
        reports[i] = classify(points[i], opts.tolerances);
    });

    SuiteReport rep;
    rep.suite = "cross_validate";
    rep.seed = opts.seed;
    rep.samples_run = opts.count;
    for (std::size_t i = 0; i < opts.count; ++i) {
        const MembershipReport& r = reports[i];
        const double margin = r.inequality.margin;
        if (std::abs(margin) <= opts.tolerances.boundary_band) {
            ++rep.borderline;
            continue;
        }
        const bool v = r.inequality.inside;
        const bool formulas_agree = r.lft.inside == v && r.symmetric.inside == v && r.beta.inside == v;
        const bool definition_conflict = std::abs(margin) > opts.definition_band && r.definition.inside != v;
        if (!formulas_agree || definition_conflict) {
            rep.disagreements.push_back(
                {i, formulas_agree ? "definition" : "formula", points[i], std::abs(margin), r});
            rep.worst_deviation = std::max(rep.worst_deviation, std::abs(margin));
        }
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

SuiteReport invariance_suite(std::size_t count, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<SampleOutcome> outcomes(count);
    parallel_for(count, [&](std::size_t i) { outcomes[i] = invariance_sample(derive_seed(seed, i)); });

    SuiteReport rep;
    rep.suite = "invariance";
    rep.seed = seed;
    rep.samples_run = count;
    for (const PropertySpec& spec : kProperties) {
        rep.properties.push_back({spec.name, spec.tolerance, 0.0, 0, 0});
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t p = 0; p < kPropertyCount; ++p) {
            const double d = outcomes[i].deviation[p];
            PropertyStat& stat = rep.properties[p];
            ++stat.checks;
            stat.worst = std::max(stat.worst, d);
            if (!(d <= stat.tolerance)) {
                ++stat.violations;
                rep.disagreements.push_back({i, stat.name, outcomes[i].point, d, std::nullopt});
            }
        }
    }
    for (const PropertyStat& stat : rep.properties) {
        const double ratio = stat.tolerance > 0.0 ? stat.worst / stat.tolerance : (stat.worst > 0.0 ? stat.worst : 0.0);
        rep.worst_deviation = std::max(rep.worst_deviation, ratio);
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

}  // namespace tetra
