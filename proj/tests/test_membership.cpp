#include <doctest.h>

#include "support.hpp"
#include "tetra/foliation.hpp"
#include "tetra/oracle.hpp"

using namespace tetra;
using namespace tetra::testing;

namespace {
const TetraPoint kOrigin{0.0, 0.0, 0.0};
const TetraPoint kEdge{1.0, 0.0, 0.0};
const TetraPoint kHalf{0.5, 0.5, 0.25};
}  // namespace

TEST_CASE("in_e_inequality examples") {
    CHECK(in_e_inequality(kOrigin).inside);
    CHECK(in_e_inequality(kOrigin).margin == 1.0);
    CHECK_FALSE(in_e_inequality(kEdge).inside);
    CHECK(in_e_inequality(kEdge).margin == 0.0);
    CHECK(in_e_inequality(kHalf).inside);
    CHECK(in_e_inequality(kHalf).margin == doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("in_e_lft examples") {
    CHECK(in_e_lft({0.3, 0.2, 0.06}).inside);
    const Verdict v = in_e_lft({0.0, 0.0, 0.9});
    CHECK(v.inside);
    CHECK(v.margin == doctest::Approx(0.1).epsilon(1e-13));
    CHECK_FALSE(in_e_lft({0.0, 2.0, 0.5}).inside);
    CHECK_FALSE(in_e_lft({1.0, 0.5, 0.5}).inside);
}

TEST_CASE("in_e_symmetric examples") {
    CHECK(in_e_symmetric(kOrigin).inside);
    const Verdict perm = in_e_symmetric({0.0, 0.0, -1.0});
    CHECK_FALSE(perm.inside);
    CHECK(std::abs(perm.margin) <= 1e-15);
    const Verdict half = in_e_symmetric(kHalf);
    CHECK(half.inside);
    CHECK(half.margin == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("in_e_beta examples") {
    CHECK(in_e_beta({0.0, 0.0, Complex(0.3, -0.6)}).inside);
    CHECK_FALSE(in_e_beta({0.0, 0.0, 1.0}).inside);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const TetraPoint x = random_interior_point(rng);
        CHECK(in_e_beta(x).inside);
        const BetaLeaf b = beta_coords(x).leaf;
        CHECK(distance(leaf_eval(b, x.x3), x) <= 1e-12);
    }
}

TEST_CASE("in_e_definition examples") {
    const DefinitionVerdict o = in_e_definition(kOrigin, 64);
    CHECK(o.inside);
    CHECK(o.min_modulus == doctest::Approx(1.0).epsilon(1e-15));
    const DefinitionVerdict e = in_e_definition(kEdge, 64);
    CHECK_FALSE(e.inside);
    CHECK(e.min_modulus <= 1e-12);
    const DefinitionVerdict h = in_e_definition(kHalf, 64);
    CHECK(h.inside);
    CHECK(h.min_modulus > 0.0);
}

TEST_CASE("def_min_modulus: grid examples and nested-grid monotonicity") {
    CHECK(def_min_modulus(kOrigin, 16) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(def_min_modulus(kEdge, 16) <= 2.0 * std::numbers::pi / 16);
    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i) {
        const TetraPoint x = (i % 2 == 0) ? random_interior_point(rng) : random_box_point(rng);
        double prev = def_min_modulus(x, 8);
        for (int n = 16; n <= 128; n *= 2) {
            const double cur = def_min_modulus(x, n);
            CHECK(cur <= prev + 1e-15);
            prev = cur;
        }
        // the grid minimum is attained at bidisc points, so the refined value cannot exceed it
        CHECK(in_e_definition(x, 32).min_modulus <= def_min_modulus(x, 32) + 1e-15);
    }
}

TEST_CASE("is_triangular and in_distinguished_boundary examples") {
    CHECK(is_triangular(kOrigin));
    CHECK(is_triangular(kHalf));
    CHECK_FALSE(is_triangular({0.0, 0.0, 0.5}));
    CHECK(in_distinguished_boundary({0.0, 0.0, 1.0}));
    CHECK_FALSE(in_distinguished_boundary({0.0, 0.0, 0.5}));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const Complex x2 = random_in_disc(rng, 1.0);
        const Complex e = random_unimodular(rng);
        CHECK(in_distinguished_boundary({std::conj(x2) * e, x2, e}));
    }
}

TEST_CASE("classify examples") {
    const MembershipReport o = classify(kOrigin);
    CHECK(o.consensus);
    CHECK(o.inside);
    CHECK((o.definition.inside && o.inequality.inside && o.lft.inside && o.symmetric.inside && o.beta.inside));
    const MembershipReport e = classify(kEdge);
    CHECK(e.consensus);
    CHECK_FALSE(e.inside);
    CHECK_FALSE((e.definition.inside || e.inequality.inside || e.lft.inside || e.symmetric.inside || e.beta.inside));
    CHECK(e.borderline);
    const MembershipReport h = classify(kHalf);
    CHECK(h.consensus);
    CHECK(h.inside);
    CHECK_FALSE(h.borderline);
}

TEST_CASE("consensus flag is exactly verdict agreement") {
    std::mt19937_64 rng(24);
    MembershipTolerances tol;
    tol.grid = 48;
    for (int i = 0; i < 300; ++i) {
        const MembershipReport r = classify(random_box_point(rng), tol);
        const bool v = r.definition.inside;
        const bool agree = r.inequality.inside == v && r.lft.inside == v && r.symmetric.inside == v && r.beta.inside == v;
        CHECK(r.consensus == agree);
    }
}

TEST_CASE("formula predicates agree away from the boundary, and are flip-symmetric") {
    std::mt19937_64 rng(25);
    int inside = 0;
    int outside = 0;
    for (int i = 0; i < 4000; ++i) {
        const TetraPoint x = random_box_point(rng);
        const Verdict ii = in_e_inequality(x);
        CHECK(ii.margin == doctest::Approx(inequality_margin(x)).epsilon(1e-15));
        if (std::abs(ii.margin) <= 1e-6) {
            continue;
        }
        (ii.inside ? inside : outside)++;
        CHECK(in_e_lft(x).inside == ii.inside);
        CHECK(in_e_symmetric(x).inside == ii.inside);
        CHECK(in_e_beta(x).inside == ii.inside);
        const Verdict flipped = in_e_inequality(flip_point(x));
        if (std::abs(flipped.margin) > 1e-6) {
            CHECK(flipped.inside == ii.inside);
        }
        if (ii.inside) {
            CHECK(std::abs(x.x1) < 1.0);
            CHECK(std::abs(x.x2) < 1.0);
            CHECK(std::abs(x.x3) < 1.0);
        }
    }
    CHECK(inside > 0);
    CHECK(outside > 0);
}

TEST_CASE("leaf points near the admissibility edge are accepted by every predicate") {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 300; ++i) {
        const double total = 1.0 - 1e-6 - 0.2 * random_unit(rng);
        const double share = random_unit(rng);
        const BetaLeaf b{std::polar(total * share, 2.0 * std::numbers::pi * random_unit(rng)),
                         std::polar(total * (1.0 - share), 2.0 * std::numbers::pi * random_unit(rng))};
        const Complex lam = std::polar((1.0 - 1e-6) * std::sqrt(random_unit(rng)), 2.0 * std::numbers::pi * random_unit(rng));
        CHECK(formula_accepts(leaf_eval(b, lam)));
    }
}

TEST_CASE("random interior points pass all five tests") {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 200; ++i) {
        const MembershipReport r = classify(random_interior_point(rng));
        CHECK(r.inside);
        CHECK(r.consensus);
    }
}
