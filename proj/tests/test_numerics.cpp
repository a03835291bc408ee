#include <doctest.h>

#include "support.hpp"
#include "tetra/oracle.hpp"

using namespace tetra;
using namespace tetra::testing;

TEST_CASE("op_norm examples") {
    CHECK(op_norm(Matrix2::identity()) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(op_norm({0.0, 2.0, 0.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(op_norm({1.0, 1.0, 1.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(op_norm(Matrix2::zero()) == 0.0);
}

TEST_CASE("op_norm matches power iteration, is unitarily invariant and submultiplicative") {
    std::mt19937_64 rng(11);
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 500; ++i) {
        const Matrix2 a = random_matrix(rng, 2.0);
        const Matrix2 b = random_matrix(rng, 2.0);
        const double na = op_norm(a);
        CHECK(std::abs(na - power_norm(a)) <= 1e-9 * (1.0 + na));
        const Complex ph = random_unimodular(rng);
        const Matrix2 u{s, s * ph, -s * std::conj(ph), s};
        CHECK(std::abs(op_norm(u * a * u.adjoint()) - na) <= 1e-12 * (1.0 + na));
        CHECK(op_norm(a * b) <= na * op_norm(b) * (1.0 + 1e-12) + 1e-15);
    }
}

TEST_CASE("psd_sqrt examples") {
    CHECK(max_abs_diff(psd_sqrt(Matrix2::identity()), Matrix2::identity()) <= 1e-15);
    CHECK(max_abs_diff(psd_sqrt(Matrix2::diag(4.0, 9.0)), Matrix2::diag(2.0, 3.0)) <= 1e-15);
    CHECK(max_abs_diff(psd_sqrt(Matrix2::zero()), Matrix2::zero()) <= 1e-15);
    const Complex zeta{0.3, -0.4};
    const Matrix2 z{0.0, zeta, 0.0, 0.0};
    CHECK(max_abs_diff(defect(z), Matrix2::diag(1.0, std::sqrt(1.0 - std::norm(zeta)))) <= 1e-15);
}

TEST_CASE("psd_sqrt squares back and rejects bad input") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        const Matrix2 a = random_matrix(rng, 1.5);
        const Matrix2 m = a.adjoint() * a;
        const Matrix2 r = psd_sqrt(m);
        CHECK(max_abs_diff(r * r, m) <= 1e-12);
        CHECK(max_abs_diff(r, r.adjoint()) <= 1e-14);
    }
    // rank one
    const Matrix2 p{1.0, 1.0, 1.0, 1.0};
    CHECK(max_abs_diff(psd_sqrt(p) * psd_sqrt(p), p) <= 1e-12);
    CHECK_THROWS_AS(psd_sqrt({1.0, 2.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(psd_sqrt(Matrix2::diag(1.0, -1.0)), std::invalid_argument);
}

TEST_CASE("mobius_matrix examples and properties") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const Matrix2 z = random_contraction(rng);
        const Matrix2 x = random_contraction(rng);
        CHECK(max_abs_diff(mobius_matrix(z, z), Matrix2::zero()) <= 1e-12);
        CHECK(max_abs_diff(mobius_matrix(Matrix2::zero(), x), x) <= 1e-15);
        const Matrix2 m = mobius_matrix(z, x);
        CHECK(op_norm(m) < 1.0);
        CHECK(max_abs_diff(mobius_matrix(-z, m), x) <= 1e-10);
    }
    CHECK_THROWS_AS(mobius_matrix(Matrix2::identity(), Matrix2::zero()), std::invalid_argument);
}

TEST_CASE("disc automorphism examples") {
    const Complex z{0.3, 0.2};
    CHECK(cdist(disc_apply({1.0, 0.0}, z), -z) <= 1e-16);
    CHECK(cdist(disc_apply({-1.0, 0.0}, z), z) <= 1e-16);
    const DiscAutomorphism u{Complex(0.6, 0.8), Complex(0.25, -0.5)};
    CHECK(std::abs(disc_apply(u, u.alpha)) == 0.0);
    CHECK(cdist(disc_apply(disc_inverse(u), 0.0), u.alpha) <= 1e-15);
    const DiscAutomorphism id = disc_inverse(DiscAutomorphism::identity());
    CHECK(cdist(disc_apply(id, z), z) <= 1e-16);
    CHECK(cdist(disc_apply(DiscAutomorphism::rotation({0.0, 1.0}), z), Complex(0.0, 1.0) * z) <= 1e-16);
}

TEST_CASE("disc automorphisms: circle preservation, composition and inversion pointwise") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 200; ++i) {
        const DiscAutomorphism u{random_unimodular(rng), random_in_disc(rng, 0.95)};
        const DiscAutomorphism v{random_unimodular(rng), random_in_disc(rng, 0.95)};
        const DiscAutomorphism uv = disc_compose(u, v);
        const DiscAutomorphism ui = disc_inverse(u);
        CHECK(uv.is_valid());
        for (int k = 0; k < 64; ++k) {
            CHECK(std::abs(std::abs(disc_apply(u, circle_point(k, 64))) - 1.0) <= 1e-12);
        }
        for (int k = 0; k < 32; ++k) {
            const Complex z = random_in_disc(rng, 1.0);
            CHECK(cdist(disc_apply(uv, z), disc_apply(u, disc_apply(v, z))) <= 1e-12);
            CHECK(cdist(disc_apply(u, disc_apply(ui, z)), z) <= 1e-12);
            CHECK(cdist(disc_apply(disc_compose(DiscAutomorphism::identity(), v), z), disc_apply(v, z)) <= 1e-12);
        }
    }
}

TEST_CASE("psi examples") {
    const TetraPoint x{Complex(0.2, 0.1), Complex(-0.3, 0.4), Complex(0.1, 0.1)};
    CHECK(psi(0.0, x) == x.x1);
    const TetraPoint tri{Complex(0.4, -0.2), Complex(0.3, 0.5), Complex(0.4, -0.2) * Complex(0.3, 0.5)};
    for (int k = 0; k < 16; ++k) {
        CHECK(cdist(psi(circle_point(k, 16, 0.9), tri), tri.x1) <= 1e-15);
    }
    CHECK(cdist(psi(1.0, {0.0, 0.0, 1.0}), -1.0) == 0.0);
    CHECK_THROWS_AS(psi(2.0, {0.0, 0.5, 0.0}), PoleError);
}

TEST_CASE("lft_sup_on_circle examples") {
    CHECK(lft_sup_on_circle({0.0, 0.0, 0.7}) == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(std::abs(lft_sup_on_circle({0.0, 0.5, 0.5}) - sup_psi_sampled({0.0, 0.5, 0.5}, 4096)) <= 1e-6);
    CHECK_THROWS_AS(lft_sup_on_circle({0.3, 0.2, 0.06}), std::domain_error);
    CHECK_THROWS_AS(lft_sup_on_circle({0.3, 1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(circumcircle(0.0, 1.0, 2.0), std::domain_error);
}

TEST_CASE("lft_sup_on_circle agrees with circle sampling") {
    // 4096 samples resolve the peak to about 3e-7 times the curvature of
    // |Psi| on the circle, which stays moderate while the pole is far away
    std::mt19937_64 rng(15);
    int checked = 0;
    while (checked < 1000) {
        const TetraPoint x = random_interior_point(rng);
        if (std::abs(x.x2) > 0.5 || is_triangular(x, 1e-6)) {
            continue;
        }
        const double exact = lft_sup_on_circle(x);
        const double sampled = sup_psi_sampled(x, 4096);
        CHECK(sampled <= exact + 1e-12);
        CHECK(exact - sampled <= 1e-6);
        ++checked;
    }
}

namespace {

// |Psi| restricted to the circle has one local maximum (the image is a circle
// traversed once), so a golden-section search around the best sample finds it.
double refined_circle_max(const TetraPoint& x, int n) {
    const auto f = [&x](double t) { return std::abs(psi(std::polar(1.0, t), x)); };
    const double step = 2.0 * std::numbers::pi / n;
    int best = 0;
    for (int k = 1; k < n; ++k) {
        if (f(k * step) > f(best * step)) {
            best = k;
        }
    }
    double lo = (best - 1) * step;
    double hi = (best + 1) * step;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double a = hi - g * (hi - lo);
        const double b = lo + g * (hi - lo);
        if (f(a) < f(b)) {
            lo = a;
        } else {
            hi = b;
        }
    }
    return std::max(f(0.5 * (lo + hi)), f(best * step));
}

}  // namespace

TEST_CASE("lft_sup_on_circle matches a refined circle search across the whole domain") {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 1000) {
        const TetraPoint x = (checked % 2 == 0)
                                 ? random_interior_point(rng)
                                 : TetraPoint{random_in_disc(rng, 1.0), random_in_disc(rng, 0.99), random_in_disc(rng, 1.0)};
        if (is_triangular(x, 1e-6)) {
            continue;
        }
        const double exact = lft_sup_on_circle(x);
        CHECK(std::abs(exact - refined_circle_max(x, 4096)) <= 1e-9 * (1.0 + exact));
        ++checked;
    }
}

TEST_CASE("lft_sup_on_circle bounds samples near the pole circle") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 500; ++i) {
        const TetraPoint x{random_in_disc(rng, 1.0), random_in_disc(rng, 0.999), random_in_disc(rng, 1.0)};
        if (is_triangular(x, 1e-6)) {
            continue;
        }
        const double exact = lft_sup_on_circle(x);
        CHECK(sup_psi_sampled(x, 512) <= exact * (1.0 + 1e-12));
    }
}
