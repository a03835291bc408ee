#include "tetra/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace tetra {

namespace {

constexpr int kShells = 8;
constexpr int kRefineStarts = 3;

// f(z, w) = a(z) - b(z) w
struct Pencil {
    Complex a, b;
};

Pencil pencil_in_w(const TetraPoint& x, Complex z) { return {1.0 - x.x1 * z, x.x2 - x.x3 * z}; }
Pencil pencil_in_z(const TetraPoint& x, Complex w) { return {1.0 - x.x2 * w, x.x1 - x.x3 * w}; }

// The closed-disc point minimizing |a - b w|.
Complex best_in_disc(const Pencil& p) {
    if (p.b == 0.0) {
        return 0.0;
    }
    const Complex q = p.a / p.b;
    const double r = std::abs(q);
    return r <= 1.0 ? q : q / r;
}

Complex defining_form(const TetraPoint& x, Complex z, Complex w) {
    return 1.0 - x.x1 * z - x.x2 * w + x.x3 * z * w;
}

// min over |w| <= 1 of |f(z, w)|, evaluated at the minimizing point itself
double min_over_w(const TetraPoint& x, Complex z) {
    return std::abs(defining_form(x, z, best_in_disc(pencil_in_w(x, z))));
}

double min_over_z(const TetraPoint& x, Complex w) {
    return std::abs(defining_form(x, best_in_disc(pencil_in_z(x, w)), w));
}

// |a(z)| - |b(z)|: negative exactly when f(z, .) vanishes somewhere in the closed disc
double signed_gap(const TetraPoint& x, Complex z) {
    const Pencil p = pencil_in_w(x, z);
    return std::abs(p.a) - std::abs(p.b);
}

Complex clamp_to_disc(Complex z) {
    const double r = std::abs(z);
    return r > 1.0 ? z / r : z;
}

// Zooming pattern search for the minimum of the signed gap.
Complex refine(const TetraPoint& x, Complex start, double step) {
    Complex best = start;
    double best_val = signed_gap(x, best);
    for (int iter = 0; iter < 80 && step > 1e-14; ++iter) {
        Complex next = best;
        double next_val = best_val;
        for (int i = -4; i <= 4; ++i) {
            for (int j = -4; j <= 4; ++j) {
                const Complex z = clamp_to_disc(best + step * Complex(i, j));
                const double v = signed_gap(x, z);
                if (v < next_val) {
                    next_val = v;
                    next = z;
                }
            }
        }
        if (next == best) {
            step *= 0.25;
        } else {
            best = next;
            best_val = next_val;
        }
    }
    return best;
}

}  // namespace

bool is_triangular(const TetraPoint& x, double tol) { return std::abs(x.x1 * x.x2 - x.x3) <= tol; }

Verdict in_e_inequality(const TetraPoint& x) {
    const double margin = (1.0 - std::norm(x.x2)) - std::abs(x.x1 - std::conj(x.x2) * x.x3) -
                          std::abs(x.x1 * x.x2 - x.x3);
    return {margin > 0.0, margin};
}

Verdict in_e_lft(const TetraPoint& x, double triangular_tol) {
    if (is_triangular(x, triangular_tol)) {
        // Psi(., x) is the constant x1
        const double margin = 1.0 - std::max(std::abs(x.x1), std::abs(x.x2));
        return {margin > 0.0, margin};
    }
    if (!(std::abs(x.x2) < 1.0)) {
        return {false, 1.0 - std::abs(x.x2)};
    }
    const double margin = 1.0 - lft_sup_on_circle(x);
    return {margin > 0.0, margin};
}

Verdict in_e_symmetric(const TetraPoint& x) {
    const Complex s = std::sqrt(x.x1 * x.x2 - x.x3);
    const double margin = 1.0 - op_norm(Matrix2{x.x1, s, s, x.x2});
    return {margin > 0.0, margin};
}

Verdict in_e_beta(const TetraPoint& x) {
    const double r2 = std::norm(x.x3);
    if (!(r2 < 1.0)) {
        return {false, 1.0 - std::sqrt(r2)};
    }
    const Complex b1 = (x.x1 - std::conj(x.x2) * x.x3) / (1.0 - r2);
    const Complex b2 = (x.x2 - std::conj(x.x1) * x.x3) / (1.0 - r2);
    const double margin = 1.0 - std::abs(b1) - std::abs(b2);
    return {margin > 0.0, margin};
}

double bidisc_grid_min(const TetraPoint& x, int n) {
    if (n < 8) {
        throw std::invalid_argument("bidisc_grid_min: grid size must be at least 8");
    }
    std::vector<Complex> circle(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        circle[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    }
    double best = std::numeric_limits<double>::infinity();
    for (const Complex z : circle) {
        const Pencil p = pencil_in_w(x, z);
        for (const Complex w : circle) {
            best = std::min(best, std::abs(p.a - p.b * w));
        }
    }
    for (int s = 0; s < kShells; ++s) {
        const double rho = static_cast<double>(s) / kShells;
        for (const Complex u : circle) {
            best = std::min({best, min_over_w(x, rho * u), min_over_z(x, rho * u)});
        }
    }
    return best;
}

DefinitionVerdict in_e_definition(const TetraPoint& x, int grid_size, double tol) {
    double best = bidisc_grid_min(x, grid_size);

    // seed the local search from the z-samples with the smallest gap
    std::vector<std::pair<double, Complex>> seeds;
    seeds.reserve(static_cast<std::size_t>((kShells + 1) * grid_size));
    for (int k = 0; k < grid_size; ++k) {
        const Complex u = std::polar(1.0, 2.0 * std::numbers::pi * k / grid_size);
        for (int s = 1; s <= kShells; ++s) {
            const Complex z = u * (static_cast<double>(s) / kShells);
            seeds.emplace_back(signed_gap(x, z), z);
        }
    }
    seeds.emplace_back(signed_gap(x, 0.0), Complex{});
    const auto count = std::min<std::size_t>(kRefineStarts, seeds.size());
    std::partial_sort(seeds.begin(), seeds.begin() + static_cast<std::ptrdiff_t>(count), seeds.end(),
                      [](const auto& l, const auto& r) { return l.first < r.first; });
    const double step = 2.0 * std::numbers::pi / grid_size;
    for (std::size_t i = 0; i < count; ++i) {
        best = std::min(best, min_over_w(x, refine(x, seeds[i].second, step)));
    }
    return {best > tol, best};
}

bool in_distinguished_boundary(const TetraPoint& x, double tol) {
    return std::abs(x.x1 - std::conj(x.x2) * x.x3) <= tol && std::abs(x.x2) <= 1.0 + tol &&
           std::abs(std::abs(x.x3) - 1.0) <= tol;
}

MembershipReport classify(const TetraPoint& x, const MembershipTolerances& tol) {
    MembershipReport r;
    const DefinitionVerdict def = in_e_definition(x, tol.grid, tol.definition);
    r.definition = {def.inside, def.min_modulus - tol.definition};
    r.inequality = in_e_inequality(x);
    r.lft = in_e_lft(x, tol.triangular);
    r.symmetric = in_e_symmetric(x);
    r.beta = in_e_beta(x);

    const bool v = r.inequality.inside;
    r.consensus = r.definition.inside == v && r.lft.inside == v && r.symmetric.inside == v &&
                  r.beta.inside == v;
    r.borderline = std::min({std::abs(r.inequality.margin), std::abs(r.lft.margin),
                             std::abs(r.symmetric.margin), std::abs(r.beta.margin)}) <
                   tol.boundary_band;
    r.inside = v;
    return r;
}

}  // namespace tetra
