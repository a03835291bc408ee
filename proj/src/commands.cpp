#include "tetra/commands.hpp"

#include <cmath>
#include <numbers>

#include "tetra/autgroup.hpp"
#include "tetra/foliation.hpp"
#include "tetra/membership.hpp"
#include "tetra/oracle.hpp"
#include "tetra/schwarz.hpp"

namespace tetra::cli {

namespace {

constexpr double kSampleRadius = 0.5;

MembershipTolerances membership_tolerances(const GlobalOptions& opts) {
    MembershipTolerances t;
    t.boundary_band = opts.boundary_band;
    t.definition = opts.tol;
    t.grid = opts.grid;
    return t;
}

void validate(const GlobalOptions& opts) {
    if (!(opts.tol > 0.0) || !(opts.boundary_band >= 0.0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
    if (opts.grid < 1) {
        throw std::invalid_argument("--grid must be at least 1");
    }
}

Complex sample_lambda(std::size_t k, std::size_t n) {
    return std::polar(kSampleRadius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

}  // namespace

CommandResult cmd_check(const json& request, const GlobalOptions& opts) {
    validate(opts);
    const TetraPoint x = wire::decode_point(wire::require(request, "x"));
    const MembershipReport r = classify(x, membership_tolerances(opts));
    json body = wire::encode(r);
    body["x"] = wire::encode(x);
    return {std::move(body), r.inside ? 0 : 1};
}

CommandResult cmd_schwarz(const json& request, const GlobalOptions&, const SchwarzOptions& sopts) {
    const TangentTarget y = wire::decode_target(wire::require(request, "y"));
    json body{{"y", wire::encode(y)}, {"norm", indicatrix_norm(y)}, {"feasible", feasible(y)}};
    if (!feasible(y)) {
        return {std::move(body), 1};
    }
    const SchwarzSolution sol = build_matricial(y);
    body["C"] = wire::encode(sol.c);
    body["flipped"] = sol.flipped;
    if (sol.matricial) {
        body["zeta"] = sol.matricial->zeta;
        body["xi"] = wire::encode(sol.matricial->xi);
    } else {
        body["zeta"] = nullptr;
        body["xi"] = nullptr;
    }
    json phi = json::array();
    json f = json::array();
    for (std::size_t k = 0; k < sopts.samples; ++k) {
        const Complex lam = sample_lambda(k, sopts.samples);
        phi.push_back({{"lambda", wire::encode(lam)}, {"phi", wire::encode(phi_eval(y, lam))}});
        if (sopts.emit_f && !sol.degenerate()) {
            f.push_back({{"lambda", wire::encode(lam)}, {"F", wire::encode(f_eval(sol, lam))}});
        }
    }
    body["phi_samples"] = std::move(phi);
    if (sopts.emit_f) {
        body["F_samples"] = sol.degenerate() ? json(nullptr) : std::move(f);
    }
    return {std::move(body), 0};
}

CommandResult cmd_canonical(const json& request, const GlobalOptions&) {
    const TetraPoint x = wire::decode_point(wire::require(request, "x"));
    const double r = canonical_radius(x);
    const TetraAutomorphism h = normalizing_automorphism(x);
    return {json{{"x", wire::encode(x)},
                 {"r", r},
                 {"automorphism", wire::encode(h)},
                 {"image", wire::encode(apply(h, x))}},
            0};
}

CommandResult cmd_orbit(const json& request, const GlobalOptions& opts) {
    const json& pts = wire::require(request, "points");
    if (!pts.is_array() || pts.size() != 2) {
        throw wire::WireError("points: expected an array of two points");
    }
    const TetraPoint p = wire::decode_point(pts[0]);
    const TetraPoint q = wire::decode_point(pts[1]);
    const double rp = canonical_radius(p);
    const double rq = canonical_radius(q);
    const bool same = std::abs(rp - rq) <= opts.tol;
    return {json{{"radii", json::array({rp, rq})}, {"same_orbit", same}}, same ? 0 : 1};
}

CommandResult cmd_aut(const std::string& action, const json& request, const GlobalOptions&) {
    if (action == "apply") {
        const TetraAutomorphism g = wire::decode_automorphism(wire::require(request, "automorphism"));
        const TetraPoint x = wire::decode_point(wire::require(request, "x"));
        return {json{{"image", wire::encode(apply(g, x))}}, 0};
    }
    if (action == "compose") {
        const TetraAutomorphism g = wire::decode_automorphism(wire::require(request, "g"));
        const TetraAutomorphism h = wire::decode_automorphism(wire::require(request, "h"));
        return {json{{"automorphism", wire::encode(compose(g, h))}}, 0};
    }
    if (action == "inverse") {
        const TetraAutomorphism g = wire::decode_automorphism(wire::require(request, "g"));
        return {json{{"automorphism", wire::encode(inverse(g))}}, 0};
    }
    throw std::invalid_argument("aut: unknown action \"" + action + "\" (expected apply, compose or inverse)");
}

CommandResult cmd_mu(const json& request, const GlobalOptions&) {
    const Matrix2 a = wire::decode_matrix(wire::require(request, "a"));
    const Matrix2 b = wire::decode_matrix(wire::require(request, "b"));
    const bool ok = mu_feasible(a, b);
    const TangentTarget y{b.a11, b.a22, mu_wedge(a, b)};
    return {json{{"feasible", ok}, {"y", wire::encode(y)}, {"norm", indicatrix_norm(y)}}, ok ? 0 : 1};
}

CommandResult cmd_verify(const std::string& suite, const GlobalOptions& opts) {
    validate(opts);
    const bool cross = suite == "cross" || suite == "all";
    const bool invariance = suite == "invariance" || suite == "all";
    if (!cross && !invariance) {
        throw std::invalid_argument("verify: unknown suite \"" + suite + "\" (expected cross, invariance or all)");
    }
    json reports = json::array();
    bool clean = true;
    if (cross) {
        CrossValidateOptions c;
        c.count = opts.samples;
        c.seed = opts.seed;
        c.tolerances = membership_tolerances(opts);
        const SuiteReport r = cross_validate(c);
        clean = clean && r.clean();
        reports.push_back(wire::encode(r));
    }
    if (invariance) {
        const SuiteReport r = invariance_suite(opts.samples, opts.seed);
        clean = clean && r.clean();
        reports.push_back(wire::encode(r));
    }
    return {json{{"clean", clean}, {"reports", std::move(reports)}}, clean ? 0 : 1};
}

}  // namespace tetra::cli
