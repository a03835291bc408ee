#pragma once

// Brute-force oracles, seeded generators and the randomized verification
// suites that cross-check the closed-form modules against each other.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tetra/membership.hpp"
#include "tetra/numerics.hpp"

namespace tetra {

/// Grid minimum of |1 - x1 z - x2 w + x3 z w| over the closed bidisc.
double def_min_modulus(const TetraPoint& x, int n);

/// max of |Psi(., x)| over n equispaced points of the unit circle; a lower
/// bound for the supremum. Requires |x2| < 1 and x non-triangular.
double sup_psi_sampled(const TetraPoint& x, int n);

/// A point of E built from an admissible leaf: |b1| + |b2| <= 0.98, |lambda| <= 0.98.
TetraPoint random_interior_point(std::mt19937_64& rng);

/// Uniform in {|Re xi|, |Im xi| <= 1.2}^3; lands both inside and outside E.
TetraPoint random_box_point(std::mt19937_64& rng);

struct Disagreement {
    std::size_t index = 0;
    std::string kind;
    TetraPoint point;
    double deviation = 0.0;
    std::optional<MembershipReport> report;
};

struct PropertyStat {
    std::string name;
    double tolerance = 0.0;
    double worst = 0.0;
    std::size_t checks = 0;
    std::size_t violations = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t samples_run = 0;
    std::size_t borderline = 0;
    std::vector<Disagreement> disagreements;
    /// cross-validation: largest |inequality margin| among disagreeing samples;
    /// invariance: largest worst/tolerance ratio over the properties.
    double worst_deviation = 0.0;
    std::vector<PropertyStat> properties;
    double elapsed_seconds = 0.0;

    bool clean() const { return disagreements.empty(); }
};

struct CrossValidateOptions {
    std::size_t count = 10000;
    std::uint64_t seed = 0;
    MembershipTolerances tolerances;
    /// The definitional oracle is only compared outside this inequality margin.
    double definition_band = 1e-3;
};

/// Five-way agreement of the membership characterizations on a seeded mix of
/// constructed-interior and box samples.
SuiteReport cross_validate(const CrossValidateOptions& opts);

/// Group-action and foliation invariants over seeded random data.
SuiteReport invariance_suite(std::size_t count, std::uint64_t seed);

}  // namespace tetra
