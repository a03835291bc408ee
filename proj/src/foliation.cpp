#include "tetra/foliation.hpp"

#include <cmath>

namespace tetra {

namespace {

Complex phase_or_one(Complex z) {
    const double r = std::abs(z);
    return r > 0.0 ? z / r : Complex{1.0};
}

}  // namespace

bool BetaLeaf::is_admissible(double band) const { return std::abs(beta1) + std::abs(beta2) < 1.0 - band; }

LeafPosition beta_coords(const TetraPoint& x) {
    const double r2 = std::norm(x.x3);
    if (!(r2 < 1.0)) {
        throw NotInDomainError("beta_coords: |x3| >= 1");
    }
    const Complex lambda = x.x3;
    return {{(x.x1 - std::conj(x.x2) * lambda) / (1.0 - r2), (x.x2 - std::conj(x.x1) * lambda) / (1.0 - r2)},
            lambda};
}

TetraPoint leaf_eval(const BetaLeaf& leaf, Complex lambda) {
    return {leaf.beta1 + std::conj(leaf.beta2) * lambda, leaf.beta2 + std::conj(leaf.beta1) * lambda, lambda};
}

LeafTransport transport_right(const BetaLeaf& leaf, const DiscAutomorphism& chi) {
    const Complex zeta = chi.omega;
    const Complex theta = chi.alpha;
    const Complex b1 = leaf.beta1;
    const Complex b2 = leaf.beta2;
    const Complex ztb = zeta * theta * b2;
    const double den = std::norm(1.0 - ztb) - std::norm(theta * b1);

    LeafTransport t;
    t.target.beta1 = b1 * (1.0 - std::norm(theta)) / den;
    t.target.beta2 = (std::conj(theta) * (1.0 - std::norm(b1) + std::norm(b2)) - zeta * b2 -
                      std::conj(zeta) * std::conj(theta) * std::conj(theta) * std::conj(b2)) /
                     den;
    t.eta = -zeta * (1.0 - std::conj(ztb)) / (1.0 - ztb);
    t.c = -std::conj(zeta * theta) * b1 / (1.0 - std::conj(ztb));
    return t;
}

LeafTransport transport_left(const DiscAutomorphism& upsilon, const BetaLeaf& leaf) {
    const Complex omega = upsilon.omega;
    const Complex alpha = upsilon.alpha;
    const Complex b1 = leaf.beta1;
    const Complex b2 = leaf.beta2;
    const double den = std::norm(1.0 - std::conj(alpha) * b1) - std::norm(alpha * b2);

    LeafTransport t;
    t.target.beta1 =
        omega * (alpha * (1.0 - std::norm(b2) + std::norm(b1)) - b1 - alpha * alpha * std::conj(b1)) / den;
    t.target.beta2 = b2 * (1.0 - std::norm(alpha)) / den;
    t.eta = -omega * (1.0 - alpha * std::conj(b1)) / (1.0 - std::conj(alpha) * b1);
    t.c = -alpha * b2 / (1.0 - alpha * std::conj(b1));
    return t;
}

NormalParams normal_params(const BetaLeaf& leaf) {
    if (!leaf.is_admissible()) {
        throw NotInDomainError("normal_params: leaf too close to the boundary of E");
    }
    const double m1 = std::abs(leaf.beta1);
    const double m2 = std::abs(leaf.beta2);
    const double sum = 0.5 * std::atanh(m1 + m2);
    const double diff = 0.5 * std::atanh(m1 - m2);
    return {phase_or_one(leaf.beta1) * std::tanh(sum + diff),
            phase_or_one(std::conj(leaf.beta2)) * std::tanh(sum - diff)};
}

double canonical_radius(const TetraPoint& x) {
    const LeafPosition pos = beta_coords(x);
    const NormalParams p = normal_params(pos.leaf);
    const Complex shift = p.alpha * std::conj(p.theta);
    return std::abs((pos.lambda - shift) / (std::conj(shift) * pos.lambda - 1.0));
}

TetraAutomorphism normalizing_automorphism(const TetraPoint& x) {
    const LeafPosition pos = beta_coords(x);
    const NormalParams p = normal_params(pos.leaf);
    // L_u R_v maps (0, 0, z) onto the leaf through x
    const TetraAutomorphism onto_leaf{{1.0, p.alpha}, {1.0, p.theta}, false};
    const TetraAutomorphism back = inverse(onto_leaf);
    const Complex z = apply(back, x).x3;
    const auto rot = DiscAutomorphism::rotation(std::conj(phase_or_one(z)));
    return compose(TetraAutomorphism::left(rot), back);
}

bool same_orbit(const TetraPoint& x, const TetraPoint& y, double tol) {
    return std::abs(canonical_radius(x) - canonical_radius(y)) <= tol;
}

}  // namespace tetra
