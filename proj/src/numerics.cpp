#include "tetra/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace tetra {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kEigenFloor = -1e-12;
constexpr double kSqrtDegenerate = 1e-14;
constexpr double kPoleTol = 1e-15;
constexpr double kTriangularTol = 1e-10;

Matrix2 rank_one(const std::array<Complex, 2>& v, double scale) {
    return {scale * v[0] * std::conj(v[0]), scale * v[0] * std::conj(v[1]),
            scale * v[1] * std::conj(v[0]), scale * v[1] * std::conj(v[1])};
}

// Spectral decomposition of a Hermitian matrix [[a, b], [conj(b), d]].
Matrix2 psd_sqrt_eigen(double a, Complex b, double d) {
    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), std::abs(b));
    const double hi = mid + rad;
    const double lo = mid - rad;
    if (std::abs(b) == 0.0) {
        return Matrix2::diag(std::sqrt(std::max(a, 0.0)), std::sqrt(std::max(d, 0.0)));
    }
    // eigenvector for hi: (b, hi - a)
    std::array<Complex, 2> v{b, hi - a};
    const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= nv;
    v[1] /= nv;
    // orthogonal complement spans the lo eigenspace
    const std::array<Complex, 2> w{-std::conj(v[1]), std::conj(v[0])};
    return rank_one(v, std::sqrt(std::max(hi, 0.0))) + rank_one(w, std::sqrt(std::max(lo, 0.0)));
}

}  // namespace

double distance(const TetraPoint& a, const TetraPoint& b) {
    return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3)});
}

Matrix2 Matrix2::adjoint() const {
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
}

Matrix2 Matrix2::inverse() const {
    const Complex d = det();
    const double scale = std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22)});
    if (std::abs(d) <= 1e-14 * scale * scale || std::abs(d) == 0.0) {
        throw PoleError("Matrix2::inverse: singular matrix");
    }
    return Matrix2{a22, -a12, -a21, a11} * (1.0 / d);
}

Matrix2& Matrix2::operator+=(const Matrix2& o) {
    a11 += o.a11;
    a12 += o.a12;
    a21 += o.a21;
    a22 += o.a22;
    return *this;
}

Matrix2& Matrix2::operator-=(const Matrix2& o) {
    a11 -= o.a11;
    a12 -= o.a12;
    a21 -= o.a21;
    a22 -= o.a22;
    return *this;
}

Matrix2& Matrix2::operator*=(Complex s) {
    a11 *= s;
    a12 *= s;
    a21 *= s;
    a22 *= s;
    return *this;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
    return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12), std::abs(a.a21 - b.a21),
                     std::abs(a.a22 - b.a22)});
}

TetraPoint pi_map(const Matrix2& m) { return {m.a11, m.a22, m.det()}; }

double op_norm(const Matrix2& m) {
    // Eigenvalues of m*m from its trace t and determinant |det m|^2.
    const double t = std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22);
    const double d = std::norm(m.det());
    const double disc = std::max(t * t - 4.0 * d, 0.0);
    return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

Matrix2 psd_sqrt(const Matrix2& m) {
    if (std::abs(m.a12 - std::conj(m.a21)) > kHermitianTol || std::abs(m.a11.imag()) > kHermitianTol ||
        std::abs(m.a22.imag()) > kHermitianTol) {
        throw std::invalid_argument("psd_sqrt: matrix is not Hermitian");
    }
    const double a = m.a11.real();
    const double d = m.a22.real();
    const Complex b = 0.5 * (m.a12 + std::conj(m.a21));
    const double lo = 0.5 * (a + d) - std::hypot(0.5 * (a - d), std::abs(b));
    if (lo < kEigenFloor) {
        throw std::invalid_argument("psd_sqrt: matrix is not positive semidefinite");
    }

    const double s = std::sqrt(std::max(a * d - std::norm(b), 0.0));
    const double t = a + d + 2.0 * s;
    if (t < kSqrtDegenerate) {
        return psd_sqrt_eigen(a, b, d);
    }
    const double inv = 1.0 / std::sqrt(t);
    return Matrix2{(a + s) * inv, b * inv, std::conj(b) * inv, (d + s) * inv};
}

Matrix2 defect(const Matrix2& z) { return psd_sqrt(Matrix2::identity() - z.adjoint() * z); }

Matrix2 mobius_matrix(const Matrix2& z, const Matrix2& x) {
    if (!(op_norm(z) < 1.0) || !(op_norm(x) < 1.0)) {
        throw std::invalid_argument("mobius_matrix: arguments must be strict contractions");
    }
    const Matrix2 zs = z.adjoint();
    const Matrix2 dz = defect(z);
    const Matrix2 dzs = defect(zs);
    return -z + dzs * x * (Matrix2::identity() - zs * x).inverse() * dz;
}

bool DiscAutomorphism::is_valid(double tol) const {
    return std::abs(std::abs(omega) - 1.0) <= tol && std::abs(alpha) < 1.0;
}

Complex disc_apply(const DiscAutomorphism& u, Complex z) {
    const Complex den = std::conj(u.alpha) * z - 1.0;
    if (std::abs(den) < kPoleTol) {
        throw PoleError("disc_apply: pole");
    }
    return u.omega * (z - u.alpha) / den;
}

DiscAutomorphism disc_compose(const DiscAutomorphism& u, const DiscAutomorphism& v) {
    // Product of the coefficient matrices [[w, -w a], [conj(a), -1]], read back
    // into normal form.
    const Complex top = v.omega - u.alpha * std::conj(v.alpha);
    const Complex bottom = 1.0 - std::conj(u.alpha) * v.omega * v.alpha;
    const Complex alpha = (v.omega * v.alpha - u.alpha) / top;
    Complex omega = -u.omega * top / bottom;
    omega /= std::abs(omega);
    return {omega, alpha};
}

DiscAutomorphism disc_inverse(const DiscAutomorphism& u) {
    return {std::conj(u.omega) / std::norm(u.omega), u.omega * u.alpha};
}

Complex psi(Complex z, const TetraPoint& x) {
    const Complex den = x.x2 * z - 1.0;
    if (std::abs(den) < kPoleTol) {
        throw PoleError("psi: evaluation at pole");
    }
    return (x.x3 * z - x.x1) / den;
}

CircleImage circumcircle(Complex p, Complex q, Complex r) {
    const Complex b = q - p;
    const Complex c = r - p;
    const Complex den = std::conj(b) * c - b * std::conj(c);
    if (!(std::abs(den) > 1e-300) || !std::isfinite(std::abs(den))) {
        throw std::domain_error("circumcircle: collinear or coincident points");
    }
    const Complex u = (std::norm(b) * c - std::norm(c) * b) / den;
    return {p + u, std::abs(u)};
}

double lft_sup_on_circle(const TetraPoint& x) {
    if (!(std::abs(x.x2) < 1.0)) {
        throw std::domain_error("lft_sup_on_circle: pole in the closed disc");
    }
    if (std::abs(x.x1 * x.x2 - x.x3) <= kTriangularTol) {
        throw std::domain_error("lft_sup_on_circle: triangular point");
    }
    const CircleImage img = circumcircle(psi(1.0, x), psi(Complex(0.0, 1.0), x), psi(-1.0, x));
    return std::abs(img.center) + img.radius;
}

}  // namespace tetra
