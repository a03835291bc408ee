#pragma once

// Complex scalar and 2x2 matrix primitives, plus unit-disc Moebius maps.

#include <array>
#include <complex>
#include <stdexcept>

namespace tetra {

using Complex = std::complex<double>;

/// Raised when an operation is evaluated at (or numerically at) a pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A point of C^3, the ambient space of the tetrablock.
struct TetraPoint {
    Complex x1{}, x2{}, x3{};

    friend bool operator==(const TetraPoint&, const TetraPoint&) = default;
};

/// The flip automorphism (x1, x2, x3) -> (x2, x1, x3).
inline TetraPoint flip_point(const TetraPoint& x) { return {x.x2, x.x1, x.x3}; }

/// Largest componentwise distance between two points.
double distance(const TetraPoint& a, const TetraPoint& b);

struct Matrix2 {
    Complex a11{}, a12{}, a21{}, a22{};

    static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Matrix2 zero() { return {}; }
    static constexpr Matrix2 diag(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }

    Complex det() const { return a11 * a22 - a12 * a21; }
    Complex trace() const { return a11 + a22; }
    Matrix2 adjoint() const;
    Matrix2 transpose() const { return {a11, a21, a12, a22}; }
    /// Throws PoleError when the matrix is singular to working precision.
    Matrix2 inverse() const;

    Matrix2& operator+=(const Matrix2& o);
    Matrix2& operator-=(const Matrix2& o);
    Matrix2& operator*=(Complex s);

    friend Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
    friend Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
    friend Matrix2 operator-(const Matrix2& a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }
    friend Matrix2 operator*(Matrix2 a, Complex s) { return a *= s; }
    friend Matrix2 operator*(Complex s, Matrix2 a) { return a *= s; }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Largest elementwise modulus of a - b.
double max_abs_diff(const Matrix2& a, const Matrix2& b);

/// The map [a_ij] -> (a11, a22, det).
TetraPoint pi_map(const Matrix2& m);

/// Operator (spectral) norm: the largest singular value, in closed form.
double op_norm(const Matrix2& m);

/// Unique positive semidefinite square root of a Hermitian PSD matrix.
/// Throws std::invalid_argument for non-Hermitian or indefinite input.
Matrix2 psd_sqrt(const Matrix2& m);

/// Defect operator (1 - Z*Z)^(1/2) of a contraction.
Matrix2 defect(const Matrix2& z);

/// Matricial Moebius map M_Z(X) = -Z + D_{Z*} X (1 - Z*X)^{-1} D_Z on the
/// open unit ball of 2x2 matrices. Requires ||Z|| < 1 and ||X|| < 1.
Matrix2 mobius_matrix(const Matrix2& z, const Matrix2& x);

/// Automorphism of the unit disc in the form z -> omega (z - alpha)/(conj(alpha) z - 1).
///
/// Note the sign convention: omega = -1, alpha = 0 is the identity, and the
/// rotation z -> w z has omega = -w.
struct DiscAutomorphism {
    Complex omega{-1.0};
    Complex alpha{};

    static DiscAutomorphism identity() { return {}; }
    static DiscAutomorphism rotation(Complex w) { return {-w, 0.0}; }

    /// |omega| = 1 and |alpha| < 1 within `tol`.
    bool is_valid(double tol = 1e-12) const;
};

Complex disc_apply(const DiscAutomorphism& u, Complex z);
/// The automorphism z -> u(v(z)).
DiscAutomorphism disc_compose(const DiscAutomorphism& u, const DiscAutomorphism& v);
DiscAutomorphism disc_inverse(const DiscAutomorphism& u);

/// Psi(z, x) = (x3 z - x1)/(x2 z - 1). Throws PoleError at x2 z = 1.
Complex psi(Complex z, const TetraPoint& x);

struct CircleImage {
    Complex center{};
    double radius = 0.0;
};

/// Circle through three distinct non-collinear points.
/// Throws std::domain_error for degenerate configurations.
CircleImage circumcircle(Complex p, Complex q, Complex r);

/// sup over the closed unit disc of |Psi(., x)|, obtained from the image
/// circle of the unit circle. Requires |x2| < 1 and x non-triangular.
double lft_sup_on_circle(const TetraPoint& x);

}  // namespace tetra
