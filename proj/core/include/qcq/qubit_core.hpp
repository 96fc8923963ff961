#pragma once

#include <array>
#include <complex>

namespace qcq {

inline constexpr double kStateTol = 1e-12;

// 2x2 complex matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
    std::complex<double> a{0.0}, b{0.0}, c{0.0}, d{0.0};

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(std::complex<double> s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
    std::complex<double> trace() const { return a + d; }
};

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 identity2();

struct BlochVector {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const;
    bool is_physical(double tol = kStateTol) const { return norm2() <= 1.0 + tol; }
};

// Validated qubit density operator. Construction checks Hermiticity, unit
// trace, and positive semidefiniteness (eigenvalues >= -kStateTol).
class DensityOperator {
public:
    explicit DensityOperator(const Mat2& m);

    const Mat2& matrix() const { return m_; }
    // Eigenvalues in ascending order, (1 +- |r|)/2 up to fp error.
    std::array<double, 2> eigenvalues() const;

private:
    Mat2 m_;
};

DensityOperator bloch_to_density(const BlochVector& r);
BlochVector density_to_bloch(const DensityOperator& rho);

// h(q) in bits, with the h(0) = h(1) = 0 convention.
double binary_entropy(double q);

// S(rho) = h((1 - |r|)/2), in bits.
double von_neumann_entropy(const DensityOperator& rho);

// Largest eigenvalue, (1 + |r|)/2.
double operator_norm(const DensityOperator& rho);

double bsc_capacity(double q);

struct BinaryChannel {
    double q01 = 0.0;  // flip 0 -> 1
    double q10 = 0.0;  // flip 1 -> 0
};

// Closed-form BAC capacity; dispatches to the BSC form at q01 == q10 and to
// zero at q01 + q10 == 1, where the general expression is indeterminate.
double bac_capacity(const BinaryChannel& ch);

// I(X;Y) in bits for input prior P(X=0) = prior.
double mutual_information_binary(double prior, const BinaryChannel& ch);

}  // namespace qcq
