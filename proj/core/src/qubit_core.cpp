#include "qcq/qubit_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcq {

namespace {

constexpr double kLog2e = 1.4426950408889634074;  // 1/ln 2

double xlogx(double v) {
    // v log2 v with the 0 log 0 = 0 convention
    if (v < 1e-300) return 0.0;
    return v * std::log(v) * kLog2e;
}

}  // namespace

Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return {0.0, {0.0, -1.0}, {0.0, 1.0}, 0.0}; }
Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
Mat2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }

double BlochVector::norm() const { return std::sqrt(norm2()); }

DensityOperator::DensityOperator(const Mat2& m) : m_(m) {
    if (std::abs(m.a - std::conj(m.a)) > kStateTol ||
        std::abs(m.d - std::conj(m.d)) > kStateTol ||
        std::abs(m.b - std::conj(m.c)) > kStateTol) {
        throw std::invalid_argument("density operator: not Hermitian");
    }
    if (std::abs(m.trace() - 1.0) > kStateTol) {
        throw std::invalid_argument("density operator: trace != 1");
    }
    auto ev = eigenvalues();
    if (ev[0] < -kStateTol) {
        throw std::invalid_argument("density operator: negative eigenvalue");
    }
}

std::array<double, 2> DensityOperator::eigenvalues() const {
    // Hermitian 2x2: eigenvalues tr/2 +- sqrt((tr/2)^2 - det)
    double tr = m_.trace().real();
    double det = (m_.a * m_.d - m_.b * m_.c).real();
    double disc = std::max(tr * tr / 4.0 - det, 0.0);
    double s = std::sqrt(disc);
    return {tr / 2.0 - s, tr / 2.0 + s};
}

DensityOperator bloch_to_density(const BlochVector& r) {
    if (!r.is_physical()) throw std::invalid_argument("bloch vector: |r| > 1");
    Mat2 m;
    m.a = 0.5 * (1.0 + r.z);
    m.d = 0.5 * (1.0 - r.z);
    m.b = 0.5 * std::complex<double>(r.x, -r.y);
    m.c = 0.5 * std::complex<double>(r.x, r.y);
    return DensityOperator(m);
}

BlochVector density_to_bloch(const DensityOperator& rho) {
    const Mat2& m = rho.matrix();
    // r_i = Tr(rho sigma_i)
    return BlochVector{(m.b + m.c).real(), ((m.b - m.c) * std::complex<double>(0.0, 1.0)).real(),
                       (m.a - m.d).real()};
}

double binary_entropy(double q) {
    if (q < 0.0 || q > 1.0) throw std::domain_error("binary_entropy: q outside [0,1]");
    return -xlogx(q) - xlogx(1.0 - q);
}

double von_neumann_entropy(const DensityOperator& rho) {
    double r = std::min(density_to_bloch(rho).norm(), 1.0);
    return binary_entropy((1.0 - r) / 2.0);
}

double operator_norm(const DensityOperator& rho) {
    double r = std::min(density_to_bloch(rho).norm(), 1.0);
    return (1.0 + r) / 2.0;
}

double bsc_capacity(double q) { return 1.0 - binary_entropy(q); }

double bac_capacity(const BinaryChannel& ch) {
    if (ch.q01 < 0.0 || ch.q01 > 1.0 || ch.q10 < 0.0 || ch.q10 > 1.0) {
        throw std::domain_error("bac_capacity: flip probability outside [0,1]");
    }
    double s = std::min(ch.q01, ch.q10);
    double t = std::max(ch.q01, ch.q10);
    if (std::abs(1.0 - s - t) <= 1e-12) return 0.0;  // output independent of input
    if (t - s <= 1e-12) return bsc_capacity(0.5 * (s + t));
    double hs = binary_entropy(s);
    double ht = binary_entropy(t);
    double d = 1.0 - s - t;
    return (s * ht - (1.0 - t) * hs) / d + std::log2(1.0 + std::exp2((hs - ht) / d));
}

double mutual_information_binary(double prior, const BinaryChannel& ch) {
    if (prior < 0.0 || prior > 1.0) throw std::domain_error("prior outside [0,1]");
    double py1 = prior * ch.q01 + (1.0 - prior) * (1.0 - ch.q10);
    return binary_entropy(py1) - prior * binary_entropy(ch.q01) -
           (1.0 - prior) * binary_entropy(ch.q10);
}

}  // namespace qcq
