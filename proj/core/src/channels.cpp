#include "qcq/channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcq {

namespace {

Mat2 scaled(const Mat2& m, double s) { return m * std::complex<double>(s, 0.0); }

}  // namespace

PauliChannel::PauliChannel(double p1, double p2, double p3) : p_{p1, p2, p3} {
    if (p1 < 0.0 || p2 < 0.0 || p3 < 0.0 || p1 + p2 + p3 > 1.0 + 1e-12) {
        throw std::invalid_argument("PauliChannel: invalid mixture probabilities");
    }
}

std::array<double, 3> PauliChannel::attenuation() const {
    double sum = p_[0] + p_[1] + p_[2];
    return {1.0 - 2.0 * (sum - p_[0]), 1.0 - 2.0 * (sum - p_[1]), 1.0 - 2.0 * (sum - p_[2])};
}

BlochVector PauliChannel::apply(const BlochVector& r) const {
    auto lam = attenuation();
    return {lam[0] * r.x, lam[1] * r.y, lam[2] * r.z};
}

DensityOperator PauliChannel::apply_kraus(const DensityOperator& rho) const {
    const Mat2& m = rho.matrix();
    double p0 = 1.0 - p_[0] - p_[1] - p_[2];
    Mat2 out = scaled(m, p0);
    const Mat2 sig[3] = {pauli_x(), pauli_y(), pauli_z()};
    for (int i = 0; i < 3; ++i) {
        out = out + scaled(sig[i] * m * sig[i], p_[i]);
    }
    return DensityOperator(out);
}

GadChannel::GadChannel(double p, double n) : p_(p), n_(n) {
    if (p < 0.0 || p > 1.0 || n < 0.0 || n > 1.0) {
        throw std::invalid_argument("GadChannel: p, n must lie in [0,1]");
    }
}

std::array<Mat2, 4> GadChannel::kraus() const {
    double sp = std::sqrt(1.0 - p_);
    Mat2 k0{std::sqrt(1.0 - n_), 0.0, 0.0, std::sqrt(1.0 - n_) * sp};
    Mat2 k1{0.0, std::sqrt(p_ * (1.0 - n_)), 0.0, 0.0};
    Mat2 k2{std::sqrt(n_) * sp, 0.0, 0.0, std::sqrt(n_)};
    Mat2 k3{0.0, 0.0, std::sqrt(p_ * n_), 0.0};
    return {k0, k1, k2, k3};
}

DensityOperator GadChannel::apply_kraus(const DensityOperator& rho) const {
    const Mat2& m = rho.matrix();
    Mat2 out;
    for (const Mat2& k : kraus()) {
        out = out + k * m * k.adjoint();
    }
    return DensityOperator(out);
}

BlochVector GadChannel::apply_bloch(const BlochVector& r) const {
    double sp = std::sqrt(1.0 - p_);
    return {sp * r.x, sp * r.y, (1.0 - p_) * r.z + p_ * (1.0 - 2.0 * n_)};
}

PauliChannel gad_to_pauli(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("gad_to_pauli: p outside [0,1]");
    double q = (1.0 - std::sqrt(1.0 - p)) / 2.0;
    return PauliChannel(p / 4.0, p / 4.0, q * q);
}

double m_phi(const PauliChannel& ch) {
    auto lam = ch.attenuation();
    double m = std::max({std::abs(lam[0]), std::abs(lam[1]), std::abs(lam[2])});
    return (1.0 + m) / 2.0;
}

OptimalCode optimal_code(const PauliChannel& ch) {
    auto lam = ch.attenuation();
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(lam[i]) > std::abs(lam[best])) best = i;
    }
    OptimalCode code;
    code.axis = best + 1;
    code.rho_star = {best == 0 ? 1.0 : 0.0, best == 1 ? 1.0 : 0.0, best == 2 ? 1.0 : 0.0};
    code.tau_star = code.rho_star;
    code.crossover = (1.0 + std::abs(lam[best])) / 2.0;
    return code;
}

bool is_unital(const PauliChannel&) { return true; }

bool is_unital(const GadChannel& ch) {
    BlochVector out = ch.apply_bloch({0.0, 0.0, 0.0});
    return std::abs(out.x) <= kStateTol && std::abs(out.y) <= kStateTol &&
           std::abs(out.z) <= kStateTol;
}

bool is_entanglement_breaking(const GadChannel& ch) {
    double p = ch.p();
    if (p < 2.0 * (std::sqrt(2.0) - 1.0)) return false;
    double l = std::sqrt((p * p + 4.0 * p - 4.0) / (p * p));
    return ch.n() >= 0.5 * (1.0 - l) && ch.n() <= 0.5 * (1.0 + l);
}

ChannelFamily ChannelFamily::symmetric_gad(double kappa, double flight_time) {
    if (kappa < 0.0) throw std::invalid_argument("ChannelFamily: kappa < 0");
    ChannelFamily fam;
    fam.kind_ = Kind::symmetric_gad;
    fam.kappa_ = kappa;
    fam.flight_time_ = flight_time;
    return fam;
}

ChannelFamily ChannelFamily::symmetric_gad_custom(std::function<double(double)> p_eff) {
    ChannelFamily fam;
    fam.kind_ = Kind::symmetric_gad;
    fam.p_eff_ = std::move(p_eff);
    return fam;
}

ChannelFamily ChannelFamily::pauli(std::function<PauliChannel(double)> map) {
    ChannelFamily fam;
    fam.kind_ = Kind::pauli;
    fam.pauli_ = std::move(map);
    return fam;
}

double ChannelFamily::p_eff(double w) const {
    if (p_eff_) return p_eff_(w);
    return 1.0 - std::exp(-kappa_ * (w + flight_time_));
}

PauliChannel ChannelFamily::at(double w) const {
    if (kind_ == Kind::pauli) return pauli_(w);
    return gad_to_pauli(p_eff(w));
}

bool is_pauli_ordered(const ChannelFamily& fam, std::span<const double> w_grid) {
    if (w_grid.empty()) throw std::invalid_argument("is_pauli_ordered: empty grid");
    // sign of C(B_i) - C(B_j) per pair; ordering holds iff no pair changes sign
    std::array<int, 3> seen{0, 0, 0};  // pairs (0,1), (0,2), (1,2): -1, 0, +1 bitmask
    for (double w : w_grid) {
        PauliChannel ch = fam.at(w);
        double sum = ch.p(0) + ch.p(1) + ch.p(2);
        std::array<double, 3> cap;
        for (int i = 0; i < 3; ++i) {
            double b = ch.p(i) + (1.0 - sum);  // crossover of axis-i induced BSC
            cap[i] = bsc_capacity(b);
        }
        int pair = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j, ++pair) {
                double d = cap[i] - cap[j];
                if (d > 1e-12) {
                    if (seen[pair] < 0) return false;
                    seen[pair] = 1;
                } else if (d < -1e-12) {
                    if (seen[pair] > 0) return false;
                    seen[pair] = -1;
                }
            }
        }
    }
    return true;
}

int waiting_invariant_axis(const ChannelFamily& fam, std::span<const double> w_grid) {
    if (w_grid.empty()) throw std::invalid_argument("waiting_invariant_axis: empty grid");
    std::array<bool, 3> ok{true, true, true};
    for (double w : w_grid) {
        auto lam = fam.at(w).attenuation();
        double m = std::max({std::abs(lam[0]), std::abs(lam[1]), std::abs(lam[2])});
        for (int i = 0; i < 3; ++i) {
            if (std::abs(lam[i]) < m - 1e-12) ok[i] = false;
        }
    }
    for (int i = 0; i < 3; ++i) {
        if (ok[i]) return i + 1;
    }
    return 0;
}

}  // namespace qcq
