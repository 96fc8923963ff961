#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "qcq/qubit_core.hpp"

namespace qcq {

// Unital qubit channel as a Pauli mixture: conjugation by sigma_i with
// probability p_i, identity with probability 1 - p1 - p2 - p3.
class PauliChannel {
public:
    PauliChannel(double p1, double p2, double p3);

    double p(int i) const { return p_[i]; }
    // Per-axis Bloch contraction factors lambda_i = 1 - 2 sum_{j != i} p_j.
    std::array<double, 3> attenuation() const;

    BlochVector apply(const BlochVector& r) const;
    DensityOperator apply_kraus(const DensityOperator& rho) const;

private:
    std::array<double, 3> p_;
};

// Generalized amplitude damping channel A_{p,n}.
class GadChannel {
public:
    GadChannel(double p, double n);

    double p() const { return p_; }
    double n() const { return n_; }

    std::array<Mat2, 4> kraus() const;
    // Kraus-sum action; the authority for this channel.
    DensityOperator apply_kraus(const DensityOperator& rho) const;
    // Bloch-map action (sqrt(1-p)x, sqrt(1-p)y, (1-p)z + p(1-2n)).
    BlochVector apply_bloch(const BlochVector& r) const;

private:
    double p_, n_;
};

// Pauli-mixture form of the unital (n = 1/2) GADC.
PauliChannel gad_to_pauli(double p);

// Largest output operator norm, (1 + max_i |lambda_i|)/2.
double m_phi(const PauliChannel& ch);

struct OptimalCode {
    int axis = 1;  // encoding axis index in {1,2,3}
    BlochVector rho_star;
    BlochVector tau_star;
    double crossover = 1.0;  // M_Phi
};

// Capacity-achieving product encoding/decoding along the strongest Pauli axis.
// Ties in argmax |lambda_i| break toward the smallest index.
OptimalCode optimal_code(const PauliChannel& ch);

bool is_unital(const PauliChannel& ch);
bool is_unital(const GadChannel& ch);

bool is_entanglement_breaking(const GadChannel& ch);

// Waiting-time-indexed family of qubit channels.
class ChannelFamily {
public:
    enum class Kind { pauli, symmetric_gad };

    // noiseless symmetric GAD (kappa = 0)
    ChannelFamily() = default;

    static ChannelFamily symmetric_gad(double kappa, double flight_time = 0.0);
    static ChannelFamily symmetric_gad_custom(std::function<double(double)> p_eff);
    static ChannelFamily pauli(std::function<PauliChannel(double)> map);

    Kind kind() const { return kind_; }
    double kappa() const { return kappa_; }
    double p_eff(double w) const;
    PauliChannel at(double w) const;

private:
    Kind kind_ = Kind::symmetric_gad;
    double kappa_ = 0.0;
    double flight_time_ = 0.0;
    std::function<double(double)> p_eff_;
    std::function<PauliChannel(double)> pauli_;
};

// True iff the capacity ordering of the three axis-induced BSCs is the same
// at every grid point.
bool is_pauli_ordered(const ChannelFamily& fam, std::span<const double> w_grid);

// Axis attaining max_i |lambda_i(w)| simultaneously for all grid points,
// or 0 if no such axis exists.
int waiting_invariant_axis(const ChannelFamily& fam, std::span<const double> w_grid);

}  // namespace qcq
