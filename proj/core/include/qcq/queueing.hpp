#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qcq {

// Inter-arrival / service time distribution with a closed-form Laplace
// transform E[e^{-sT}].
class Distribution {
public:
    enum class Kind { exponential, deterministic, gamma, uniform };

    static Distribution exponential(double rate);
    static Distribution deterministic(double value);
    static Distribution gamma(double shape, double rate);
    static Distribution uniform(double lo, double hi);

    Kind kind() const { return kind_; }
    double mean() const;
    double laplace(double s) const;
    double sample(std::mt19937_64& rng) const;
    std::string name() const;

private:
    Distribution(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}
    Kind kind_;
    double a_, b_;  // rate | value | (shape, rate) | (lo, hi)
};

struct QueueModel {
    Distribution arrival = Distribution::exponential(0.5);
    Distribution service = Distribution::exponential(1.0);

    double arrival_rate() const { return 1.0 / arrival.mean(); }
    double service_rate() const { return 1.0 / service.mean(); }
    bool stable() const { return arrival_rate() < service_rate(); }
};

struct WaitingSample {
    std::vector<double> values;  // post-burn-in sojourn times
    std::uint64_t seed = 0;
    std::size_t burn_in = 0;
};

inline constexpr std::size_t kDefaultBurnIn = 100000;

// Sojourn times W_{i+1} = max(W_i - A_i, 0) + S_{i+1}, W_1 = S_1.
WaitingSample lindley_simulate(const QueueModel& model, std::size_t n,
                               std::size_t burn_in, std::uint64_t seed);

// Stationary sojourn transform of M/M/1: (mu - lambda)/(mu - lambda + s).
double mm1_laplace(double s, double lambda, double mu);

// Unique root in (0,1) of sigma = E_A[exp(-mu(1 - sigma) A)].
double gm1_sigma(const Distribution& arrival, double mu);

// G/M/1 stationary sojourn transform; sojourn is Exp(mu(1 - sigma)).
double gm1_laplace(double s, const Distribution& arrival, double mu);

// M/G/1 stationary sojourn transform (Pollaczek-Khinchine).
double mg1_laplace(double s, double lambda, const Distribution& service);

struct LaplaceEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

LaplaceEstimate empirical_laplace(const WaitingSample& sample, double s);

}  // namespace qcq
