#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcq/channels.hpp"
#include "qcq/queueing.hpp"

namespace qcq {

// Exponential decoherence: p_eff(w) = 1 - exp(-kappa (w + t_f)).
struct DecoherenceModel {
    double kappa = 0.0;
    double flight_time = 0.0;

    double p_eff(double w) const;
};

enum class EvalMethod { analytic_series, monte_carlo };

struct QueueChannelSpec {
    QueueModel queue;
    ChannelFamily family;
    EvalMethod method = EvalMethod::analytic_series;
};

struct CapacityResult {
    double capacity = 0.0;  // bits per unit time
    EvalMethod method = EvalMethod::analytic_series;
    double std_error = 0.0;   // Monte Carlo only
    double tail_bound = 0.0;  // series only
    double lambda = 0.0, mu = 0.0, kappa = 0.0;
};

// lambda * E[1 - h(1 - M_{Phi_W})] estimated over a waiting-time sample.
// Rejects families that are neither Pauli-ordered nor waiting-invariant
// norm maximizing on the sample range.
CapacityResult capacity_expectation(const QueueChannelSpec& spec, const WaitingSample& sample);

using LaplaceFn = std::function<double(double)>;

// lambda/ln2 * sum_k 1/(2k(2k-1)) L(kappa k), truncated with a rigorous tail
// bound below tail_target. K = 0 selects the truncation automatically.
CapacityResult capacity_series(double lambda, double kappa, const LaplaceFn& laplace,
                               std::size_t K = 0, double tail_target = 1e-10);

struct SweepPoint {
    double lambda = 0.0;
    double capacity = 0.0;
};

struct LambdaSweep {
    std::vector<SweepPoint> points;
    double lambda_star = 0.0;
    double capacity_star = 0.0;
};

// Queue template: arrival rate -> stationary sojourn Laplace transform.
using LaplaceFamily = std::function<LaplaceFn(double lambda)>;

LaplaceFamily mm1_template(double mu);
LaplaceFamily md1_template(double mu);  // M/D/1: deterministic service
LaplaceFamily dm1_template(double mu);  // D/M/1: deterministic arrivals

// Maximize lambda -> capacity over (0, mu): 200-point grid plus golden-section
// refinement to 1e-6 * mu. The full grid is returned for plotting.
LambdaSweep optimize_lambda(double mu, double kappa, const LaplaceFamily& family,
                            int grid_points = 200);

struct RankedCapacity {
    Distribution dist;
    double capacity = 0.0;
};

// M/G/1 service-distribution comparison at fixed (lambda, mu, kappa); all
// distributions must share mean 1/mu. Sorted by descending capacity.
std::vector<RankedCapacity> compare_service_dists(double lambda, double mu, double kappa,
                                                  const std::vector<Distribution>& dists);

// G/M/1 arrival-distribution comparison; all distributions share mean 1/lambda.
std::vector<RankedCapacity> compare_arrival_dists(double lambda, double mu, double kappa,
                                                  const std::vector<Distribution>& dists);

}  // namespace qcq
