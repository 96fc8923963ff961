#include "qcq/queue_capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qcq/capacity.hpp"
#include "qcq/optimize.hpp"
#include "qcq/stats.hpp"

namespace qcq {

namespace {

constexpr double kLn2 = 0.6931471805599453094;

std::vector<double> sample_quantile_grid(const WaitingSample& sample) {
    std::vector<double> sorted = sample.values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> grid;
    for (int i = 0; i <= 16; ++i) {
        std::size_t idx = std::min<std::size_t>(i * (sorted.size() - 1) / 16, sorted.size() - 1);
        grid.push_back(sorted[idx]);
    }
    return grid;
}

}  // namespace

double DecoherenceModel::p_eff(double w) const {
    return 1.0 - std::exp(-kappa * (w + flight_time));
}

CapacityResult capacity_expectation(const QueueChannelSpec& spec, const WaitingSample& sample) {
    if (sample.values.empty()) throw std::invalid_argument("capacity_expectation: empty sample");
    auto grid = sample_quantile_grid(sample);
    if (!is_pauli_ordered(spec.family, grid) && waiting_invariant_axis(spec.family, grid) == 0) {
        throw std::invalid_argument(
            "capacity_expectation: channel family is neither Pauli-ordered nor "
            "waiting-invariant norm maximizing; the expectation formula is not justified");
    }

    double lambda = spec.queue.arrival_rate();
    std::vector<double> terms;
    terms.reserve(sample.values.size());
    for (double w : sample.values) {
        double m = m_phi(spec.family.at(w));
        terms.push_back(1.0 - binary_entropy(1.0 - m));  // crossover q_W = 1 - M
    }
    // batch-means standard error: Lindley output is Markov-correlated
    auto est = mean_with_batch_se(terms);

    CapacityResult res;
    res.capacity = lambda * est.mean;
    res.method = EvalMethod::monte_carlo;
    res.std_error = lambda * est.std_error;
    res.lambda = lambda;
    res.mu = spec.queue.service_rate();
    res.kappa = spec.family.kappa();
    return res;
}

CapacityResult capacity_series(double lambda, double kappa, const LaplaceFn& laplace,
                               std::size_t K, double tail_target) {
    if (lambda <= 0.0) throw std::domain_error("capacity_series: lambda must be positive");
    if (kappa < 0.0) throw std::domain_error("capacity_series: kappa must be >= 0");

    CapacityResult res;
    res.method = EvalMethod::analytic_series;
    res.lambda = lambda;
    res.kappa = kappa;

    if (kappa == 0.0) {
        // every transform term is 1 and sum_k 1/(2k(2k-1)) = ln 2
        res.capacity = lambda;
        res.tail_bound = 0.0;
        return res;
    }

    double coeff_sum = 0.0;  // sum of 1/(2k(2k-1)) through k
    double series = 0.0;
    double tail = 0.0;
    std::size_t k = 0;
    constexpr std::size_t kMaxTerms = 100000000;
    while (true) {
        ++k;
        double c = 1.0 / (2.0 * k * (2.0 * k - 1.0));
        coeff_sum += c;
        series += c * laplace(kappa * static_cast<double>(k));
        bool reached_k = (K != 0 && k >= K);
        if (K == 0 || reached_k) {
            tail = laplace(kappa * static_cast<double>(k + 1)) * std::max(kLn2 - coeff_sum, 0.0);
            if (reached_k) break;
            if (lambda / kLn2 * tail < tail_target) break;
        }
        if (k >= kMaxTerms) break;
    }

    res.capacity = lambda / kLn2 * series;
    res.tail_bound = lambda / kLn2 * tail;
    return res;
}

LaplaceFamily mm1_template(double mu) {
    return [mu](double lambda) -> LaplaceFn {
        return [mu, lambda](double s) { return mm1_laplace(s, lambda, mu); };
    };
}

LaplaceFamily md1_template(double mu) {
    return [mu](double lambda) -> LaplaceFn {
        Distribution service = Distribution::deterministic(1.0 / mu);
        return [lambda, service](double s) { return mg1_laplace(s, lambda, service); };
    };
}

LaplaceFamily dm1_template(double mu) {
    return [mu](double lambda) -> LaplaceFn {
        double rate = mu * (1.0 - gm1_sigma(Distribution::deterministic(1.0 / lambda), mu));
        return [rate](double s) { return rate / (rate + s); };
    };
}

LambdaSweep optimize_lambda(double mu, double kappa, const LaplaceFamily& family,
                            int grid_points) {
    if (mu <= 0.0) throw std::domain_error("optimize_lambda: mu must be positive");
    if (grid_points < 2) throw std::domain_error("optimize_lambda: need at least 2 grid points");

    auto capacity_at = [&](double lambda) {
        return capacity_series(lambda, kappa, family(lambda)).capacity;
    };

    LambdaSweep sweep;
    sweep.points.reserve(grid_points);
    double best_l = 0.0, best_c = -1.0;
    for (int i = 1; i <= grid_points; ++i) {
        double lambda = mu * static_cast<double>(i) / (grid_points + 1);
        double c = capacity_at(lambda);
        sweep.points.push_back({lambda, c});
        if (c > best_c) {
            best_c = c;
            best_l = lambda;
        }
    }
    double step = mu / (grid_points + 1);
    double lo = std::max(best_l - step, 1e-9 * mu);
    double hi = std::min(best_l + step, mu * (1.0 - 1e-9));
    auto [l_star, c_star] = golden_section_max(capacity_at, lo, hi, 1e-6 * mu);
    sweep.lambda_star = l_star;
    sweep.capacity_star = c_star;
    return sweep;
}

std::vector<RankedCapacity> compare_service_dists(double lambda, double mu, double kappa,
                                                  const std::vector<Distribution>& dists) {
    std::vector<RankedCapacity> out;
    for (const auto& d : dists) {
        if (std::abs(d.mean() - 1.0 / mu) > 1e-9) {
            throw std::invalid_argument("compare_service_dists: mean mismatch for " + d.name());
        }
        LaplaceFn l = [lambda, d](double s) { return mg1_laplace(s, lambda, d); };
        out.push_back({d, capacity_series(lambda, kappa, l).capacity});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.capacity > b.capacity; });
    return out;
}

std::vector<RankedCapacity> compare_arrival_dists(double lambda, double mu, double kappa,
                                                  const std::vector<Distribution>& dists) {
    std::vector<RankedCapacity> out;
    for (const auto& d : dists) {
        if (std::abs(d.mean() - 1.0 / lambda) > 1e-9) {
            throw std::invalid_argument("compare_arrival_dists: mean mismatch for " + d.name());
        }
        LaplaceFn l = [d, mu](double s) { return gm1_laplace(s, d, mu); };
        out.push_back({d, capacity_series(lambda, kappa, l).capacity});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.capacity > b.capacity; });
    return out;
}

}  // namespace qcq
