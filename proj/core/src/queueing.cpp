#include "qcq/queueing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcq/rng.hpp"
#include "qcq/stats.hpp"

namespace qcq {

Distribution Distribution::exponential(double rate) {
    if (rate <= 0.0) throw std::invalid_argument("exponential: rate must be positive");
    return Distribution(Kind::exponential, rate, 0.0);
}

Distribution Distribution::deterministic(double value) {
    if (value <= 0.0) throw std::invalid_argument("deterministic: value must be positive");
    return Distribution(Kind::deterministic, value, 0.0);
}

Distribution Distribution::gamma(double shape, double rate) {
    if (shape <= 0.0 || rate <= 0.0) throw std::invalid_argument("gamma: parameters must be positive");
    return Distribution(Kind::gamma, shape, rate);
}

Distribution Distribution::uniform(double lo, double hi) {
    if (lo < 0.0 || hi <= lo) throw std::invalid_argument("uniform: need 0 <= lo < hi");
    return Distribution(Kind::uniform, lo, hi);
}

double Distribution::mean() const {
    switch (kind_) {
        case Kind::exponential: return 1.0 / a_;
        case Kind::deterministic: return a_;
        case Kind::gamma: return a_ / b_;
        case Kind::uniform: return 0.5 * (a_ + b_);
    }
    return 0.0;
}

double Distribution::laplace(double s) const {
    if (s < 0.0) throw std::domain_error("laplace: s must be >= 0");
    if (s == 0.0) return 1.0;
    switch (kind_) {
        case Kind::exponential: return a_ / (a_ + s);
        case Kind::deterministic: return std::exp(-s * a_);
        case Kind::gamma: return std::pow(b_ / (b_ + s), a_);
        case Kind::uniform:
            return (std::exp(-s * a_) - std::exp(-s * b_)) / (s * (b_ - a_));
    }
    return 0.0;
}

double Distribution::sample(std::mt19937_64& rng) const {
    switch (kind_) {
        case Kind::exponential: {
            double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            return -std::log1p(-u) / a_;
        }
        case Kind::deterministic:
            return a_;
        case Kind::gamma:
            return std::gamma_distribution<double>(a_, 1.0 / b_)(rng);
        case Kind::uniform:
            return std::uniform_real_distribution<double>(a_, b_)(rng);
    }
    return 0.0;
}

std::string Distribution::name() const {
    switch (kind_) {
        case Kind::exponential: return "exponential";
        case Kind::deterministic: return "deterministic";
        case Kind::gamma: return "gamma";
        case Kind::uniform: return "uniform";
    }
    return "?";
}

WaitingSample lindley_simulate(const QueueModel& model, std::size_t n,
                               std::size_t burn_in, std::uint64_t seed) {
    if (!model.stable()) throw std::invalid_argument("lindley_simulate: unstable queue (lambda >= mu)");
    if (n == 0) throw std::invalid_argument("lindley_simulate: n must be positive");

    std::mt19937_64 rng = make_stream(seed, 0);
    WaitingSample out;
    out.seed = seed;
    out.burn_in = burn_in;
    out.values.reserve(n);

    double w = model.service.sample(rng);  // W_1 = S_1
    if (burn_in == 0) out.values.push_back(w);
    for (std::size_t i = 1; out.values.size() < n; ++i) {
        double a = model.arrival.sample(rng);
        double s = model.service.sample(rng);
        w = std::max(w - a, 0.0) + s;
        if (i >= burn_in) out.values.push_back(w);
    }
    return out;
}

double mm1_laplace(double s, double lambda, double mu) {
    if (s < 0.0) throw std::domain_error("mm1_laplace: s must be >= 0");
    if (lambda >= mu) throw std::invalid_argument("mm1_laplace: unstable (lambda >= mu)");
    return (mu - lambda) / (mu - lambda + s);
}

double gm1_sigma(const Distribution& arrival, double mu) {
    if (arrival.mean() <= 1.0 / mu) throw std::invalid_argument("gm1_sigma: unstable queue");
    auto g = [&](double sigma) { return arrival.laplace(mu * (1.0 - sigma)); };

    double sigma = 0.5;
    for (int it = 0; it < 10000; ++it) {
        double next = 0.5 * sigma + 0.5 * g(sigma);
        if (std::abs(next - sigma) < 1e-15) {
            sigma = next;
            break;
        }
        sigma = next;
    }
    if (std::abs(sigma - g(sigma)) < 1e-12) return sigma;

    // Bisection fallback on f(sigma) = sigma - g(sigma); f(0) < 0, f(1-) > 0.
    double lo = 0.0, hi = 1.0 - 1e-12;
    if (lo - g(lo) >= 0.0 || hi - g(hi) <= 0.0) {
        throw std::runtime_error("gm1_sigma: fixed point not bracketed");
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid - g(mid) < 0.0) lo = mid; else hi = mid;
    }
    sigma = 0.5 * (lo + hi);
    if (std::abs(sigma - g(sigma)) >= 1e-12) {
        throw std::runtime_error("gm1_sigma: no convergence");
    }
    return sigma;
}

double gm1_laplace(double s, const Distribution& arrival, double mu) {
    if (s < 0.0) throw std::domain_error("gm1_laplace: s must be >= 0");
    double rate = mu * (1.0 - gm1_sigma(arrival, mu));
    return rate / (rate + s);
}

double mg1_laplace(double s, double lambda, const Distribution& service) {
    if (s < 0.0) throw std::domain_error("mg1_laplace: s must be >= 0");
    double rho = lambda * service.mean();
    if (rho >= 1.0) throw std::invalid_argument("mg1_laplace: unstable queue");
    if (s < 1e-300) return 1.0;
    double bs = service.laplace(s);
    return (1.0 - rho) * s * bs / (s - lambda * (1.0 - bs));
}

LaplaceEstimate empirical_laplace(const WaitingSample& sample, double s) {
    if (sample.values.empty()) throw std::invalid_argument("empirical_laplace: empty sample");
    if (s < 0.0) throw std::domain_error("empirical_laplace: s must be >= 0");
    std::vector<double> vals;
    vals.reserve(sample.values.size());
    for (double w : sample.values) vals.push_back(std::exp(-s * w));
    auto est = mean_with_batch_se(vals);
    return {est.mean, est.std_error};
}

}  // namespace qcq
