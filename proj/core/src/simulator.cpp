#include "qcq/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/binomial.hpp>

#include "qcq/capacity.hpp"
#include "qcq/rng.hpp"

namespace qcq {

namespace {

struct Accumulator {
    std::uint64_t n = 0, flips = 0, raw_flips = 0, ones = 0, flips_on_one = 0;
    double predicted_sum = 0.0;

    void merge(const Accumulator& o) {
        n += o.n;
        flips += o.flips;
        raw_flips += o.raw_flips;
        ones += o.ones;
        flips_on_one += o.flips_on_one;
        predicted_sum += o.predicted_sum;
    }
};

std::vector<double> decile_edges(std::vector<double> w) {
    std::sort(w.begin(), w.end());
    std::vector<double> edges;
    edges.push_back(0.0);
    for (int i = 1; i < 10; ++i) {
        edges.push_back(w[i * w.size() / 10]);
    }
    edges.push_back(std::nextafter(w.back(), std::numeric_limits<double>::infinity()));
    return edges;
}

std::size_t bucket_of(const std::vector<double>& edges, double w) {
    auto it = std::upper_bound(edges.begin() + 1, edges.end() - 1, w);
    return static_cast<std::size_t>(it - edges.begin()) - 1;
}

}  // namespace

SimReport run_end_to_end(const SimConfig& cfg) {
    if (cfg.n_bits == 0) throw std::invalid_argument("run_end_to_end: n_bits must be positive");

    const ChannelFamily& fam = cfg.spec.family;
    WaitingSample sample =
        lindley_simulate(cfg.spec.queue, cfg.n_bits, cfg.burn_in, cfg.seed);

    std::vector<double> edges = cfg.bucket_edges;
    if (edges.empty()) {
        edges = decile_edges(sample.values);
    } else if (!std::is_sorted(edges.begin(), edges.end())) {
        throw std::invalid_argument("run_end_to_end: bucket edges must be ascending");
    }
    const std::size_t n_buckets = edges.size() - 1;

    // Blind mode requires a single axis that is optimal for every waiting time.
    int blind_axis = 0;
    if (cfg.mode == EncoderMode::blind) {
        std::vector<double> grid;
        for (int i = 0; i <= 32; ++i) {
            grid.push_back(sample.values[i * (sample.values.size() - 1) / 32]);
        }
        std::sort(grid.begin(), grid.end());
        blind_axis = waiting_invariant_axis(fam, grid);
        if (blind_axis == 0) {
            throw std::invalid_argument(
                "run_end_to_end: blind encoding needs a waiting-invariant optimal axis");
        }
    }

    const int threads = std::max(cfg.threads, 1);
    std::vector<std::vector<Accumulator>> partial(
        threads, std::vector<Accumulator>(n_buckets));

    auto worker = [&](int t) {
        std::mt19937_64 rng = make_stream(cfg.seed, 1 + static_cast<std::uint64_t>(t));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::size_t lo = cfg.n_bits * t / threads;
        std::size_t hi = cfg.n_bits * (t + 1) / threads;
        auto& acc = partial[t];
        for (std::size_t i = lo; i < hi; ++i) {
            double w = sample.values[i];
            PauliChannel ch = fam.at(w);
            int axis = cfg.mode == EncoderMode::blind ? blind_axis : optimal_code(ch).axis;
            double lam = ch.attenuation()[axis - 1];

            bool bit = unif(rng) < 0.5;
            // Born probability of the measurement outcome matching the sent bit:
            // Tr(Phi(rho_b) tau_b) = (1 + lambda_axis)/2, identical for both bits.
            bool raw_flip = unif(rng) < (1.0 - lam) / 2.0;
            // Decoder inverts labels when the raw crossover exceeds 1/2.
            bool flip = lam >= 0.0 ? raw_flip : !raw_flip;

            std::size_t b = bucket_of(edges, w);
            acc[b].n += 1;
            acc[b].raw_flips += raw_flip ? 1 : 0;
            acc[b].flips += flip ? 1 : 0;
            acc[b].ones += bit ? 1 : 0;
            acc[b].flips_on_one += (bit && flip) ? 1 : 0;
            acc[b].predicted_sum += (1.0 - std::abs(lam)) / 2.0;
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    SimReport report;
    report.seed = cfg.seed;
    report.lambda = cfg.spec.queue.arrival_rate();
    report.buckets.resize(n_buckets);
    for (std::size_t b = 0; b < n_buckets; ++b) {
        Accumulator acc;
        for (int t = 0; t < threads; ++t) acc.merge(partial[t][b]);
        SimBucket& bk = report.buckets[b];
        bk.lo = edges[b];
        bk.hi = edges[b + 1];
        bk.n = acc.n;
        bk.flips = acc.flips;
        bk.raw_flips = acc.raw_flips;
        bk.bit_ones = acc.ones;
        bk.flips_on_one = acc.flips_on_one;
        if (acc.n > 0) {
            bk.crossover = static_cast<double>(acc.flips) / acc.n;
            bk.predicted = acc.predicted_sum / acc.n;
            using boost::math::binomial_distribution;
            bk.ci_lo = binomial_distribution<>::find_lower_bound_on_p(
                static_cast<double>(acc.n), static_cast<double>(acc.flips), 0.025);
            bk.ci_hi = binomial_distribution<>::find_upper_bound_on_p(
                static_cast<double>(acc.n), static_cast<double>(acc.flips), 0.025);
        } else {
            ++report.empty_buckets;
        }
        report.total += acc.n;
        report.total_flips += acc.flips;
    }
    return report;
}

double estimate_rate(const SimReport& report, double lambda) {
    if (report.total == 0) throw std::invalid_argument("estimate_rate: empty report");
    double sum = 0.0;
    for (const SimBucket& b : report.buckets) {
        if (b.n == 0) continue;
        sum += static_cast<double>(b.n) * (1.0 - binary_entropy(b.crossover));
    }
    return lambda * sum / static_cast<double>(report.total);
}

}  // namespace qcq
