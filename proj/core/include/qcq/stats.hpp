#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace qcq {

struct MeanEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

// Mean with a batch-means standard error; for Markov-correlated sequences
// (Lindley output) the naive iid standard error is an underestimate.
inline MeanEstimate mean_with_batch_se(std::span<const double> xs, std::size_t n_batches = 100) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    double mean = sum / static_cast<double>(xs.size());

    if (xs.size() < 2 * n_batches) {
        double ss = 0.0;
        for (double x : xs) ss += (x - mean) * (x - mean);
        double var = ss / static_cast<double>(xs.size());
        return {mean, std::sqrt(var / static_cast<double>(xs.size()))};
    }

    std::size_t batch = xs.size() / n_batches;
    double ss = 0.0;
    for (std::size_t b = 0; b < n_batches; ++b) {
        double bs = 0.0;
        for (std::size_t i = b * batch; i < (b + 1) * batch; ++i) bs += xs[i];
        double bm = bs / static_cast<double>(batch);
        ss += (bm - mean) * (bm - mean);
    }
    double var_bm = ss / static_cast<double>(n_batches - 1);
    return {mean, std::sqrt(var_bm / static_cast<double>(n_batches))};
}

}  // namespace qcq
