#pragma once

#include <cstdint>
#include <vector>

#include "qcq/queue_capacity.hpp"

namespace qcq {

enum class EncoderMode { blind, waiting_aware };

struct SimConfig {
    QueueChannelSpec spec;
    std::size_t n_bits = 1000000;
    std::uint64_t seed = 42;
    EncoderMode mode = EncoderMode::blind;
    std::vector<double> bucket_edges;  // empty: deciles of the empirical W
    std::size_t burn_in = kDefaultBurnIn;
    int threads = 1;
};

struct SimBucket {
    double lo = 0.0, hi = 0.0;
    std::uint64_t n = 0;
    std::uint64_t flips = 0;      // canonical (label-corrected) flip events
    std::uint64_t raw_flips = 0;  // before label canonicalization
    std::uint64_t bit_ones = 0;
    std::uint64_t flips_on_one = 0;
    double crossover = 0.0;  // canonical empirical flip rate
    double ci_lo = 0.0, ci_hi = 0.0;
    double predicted = 0.0;  // mean canonical crossover 1 - M_{Phi_W} over the bucket
};

struct SimReport {
    std::vector<SimBucket> buckets;
    std::uint64_t total = 0;
    std::uint64_t total_flips = 0;
    std::uint64_t seed = 0;
    double lambda = 0.0;
    std::size_t empty_buckets = 0;
};

// Bits -> product encoding -> Lindley waiting -> channel -> projective
// decoding; per-bucket empirical crossover with exact binomial CIs.
SimReport run_end_to_end(const SimConfig& cfg);

// Plug-in achievable rate lambda * E[1 - h(q_hat(W))] from bucketed crossovers.
double estimate_rate(const SimReport& report, double lambda);

}  // namespace qcq
