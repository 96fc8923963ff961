#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qcq/optimize.hpp"
#include "qcq/qubit_core.hpp"
#include "test_util.hpp"

using namespace qcq;

namespace {

// Independent oracle for the BAC capacity: maximize I(X;Y) over the input
// prior by grid search plus golden-section refinement.
double bac_capacity_oracle(const BinaryChannel& ch) {
    double best = 0.0, best_p = 0.5;
    for (int i = 0; i <= 1000; ++i) {
        double p = i / 1000.0;
        double v = mutual_information_binary(p, ch);
        if (v > best) {
            best = v;
            best_p = p;
        }
    }
    auto [p, v] = golden_section_max(
        [&](double prior) { return mutual_information_binary(prior, ch); },
        std::max(best_p - 1e-3, 0.0), std::min(best_p + 1e-3, 1.0), 1e-10);
    return std::max(v, best);
}

}  // namespace

TEST_CASE("binary entropy endpoints and values") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    // frozen from a 30-digit evaluation of the formula
    CHECK(binary_entropy(0.11) == doctest::Approx(0.499915958164528).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(-0.01), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.01), std::domain_error);
}

TEST_CASE("binary entropy is concave") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        double a = u(rng), b = u(rng);
        CHECK(binary_entropy((a + b) / 2.0) >=
              (binary_entropy(a) + binary_entropy(b)) / 2.0 - 1e-12);
    }
}

TEST_CASE("bloch/density conversions") {
    auto mixed = bloch_to_density({0.0, 0.0, 0.0});
    CHECK(std::abs(mixed.matrix().a - 0.5) < 1e-15);
    CHECK(std::abs(mixed.matrix().d - 0.5) < 1e-15);
    CHECK(std::abs(mixed.matrix().b) < 1e-15);

    auto zero = bloch_to_density({0.0, 0.0, 1.0});
    CHECK(std::abs(zero.matrix().a - 1.0) < 1e-15);
    CHECK(std::abs(zero.matrix().d) < 1e-15);

    auto xplus = bloch_to_density({1.0, 0.0, 0.0});
    CHECK(std::abs(xplus.matrix().a - 0.5) < 1e-15);
    CHECK(std::abs(xplus.matrix().b - 0.5) < 1e-15);
    CHECK(std::abs(xplus.matrix().c - 0.5) < 1e-15);

    CHECK_THROWS(bloch_to_density({1.0, 1.0, 1.0}));
}

TEST_CASE("bloch round trip on random states") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        auto r = test::random_bloch(rng);
        auto back = density_to_bloch(bloch_to_density(r));
        CHECK(std::abs(back.x - r.x) < 1e-12);
        CHECK(std::abs(back.y - r.y) < 1e-12);
        CHECK(std::abs(back.z - r.z) < 1e-12);
    }
}

TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_entropy(bloch_to_density({0.0, 0.0, 1.0})) == doctest::Approx(0.0));
    CHECK(von_neumann_entropy(bloch_to_density({0.0, 0.0, 0.0})) ==
          doctest::Approx(1.0).epsilon(1e-15));
    // |r| = 0.6 -> h(0.2), frozen high-precision value
    CHECK(von_neumann_entropy(bloch_to_density({0.6, 0.0, 0.0})) ==
          doctest::Approx(0.721928094887362).epsilon(1e-12));
}

TEST_CASE("operator norm equals largest eigenvalue") {
    CHECK(operator_norm(bloch_to_density({0.0, 0.0, 0.0})) == doctest::Approx(0.5));
    CHECK(operator_norm(bloch_to_density({0.0, 1.0, 0.0})) == doctest::Approx(1.0));
    CHECK(operator_norm(bloch_to_density({0.0, 0.0, 0.8})) == doctest::Approx(0.9));

    std::mt19937_64 rng(13);
    for (int i = 0; i < 10000; ++i) {
        auto rho = bloch_to_density(test::random_bloch(rng));
        CHECK(std::abs(operator_norm(rho) - rho.eigenvalues()[1]) < 1e-12);
    }
}

TEST_CASE("BSC capacity") {
    CHECK(bsc_capacity(0.0) == doctest::Approx(1.0));
    CHECK(bsc_capacity(0.5) == doctest::Approx(0.0));
    CHECK(bsc_capacity(1.0) == doctest::Approx(1.0));
}

TEST_CASE("BAC capacity special cases") {
    CHECK(bac_capacity({0.11, 0.11}) == doctest::Approx(bsc_capacity(0.11)).epsilon(1e-14));
    CHECK(bac_capacity({0.0, 1.0}) == doctest::Approx(0.0));
    // Z-channel, frozen from the prior-maximization oracle
    CHECK(bac_capacity({0.0, 0.5}) == doctest::Approx(0.321928094887362).epsilon(1e-9));
    CHECK_THROWS_AS(bac_capacity({-0.1, 0.5}), std::domain_error);
}

TEST_CASE("BAC capacity symmetries") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        double q = u(rng), r = u(rng);
        double c = bac_capacity({q, r});
        CHECK(c == doctest::Approx(bac_capacity({r, q})).epsilon(1e-12));
        CHECK(c == doctest::Approx(bac_capacity({1.0 - q, 1.0 - r})).epsilon(1e-12));
    }
}

TEST_CASE("mutual information examples") {
    CHECK(mutual_information_binary(0.5, {0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(mutual_information_binary(0.0, {0.3, 0.4}) == doctest::Approx(0.0));
    CHECK(mutual_information_binary(0.5, {0.11, 0.11}) ==
          doctest::Approx(0.500084041835472).epsilon(1e-12));
}

TEST_CASE("BAC closed form matches prior-maximization oracle on a 50x50 grid") {
    for (int i = 0; i < 50; ++i) {
        for (int j = 0; j < 50; ++j) {
            BinaryChannel ch{i / 49.0, j / 49.0};
            CHECK(bac_capacity(ch) == doctest::Approx(bac_capacity_oracle(ch)).epsilon(1e-6));
        }
    }
}
