#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "qcq/queueing.hpp"
#include "qcq/stats.hpp"

using namespace qcq;

namespace {

// Bisection oracle for the G/M/1 fixed point, independent of the production
// damped iteration.
double sigma_bisect(const Distribution& arrival, double mu) {
    auto f = [&](double sigma) { return sigma - arrival.laplace(mu * (1.0 - sigma)); };
    double lo = 0.0, hi = 1.0 - 1e-12;
    for (int i = 0; i < 300; ++i) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("distribution invariants") {
    CHECK(Distribution::exponential(2.0).mean() == doctest::Approx(0.5));
    CHECK(Distribution::deterministic(1.5).mean() == doctest::Approx(1.5));
    CHECK(Distribution::gamma(2.0, 4.0).mean() == doctest::Approx(0.5));
    CHECK(Distribution::uniform(0.0, 3.0).mean() == doctest::Approx(1.5));
    CHECK_THROWS(Distribution::exponential(-1.0));
    CHECK_THROWS(Distribution::uniform(2.0, 1.0));
}

TEST_CASE("laplace transforms are completely monotone-like in s") {
    auto dists = {Distribution::exponential(1.0), Distribution::deterministic(1.0),
                  Distribution::gamma(2.0, 2.0), Distribution::uniform(0.5, 1.5)};
    for (const auto& d : dists) {
        CHECK(d.laplace(0.0) == doctest::Approx(1.0));
        double prev = 1.0;
        for (double s : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            double v = d.laplace(s);
            CHECK(v > 0.0);
            CHECK(v <= prev + 1e-15);
            prev = v;
        }
    }
}

TEST_CASE("lindley recursion: deterministic queue never builds") {
    QueueModel model{Distribution::deterministic(2.0), Distribution::deterministic(1.0)};
    auto sample = lindley_simulate(model, 1000, 100, 1);
    for (double w : sample.values) CHECK(w == doctest::Approx(1.0));
}

TEST_CASE("lindley rejects unstable models") {
    QueueModel model{Distribution::exponential(1.2), Distribution::exponential(1.0)};
    CHECK_THROWS(lindley_simulate(model, 100, 0, 1));
}

TEST_CASE("lindley M/M/1 stationary sojourn mean") {
    QueueModel model{Distribution::exponential(0.5), Distribution::exponential(1.0)};
    auto sample = lindley_simulate(model, 1000000, kDefaultBurnIn, 42);
    auto est = mean_with_batch_se(sample.values);
    // classical mean 1/(mu - lambda) = 2
    CHECK(std::abs(est.mean - 2.0) <= 3.0 * est.std_error);
}

TEST_CASE("lindley output is seed-reproducible") {
    QueueModel model{Distribution::exponential(0.5), Distribution::gamma(2.0, 2.0)};
    auto a = lindley_simulate(model, 10000, 1000, 7);
    auto b = lindley_simulate(model, 10000, 1000, 7);
    CHECK(a.values == b.values);
    auto c = lindley_simulate(model, 10000, 1000, 8);
    CHECK(a.values != c.values);
}

TEST_CASE("mm1_laplace closed form") {
    CHECK(mm1_laplace(0.0, 0.5, 1.0) == doctest::Approx(1.0));
    CHECK(mm1_laplace(0.5, 0.5, 1.0) == doctest::Approx(0.5));
    CHECK(mm1_laplace(1e9, 0.5, 1.0) < 1e-8);
    CHECK_THROWS(mm1_laplace(0.5, 1.0, 1.0));
}

TEST_CASE("gm1_sigma closed forms and oracle") {
    // exponential arrivals: quadratic gives sigma = lambda/mu
    for (double lambda : {0.2, 0.5, 0.9}) {
        double sigma = gm1_sigma(Distribution::exponential(lambda), 1.0);
        CHECK(sigma == doctest::Approx(lambda).epsilon(1e-12));
    }
    // deterministic arrivals: bisection oracle
    auto det = Distribution::deterministic(2.0);
    double sigma = gm1_sigma(det, 1.0);
    CHECK(sigma == doctest::Approx(sigma_bisect(det, 1.0)).epsilon(1e-10));
    CHECK(std::abs(sigma - det.laplace(1.0 * (1.0 - sigma))) < 1e-12);

    // heavy traffic: sigma -> 1
    CHECK(gm1_sigma(Distribution::exponential(0.999), 1.0) == doctest::Approx(0.999).epsilon(1e-9));
    CHECK_THROWS(gm1_sigma(Distribution::exponential(1.5), 1.0));
}

TEST_CASE("gm1_sigma residual and range over stable inputs") {
    for (double lambda : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (auto d : {Distribution::deterministic(1.0 / lambda),
                       Distribution::exponential(lambda),
                       Distribution::gamma(3.0, 3.0 * lambda),
                       Distribution::uniform(0.0, 2.0 / lambda)}) {
            double sigma = gm1_sigma(d, 1.0);
            CHECK(sigma > 0.0);
            CHECK(sigma < 1.0);
            CHECK(std::abs(sigma - d.laplace(1.0 - sigma)) < 1e-12);
        }
    }
}

TEST_CASE("gm1_laplace reduces to mm1 for exponential arrivals") {
    for (double s : {0.1, 0.5, 1.0, 2.0}) {
        CHECK(gm1_laplace(s, Distribution::exponential(0.5), 1.0) ==
              doctest::Approx(mm1_laplace(s, 0.5, 1.0)).epsilon(1e-12));
    }
    CHECK(gm1_laplace(0.0, Distribution::deterministic(2.0), 1.0) == doctest::Approx(1.0));
}

TEST_CASE("mg1_laplace reduces to mm1 for exponential service") {
    for (double s : {0.1, 0.5, 1.0, 2.0}) {
        CHECK(mg1_laplace(s, 0.5, Distribution::exponential(1.0)) ==
              doctest::Approx(mm1_laplace(s, 0.5, 1.0)).epsilon(1e-12));
    }
    CHECK(mg1_laplace(0.0, 0.5, Distribution::deterministic(1.0)) == doctest::Approx(1.0));
    CHECK_THROWS(mg1_laplace(1.0, 1.5, Distribution::deterministic(1.0)));
}

TEST_CASE("analytic transforms match Lindley simulation") {
    struct Case {
        QueueModel model;
        std::function<double(double)> analytic;
    };
    QueueModel mm1{Distribution::exponential(0.5), Distribution::exponential(1.0)};
    QueueModel md1{Distribution::exponential(0.5), Distribution::deterministic(1.0)};
    QueueModel dm1{Distribution::deterministic(2.0), Distribution::exponential(1.0)};
    std::vector<Case> cases;
    cases.push_back({mm1, [](double s) { return mm1_laplace(s, 0.5, 1.0); }});
    cases.push_back({md1, [](double s) { return mg1_laplace(s, 0.5, Distribution::deterministic(1.0)); }});
    cases.push_back({dm1, [](double s) { return gm1_laplace(s, Distribution::deterministic(2.0), 1.0); }});

    std::uint64_t seed = 101;
    for (const auto& c : cases) {
        auto sample = lindley_simulate(c.model, 1000000, kDefaultBurnIn, seed++);
        for (double s : {0.1, 0.5, 1.0, 2.0}) {
            auto est = empirical_laplace(sample, s);
            CHECK(std::abs(est.value - c.analytic(s)) <= 3.0 * est.std_error);
        }
    }
}

TEST_CASE("deterministic beats exponential where it should") {
    // M/G/1 sojourn transforms at equal mean service cross (here at s = 0.5),
    // so pointwise dominance only holds for small s; the robust statement is
    // the smaller mean sojourn, E[W] = E[S] + lambda E[S^2] / (2 (1 - rho)).
    CHECK(mg1_laplace(0.1, 0.5, Distribution::deterministic(1.0)) >=
          mg1_laplace(0.1, 0.5, Distribution::exponential(1.0)));
    auto pk_mean = [](const Distribution& serv) {
        double ds = 1e-6;
        return (mg1_laplace(0.0, 0.5, serv) - mg1_laplace(ds, 0.5, serv)) / ds;
    };
    CHECK(pk_mean(Distribution::deterministic(1.0)) == doctest::Approx(1.5).epsilon(1e-4));
    CHECK(pk_mean(Distribution::exponential(1.0)) == doctest::Approx(2.0).epsilon(1e-4));
    // G/M/1: deterministic arrivals dominate; equivalently sigma_det <= sigma_exp
    CHECK(gm1_sigma(Distribution::deterministic(2.0), 1.0) <
          gm1_sigma(Distribution::exponential(0.5), 1.0));
    for (double s : {0.1, 0.5, 1.0, 2.0}) {
        CHECK(gm1_laplace(s, Distribution::deterministic(2.0), 1.0) >=
              gm1_laplace(s, Distribution::exponential(0.5), 1.0));
    }
}

TEST_CASE("empirical_laplace edge cases") {
    WaitingSample zeros{{0.0, 0.0, 0.0}, 0, 0};
    CHECK(empirical_laplace(zeros, 2.0).value == doctest::Approx(1.0));
    WaitingSample some{{0.5, 1.0, 2.0}, 0, 0};
    CHECK(empirical_laplace(some, 0.0).value == doctest::Approx(1.0));
    WaitingSample empty{};
    CHECK_THROWS(empirical_laplace(empty, 1.0));
}
