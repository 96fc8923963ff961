#include "qcq/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcq/optimize.hpp"

namespace qcq {

namespace {

double entropy_of_bloch(double x, double y, double z) {
    double r = std::min(std::sqrt(x * x + y * y + z * z), 1.0);
    return binary_entropy((1.0 - r) / 2.0);
}

}  // namespace

double unital_capacity(const PauliChannel& ch) { return 1.0 - binary_entropy(m_phi(ch)); }

double gad_holevo_objective(double p, double n, double z) {
    double sp = std::sqrt(1.0 - p);
    double a = std::sqrt(std::max(1.0 - z * z, 0.0));
    double zoff = (1.0 - p) * z + p * (1.0 - 2.0 * n);
    // ensemble average sigma has Bloch vector (0, 0, z)
    double s_avg = entropy_of_bloch(0.0, 0.0, zoff);
    double s_pm = entropy_of_bloch(sp * a, 0.0, zoff);  // same for both signs of a
    return s_avg - s_pm;
}

HolevoSolution gad_holevo(double p, double n) {
    if (p < 0.0 || p > 1.0 || n < 0.0 || n > 1.0) {
        throw std::domain_error("gad_holevo: p, n must lie in [0,1]");
    }
    auto objective = [p, n](double z) { return gad_holevo_objective(p, n, z); };

    constexpr double step = 1e-3;
    double best_z = -1.0, best_val = objective(-1.0);
    for (double z = -1.0 + step; z <= 1.0 + step / 2.0; z += step) {
        double zc = std::min(z, 1.0);
        double v = objective(zc);
        if (v > best_val) {
            best_val = v;
            best_z = zc;
        }
    }
    double lo = std::max(best_z - step, -1.0);
    double hi = std::min(best_z + step, 1.0);
    auto [z_star, chi] = golden_section_max(objective, lo, hi, 1e-10);
    if (best_val > chi) {  // boundary maximum
        z_star = best_z;
        chi = best_val;
    }

    HolevoSolution sol;
    sol.chi = std::clamp(chi, 0.0, 1.0);
    sol.z_star = z_star;
    double a = std::sqrt(std::max(1.0 - z_star * z_star, 0.0));
    sol.r_plus = {a, 0.0, z_star};
    sol.r_minus = {-a, 0.0, z_star};
    return sol;
}

double gad_holevo_closed_form(double p, double n, double z_star) {
    if (p >= 1.0) return 0.0;
    double u = (1.0 - p) * z_star + p * (1.0 - 2.0 * n);
    double w = u - p * (1.0 - 2.0 * n);
    double r2 = 1.0 - p - w * w / (1.0 - p) + u * u;
    double r = std::sqrt(std::max(r2, 0.0));
    auto f = [](double x) {
        double hi = (1.0 + x) < 1e-300 ? 0.0 : (1.0 + x) * std::log2(1.0 + x);
        double lo = (1.0 - x) < 1e-300 ? 0.0 : (1.0 - x) * std::log2(1.0 - x);
        return hi + lo;
    };
    double u2 = std::min(u * u, 1.0 - 1e-300);
    double fprime_u = std::abs(u) >= 1.0 ? 0.0 : std::log2((1.0 + u) / (1.0 - u));
    return 0.5 * (f(r) - std::log2(1.0 - u2) - u * fprime_u);
}

InducedChannelResult induced_n1(double p, double n) {
    BinaryChannel ch{p * n, p * (1.0 - n)};
    return {ch, bac_capacity(ch)};
}

InducedChannelResult induced_n2(double p, double n) {
    double one_minus_2n = 1.0 - 2.0 * n;
    double r2 = 4.0 * n * (1.0 - n) * (1.0 - p) + one_minus_2n * one_minus_2n;
    double r = std::sqrt(std::max(r2, 0.0));
    if (r < 1e-15) {  // p = 1, n = 1/2: output carries no information
        BinaryChannel ch{0.5, 0.5};
        return {ch, 0.0};
    }
    double q01 = (1.0 - r) / 2.0;
    // q10 numerator is p(1 + (1-2n)^2) - 1: direct evaluation of
    // Tr(tau* A(I - rho*)) with rho* the output-norm maximizer. The "-" variant
    // would make N2 noiseless at n = 0 instead of matching N1 there.
    double q10 = 0.5 * (1.0 + (p * (1.0 + one_minus_2n * one_minus_2n) - 1.0) / r);
    q01 = std::clamp(q01, 0.0, 1.0);
    q10 = std::clamp(q10, 0.0, 1.0);
    BinaryChannel ch{q01, q10};
    return {ch, bac_capacity(ch)};
}

InducedN3Result induced_n3(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("induced_n3: p outside [0,1]");
    double q = (1.0 - std::sqrt(1.0 - p)) / 2.0;
    return {q, bsc_capacity(q)};
}

InducedChannelReport induced_report(double p, double n) {
    InducedChannelReport rep;
    auto n1 = induced_n1(p, n);
    auto n2 = induced_n2(p, n);
    auto n3 = induced_n3(p);
    rep.n1 = n1.channel;
    rep.n2 = n2.channel;
    rep.n3_flip = n3.flip;
    rep.c_n1 = n1.capacity;
    rep.c_n2 = n2.capacity;
    rep.c_n3 = n3.capacity;
    rep.chi = gad_holevo(p, n).chi;
    rep.delta = rep.chi - rep.c_n3;
    return rep;
}

}  // namespace qcq
