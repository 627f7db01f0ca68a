#include <cmath>
#include <random>

#include "doctest.h"
#include "analytics/analytics.hpp"
#include "sampling/sample.hpp"
#include "specfun/specfun.hpp"

using namespace iterlab;

namespace {
const QuadratureConfig kTight{1e-12, 1e-16, 4000};
}

TEST_CASE("moment_iterated: IBM anchor, zero time, factorial checks") {
    CHECK(std::fabs(moment_iterated({1, {0.5, 0.5}}, 1.0) - 0.7978845608028654) < 1e-14);
    CHECK(moment_iterated({3, {0.6, 0.7, 0.8}}, 0.0) == 0.0);
    CHECK_THROWS_AS(moment_iterated({1, {}}, 1.0), DomainError);
    CHECK_THROWS_AS(moment_iterated({0, {0.5}}, 1.0), DomainError);
}

TEST_CASE("moment_iterated: equals quadrature moments of the density") {
    // n=1 chains: int x^(2k) q(x,t) dx by direct quadrature.
    const double t = 1.0;
    for (auto [h1, h2] : {std::pair{0.5, 0.5}, std::pair{0.7, 0.4}, std::pair{0.3, 0.8}}) {
        const ProcessModel m = ProcessModel::iterated_fbm(h1, h2);
        for (int k : {1, 2}) {
            auto q = integrate_halfline(
                [&](double x) { return std::pow(x, 2.0 * k) * density(m, x, t, kTight); },
                QuadratureConfig{1e-11, 1e-15, 4000});
            const double closed = moment_iterated({k, {h1, h2}}, t);
            CHECK(std::fabs(2.0 * q.value - closed) < 1e-6 * std::max(1.0, closed));
        }
    }
}

TEST_CASE("moment_iterated: IBM special form 2^(k/2)/2^(2k) (2k)!/Gamma(k/2+1) t^(k/2)") {
    for (int k = 1; k <= 10; ++k) {
        for (double t : {1.0, 3.0}) {
            const double lhs = moment_iterated({k, {0.5, 0.5}}, t);
            const double rhs = std::exp(0.5 * k * std::log(2.0) - 2.0 * k * std::log(2.0) +
                                        log_gamma(2.0 * k + 1.0) - log_gamma(0.5 * k + 1.0) +
                                        0.5 * k * std::log(t));
            CHECK(std::fabs(lhs / rhs - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("moment_iterated: Monte Carlo agreement for a two-level chain") {
    const std::vector<double> hs{0.6, 0.7, 0.8};
    auto v = sample_many(ProcessModel::chain(hs), 1.0, RngState{21, 5}, 2000000);
    double s1 = 0, s2 = 0;
    for (double x : v) {
        const double p = x * x;
        s1 += p;
        s2 += p * p;
    }
    const double mean = s1 / v.size();
    const double se = std::sqrt((s2 / v.size() - mean * mean) / v.size());
    const double closed = moment_iterated({1, hs}, 1.0);
    CHECK(std::fabs(mean - closed) < 4.0 * se);
}

TEST_CASE("moment_iterated: overflow is signaled") {
    CHECK_THROWS_AS(moment_iterated({500, {0.9, 0.9}}, 1.0), Overflow);
    // log-space path keeps k = 50 representable
    const double big = moment_iterated({50, {0.9, 0.9}}, 1.0);
    CHECK(std::isfinite(big));
    CHECK(big > 1e100);
}

TEST_CASE("variance_iterated: closed form and growth comparison") {
    CHECK(std::fabs(variance_iterated(Hurst(0.5), Hurst(0.5), 1.0) - 0.7978845608028654) < 1e-14);
    // equals moment_iterated at k = 1
    for (auto [h1, h2] : {std::pair{0.3, 0.9}, std::pair{0.7, 0.4}}) {
        for (double t : {0.5, 2.0}) {
            CHECK(std::fabs(variance_iterated(Hurst(h1), Hurst(h2), t) -
                            moment_iterated({1, {h1, h2}}, t)) < 1e-13);
        }
    }
    // exponent 2 H1 H2 > 1/2 iff H1 H2 > 1/4; equality at the boundary
    const double r10 = variance_iterated(Hurst(0.5), Hurst(0.5), 10.0) / variance_iterated(Hurst(0.5), Hurst(0.5), 1.0);
    CHECK(std::fabs(r10 - std::pow(10.0, 0.5)) < 1e-10);  // H1H2 = 1/4 exactly
    const double fast = variance_iterated(Hurst(0.9), Hurst(0.5), 10.0) / variance_iterated(Hurst(0.9), Hurst(0.5), 1.0);
    const double slow = variance_iterated(Hurst(0.4), Hurst(0.5), 10.0) / variance_iterated(Hurst(0.4), Hurst(0.5), 1.0);
    CHECK(fast > std::pow(10.0, 0.5));
    CHECK(slow < std::pow(10.0, 0.5));
}

TEST_CASE("mellin_weighted_chain: mass, total-variance anchor, quadrature oracle") {
    for (int n : {1, 2, 3}) {
        for (double t : {0.5, 1.0, 2.0}) {
            CHECK(std::fabs(mellin_weighted_chain(1.0, n, Hurst(0.6), t) - 1.0) < 1e-14);
        }
    }
    // n=2, alpha=3 -> t^2H = E (J1_F)^2
    for (double t : {0.7, 1.9}) {
        CHECK(std::fabs(mellin_weighted_chain(3.0, 2, Hurst(0.35), t) - std::pow(t, 2 * 0.35)) < 1e-13);
    }
    // n=2 arbitrary alpha vs int x^(alpha-1) (2/(pi t^H)) K0(x/t^H) dx
    const double h = 0.6, t = 1.4;
    for (double alpha : {0.5, 1.0, 2.0, 3.0, 4.5}) {
        auto q = integrate_halfline(
            [&](double x) {
                return std::pow(x, alpha - 1.0) * 2.0 / (M_PI * std::pow(t, h)) *
                       bessel_k0(x / std::pow(t, h)).value;
            },
            QuadratureConfig{1e-11, 1e-15, 4000}, {std::pow(t, h)});
        CHECK(std::fabs(q.value - mellin_weighted_chain(alpha, 2, Hurst(h), t)) < 1e-8);
    }
}

TEST_CASE("moment/Mellin consistency through the B(|B_H|) reduction") {
    // J^1_F(t) = B_H(|B_H(t)|^(1/H)) shares its law with B_{H1=1}-style
    // iterated chains: the moment formula at hursts (1, H) matches the n=2
    // Mellin at alpha = 2k+1.
    for (double h : {0.3, 0.6, 0.9}) {
        for (int k : {1, 2, 3}) {
            const double lhs = moment_iterated({k, {1.0, h}}, 1.3);
            const double rhs = mellin_weighted_chain(2.0 * k + 1.0, 2, Hurst(h), 1.3);
            CHECK(std::fabs(lhs / rhs - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("charfn: anchors and Cauchy transform") {
    CHECK(charfn_numeric(ProcessModel::cauchy(), 0.0, 1.0) == 1.0);
    for (double beta : {0.5, 1.0, 2.0}) {
        for (double t : {0.7, 1.0}) {
            CHECK(std::fabs(charfn_numeric(ProcessModel::cauchy(), beta, t) - std::exp(-t * beta)) < 1e-6);
        }
    }
}

TEST_CASE("charfn: quadrature vs series for the K0 law at beta t^H = 0.8") {
    const double h = 0.6, t = 1.0, beta = 0.8;
    const double quad = charfn_numeric(ProcessModel::weighted_j(1, h), beta, t);
    const double series = charfn_series(2, Hurst(h), beta, t);
    CHECK(std::fabs(quad - series) < 1e-9);
    CHECK(std::fabs(series - 0.7808688094430303) < 1e-12);
}

TEST_CASE("charfn_series: divergence signaled for large argument") {
    CHECK_THROWS_AS(charfn_series(2, Hurst(0.6), 3.0, 2.0), SeriesDivergence);
}

TEST_CASE("charfn: bounded and even at random frequencies") {
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> ub(0.05, 3.0);
    const auto models = {ProcessModel::fbm(0.6), ProcessModel::iterated_fbm(0.6, 0.4),
                         ProcessModel::cauchy()};
    for (const auto& m : models) {
        for (int i = 0; i < 50; ++i) {
            const double beta = ub(gen);
            const double plus = charfn_numeric(m, beta, 1.0);
            const double minus = charfn_numeric(m, -beta, 1.0);
            CHECK(std::fabs(plus) <= 1.0 + 1e-9);
            CHECK(std::fabs(plus - minus) < 1e-12);
        }
    }
}
