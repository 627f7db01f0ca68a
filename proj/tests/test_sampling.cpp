#include <cmath>
#include <cstdlib>
#include <numeric>

#include "doctest.h"
#include "sampling/fbm_path.hpp"
#include "sampling/process.hpp"
#include "sampling/rng.hpp"
#include "sampling/sample.hpp"

using namespace iterlab;

namespace {

double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double variance(const std::vector<double>& v) {
    const double m = mean(v);
    double acc = 0;
    for (double x : v) acc += (x - m) * (x - m);
    return acc / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("rng: inverse normal CDF anchors") {
    CHECK(std::fabs(inverse_normal_cdf(0.5)) < 1e-15);
    CHECK(std::fabs(inverse_normal_cdf(0.975) - 1.959963984540054) < 1e-12);
    CHECK(std::fabs(inverse_normal_cdf(0.00134989803163009454) - (-3.0)) < 1e-9);
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), DomainError);
}

TEST_CASE("rng: counter-based draws are pure functions of (seed, stream, counter)") {
    RngState s{123, 7};
    const double a = rng_gaussian_at(s, 42);
    const double b = rng_gaussian_at(s, 42);
    CHECK(a == b);
    CHECK(rng_gaussian_at(s, 43) != a);
    CHECK(rng_gaussian_at(RngState{123, 8}, 42) != a);
    // child streams are distinct
    CHECK(s.child(0).stream_id != s.child(1).stream_id);
}

TEST_CASE("model parse/format round trip and validation") {
    for (const char* spec : {"fbm:H=0.5", "itfbm:H1=0.6,H2=0.4", "chain:H1=0.6,H2=0.7,H3=0.8",
                             "j:n=2,H=0.7", "scaled:K=0.3,H=0.6", "prodfbm:n=2,H=0.8", "cauchy",
                             "cbm:H=0.65", "bc", "cc", "halfprod", "recipcc"}) {
        const ProcessModel m = ProcessModel::parse(spec);
        const ProcessModel again = ProcessModel::parse(m.name());
        CHECK(m.name() == again.name());
    }
    CHECK_THROWS_AS(ProcessModel::parse("fbm:H=1.5"), DomainError);
    CHECK_THROWS_AS(ProcessModel::parse("nosuch"), DomainError);
    CHECK_THROWS_AS(ProcessModel::parse("j:n=1"), DomainError);  // H required
    CHECK_THROWS_AS(ProcessModel::parse("chain:H1=0.5"), DomainError);
}

TEST_CASE("sample_marginal: reproducibility across thread counts") {
    const ProcessModel m = ProcessModel::cauchy_of_cauchy();
    const RngState rng{42, 3};
    setenv("ITERLAB_THREADS", "1", 1);
    auto a = sample_many(m, 1.0, rng, 5000);
    setenv("ITERLAB_THREADS", "4", 1);
    auto b = sample_many(m, 1.0, rng, 5000);
    unsetenv("ITERLAB_THREADS");
    CHECK(a == b);
}

TEST_CASE("sample_marginal: standard normal marginal for FBm(1/2)") {
    auto v = sample_many(ProcessModel::fbm(0.5), 1.0, RngState{1, 1}, 1000000);
    CHECK(std::fabs(variance(v) - 1.0) < 0.004);
    CHECK(std::fabs(mean(v)) < 0.004);
}

TEST_CASE("sample_marginal: IBM variance sqrt(2/pi)") {
    auto v = sample_many(ProcessModel::iterated_fbm(0.5, 0.5), 1.0, RngState{2, 1}, 2000000);
    CHECK(std::fabs(variance(v) - 0.7978845608028654) < 0.003);
}

TEST_CASE("sample_marginal: ProductFBm(2,H) variance t^2H") {
    const double t = 1.7, h = 0.8;
    auto v = sample_many(ProcessModel::product_fbm(2, h), t, RngState{3, 1}, 500000);
    // Var(Z1 Z2) = 1, each factor scaled by t^(H/2).
    CHECK(std::fabs(variance(v) - std::pow(t, 2 * h)) < 0.02);
}

TEST_CASE("sample_marginal: symmetry of every marginal law") {
    for (const char* spec : {"fbm:H=0.3", "itfbm:H1=0.6,H2=0.4", "j:n=2,H=0.7", "scaled:K=0.3,H=0.6",
                             "prodfbm:n=3,H=0.6", "cauchy", "cbm:H=0.65", "bc", "cc", "halfprod",
                             "recipcc", "chain:H1=0.6,H2=0.7,H3=0.8"}) {
        const ProcessModel m = ProcessModel::parse(spec);
        auto v = sample_many(m, 1.3, RngState{4, 9}, 40000);
        double signs = 0;
        for (double x : v) signs += (x > 0) - (x < 0);
        CHECK(std::fabs(signs / static_cast<double>(v.size())) <= 3.0 / std::sqrt(static_cast<double>(v.size())));
    }
}

TEST_CASE("sample_marginal: degenerate time errors") {
    CHECK_THROWS_AS(sample_marginal(ProcessModel::cauchy(), 0.0, RngState{1, 1}), DomainError);
    CHECK_THROWS_AS(sample_marginal(ProcessModel::fbm(0.5), -1.0, RngState{1, 1}), DomainError);
}

TEST_CASE("fbm_path_cholesky: Brownian increments uncorrelated") {
    const std::vector<double> times{0.5, 1.0, 1.5, 2.0};
    double sum_xy = 0, sum_x2 = 0, sum_y2 = 0;
    const int paths = 10000;
    for (int i = 0; i < paths; ++i) {
        auto p = fbm_path_cholesky(Hurst(0.5), times, RngState{11, 2}, static_cast<std::uint64_t>(i));
        const double dx = p.values[1] - p.values[0];
        const double dy = p.values[2] - p.values[1];
        sum_xy += dx * dy;
        sum_x2 += dx * dx;
        sum_y2 += dy * dy;
    }
    const double corr = sum_xy / std::sqrt(sum_x2 * sum_y2);
    CHECK(std::fabs(corr) < 0.02);
}

TEST_CASE("fbm_path_cholesky: covariance at (1,2) for H=0.7") {
    const std::vector<double> times{1.0, 2.0};
    double acc = 0;
    const int paths = 100000;
    for (int i = 0; i < paths; ++i) {
        auto p = fbm_path_cholesky(Hurst(0.7), times, RngState{12, 2}, static_cast<std::uint64_t>(i));
        acc += p.values[0] * p.values[1];
    }
    const double cov = acc / paths;
    const double expected = 0.5 * (1.0 + std::pow(2.0, 1.4) - 1.0);
    CHECK(std::fabs(cov - expected) < 0.03);  // ~4 MC standard errors
}

TEST_CASE("fbm_path_cholesky: single time gives the exact marginal") {
    double acc = 0;
    const int paths = 200000;
    for (int i = 0; i < paths; ++i) {
        auto p = fbm_path_cholesky(Hurst(0.3), {2.0}, RngState{13, 5}, static_cast<std::uint64_t>(i));
        acc += p.values[0] * p.values[0];
    }
    CHECK(std::fabs(acc / paths - std::pow(2.0, 0.6)) < 0.02);
}

TEST_CASE("fbm_path_cholesky: input validation") {
    CHECK_THROWS_AS(fbm_path_cholesky(Hurst(0.5), {1.0, 0.5}, RngState{1, 1}), DomainError);
    CHECK_THROWS_AS(fbm_path_cholesky(Hurst(0.5), {0.0, 1.0}, RngState{1, 1}), DomainError);
}

TEST_CASE("fbm_path_circulant: self-similar variance at interior steps") {
    const double dt = 1.0 / 64;
    for (double hurst : {0.3, 0.7}) {
        double v32 = 0, v64 = 0;
        const int paths = 8000;
        for (int i = 0; i < paths; ++i) {
            auto p = fbm_path_circulant(Hurst(hurst), 64, dt, RngState{14, 3}, static_cast<std::uint64_t>(i));
            v32 += p.values[31] * p.values[31];
            v64 += p.values[63] * p.values[63];
        }
        v32 /= paths;
        v64 /= paths;
        CHECK(std::fabs(v32 - std::pow(0.5, 2 * hurst)) < 6.0 * std::pow(0.5, 2 * hurst) * std::sqrt(2.0 / paths));
        CHECK(std::fabs(v64 - 1.0) < 6.0 * std::sqrt(2.0 / paths));
    }
}

TEST_CASE("fbm_path_circulant: H=1/2 increments pass a lag-1 independence check") {
    double sum_xy = 0, sum_x2 = 0, sum_y2 = 0;
    const int paths = 10000;
    for (int i = 0; i < paths; ++i) {
        auto p = fbm_path_circulant(Hurst(0.5), 8, 0.125, RngState{15, 4}, static_cast<std::uint64_t>(i));
        const double dx = p.values[3] - p.values[2];
        const double dy = p.values[4] - p.values[3];
        sum_xy += dx * dy;
        sum_x2 += dx * dx;
        sum_y2 += dy * dy;
    }
    CHECK(std::fabs(sum_xy / std::sqrt(sum_x2 * sum_y2)) < 0.03);
}

TEST_CASE("fbm_path_circulant: argument validation") {
    CHECK_THROWS_AS(fbm_path_circulant(Hurst(0.5), 100, 0.1, RngState{1, 1}), DomainError);  // not a power of 2
    CHECK_THROWS_AS(fbm_path_circulant(Hurst(0.5), 64, 0.0, RngState{1, 1}), DomainError);
}
