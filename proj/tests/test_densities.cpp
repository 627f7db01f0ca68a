#include <cmath>
#include <random>

#include "doctest.h"
#include "densities/cdf.hpp"
#include "densities/density.hpp"
#include "numerics/finite_diff.hpp"
#include "specfun/specfun.hpp"

using namespace iterlab;

namespace {

const QuadratureConfig kTight{1e-12, 1e-16, 4000};

std::vector<ProcessModel> density_models() {
    return {ProcessModel::fbm(0.6),
            ProcessModel::iterated_fbm(0.6, 0.4),
            ProcessModel::weighted_j(1, 0.7),
            ProcessModel::weighted_j(2, 0.7),
            ProcessModel::scaled_iterated(0.3, 0.6),
            ProcessModel::product_fbm(2, 0.8),
            ProcessModel::cauchy(),
            ProcessModel::cauchy_of_fbm(0.65),
            ProcessModel::bm_of_cauchy(),
            ProcessModel::cauchy_of_cauchy(),
            ProcessModel::half_product_cauchy(),
            ProcessModel::reciprocal_cc()};
}

}  // namespace

TEST_CASE("density: iterated Cauchy removable singularity at |x| = t") {
    const double limit = 1.0 / (M_PI * M_PI);  // 1/(pi^2 t) at t = 1
    CHECK(std::fabs(density(ProcessModel::cauchy_of_cauchy(), 1.0, 1.0) - limit) < 1e-14);
    CHECK(std::fabs(density(ProcessModel::cauchy_of_cauchy(), std::nextafter(1.0, 2.0), 1.0) - limit) < 1e-12);
    CHECK(std::fabs(density(ProcessModel::cauchy_of_cauchy(), -1.0 + 1e-9, 1.0) - limit) < 1e-7);
    // continuity across the series/closed-form seam
    const double inside = density(ProcessModel::cauchy_of_cauchy(), 1.0499, 1.0);
    const double outside = density(ProcessModel::cauchy_of_cauchy(), 1.0501, 1.0);
    CHECK(std::fabs(inside - outside) < 1e-5 * inside);
}

TEST_CASE("density: K0 law at (1,1) is K0(1)/pi for any H") {
    for (double h : {0.25, 0.5, 0.9}) {
        CHECK(std::fabs(density(ProcessModel::weighted_j(1, h), 1.0, 1.0) - 0.1340162410169943) < 1e-12);
    }
}

TEST_CASE("density: IteratedFBm(1/2,1/2) equals the IBM subordination integral") {
    // Frozen from an independent high-precision evaluation of
    // 2 int_0^inf N(x;0,s) N(s;0,t) ds at (0.7, 1).
    const double v = density(ProcessModel::iterated_fbm(0.5, 0.5), 0.7, 1.0, kTight);
    CHECK(std::fabs(v - 0.2785270688299186) < 1e-11);
}

TEST_CASE("density: closed form vs integral form for the K0 law") {
    // 2 int (2 pi s^2)^(-1/2) e^(-x^2/2s^2) p_H(s,t) ds vs K0(|x|/t^H)/(pi t^H).
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> ux(0.1, 3.0), ut(0.3, 2.5);
    const double h = 0.7;
    for (int i = 0; i < 25; ++i) {
        const double x = ux(gen), t = ut(gen);
        const double th = std::pow(t, h);
        auto direct = integrate_halfline(
            [&](double s) {
                return kernels::gauss(x, s * s) * kernels::gauss(s, th * th);
            },
            kTight, {th, x});
        const double closed = density(ProcessModel::weighted_j(1, h), x, t);
        CHECK(std::fabs(2.0 * direct.value - closed) < 1e-9);
    }
}

TEST_CASE("density_cc_integral: agrees with the closed form") {
    CHECK(std::fabs(density_cc_integral(0.5, 1.0, kTight) -
                    density(ProcessModel::cauchy_of_cauchy(), 0.5, 1.0)) < 1e-8);
    CHECK(density_cc_integral(-0.5, 1.0, kTight) == density_cc_integral(0.5, 1.0, kTight));
    // normalization of the integral form
    auto norm = integrate_halfline([&](double x) { return density_cc_integral(x, 1.0, kTight); },
                                   QuadratureConfig{1e-10, 1e-13, 4000}, {1.0});
    CHECK(std::fabs(2.0 * norm.value - 1.0) < 1e-8);
}

TEST_CASE("density_cc_expweights: agrees with the closed form and tail law") {
    CHECK(std::fabs(density_cc_expweights(1.0, 2.0) - density(ProcessModel::cauchy_of_cauchy(), 1.0, 2.0)) <
          1e-6);
    CHECK(std::fabs(density_cc_expweights(2.0, 1.0) - density(ProcessModel::cauchy_of_cauchy(), 2.0, 1.0)) <
          1e-6);
    // large-|x| decay ~ (2t/(pi^2 x^2)) log(|x|/t)
    const double t = 1.0, x = 150.0;
    const double asym = 2.0 * t / (M_PI * M_PI * x * x) * std::log(x / t);
    CHECK(std::fabs(density(ProcessModel::cauchy_of_cauchy(), x, t) / asym - 1.0) < 1e-3);
}

TEST_CASE("density: nonnegative and even at random points") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> ux(0.05, 4.0), ut(0.3, 2.5);
    for (const auto& m : density_models()) {
        for (int i = 0; i < 100; ++i) {
            const double x = ux(gen), t = ut(gen);
            if (std::fabs(std::fabs(x) - t) < 1e-6 * t) continue;
            const double plus = density(m, x, t);
            const double minus = density(m, -x, t);
            CHECK(plus >= 0.0);
            CHECK(plus == minus);
        }
    }
}

TEST_CASE("density: normalization to 1 within 1e-8 for every model") {
    for (const auto& m : density_models()) {
        auto r = integrate_halfline([&](double x) { return density(m, x, 1.3, kTight); },
                                    QuadratureConfig{1e-10, 1e-14, 4000},
                                    {0.1 * typical_scale(m, 1.3), typical_scale(m, 1.3), 1.3});
        CHECK(std::fabs(2.0 * r.value - 1.0) < 1e-8);
    }
}

TEST_CASE("density: scaling family of the iterated fBm law") {
    // p(x,t) = lambda^(H1H2) p(lambda^(H1H2) x, lambda t)
    const ProcessModel m = ProcessModel::iterated_fbm(0.55, 0.8);
    const double theta = 0.55 * 0.8;
    const double lambda = 2.0;
    for (double x : {0.2, 0.9, 1.7}) {
        const double lhs = density(m, x, 1.0, kTight);
        const double rhs = std::pow(lambda, theta) * density(m, std::pow(lambda, theta) * x, lambda, kTight);
        CHECK(std::fabs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("density: singular points and domain errors") {
    CHECK_THROWS_AS(density(ProcessModel::weighted_j(1, 0.5), 0.0, 1.0), SingularPoint);
    CHECK_THROWS_AS(density(ProcessModel::cauchy_of_cauchy(), 0.0, 1.0), SingularPoint);
    CHECK_THROWS_AS(density(ProcessModel::fbm(0.5), 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(density(ProcessModel::fbm(0.5), 0.0, -1.0), DomainError);
    CHECK_THROWS_AS(density(ProcessModel::weighted_j(3, 0.5), 1.0, 1.0), UnsupportedModel);
    CHECK_FALSE(has_density(ProcessModel::weighted_j(3, 0.5)));
    CHECK_FALSE(has_density(ProcessModel::product_fbm(3, 0.5)));
}

TEST_CASE("density_dx: under-integral derivatives match finite differences") {
    DiffConfig wide;
    wide.base_step = 8e-3;  // quadrature-noise-aware steps for the FD oracle
    struct Case {
        ProcessModel m;
        double x, t;
        int max_order;
    };
    const Case cases[] = {
        {ProcessModel::iterated_fbm(0.6, 0.4), 0.8, 1.3, 4},
        {ProcessModel::scaled_iterated(0.3, 0.6), 0.9, 1.2, 4},
        {ProcessModel::weighted_j(2, 0.7), 0.8, 1.0, 4},
        {ProcessModel::cauchy_of_fbm(0.65), 0.7, 0.9, 2},
        {ProcessModel::bm_of_cauchy(), 1.1, 0.8, 4},
        {ProcessModel::weighted_j(1, 0.7), 0.9, 1.1, 3},
        {ProcessModel::cauchy_of_cauchy(), 0.6, 1.3, 2},
        {ProcessModel::cauchy(), 0.5, 1.0, 4},
        {ProcessModel::fbm(0.7), 0.5, 1.0, 4},
    };
    for (const auto& c : cases) {
        for (int order = 1; order <= c.max_order; ++order) {
            const double analytic = density_dx(c.m, c.x, c.t, order, kTight);
            const double fd =
                differentiate([&](double xx) { return density(c.m, xx, c.t, kTight); }, c.x, order, wide);
            const double scale = std::max(std::fabs(analytic), 1e-3);
            CHECK(std::fabs(analytic - fd) < 2e-4 * scale);
        }
    }
}

TEST_CASE("density_dt: under-integral time derivatives match finite differences") {
    DiffConfig wide;
    wide.base_step = 8e-3;
    struct Case {
        ProcessModel m;
        double x, t;
        int max_order;
    };
    const Case cases[] = {
        {ProcessModel::iterated_fbm(0.6, 0.4), 0.8, 1.3, 2},
        {ProcessModel::scaled_iterated(0.3, 0.6), 0.9, 1.2, 1},
        {ProcessModel::weighted_j(2, 0.7), 0.8, 1.0, 1},
        {ProcessModel::weighted_j(1, 0.7), 0.9, 1.1, 1},
        {ProcessModel::cauchy_of_fbm(0.65), 0.7, 0.9, 1},
        {ProcessModel::bm_of_cauchy(), 1.1, 0.8, 2},
        {ProcessModel::cauchy_of_cauchy(), 0.6, 1.3, 2},
        {ProcessModel::cauchy(), 0.5, 1.0, 2},
        {ProcessModel::fbm(0.7), 0.5, 1.0, 2},
    };
    for (const auto& c : cases) {
        for (int order = 1; order <= c.max_order; ++order) {
            const double analytic = density_dt(c.m, c.x, c.t, order, kTight);
            const double fd =
                differentiate([&](double tt) { return density(c.m, c.x, tt, kTight); }, c.t, order, wide);
            const double scale = std::max(std::fabs(analytic), 1e-3);
            CHECK(std::fabs(analytic - fd) < 2e-4 * scale);
        }
    }
}

TEST_CASE("cdf: anchors and analytic Cauchy form") {
    for (const auto& m : density_models()) CHECK(cdf(m, 0.0, 1.0) == 0.5);
    for (double x : {-2.0, -0.5, 0.3, 4.0}) {
        CHECK(std::fabs(cdf(ProcessModel::cauchy(), x, 2.0) - (0.5 + std::atan(x / 2.0) / M_PI)) < 1e-14);
    }
    // x -> infinity
    CHECK(std::fabs(cdf(ProcessModel::iterated_fbm(0.5, 0.5), 50.0, 1.0) - 1.0) < 1e-8);
    CHECK(std::fabs(cdf(ProcessModel::weighted_j(1, 0.7), 60.0, 1.0) - 1.0) < 1e-8);
    // symmetry F(-x) = 1 - F(x)
    const double f = cdf(ProcessModel::cauchy_of_cauchy(), 0.8, 1.0);
    const double g = cdf(ProcessModel::cauchy_of_cauchy(), -0.8, 1.0);
    CHECK(std::fabs(f + g - 1.0) < 1e-10);
}

TEST_CASE("cdf table: matches pointwise quadrature CDF") {
    const ProcessModel m = ProcessModel::cauchy_of_cauchy();
    CdfTable table(m, 1.0);
    CHECK(table.normalization_defect() < 1e-6);
    for (double x : {-3.0, -1.2, -0.4, 0.3, 0.9, 1.5, 6.0}) {
        CHECK(std::fabs(table(x) - cdf(m, x, 1.0)) < 2e-5);
    }
}
