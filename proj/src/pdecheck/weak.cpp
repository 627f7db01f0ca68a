#include "pdecheck/weak.hpp"

#include <cmath>

#include "densities/density.hpp"

namespace iterlab {

namespace {

using kernels::cauchy_clock_dt;
using kernels::gauss;
using kernels::gauss_dt;

constexpr double kSqrt2Pi = 2.5066282746310005;

// int_R fn(x) N(x;0,v) dx for even fn supported well inside [-9,9].
template <class Fn>
double against_gaussian(const Fn& fn, double v, const QuadratureConfig& quad) {
    return 2.0 * integrate_interval([&](double x) { return fn(x) * gauss(x, v); }, 0.0, 9.0, quad,
                                    {0.5, 1.0, 2.0, 4.0})
                     .value;
}

}  // namespace

TestFunction gaussian_test_function() {
    TestFunction tf;
    tf.phi = [](double x) { return std::exp(-x * x); };
    tf.phi4 = [](double x) { return (16.0 * x * x * x * x - 48.0 * x * x + 12.0) * std::exp(-x * x); };
    tf.x_phi1 = [](double x) { return -2.0 * x * x * std::exp(-x * x); };
    tf.phi2_at_zero = -2.0;
    return tf;
}

double weak_delta_residual(char tag, const TestFunction& testfn, double t, double delta_coefficient,
                           const EvalContext& ctx) {
    const QuadratureConfig& quad = ctx.quad;
    switch (tag) {
        case 'e': {
            // d/dt int q phi = (1/8) int q phi'''' + (1/(2 sqrt(2 pi t))) phi''(0)
            auto phi_s = [&](double s) { return against_gaussian(testfn.phi, s, quad); };
            auto phi4_s = [&](double s) { return against_gaussian(testfn.phi4, s, quad); };
            const double dG = 2.0 * integrate_halfline(
                                        [&](double s) { return phi_s(s) * gauss_dt(s, t, 0.5, 1); }, quad, {t})
                                        .value;
            const double g4 = 2.0 * integrate_halfline(
                                        [&](double s) { return phi4_s(s) * gauss(s, t); }, quad, {t})
                                        .value;
            return dG - 0.125 * g4 -
                   delta_coefficient * testfn.phi2_at_zero / (2.0 * std::sqrt(2.0 * M_PI * t));
        }
        case 'd': {
            // t dG/dt = (H/4) t^2H int q phi'''' + (H t^H / sqrt(2pi)) phi''(0)
            const double h = 0.6;
            auto phi_s = [&](double s) { return against_gaussian(testfn.phi, s, quad); };
            auto phi4_s = [&](double s) { return against_gaussian(testfn.phi4, s, quad); };
            const double dG = 2.0 * integrate_halfline(
                                        [&](double s) { return phi_s(s) * gauss_dt(s, t, h, 1); }, quad,
                                        {std::pow(t, h)})
                                        .value;
            const double g4 = 2.0 * integrate_halfline(
                                        [&](double s) { return phi4_s(s) * gauss(s, std::pow(t, 2 * h)); },
                                        quad, {std::pow(t, h)})
                                        .value;
            return t * dG - (h / 4.0) * std::pow(t, 2 * h) * g4 -
                   delta_coefficient * h * std::pow(t, h) * testfn.phi2_at_zero / kSqrt2Pi;
        }
        case 'c': {
            // t dG/dt = K int x q phi' + (H/4) t^(4K+2H) int q phi''''
            //           + (H t^(2K+H)/sqrt(2pi)) phi''(0)
            const double k = 0.3, h = 0.6;
            auto G_at = [&](double tt) {
                const double t2k = std::pow(tt, 2.0 * k);
                return 2.0 * integrate_halfline(
                                 [&](double s) {
                                     return against_gaussian(testfn.phi, s * t2k, quad) *
                                            gauss(s, std::pow(tt, 2 * h));
                                 },
                                 quad, {std::pow(tt, h)})
                                 .value;
            };
            DiffConfig d;
            d.base_step = 0.25;  // G is evaluated by nested quadrature; keep noise below truncation
            const double dG = differentiate(G_at, t, 1, d);
            const double t2k = std::pow(t, 2.0 * k);
            const double gx = 2.0 * integrate_halfline(
                                        [&](double s) {
                                            return against_gaussian(testfn.x_phi1, s * t2k, quad) *
                                                   gauss(s, std::pow(t, 2 * h));
                                        },
                                        quad, {std::pow(t, h)})
                                        .value;
            const double g4 = 2.0 * integrate_halfline(
                                        [&](double s) {
                                            return against_gaussian(testfn.phi4, s * t2k, quad) *
                                                   gauss(s, std::pow(t, 2 * h));
                                        },
                                        quad, {std::pow(t, h)})
                                        .value;
            return t * dG - k * gx - (h / 4.0) * std::pow(t, 4 * k + 2 * h) * g4 -
                   delta_coefficient * h * std::pow(t, 2 * k + h) * testfn.phi2_at_zero / kSqrt2Pi;
        }
        case 'n': {
            // d2/dt2 int q phi + (1/4) int q phi'''' + (1/(pi t)) phi''(0) = 0
            auto phi_s = [&](double s) { return against_gaussian(testfn.phi, s, quad); };
            auto phi4_s = [&](double s) { return against_gaussian(testfn.phi4, s, quad); };
            const double d2G = 2.0 * integrate_halfline(
                                         [&](double s) { return phi_s(s) * cauchy_clock_dt(s, t, 2); }, quad,
                                         {t})
                                         .value;
            const double g4 = 2.0 * integrate_halfline(
                                        [&](double s) { return phi4_s(s) * cauchy_clock_dt(s, t, 0); }, quad,
                                        {t})
                                        .value;
            return d2G + 0.25 * g4 + delta_coefficient * testfn.phi2_at_zero / (M_PI * t);
        }
        default:
            throw DomainError("weak_delta_residual: tag must be one of c, d, e, n");
    }
}

}  // namespace iterlab
