#include "densities/density.hpp"

#include <cmath>
#include <complex>

#include "specfun/specfun.hpp"

namespace iterlab {

namespace kernels {

double gauss(double x, double v) {
    if (!(v > 0)) return 0.0;  // collapsed inner clock: point mass handled by limits
    const double e = std::exp(-x * x / (2.0 * v));
    if (e == 0.0) return 0.0;
    return e / std::sqrt(2.0 * M_PI * v);
}

double gauss_dx(double x, double v, int order) {
    const double g = gauss(x, v);
    if (g == 0.0) return 0.0;
    switch (order) {
        case 0: return g;
        case 1: return g * (-x / v);
        case 2: return g * (x * x - v) / (v * v);
        case 3: return g * (-(x * x * x - 3.0 * x * v)) / (v * v * v);
        case 4: return g * (x * x * x * x - 6.0 * x * x * v + 3.0 * v * v) / (v * v * v * v);
        default: throw DomainError("gauss_dx: order must be 0..4");
    }
}

double gauss_dt(double s, double t, double hurst, int order) {
    const double tau = std::pow(t, 2.0 * hurst);
    const double g = gauss(s, tau);
    if (g == 0.0) return 0.0;
    const double tau1 = 2.0 * hurst * std::pow(t, 2.0 * hurst - 1.0);
    const double dlog = tau1 * (s * s - tau) / (2.0 * tau * tau);
    if (order == 1) return g * dlog;
    if (order == 2) {
        const double tau2 = 2.0 * hurst * (2.0 * hurst - 1.0) * std::pow(t, 2.0 * hurst - 2.0);
        const double d2log = tau2 * (s * s - tau) / (2.0 * tau * tau) -
                             tau1 * tau1 * (2.0 * s * s - tau) / (2.0 * tau * tau * tau);
        return g * (dlog * dlog + d2log);
    }
    throw DomainError("gauss_dt: order must be 1 or 2");
}

double cauchy_kernel_dx(double x, double s, int order) {
    if (order == 0) return s / (M_PI * (s * s + x * x));
    const std::complex<double> z(x, -s);
    std::complex<double> p = z;
    double fact = 1.0;
    for (int m = 1; m <= order; ++m) {
        p *= z;
        fact *= m;
    }
    const double sign = (order % 2 == 0) ? 1.0 : -1.0;
    return sign * fact * std::imag(1.0 / p) / M_PI;
}

double cauchy_clock_dt(double s, double t, int order) {
    const double d = s * s + t * t;
    switch (order) {
        case 0: return t / (M_PI * d);
        case 1: return (s * s - t * t) / (M_PI * d * d);
        case 2: return 2.0 * t * (t * t - 3.0 * s * s) / (M_PI * d * d * d);
        default: throw DomainError("cauchy_clock_dt: order must be 0..2");
    }
}

}  // namespace kernels

namespace {

using kernels::cauchy_clock_dt;
using kernels::cauchy_kernel_dx;
using kernels::gauss;
using kernels::gauss_dt;
using kernels::gauss_dx;

void require_time(double t) {
    if (!(t > 0)) throw DomainError("density: t must be > 0");
}

// --- iterated Cauchy closed form -------------------------------------------
// q(x,t) = (2t / pi^2 (t^2-x^2)) log(t/|x|); at |x| -> t the 0/0 resolves to
// 1/(pi^2 t). Near the seam evaluate (2/(pi^2 t)) * [log1p(u)/u] / (2+u) with
// u = |x|/t - 1, with log1p(u)/u summed as a series.
constexpr double kCcSeamRadius = 0.05;

double cc_seam_series(double u) {
    // log1p(u)/u = sum_k (-1)^k u^k/(k+1), |u| <= 0.05 -> 1e-27 truncation
    double term = 1.0, acc = 0.0;
    for (int k = 0; k < 20; ++k) {
        acc += term / (k + 1);
        term *= -u;
    }
    return acc;
}

double cc_density(double x, double t) {
    const double ax = std::fabs(x);
    if (ax == 0.0) throw SingularPoint("CauchyOfCauchy density diverges logarithmically at x = 0");
    const double u = ax / t - 1.0;
    if (std::fabs(u) <= kCcSeamRadius) return (2.0 / (M_PI * M_PI * t)) * cc_seam_series(u) / (2.0 + u);
    return 2.0 * t / (M_PI * M_PI * (t * t - x * x)) * std::log(t / ax);
}

double cc_density_dx(double x, double t, int order) {
    const double ax = std::fabs(x);
    const double sgn = x < 0 ? -1.0 : 1.0;
    const double d = t * t - x * x;
    const double lg = std::log(t / ax);
    if (order == 1)
        return sgn * (2.0 * t / (M_PI * M_PI)) * (-1.0 / (ax * d) + 2.0 * ax * lg / (d * d));
    if (order == 2)
        return 4.0 * t * (t * t + 3.0 * x * x) * lg / (M_PI * M_PI * d * d * d) +
               2.0 * t * (t * t - 5.0 * x * x) / (M_PI * M_PI * x * x * d * d);
    throw DomainError("density_dx(CauchyOfCauchy): analytic orders 1..2 only");
}

double cc_density_dt(double x, double t, int order) {
    const double ax = std::fabs(x);
    const double d = t * t - x * x;
    const double lg = std::log(t / ax);
    if (order == 1) return (2.0 / (M_PI * M_PI)) * (lg / d + 1.0 / d - 2.0 * t * t * lg / (d * d));
    if (order == 2)
        return 4.0 * t * (t * t + 3.0 * x * x) * lg / (M_PI * M_PI * d * d * d) -
               2.0 * (x * x + 3.0 * t * t) / (M_PI * M_PI * t * d * d);
    throw DomainError("density_dt(CauchyOfCauchy): orders 1..2 only");
}

// --- subordination integrals ------------------------------------------------

// q(x,t) = 2 int_0^inf outer(x|s) inner(s,t) ds for each composed model.
template <class Outer, class Inner>
DensityValue subordinate(const Outer& outer, const Inner& inner, const QuadratureConfig& quad,
                         const std::vector<double>& splits) {
    auto r = integrate_halfline([&](double s) { return outer(s) * inner(s); }, quad, splits);
    return {2.0 * r.value, 2.0 * r.error};
}

double k0_kernel(double s, double t, double hurst) {
    const double th = std::pow(t, hurst);
    return bessel_k0(s / th).value / (M_PI * th);
}

// d/dt of K0(s/t^H)/(pi t^H) = (H/(pi t^(H+1))) (z K1(z) - K0(z)).
double k0_kernel_dt(double s, double t, double hurst) {
    const double th = std::pow(t, hurst);
    const double z = s / th;
    return hurst / (M_PI * std::pow(t, hurst + 1.0)) * (z * bessel_k1(z).value - bessel_k0(z).value);
}

}  // namespace

bool has_density(const ProcessModel& model) {
    switch (model.tag) {
        case ProcessTag::FBm:
        case ProcessTag::IteratedFBm:
        case ProcessTag::ScaledIterated:
        case ProcessTag::Cauchy:
        case ProcessTag::CauchyOfFBm:
        case ProcessTag::BmOfCauchy:
        case ProcessTag::CauchyOfCauchy:
        case ProcessTag::HalfProductCauchy:
        case ProcessTag::ReciprocalCC:
            return true;
        case ProcessTag::WeightedJ:
            return model.n <= 2;
        case ProcessTag::ProductFBm:
            return model.n == 2;
        case ProcessTag::IteratedFBmChain:
            return model.hursts.size() == 2;
        default:
            return false;
    }
}

bool density_singular_at_zero(const ProcessModel& model) {
    switch (model.tag) {
        case ProcessTag::CauchyOfCauchy:
        case ProcessTag::HalfProductCauchy:
        case ProcessTag::ReciprocalCC:
            return true;
        case ProcessTag::WeightedJ:
            return true;  // K0(|x|) laws
        case ProcessTag::ProductFBm:
            return model.n == 2;
        default:
            return false;
    }
}

DensityValue density_with_error(const ProcessModel& model, double x, double t, const QuadratureConfig& quad) {
    model.validate();
    require_time(t);
    switch (model.tag) {
        case ProcessTag::FBm: {
            const double v = std::pow(t, 2.0 * model.hursts[0]);
            return {gauss(x, v), 4e-16 * gauss(x, v)};
        }
        case ProcessTag::IteratedFBmChain:
            if (model.hursts.size() != 2)
                throw UnsupportedModel("density: chains longer than two levels are sampling-only");
            [[fallthrough]];
        case ProcessTag::IteratedFBm: {
            const double h1 = model.hursts[0], h2 = model.hursts[1];
            return subordinate([&](double s) { return gauss(x, std::pow(s, 2.0 * h1)); },
                               [&](double s) { return gauss(s, std::pow(t, 2.0 * h2)); }, quad,
                               {std::pow(t, h2), std::pow(std::fabs(x) + 1e-300, 1.0 / h1)});
        }
        case ProcessTag::WeightedJ: {
            const double h = model.hursts[0];
            if (model.n == 1) {
                if (x == 0.0) throw SingularPoint("WeightedJ(1) density diverges logarithmically at x = 0");
                const double th = std::pow(t, h);
                auto k = bessel_k0(std::fabs(x) / th);
                return {k.value / (M_PI * th), k.est_abs_error / (M_PI * th)};
            }
            if (model.n == 2) {
                return subordinate([&](double s) { return gauss(x, s * s); },
                                   [&](double s) { return k0_kernel(s, t, h); }, quad,
                                   {std::pow(t, h), std::fabs(x)});
            }
            throw UnsupportedModel("density: WeightedJ with n >= 3 is sampling-only");
        }
        case ProcessTag::ScaledIterated: {
            const double k = model.scale_power, h = model.hursts[0];
            const double t2k = std::pow(t, 2.0 * k);
            return subordinate([&](double s) { return gauss(x, s * t2k); },
                               [&](double s) { return gauss(s, std::pow(t, 2.0 * h)); }, quad,
                               {std::pow(t, h), x * x / t2k});
        }
        case ProcessTag::ProductFBm: {
            if (model.n != 2) throw UnsupportedModel("density: ProductFBm has a closed form only for n = 2");
            if (x == 0.0) throw SingularPoint("ProductFBm(2) density diverges logarithmically at x = 0");
            const double th = std::pow(t, model.hursts[0]);
            auto k = bessel_k0(std::fabs(x) / th);
            return {k.value / (M_PI * th), k.est_abs_error / (M_PI * th)};
        }
        case ProcessTag::Cauchy:
            return {t / (M_PI * (t * t + x * x)), 4e-16 * t / (t * t + x * x)};
        case ProcessTag::CauchyOfFBm: {
            const double h = model.hursts[0];
            return subordinate([&](double s) { return cauchy_kernel_dx(x, s, 0); },
                               [&](double s) { return gauss(s, std::pow(t, 2.0 * h)); }, quad,
                               {std::fabs(x), std::pow(t, h)});
        }
        case ProcessTag::BmOfCauchy:
            return subordinate([&](double s) { return gauss(x, s); },
                               [&](double s) { return cauchy_clock_dt(s, t, 0); }, quad, {t, x * x});
        case ProcessTag::CauchyOfCauchy:
        case ProcessTag::HalfProductCauchy:
        case ProcessTag::ReciprocalCC:
            // HalfProductCauchy and ReciprocalCC share the iterated-Cauchy
            // law (product and reciprocal identities).
            return {cc_density(x, t), 1e-14 * std::fabs(cc_density(x, t))};
    }
    throw UnsupportedModel("density: unhandled tag");
}

double density(const ProcessModel& model, double x, double t, const QuadratureConfig& quad) {
    return density_with_error(model, x, t, quad).value;
}

double density_dx(const ProcessModel& model, double x, double t, int order, const QuadratureConfig& quad) {
    model.validate();
    require_time(t);
    if (order == 0) return density(model, x, t, quad);
    switch (model.tag) {
        case ProcessTag::FBm:
            return gauss_dx(x, std::pow(t, 2.0 * model.hursts[0]), order);
        case ProcessTag::IteratedFBmChain:
        case ProcessTag::IteratedFBm: {
            const double h1 = model.hursts[0], h2 = model.hursts[1];
            return 2.0 * integrate_halfline(
                             [&](double s) {
                                 return gauss_dx(x, std::pow(s, 2.0 * h1), order) *
                                        gauss(s, std::pow(t, 2.0 * h2));
                             },
                             quad, {std::pow(t, h2)})
                             .value;
        }
        case ProcessTag::WeightedJ: {
            const double h = model.hursts[0];
            if (model.n == 1) {
                // Bessel recurrences: K0' = -K1, K1' = -K0 - K1/z.
                const double th = std::pow(t, h);
                const double z = std::fabs(x) / th;
                const double sgn = x < 0 ? -1.0 : 1.0;
                const double k0 = bessel_k0(z).value, k1 = bessel_k1(z).value;
                switch (order) {
                    case 1: return -k1 / (M_PI * th * th) * sgn;
                    case 2: return (k0 + k1 / z) / (M_PI * th * th * th);
                    case 3: return -(k1 + k0 / z + 2.0 * k1 / (z * z)) / (M_PI * th * th * th * th) * sgn;
                    default: throw DomainError("density_dx(WeightedJ1): orders 1..3 only");
                }
            }
            if (model.n == 2) {
                return 2.0 * integrate_halfline(
                                 [&](double s) { return gauss_dx(x, s * s, order) * k0_kernel(s, t, h); },
                                 quad, {std::pow(t, h), std::fabs(x)})
                                 .value;
            }
            throw UnsupportedModel("density_dx: WeightedJ with n >= 3 is sampling-only");
        }
        case ProcessTag::ScaledIterated: {
            const double k = model.scale_power, h = model.hursts[0];
            const double t2k = std::pow(t, 2.0 * k);
            return 2.0 * integrate_halfline(
                             [&](double s) {
                                 return gauss_dx(x, s * t2k, order) * gauss(s, std::pow(t, 2.0 * h));
                             },
                             quad, {std::pow(t, h)})
                             .value;
        }
        case ProcessTag::Cauchy:
            return cauchy_kernel_dx(x, t, order);
        case ProcessTag::CauchyOfFBm: {
            const double h = model.hursts[0];
            return 2.0 * integrate_halfline(
                             [&](double s) {
                                 return cauchy_kernel_dx(x, s, order) * gauss(s, std::pow(t, 2.0 * h));
                             },
                             quad, {std::fabs(x), std::pow(t, h)})
                             .value;
        }
        case ProcessTag::BmOfCauchy:
            return 2.0 * integrate_halfline(
                             [&](double s) { return gauss_dx(x, s, order) * cauchy_clock_dt(s, t, 0); },
                             quad, {t, x * x})
                             .value;
        case ProcessTag::CauchyOfCauchy:
        case ProcessTag::HalfProductCauchy:
        case ProcessTag::ReciprocalCC:
            return cc_density_dx(x, t, order);
        default:
            throw UnsupportedModel("density_dx: unhandled tag");
    }
}

double density_dt(const ProcessModel& model, double x, double t, int order, const QuadratureConfig& quad) {
    model.validate();
    require_time(t);
    if (order < 1 || order > 2) throw DomainError("density_dt: order must be 1 or 2");
    switch (model.tag) {
        case ProcessTag::FBm:
            return gauss_dt(x, t, model.hursts[0], order);
        case ProcessTag::IteratedFBmChain:
        case ProcessTag::IteratedFBm: {
            const double h1 = model.hursts[0], h2 = model.hursts[1];
            return 2.0 * integrate_halfline(
                             [&](double s) {
                                 return gauss(x, std::pow(s, 2.0 * h1)) * gauss_dt(s, t, h2, order);
                             },
                             quad, {std::pow(t, h2)})
                             .value;
        }
        case ProcessTag::WeightedJ: {
            const double h = model.hursts[0];
            if (model.n == 1) {
                if (order != 1) throw DomainError("density_dt(WeightedJ1): order 1 only");
                return k0_kernel_dt(std::fabs(x), t, h);
            }
            if (model.n == 2) {
                if (order != 1) throw DomainError("density_dt(WeightedJ2): order 1 only");
                return 2.0 * integrate_halfline(
                                 [&](double s) { return gauss(x, s * s) * k0_kernel_dt(s, t, h); }, quad,
                                 {std::pow(t, h), std::fabs(x)})
                                 .value;
            }
            throw UnsupportedModel("density_dt: WeightedJ with n >= 3 is sampling-only");
        }
        case ProcessTag::ScaledIterated: {
            if (order != 1) throw DomainError("density_dt(ScaledIterated): order 1 only");
            const double k = model.scale_power, h = model.hursts[0];
            const double t2k = std::pow(t, 2.0 * k);
            const double dv_dt = 2.0 * k * std::pow(t, 2.0 * k - 1.0);
            return 2.0 * integrate_halfline(
                             [&](double s) {
                                 const double v = s * t2k;
                                 const double g = gauss(x, v);
                                 // d/dv N(x;0,v) = N * (x^2 - v) / (2 v^2)
                                 const double dgdv = g == 0.0 ? 0.0 : g * (x * x - v) / (2.0 * v * v);
                                 return dgdv * s * dv_dt * gauss(s, std::pow(t, 2.0 * h)) +
                                        g * gauss_dt(s, t, h, 1);
                             },
                             quad, {std::pow(t, h)})
                             .value;
        }
        case ProcessTag::Cauchy: {
            const double d = t * t + x * x;
            if (order == 1) return (x * x - t * t) / (M_PI * d * d);
            return 2.0 * t * (t * t - 3.0 * x * x) / (M_PI * d * d * d);
        }
        case ProcessTag::CauchyOfFBm: {
            if (order != 1) throw DomainError("density_dt(CauchyOfFBm): order 1 only");
            const double h = model.hursts[0];
            return 2.0 * integrate_halfline(
                             [&](double s) { return cauchy_kernel_dx(x, s, 0) * gauss_dt(s, t, h, 1); },
                             quad, {std::fabs(x), std::pow(t, h)})
                             .value;
        }
        case ProcessTag::BmOfCauchy:
            return 2.0 * integrate_halfline(
                             [&](double s) { return gauss(x, s) * cauchy_clock_dt(s, t, order); }, quad,
                             {t, x * x})
                             .value;
        case ProcessTag::CauchyOfCauchy:
        case ProcessTag::HalfProductCauchy:
        case ProcessTag::ReciprocalCC:
            return cc_density_dt(x, t, order);
        default:
            throw UnsupportedModel("density_dt: unhandled tag");
    }
}

double density_cc_integral(double x, double t, const QuadratureConfig& quad) {
    require_time(t);
    if (x == 0.0) throw SingularPoint("density_cc_integral: x = 0");
    auto r = integrate_halfline(
        [&](double s) { return (s / (s * s + x * x)) * (t / (t * t + s * s)); }, quad,
        {std::fabs(x), t});
    return 2.0 / (M_PI * M_PI) * r.value;
}

double density_cc_expweights(double x, double t, const QuadratureConfig& quad) {
    require_time(t);
    if (x == 0.0) throw SingularPoint("density_cc_expweights: x = 0");
    QuadratureConfig inner_cfg = quad;
    inner_cfg.rel_tol = std::min(quad.rel_tol, 1e-11);
    auto outer = [&](double z) {
        auto inner = integrate_halfline(
            [&](double w) { return std::exp(-w) * t / (z * x * x + w * t * t); }, inner_cfg, {1.0});
        return std::exp(-z) * inner.value;
    };
    auto r = integrate_halfline(outer, quad, {1.0});
    return r.value / (M_PI * M_PI);
}

double typical_scale(const ProcessModel& model, double t) {
    switch (model.tag) {
        case ProcessTag::FBm: return std::pow(t, model.hursts[0]);
        case ProcessTag::IteratedFBm: return std::pow(t, model.hursts[0] * model.hursts[1]);
        case ProcessTag::IteratedFBmChain: {
            double p = 1.0;
            for (double h : model.hursts) p *= h;
            return std::pow(t, p);
        }
        case ProcessTag::WeightedJ:
        case ProcessTag::ProductFBm: return std::pow(t, model.hursts[0]);
        case ProcessTag::ScaledIterated:
            return std::pow(t, model.scale_power + 0.5 * model.hursts[0]);
        case ProcessTag::Cauchy: return t;
        case ProcessTag::CauchyOfFBm: return std::pow(t, model.hursts[0]);
        case ProcessTag::BmOfCauchy: return std::sqrt(t);
        case ProcessTag::CauchyOfCauchy:
        case ProcessTag::HalfProductCauchy:
        case ProcessTag::ReciprocalCC: return t;
    }
    return 1.0;
}

}  // namespace iterlab
