#include "numerics/caputo.hpp"

#include <cmath>

namespace iterlab {

double caputo_half_time_derivative(const std::function<double(double, double)>& q, double x, double t,
                                   const QuadratureConfig& quad, const DiffConfig& diff,
                                   CaputoInfo* info) {
    if (!(t > 0)) throw DomainError("caputo_half_time_derivative: t must be > 0");
    const double delta = 1e-6 * t;

    auto dq_ds = [&](double s) {
        DiffConfig d = diff;
        // Keep the stencil inside s > 0.
        double h_default = std::max(std::fabs(s), 1.0) * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / 3.0) *
                           (d.base_step / 1e-3);
        if (h_default > 0.45 * s) d.base_step *= (0.45 * s) / h_default;
        return differentiate([&](double ss) { return q(x, ss); }, s, 1, d);
    };

    const double u_max = std::sqrt(t - delta);
    auto integrand = [&](double u) { return dq_ds(t - u * u).value; };
    IntegralResult r = integrate_interval(integrand, 0.0, u_max, quad);

    if (info) {
        info->truncation_delta = delta;
        // |dq/ds| <= C s^(-1/2) near 0 with C fit at s=delta gives
        // int_0^delta C s^(-1/2) (t-s)^(-1/2) ds <= 2 C sqrt(delta/(t-delta)).
        const double c_est = std::fabs(dq_ds(delta).value) * std::sqrt(delta);
        info->discarded_bound = 2.0 * c_est * std::sqrt(delta / (t - delta)) / std::sqrt(M_PI);
    }
    return 2.0 * r.value / std::sqrt(M_PI);
}

}  // namespace iterlab
