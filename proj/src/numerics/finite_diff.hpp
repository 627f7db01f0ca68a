#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace iterlab {

struct DiffConfig {
    // Relative multiplier on the per-order default step (1e-3 = neutral).
    double base_step = 1e-3;
    int richardson_levels = 3;
    int max_order = 4;

    void validate() const {
        if (!(base_step > 0) || max_order < 1 || max_order > 4 || richardson_levels < 1 ||
            richardson_levels > 6)
            throw DomainError("DiffConfig: base_step > 0, max_order in 1..4, richardson_levels in 1..6");
    }
};

struct DiffResult {
    double value = 0;
    double est_error = 0;  // two-level Richardson consistency estimate
};

namespace detail {

// Base step eps^(1/(order+2)), scaled by max(|x|,1) and by the config
// multiplier relative to its 1e-3 default.
inline double fd_step(double x, int order, const DiffConfig& cfg) {
    static const double eps = std::numeric_limits<double>::epsilon();
    const double h0 = std::pow(eps, 1.0 / (order + 2));
    double h = std::max(std::fabs(x), 1.0) * h0 * (cfg.base_step / 1e-3);
    // Snap so x+h and x-h are exactly representable around x.
    volatile double tmp = x + h;
    h = tmp - x;
    if (h == 0.0) throw StepUnderflow("differentiate: step collapsed below machine precision");
    return h;
}

template <class Func>
double central_stencil(const Func& f, double x, int order, double h) {
    switch (order) {
        case 1:
            return (f(x + h) - f(x - h)) / (2 * h);
        case 2:
            return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
        case 3:
            return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
        case 4:
            return (f(x + 2 * h) - 4 * f(x + h) + 6 * f(x) - 4 * f(x - h) + f(x - 2 * h)) / (h * h * h * h);
        default:
            throw DomainError("differentiate: order must be in 1..4");
    }
}

}  // namespace detail

// Central finite difference of the given order with Richardson extrapolation
// over step halvings (the stencils all carry an h^2 error series).
template <class Func>
DiffResult differentiate_with_error(const Func& f, double x, int order, const DiffConfig& cfg = {}) {
    cfg.validate();
    if (order < 1 || order > cfg.max_order) throw DomainError("differentiate: order out of range");
    const int levels = cfg.richardson_levels;
    const double h0 = detail::fd_step(x, order, cfg);

    std::array<std::array<double, 8>, 8> table{};
    double h = h0;
    for (int i = 0; i < levels; ++i) {
        table[i][0] = detail::central_stencil(f, x, order, h);
        double p4 = 4.0;
        for (int j = 1; j <= i; ++j) {
            table[i][j] = (p4 * table[i][j - 1] - table[i - 1][j - 1]) / (p4 - 1.0);
            p4 *= 4.0;
        }
        h *= 0.5;
    }
    const double best = table[levels - 1][levels - 1];
    double est;
    if (levels >= 2) {
        const double prev = table[levels - 2][levels - 2];
        est = std::fabs(best - prev);
    } else {
        est = std::numeric_limits<double>::infinity();
    }
    if (!std::isfinite(best)) throw DomainError("differentiate: non-finite stencil value");
    return {best, est};
}

template <class Func>
double differentiate(const Func& f, double x, int order, const DiffConfig& cfg = {}) {
    return differentiate_with_error(f, x, order, cfg).value;
}

}  // namespace iterlab
