#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "core/errors.hpp"

namespace iterlab {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    int max_subdivisions = 2000;

    void validate() const {
        if (!(rel_tol > 0) || !(abs_tol > 0) || max_subdivisions < 1)
            throw DomainError("QuadratureConfig: rel_tol, abs_tol must be > 0 and max_subdivisions >= 1");
    }
};

struct IntegralResult {
    double value = 0;
    double error = 0;  // absolute error estimate
    int subdivisions = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1,1]. Column 0: abscissa, 1: Gauss weight,
// 2: Kronrod weight. Row 0 is the centre node.
inline constexpr double kGK15[8][3] = {
    {0.000000000000000000, 0.417959183673469388, 0.209482141084727828},
    {0.405845151377397167, 0.381830050505118945, 0.190350578064785410},
    {0.741531185599394440, 0.279705391489276668, 0.140653259715525919},
    {0.949107912342758525, 0.129484966168869693, 0.063092092629978553},
    {0.207784955007898468, 0.0, 0.204432940075298892},
    {0.586087235467691130, 0.0, 0.169004726639267903},
    {0.864864423359769073, 0.0, 0.104790010322250184},
    {0.991455371120812639, 0.0, 0.022935322010529225},
};

struct Panel {
    double a, b;
    double value;   // Kronrod estimate
    double error;   // scaled error estimate
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class Func>
Panel gk15(const Func& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    if (!std::isfinite(fc)) throw DomainError("quadrature: integrand returned non-finite value");
    double gauss = kGK15[0][1] * fc;
    double kron = kGK15[0][2] * fc;
    double resabs = kGK15[0][2] * std::fabs(fc);
    double fv[8][2];
    fv[0][0] = fv[0][1] = fc;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kGK15[i][0];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        if (!std::isfinite(f1) || !std::isfinite(f2))
            throw DomainError("quadrature: integrand returned non-finite value");
        fv[i][0] = f1;
        fv[i][1] = f2;
        gauss += kGK15[i][1] * (f1 + f2);
        kron += kGK15[i][2] * (f1 + f2);
        resabs += kGK15[i][2] * (std::fabs(f1) + std::fabs(f2));
    }
    const double mean = 0.5 * kron;
    double resasc = kGK15[0][2] * std::fabs(fc - mean);
    for (int i = 1; i < 8; ++i)
        resasc += kGK15[i][2] * (std::fabs(fv[i][0] - mean) + std::fabs(fv[i][1] - mean));
    kron *= h;
    gauss *= h;
    resabs *= std::fabs(h);
    resasc *= std::fabs(h);

    // QUADPACK-style error scaling.
    double err = std::fabs(kron - gauss);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    err = std::max(err, round);
    return Panel{a, b, kron, err};
}

}  // namespace detail

// Adaptive Gauss-Kronrod on [a,b]. `splits` seeds interior panel boundaries
// (singular or awkward loci); they are clipped to (a,b).
template <class Func>
IntegralResult integrate_interval(const Func& f, double a, double b, const QuadratureConfig& cfg = {},
                                  const std::vector<double>& splits = {}) {
    cfg.validate();
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0, 0};
        throw DomainError("integrate_interval: requires a < b");
    }
    std::vector<double> edges{a, b};
    for (double s : splits)
        if (s > a && s < b) edges.push_back(s);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<detail::Panel> queue;
    double total = 0, toterr = 0;
    int used = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto p = detail::gk15(f, edges[i], edges[i + 1]);
        total += p.value;
        toterr += p.error;
        queue.push(p);
        ++used;
    }
    while (toterr > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
        if (used >= cfg.max_subdivisions)
            throw NonConvergence("integrate_interval: max_subdivisions exhausted");
        detail::Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            break;  // panel no longer splittable at double precision
        auto left = detail::gk15(f, worst.a, mid);
        auto right = detail::gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        toterr += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++used;
    }

    // Re-accumulate in deterministic (left-to-right) order so the reported
    // value does not depend on the heap's split history representation.
    std::vector<detail::Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
    double value = 0, error = 0;
    for (const auto& p : panels) {
        value += p.value;
        error += p.error;
    }
    return {value, error, used};
}

// Integral over (0, inf) via u = s/(1+s); panels are pre-split
// logarithmically near 0 so s^-1-type prefactors converge quickly.
// `splits` are interior points in s-space.
template <class Func>
IntegralResult integrate_halfline(const Func& f, const QuadratureConfig& cfg = {},
                                  const std::vector<double>& splits = {}) {
    auto g = [&f](double u) {
        const double om = 1.0 - u;
        const double s = u / om;
        const double fs = f(s);
        // Decaying integrands underflow to 0 before the Jacobian blows up.
        if (fs == 0.0) return 0.0;
        return fs / (om * om);
    };
    std::vector<double> useed{1e-14, 1e-11, 1e-8, 1e-6, 1e-4, 1e-3, 1e-2, 0.1, 0.25, 0.5, 0.75, 0.9};
    for (double s : splits)
        if (s > 0 && std::isfinite(s)) useed.push_back(s / (1.0 + s));
    return integrate_interval(g, 0.0, 1.0, cfg, useed);
}

}  // namespace iterlab
