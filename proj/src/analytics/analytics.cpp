#include "analytics/analytics.hpp"

#include <cmath>

#include "specfun/specfun.hpp"

namespace iterlab {

double moment_iterated(const MomentSpec& spec, double t) {
    spec.validate();
    if (t < 0) throw DomainError("moment_iterated: t must be >= 0");
    if (t == 0.0) return 0.0;
    const int n = static_cast<int>(spec.hursts.size()) - 1;
    const double k = spec.k;

    double pi_r = 1.0;          // prod_{j<=r} H_j, starting at H_0 = 1
    double sum_pi = 0.0;        // sum_{r=0}^{n} pi_r
    double log_gamma_ratio = 0.0;
    for (int r = 0; r <= n; ++r) {
        if (r > 0) pi_r *= spec.hursts[r - 1];
        sum_pi += pi_r;
        log_gamma_ratio += log_gamma(2.0 * k * pi_r) - log_gamma(k * pi_r);
    }
    const double pi_full = pi_r * spec.hursts[n];  // prod_{j=1}^{n+1} H_j
    const double log_value = (n + 1) * std::log(2.0) + 2.0 * k * pi_full * std::log(t) -
                             k * sum_pi * std::log(2.0) + log_gamma_ratio;
    if (log_value > 709.0) throw Overflow("moment_iterated: value exceeds double range");
    return std::exp(log_value);
}

double variance_iterated(const Hurst& h1, const Hurst& h2, double t) {
    const double a = h1.value();
    return std::exp((1.0 - a) * std::log(2.0) + log_gamma(2.0 * a) - log_gamma(a) +
                    2.0 * a * h2.value() * std::log(t));
}

double mellin_weighted_chain(double alpha, int n, const Hurst& h, double t) {
    if (!(alpha > 0)) throw DomainError("mellin_weighted_chain: alpha must be > 0");
    if (n < 1) throw DomainError("mellin_weighted_chain: n must be >= 1");
    const double log_factor = 0.5 * alpha * std::log(2.0) + log_gamma(0.5 * alpha) -
                              0.5 * std::log(2.0 * M_PI);
    const double log_value = n * log_factor + h.value() * (alpha - 1.0) * std::log(t);
    if (log_value > 709.0) throw Overflow("mellin_weighted_chain: value exceeds double range");
    return std::exp(log_value);
}

double charfn_series(int n, const Hurst& h, double beta, double t) {
    if (n < 1) throw DomainError("charfn_series: n must be >= 1");
    if (beta == 0.0) return 1.0;
    const double z = beta * beta * std::pow(t, 2.0 * h.value());
    double sum = 0.0;
    double prev_mag = HUGE_VAL;
    int growing = 0;
    for (int k = 0; k < 400; ++k) {
        // log |term_k| = k log z - lgamma(2k+1) + n [ (k+1/2)log2 + lgamma(k+1/2) - log sqrt(2pi) ]
        const double lt = k * std::log(z) - log_gamma(2.0 * k + 1.0) +
                          n * ((k + 0.5) * std::log(2.0) + log_gamma(k + 0.5) - 0.5 * std::log(2.0 * M_PI));
        const double mag = std::exp(lt);
        const double term = (k % 2 == 0 ? 1.0 : -1.0) * mag;
        sum += term;
        if (mag < 1e-14 * std::max(1.0, std::fabs(sum))) return sum;
        if (mag > prev_mag) {
            if (++growing >= 3)
                throw SeriesDivergence("charfn_series: terms stopped decreasing (|beta| t^H too large)");
        } else {
            growing = 0;
        }
        prev_mag = mag;
    }
    throw SeriesDivergence("charfn_series: truncation budget exhausted");
}

namespace {

bool heavy_tailed(const ProcessModel& model) {
    switch (model.tag) {
        case ProcessTag::Cauchy:
        case ProcessTag::CauchyOfFBm:
        case ProcessTag::BmOfCauchy:
        case ProcessTag::CauchyOfCauchy:
        case ProcessTag::HalfProductCauchy:
        case ProcessTag::ReciprocalCC:
            return true;
        default:
            return false;
    }
}

}  // namespace

double charfn_numeric(const ProcessModel& model, double beta, double t, const QuadratureConfig& quad) {
    model.validate();
    if (!has_density(model)) throw UnsupportedModel("charfn_numeric: model has no implemented density");
    if (beta == 0.0) return 1.0;
    const double b = std::fabs(beta);  // CF is even in beta by symmetry of the laws
    const double scale = typical_scale(model, t);

    if (!heavy_tailed(model)) {
        auto r = integrate_halfline(
            [&](double x) { return std::cos(b * x) * density(model, x, t, quad); }, quad,
            {0.5 * scale, scale, 4.0 * scale});
        return 2.0 * r.value;
    }

    // Heavy tails: finite window + two-term integration-by-parts closure
    //   int_X^inf cos(bx) g dx = -sin(bX) g(X)/b + cos(bX) g'(X)/b^2 + O(g''/b^2).
    const double cutoff = std::max({60.0 * scale, 60.0 * t, 30.0 / b, 400.0});
    QuadratureConfig cfg = quad;
    cfg.max_subdivisions = std::max(quad.max_subdivisions, 4000);
    std::vector<double> splits{0.5 * scale, scale, 4.0 * scale, t};
    auto r = integrate_interval([&](double x) { return std::cos(b * x) * density(model, x, t, cfg); },
                                0.0, cutoff, cfg, splits);
    const double g = density(model, cutoff, t, cfg);
    const double gp = density_dx(model, cutoff, t, 1, cfg);
    const double tail = -std::sin(b * cutoff) * g / b + std::cos(b * cutoff) * gp / (b * b);
    return 2.0 * (r.value + tail);
}

}  // namespace iterlab
