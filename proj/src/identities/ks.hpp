#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace iterlab {

struct KsReport {
    double statistic = 0;       // sup-distance of empirical CDFs, in [0,1]
    double approx_p_value = 1;  // asymptotic Kolmogorov law
    std::size_t n = 0;
    std::size_t m = 0;          // 0 for one-sample reports
    bool pass = false;          // at significance 0.01
};

// Survival function of the Kolmogorov distribution, Q(lambda) = 2 sum (-1)^(k-1) exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda);

// Two-sample KS with effective size nm/(n+m). Heavy-tailed inputs should be
// compared on the arctan scale (the statistic is invariant under monotone
// transforms; the transform stabilizes sorting of extreme draws).
KsReport ks_two_sample(std::span<const double> a, std::span<const double> b, bool arctan_scale = false);

// One-sample KS against a CDF callable.
template <class Cdf>
KsReport ks_one_sample(std::vector<double> sample, const Cdf& cdf) {
    std::sort(sample.begin(), sample.end());
    const std::size_t n = sample.size();
    double d = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - f));
    }
    KsReport r;
    r.statistic = d;
    r.n = n;
    r.m = 0;
    r.approx_p_value = kolmogorov_q(std::sqrt(static_cast<double>(n)) * d);
    r.pass = r.approx_p_value >= 0.01;
    return r;
}

}  // namespace iterlab
