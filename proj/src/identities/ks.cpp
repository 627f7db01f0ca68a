#include "identities/ks.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace iterlab {

double kolmogorov_q(double lambda) {
    if (lambda <= 0.05) return 1.0;
    double q = 0;
    for (int k = 1; k <= 120; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        q += (k % 2 == 1 ? term : -term);
        if (term < 1e-18) break;
    }
    return std::clamp(2.0 * q, 0.0, 1.0);
}

KsReport ks_two_sample(std::span<const double> a, std::span<const double> b, bool arctan_scale) {
    if (a.empty() || b.empty()) throw DomainError("ks_two_sample: both samples must be nonempty");
    std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
    if (arctan_scale) {
        for (auto& v : x) v = std::atan(v);
        for (auto& v : y) v = std::atan(v);
    }
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const std::size_t n = x.size(), m = y.size();
    double d = 0;
    std::size_t i = 0, j = 0;
    while (i < n && j < m) {
        const double v = std::min(x[i], y[j]);
        while (i < n && x[i] <= v) ++i;
        while (j < m && y[j] <= v) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / n - static_cast<double>(j) / m));
    }
    KsReport r;
    r.statistic = d;
    r.n = n;
    r.m = m;
    const double ne = static_cast<double>(n) * static_cast<double>(m) / static_cast<double>(n + m);
    r.approx_p_value = kolmogorov_q(std::sqrt(ne) * d);
    r.pass = r.approx_p_value >= 0.01;
    return r;
}

}  // namespace iterlab
