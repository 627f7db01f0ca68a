#include "densities/cdf.hpp"

#include <algorithm>
#include <cmath>

namespace iterlab {

namespace {

// Half-mass integral int_0^b density with singular-aware panels.
double half_integral(const ProcessModel& model, double b, double t, const QuadratureConfig& quad) {
    if (b <= 0) return 0.0;
    std::vector<double> splits;
    const double scale = typical_scale(model, t);
    for (double s : {0.01 * scale, 0.1 * scale, scale, 10.0 * scale, t}) {
        if (s > 0 && s < b) splits.push_back(s);
    }
    auto f = [&](double x) { return density(model, x, t, quad); };
    return integrate_interval(f, 0.0, b, quad, splits).value;
}

}  // namespace

double cdf(const ProcessModel& model, double x, double t, const QuadratureConfig& quad) {
    model.validate();
    if (!(t > 0)) throw DomainError("cdf: t must be > 0");
    if (model.tag == ProcessTag::Cauchy) return 0.5 + std::atan(x / t) / M_PI;
    if (x == 0.0) return 0.5;  // all laws here are symmetric
    const double half = half_integral(model, std::fabs(x), t, quad);
    return x > 0 ? 0.5 + half : 0.5 - half;
}

CdfTable::CdfTable(const ProcessModel& model, double t, const QuadratureConfig& quad, std::size_t n_cells) {
    scale_ = typical_scale(model, t);
    const double theta_max = M_PI / 2.0 - 1e-7;  // |x| up to ~1e7 * scale
    theta_.resize(n_cells + 1);
    for (std::size_t i = 0; i <= n_cells; ++i)
        theta_[i] = -theta_max + 2.0 * theta_max * static_cast<double>(i) / static_cast<double>(n_cells);
    // Force exact nodes at the singular loci.
    auto snap = [&](double x) {
        const double th = std::atan(x / scale_);
        auto it = std::lower_bound(theta_.begin(), theta_.end(), th);
        if (it != theta_.end()) *it = th;
    };
    snap(0.0);
    snap(t);
    snap(-t);
    std::sort(theta_.begin(), theta_.end());

    QuadratureConfig cell_cfg = quad;
    cell_cfg.abs_tol = std::max(quad.abs_tol, 1e-12);
    cell_cfg.rel_tol = std::max(quad.rel_tol, 1e-8);
    cdf_.assign(theta_.size(), 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < theta_.size(); ++i) {
        const double a = scale_ * std::tan(theta_[i]);
        const double b = scale_ * std::tan(theta_[i + 1]);
        double cell = 0.0;
        if (b > a) {
            auto f = [&](double x) { return density(model, x, t, cell_cfg); };
            try {
                cell = integrate_interval(f, a, b, cell_cfg).value;
            } catch (const NonConvergence&) {
                cell = 0.0;  // far-tail cells below resolution
            }
        }
        acc += cell;
        cdf_[i + 1] = acc;
    }
    norm_defect_ = std::fabs(acc - 1.0);
    // Tiny tail mass beyond the table plus quadrature drift: renormalize so
    // the table is a proper CDF for the KS machinery.
    if (acc > 0) {
        for (auto& v : cdf_) v /= acc;
    }
}

double CdfTable::operator()(double x) const {
    const double th = std::atan(x / scale_);
    if (th <= theta_.front()) return 0.0;
    if (th >= theta_.back()) return 1.0;
    auto it = std::upper_bound(theta_.begin(), theta_.end(), th);
    const std::size_t j = static_cast<std::size_t>(it - theta_.begin());
    const double t0 = theta_[j - 1], t1 = theta_[j];
    const double w = (th - t0) / (t1 - t0);
    return cdf_[j - 1] + w * (cdf_[j] - cdf_[j - 1]);
}

}  // namespace iterlab
