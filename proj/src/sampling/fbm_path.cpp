#include "sampling/fbm_path.hpp"

#include <cmath>
#include <complex>

#include "numerics/fft.hpp"

namespace iterlab {

namespace {

constexpr std::uint64_t kBlock = 1ULL << 24;  // counter block per path index

double fbm_cov(double s, double t, double h2) {
    return 0.5 * (std::pow(std::fabs(t), h2) + std::pow(std::fabs(s), h2) - std::pow(std::fabs(t - s), h2));
}

// Lower-triangular Cholesky in place; returns false on a non-positive pivot.
bool cholesky(std::vector<double>& a, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        double d = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
        if (!(d > 0)) return false;
        const double ljj = std::sqrt(d);
        a[j * n + j] = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
            a[i * n + j] = v / ljj;
        }
    }
    return true;
}

}  // namespace

PathSample fbm_path_cholesky(const Hurst& h, const std::vector<double>& times, const RngState& rng,
                             std::uint64_t index) {
    const std::size_t n = times.size();
    if (n == 0 || n > 4096) throw DomainError("fbm_path_cholesky: need 1..4096 times");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(times[i] > 0)) throw DomainError("fbm_path_cholesky: times must be > 0");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw DomainError("fbm_path_cholesky: times must be strictly increasing");
    }
    const double h2 = 2.0 * h.value();
    std::vector<double> cov(n * n);
    double maxdiag = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double c = fbm_cov(times[i], times[j], h2);
            cov[i * n + j] = c;
            cov[j * n + i] = c;
        }
        maxdiag = std::max(maxdiag, cov[i * n + i]);
    }

    PathSample out;
    out.times = times;
    out.hurst = h.value();
    std::vector<double> fac = cov;
    if (!cholesky(fac, n)) {
        fac = cov;
        for (std::size_t i = 0; i < n; ++i) fac[i * n + i] += 1e-12 * maxdiag;
        if (!cholesky(fac, n))
            throw NotPositiveDefinite("fbm_path_cholesky: covariance not positive definite after jitter");
        out.jitter_applied = true;
    }

    std::vector<double> z(n);
    const std::uint64_t base = index * kBlock;
    for (std::size_t i = 0; i < n; ++i) z[i] = rng_gaussian_at(rng, base + i);
    out.values.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0;
        for (std::size_t j = 0; j <= i; ++j) acc += fac[i * n + j] * z[j];
        out.values[i] = acc;
    }
    return out;
}

PathSample fbm_path_circulant(const Hurst& h, std::size_t n, double dt, const RngState& rng,
                              std::uint64_t index) {
    if (n < 2 || n > (1u << 22) || (n & (n - 1)) != 0)
        throw DomainError("fbm_path_circulant: n must be a power of two in [2, 2^22]");
    if (!(dt > 0)) throw DomainError("fbm_path_circulant: dt must be > 0");
    const double hv = h.value();
    const double h2 = 2.0 * hv;
    const std::size_t m = 2 * n;

    // fGn autocovariance on the unit-step grid.
    std::vector<std::complex<double>> c(m);
    auto gamma = [&](double k) {
        return 0.5 * (std::pow(k + 1, h2) - 2 * std::pow(k, h2) + std::pow(std::fabs(k - 1), h2));
    };
    for (std::size_t k = 0; k <= n; ++k) c[k] = gamma(static_cast<double>(k));
    for (std::size_t k = 1; k < n; ++k) c[m - k] = c[k];

    auto lam = fft_forward(c);
    double min_eig = 0;
    for (auto& v : lam) min_eig = std::min(min_eig, v.real());
    if (min_eig < -1e-9) {
        if (n <= 4096) {
            std::vector<double> times(n);
            for (std::size_t i = 0; i < n; ++i) times[i] = dt * static_cast<double>(i + 1);
            PathSample p = fbm_path_cholesky(h, times, rng, index);
            p.used_fallback = true;
            return p;
        }
        throw EmbeddingFailure("fbm_path_circulant: embedding eigenvalue below -1e-9 and n too large for fallback");
    }

    const std::uint64_t base = index * kBlock;
    std::uint64_t ctr = base;
    std::vector<std::complex<double>> v(m);
    const double l0 = std::max(lam[0].real(), 0.0);
    const double ln = std::max(lam[n].real(), 0.0);
    v[0] = std::sqrt(l0) * rng_gaussian_at(rng, ctr++);
    v[n] = std::sqrt(ln) * rng_gaussian_at(rng, ctr++);
    for (std::size_t k = 1; k < n; ++k) {
        const double lk = std::max(lam[k].real(), 0.0);
        const double a = rng_gaussian_at(rng, ctr++);
        const double b = rng_gaussian_at(rng, ctr++);
        const std::complex<double> w = std::sqrt(lk / 2.0) * std::complex<double>(a, b);
        v[k] = w;
        v[m - k] = std::conj(w);
    }
    auto f = fft_forward(v);

    PathSample out;
    out.hurst = hv;
    out.times.resize(n);
    out.values.resize(n);
    const double scale = std::pow(dt, hv) / std::sqrt(static_cast<double>(m));
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += f[i].real() * scale;
        out.values[i] = acc;
        out.times[i] = dt * static_cast<double>(i + 1);
    }
    return out;
}

}  // namespace iterlab
