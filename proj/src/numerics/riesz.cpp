#include "numerics/riesz.hpp"

#include <cmath>
#include <complex>

#include "numerics/fft.hpp"

namespace iterlab {

std::vector<double> riesz_modulus_derivative(const std::vector<double>& f, const Grid1D& grid) {
    grid.validate();
    if (f.size() != grid.points.size())
        throw DomainError("riesz_modulus_derivative: sample/grid size mismatch");
    const std::size_t n = f.size();
    const double h = grid.uniform_step();
    const double L = h * static_cast<double>(n);

    std::vector<std::complex<double>> buf(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = f[i];
    auto spec = fft_forward(buf);

    // Spectral tail check: mass in the top decade of |beta|.
    double total = 0, tail = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t kk = k <= n / 2 ? k : n - k;
        const double m = std::norm(spec[k]);
        total += m;
        if (kk >= (n / 2) * 9 / 10) tail += m;
    }
    if (total > 0 && tail > 1e-6 * total)
        throw GridTooCoarse("riesz_modulus_derivative: spectral tail mass exceeds 1e-6 of total");

    const double two_pi_over_L = 2.0 * M_PI / L;
    for (std::size_t k = 0; k < n; ++k) {
        const double freq = k <= n / 2 ? static_cast<double>(k) : -static_cast<double>(n - k);
        spec[k] *= std::fabs(freq) * two_pi_over_L;
    }
    auto back = fft_inverse(spec);
    std::vector<double> out(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = back[i].real() * inv_n;

    // Image-tail correction (see header).
    double mass = 0;
    for (double v : f) mass += v;
    mass *= h;
    if (mass != 0.0) {
        const double pi_over_L = M_PI / L;
        for (std::size_t i = 0; i < n; ++i) {
            // Images live at x + kL, so the lattice sum is a function of the
            // raw coordinate regardless of where the window is centred.
            const double x = grid.points[i];
            double corr;
            const double arg = pi_over_L * x;
            const double s = std::sin(arg);
            if (std::fabs(x) < 1e-6 * L) {
                corr = (M_PI * M_PI) / (3.0 * L * L);
            } else {
                corr = pi_over_L * pi_over_L / (s * s) - 1.0 / (x * x);
            }
            out[i] += (mass / M_PI) * corr;
        }
    }
    return out;
}

}  // namespace iterlab
