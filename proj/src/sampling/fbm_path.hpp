#pragma once

#include <vector>

#include "sampling/process.hpp"
#include "sampling/rng.hpp"

namespace iterlab {

struct PathSample {
    std::vector<double> times;   // strictly increasing, > 0
    std::vector<double> values;
    double hurst = 0.5;
    bool jitter_applied = false;  // Cholesky needed diagonal regularization
    bool used_fallback = false;   // circulant fell back to Cholesky
};

// Exact fBm path on arbitrary times via the covariance
// (1/2)(|t|^2H + |s|^2H - |t-s|^2H) and a Cholesky square root.
// len(times) <= 4096. A failed factorization retries once with jitter
// 1e-12 * max diagonal, recorded in the sample.
PathSample fbm_path_cholesky(const Hurst& h, const std::vector<double>& times, const RngState& rng,
                             std::uint64_t index = 0);

// Stationary-increment fGn via circulant embedding (Davies-Harte) on an
// n-step grid of spacing dt, cumulated and scaled by dt^H. n must be a power
// of two <= 2^22. Embedding eigenvalues in [-1e-9, 0] are clipped to 0;
// anything below falls back to Cholesky (n <= 4096) or fails.
PathSample fbm_path_circulant(const Hurst& h, std::size_t n, double dt, const RngState& rng,
                              std::uint64_t index = 0);

}  // namespace iterlab
