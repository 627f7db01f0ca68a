#pragma once

#include <complex>
#include <vector>

namespace iterlab {

// In-order complex DFT (FFTW backend, ESTIMATE plans, planner guarded by a
// mutex; execution is thread-safe on distinct buffers).
std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& in);
std::vector<std::complex<double>> fft_inverse(const std::vector<std::complex<double>>& in);  // unscaled

}  // namespace iterlab
