#include "numerics/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace iterlab {

namespace {
std::mutex planner_mutex;

std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& in, int sign) {
    const std::size_t n = in.size();
    std::vector<std::complex<double>> out(n);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(n),
                                reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                                reinterpret_cast<fftw_complex*>(out.data()), sign,
                                FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}
}  // namespace

std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& in) {
    return run(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> fft_inverse(const std::vector<std::complex<double>>& in) {
    return run(in, FFTW_BACKWARD);
}

}  // namespace iterlab
