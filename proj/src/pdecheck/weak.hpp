#pragma once

#include <functional>

#include "pdecheck/registry.hpp"

namespace iterlab {

// Smooth, even, rapidly decaying test function with the derivatives the weak
// pairings need. phi''(0) must be nonzero for delta-term sensitivity.
struct TestFunction {
    std::function<double(double)> phi;
    std::function<double(double)> phi4;    // fourth derivative
    std::function<double(double)> x_phi1;  // x * phi'(x)
    double phi2_at_zero = 0;
};

// exp(-x^2)
TestFunction gaussian_test_function();

// Pairs one delta-forced equation ((c), (d), (e) or (n)) with a test
// function and returns the scalar defect; delta_coefficient scales the
// distributional term (1 = as derived; 0.5 drives the sensitivity check).
double weak_delta_residual(char tag, const TestFunction& testfn, double t, double delta_coefficient = 1.0,
                           const EvalContext& ctx = {});

}  // namespace iterlab
