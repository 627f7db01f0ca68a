#pragma once

#include <functional>

#include "numerics/finite_diff.hpp"
#include "numerics/quadrature.hpp"

namespace iterlab {

struct CaputoInfo {
    double truncation_delta = 0;    // lower limit delta = 1e-6 * t
    double discarded_bound = 0;     // bound on the discarded [0,delta) piece
};

// Caputo derivative of order 1/2 in t:
//   (1/Gamma(1/2)) * int_0^t dq/ds(x,s) (t-s)^(-1/2) ds,
// with the endpoint singularity removed by s = t - u^2 and the lower limit
// truncated at delta = 1e-6*t. The discarded piece is bounded using
// |dq/ds| <= C s^(-1/2) with C estimated at s = delta.
double caputo_half_time_derivative(const std::function<double(double, double)>& q, double x, double t,
                                   const QuadratureConfig& quad = {}, const DiffConfig& diff = {},
                                   CaputoInfo* info = nullptr);

}  // namespace iterlab
