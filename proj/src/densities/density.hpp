#pragma once

#include "numerics/quadrature.hpp"
#include "sampling/process.hpp"

namespace iterlab {

// Pointwise density evaluation for every process with a tractable law:
// closed forms where the theory gives one, certified quadrature of the
// subordination integral otherwise. Singular loci (x=0 for the K0 and
// log-Cauchy laws) raise SingularPoint; |x|=t for the iterated Cauchy law is
// removable and handled by a series branch.
bool has_density(const ProcessModel& model);

struct DensityValue {
    double value = 0;
    double est_error = 0;
};

DensityValue density_with_error(const ProcessModel& model, double x, double t,
                                const QuadratureConfig& quad = {});
double density(const ProcessModel& model, double x, double t, const QuadratureConfig& quad = {});

// Spatial derivative of the density, computed under the integral sign where
// the integrand's x-derivatives are closed-form (Gaussian/rational kernels),
// by Bessel recurrences for the K0 law, analytically for closed forms.
double density_dx(const ProcessModel& model, double x, double t, int order,
                  const QuadratureConfig& quad = {});

// Time derivative (order 1 or 2), via closed-form kernel t-derivatives under
// the integral sign.
double density_dt(const ProcessModel& model, double x, double t, int order,
                  const QuadratureConfig& quad = {});

// Iterated-Cauchy density by quadrature of the (s/(s^2+x^2))(t/(t^2+s^2))
// integral form; oracle against the closed form.
double density_cc_integral(double x, double t, const QuadratureConfig& quad = {});

// Iterated-Cauchy density through the exponential-weight representation
// (iterated 1-D quadrature over the two exponential weights).
double density_cc_expweights(double x, double t, const QuadratureConfig& quad = {});

// Rough spread of the law at time t (used to scale grids and CDF tables).
double typical_scale(const ProcessModel& model, double t);

// Loci excluded from pointwise evaluation: x = 0 and, for the iterated
// Cauchy law, |x| = t.
bool density_singular_at_zero(const ProcessModel& model);

namespace kernels {

// N(x; 0, v) and its x-derivatives (Hermite closed forms).
double gauss(double x, double v);
double gauss_dx(double x, double v, int order);
// d^m/dt^m of N(s; 0, t^2H) for m = 1, 2.
double gauss_dt(double s, double t, double hurst, int order);
// Cauchy kernel s -> s/(pi(s^2+x^2)) viewed as a function of x; derivatives
// via the complex pole representation Im[(-1)^m m!/(x-is)^(m+1)]/pi.
double cauchy_kernel_dx(double x, double s, int order);
// t/(pi(s^2+t^2)) and its t-derivatives (m = 0, 1, 2).
double cauchy_clock_dt(double s, double t, int order);

}  // namespace kernels

}  // namespace iterlab
