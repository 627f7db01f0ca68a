#pragma once

namespace iterlab {

struct SpecFunResult {
    double value = 0;
    double est_abs_error = 0;
};

// Modified Bessel function K0. Small arguments use the I_nu series through
// the nu->0 limit of (pi/2)(I_-nu - I_nu)/sin(nu pi); large arguments use the
// convergent integral representation
//   K_nu(x) = sqrt(pi/2x) e^-x / Gamma(nu+1/2) * int_0^inf e^-z z^(nu-1/2)
//             (1+z/2x)^(nu-1/2) dz.
// Crossover at x = 3.0, where both branches agree to <= 1e-13.
SpecFunResult bessel_k0(double x);

// K1 = -K0' (recurrence dK_nu/dz = (nu/z)K_nu - K_{nu+1} at nu = 0).
SpecFunResult bessel_k1(double x);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace iterlab
