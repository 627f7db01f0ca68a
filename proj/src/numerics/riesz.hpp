#pragma once

#include <vector>

#include "numerics/grid.hpp"

namespace iterlab {

// Applies the operator with Fourier symbol |beta| (the modulus derivative
// d/d|x|, which the Cauchy semigroup solves against) to samples of f on a
// uniform grid.
//
// The DFT evaluates the operator on the periodization of f; the dominant
// periodization error is the image tails of the result, which decay like
// -M/(pi y^2) with M = int f. That lattice sum has the closed form
// (pi/L)^2 / sin^2(pi x / L) - 1/x^2, and is subtracted, leaving O(L^-4)
// leakage for rational-tail densities.
//
// Throws GridTooCoarse when the top-of-band spectral mass exceeds 1e-6 of
// the total (the sampled signal is not resolved by the grid).
std::vector<double> riesz_modulus_derivative(const std::vector<double>& f, const Grid1D& grid);

}  // namespace iterlab
