#pragma once

#include <vector>

#include "densities/density.hpp"
#include "sampling/process.hpp"

namespace iterlab {

// Even moments of the n-times iterated fractional Brownian motion: the
// moment order is 2k for the chain H_1..H_{n+1}.
struct MomentSpec {
    int k = 1;
    std::vector<double> hursts;

    void validate() const {
        if (k < 1) throw DomainError("MomentSpec: k must be >= 1");
        if (hursts.empty()) throw DomainError("MomentSpec: empty Hurst chain");
        for (double h : hursts) {
            Hurst probe(h);
            (void)probe;
        }
    }
};

// E{ B1_H1(|B2_H2(...|B(n+1)(t)|...)|) }^(2k)
//   = 2^(n+1) t^(2k prod Hj) / 2^(k sum_r prod_{j<=r} Hj)
//     * prod_r Gamma(2k pi_r)/Gamma(k pi_r),  pi_r = prod_{j<=r} Hj, H0 = 1.
// Evaluated in log space; throws Overflow past the double range. t = 0
// returns 0 (the exponent of t is positive).
double moment_iterated(const MomentSpec& spec, double t);

// Var{B1_H1(|B2_H2(t)|)} = 2^(1-H1) Gamma(2H1)/Gamma(H1) t^(2 H1 H2);
// algebraically equal to moment_iterated at k=1.
double variance_iterated(const Hurst& h1, const Hurst& h2, double t);

// Mellin transform of |J^(n-1)_F(t)|: [2^(a/2) Gamma(a/2)/sqrt(2pi)]^n t^(H(a-1)).
double mellin_weighted_chain(double alpha, int n, const Hurst& h, double t);

// Characteristic function by quadrature of the density (real part; the
// imaginary part vanishes by symmetry). Heavy-tailed laws integrate to a
// finite cutoff and close with a two-term integration-by-parts tail.
double charfn_numeric(const ProcessModel& model, double beta, double t, const QuadratureConfig& quad = {});

// Truncated series sum_k ((i beta)^2k/(2k)!) [2^(k+1/2) Gamma(k+1/2)/sqrt(2pi)]^n t^(2Hk).
// Throws SeriesDivergence once terms stop decreasing (|beta| t^H >= 1).
double charfn_series(int n, const Hurst& h, double beta, double t);

}  // namespace iterlab
