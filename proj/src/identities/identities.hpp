#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "identities/ks.hpp"
#include "sampling/rng.hpp"

namespace iterlab {

enum class IdentityTag {
    CC_PRODUCT,       // C1(|C2(t)|) =d (1/2) C1(sqrt(2t)) C2(sqrt(2t))
    CC_RECIPROCAL,    // C1(|C2(t)|) =d 1 / C1(|C2(1/t)|)
    J_FACTORIZATION,  // J^(n-1)_F(t) =d prod_{i<=n} B^i_{H/n}(t)
    J_BM_CHAIN,       // exponent-1/H chain =d squared-clock standard-BM chain
    J1_PAIR,          // B1_H(|B2_H(t)|^(1/H)) =d B1_{H/2}(t) B2_{H/2}(t)
};

const char* identity_tag_name(IdentityTag tag);
IdentityTag identity_tag_parse(const std::string& name);

struct IdentityCase {
    IdentityTag tag = IdentityTag::CC_PRODUCT;
    double t = 1.0;
    std::size_t n_samples = 100000;
    RngState seed_a{42, 1};
    RngState seed_b{42, 2};
    int n = 2;           // chain/product order for the J identities
    double hurst = 0.6;  // H for the J identities
    bool negative_control = false;  // perturb one side so the test must fail

    void validate() const;
};

struct IdentityReport {
    std::string name;
    IdentityCase config;
    KsReport ks;
    // J_FACTORIZATION: even-moment comparison k = 1, 2 against the closed
    // form, in units of the Monte Carlo standard error.
    std::vector<double> moment_sigmas;
    std::uint64_t redraws = 0;
    bool pass = false;
};

// Draws both sides with independent streams and runs the two-sample KS at
// significance 0.01 (arctan scale for the Cauchy-family cases).
IdentityReport run_identity(const IdentityCase& c);

// Quadrature-CDF variant of CC_RECIPROCAL: sup over 50 w-points of
// |F_cc(w,t) - F_recip(w,t)|, where F_recip comes from transforming the
// iterated-Cauchy CDF at time 1/t.
double cdf_identity_check(double t);

// Default desk-scale catalogue (one case per identity, shipped seeds).
std::vector<IdentityCase> identity_default_cases(std::size_t n_samples = 100000, std::uint64_t seed = 42,
                                                 bool negative_controls = false);

}  // namespace iterlab
