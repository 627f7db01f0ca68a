#pragma once

#include <string>
#include <vector>

#include "core/errors.hpp"

namespace iterlab {

// Hurst exponent, validated into (0,1].
class Hurst {
  public:
    explicit Hurst(double v) : value_(v) {
        if (!(v > 0.0 && v <= 1.0)) throw DomainError("Hurst: exponent must lie in (0,1]");
    }
    double value() const { return value_; }

  private:
    double value_;
};

enum class ProcessTag {
    FBm,                // B_H(t)
    IteratedFBm,        // B1_H1(|B2_H2(t)|)
    IteratedFBmChain,   // B1_H1(|B2_H2(...|B(n+1)_H(n+1)(t)|...)|)
    WeightedJ,          // J^n_F: n+1 motions, clocks raised to 1/H
    ScaledIterated,     // t^K B1(|B2_H(t)|)
    ProductFBm,         // prod_{i<=n} B^i_{H/n}(t)
    Cauchy,             // C(t)
    CauchyOfFBm,        // C(|B_H(t)|)
    BmOfCauchy,         // B(|C(t)|)
    CauchyOfCauchy,     // C1(|C2(t)|)
    HalfProductCauchy,  // (1/2) C1(sqrt(2t)) C2(sqrt(2t))
    ReciprocalCC,       // 1 / C1(|C2(1/t)|)
};

// Tagged descriptor naming one process with its parameters; the single
// currency linking samplers, densities, equations, and identities.
struct ProcessModel {
    ProcessTag tag = ProcessTag::FBm;
    std::vector<double> hursts;  // meaning depends on tag
    double scale_power = 0.0;    // K for ScaledIterated
    int n = 1;                   // chain/product order where applicable

    void validate() const;
    std::string name() const;          // canonical flag-grammar spelling
    static ProcessModel parse(const std::string& spec);  // name[:key=val,...]

    static ProcessModel fbm(double h) { return {ProcessTag::FBm, {h}, 0.0, 1}; }
    static ProcessModel iterated_fbm(double h1, double h2) { return {ProcessTag::IteratedFBm, {h1, h2}, 0.0, 1}; }
    static ProcessModel chain(std::vector<double> hs) {
        return {ProcessTag::IteratedFBmChain, std::move(hs), 0.0, 1};
    }
    static ProcessModel weighted_j(int n, double h) {
        return {ProcessTag::WeightedJ, {h}, 0.0, n};
    }
    static ProcessModel scaled_iterated(double k, double h) { return {ProcessTag::ScaledIterated, {h}, k, 1}; }
    static ProcessModel product_fbm(int n, double h) { return {ProcessTag::ProductFBm, {h}, 0.0, n}; }
    static ProcessModel cauchy() { return {ProcessTag::Cauchy, {}, 0.0, 1}; }
    static ProcessModel cauchy_of_fbm(double h) { return {ProcessTag::CauchyOfFBm, {h}, 0.0, 1}; }
    static ProcessModel bm_of_cauchy() { return {ProcessTag::BmOfCauchy, {}, 0.0, 1}; }
    static ProcessModel cauchy_of_cauchy() { return {ProcessTag::CauchyOfCauchy, {}, 0.0, 1}; }
    static ProcessModel half_product_cauchy() { return {ProcessTag::HalfProductCauchy, {}, 0.0, 1}; }
    static ProcessModel reciprocal_cc() { return {ProcessTag::ReciprocalCC, {}, 0.0, 1}; }
};

}  // namespace iterlab
