#pragma once

#include <vector>

#include "densities/density.hpp"

namespace iterlab {

// CDF through symmetry: 1/2 + sign(x) * int_0^|x| density, with split panels
// at the singular loci (x = 0 integrable, |x| = t removable).
double cdf(const ProcessModel& model, double x, double t, const QuadratureConfig& quad = {});

// Tabulated CDF on an arctangent-stretched grid, for KS tests against large
// sample sets. Evaluation interpolates linearly in the stretched coordinate;
// the grid is dense enough that interpolation error is far below KS
// resolution at n = 1e5.
class CdfTable {
  public:
    CdfTable(const ProcessModel& model, double t, const QuadratureConfig& quad = {}, std::size_t n_cells = 4096);

    double operator()(double x) const;
    double normalization_defect() const { return norm_defect_; }

  private:
    double scale_;
    std::vector<double> theta_;  // grid in atan(x/scale)
    std::vector<double> cdf_;
    double norm_defect_;
};

}  // namespace iterlab
