#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "numerics/finite_diff.hpp"
#include "numerics/grid.hpp"
#include "numerics/quadrature.hpp"
#include "sampling/process.hpp"

namespace iterlab {

struct EvalContext {
    QuadratureConfig quad{1e-12, 1e-15, 4000};
    DiffConfig diff{};
};

struct TermValue {
    std::string name;
    double value = 0;
    double est_error = 0;
};

// One governing equation: identification, the density it constrains, its
// singular loci, a default verification domain, the budgeted tolerance, and
// the pointwise term assembly (terms sum to the residual).
struct EquationSpec {
    char tag = '?';
    std::string description;
    ProcessModel model;
    bool excluded_zero = false;   // x = 0 removed from the grid
    bool excluded_diag = false;   // |x| = t removed ((l) only)
    bool has_delta = false;       // carries a distributional forcing term
    std::vector<double> default_times;
    double tolerance = 1e-6;
    std::function<Grid1D(double t)> default_grid;
    // Pointwise assembly; empty for grid-global entries (k).
    std::function<std::vector<TermValue>(double x, double t, const EvalContext&)> terms_at;
    bool spectral = false;        // entry (k): evaluated on its own FFT grid
    bool fractional = false;      // entry (o): Caputo check
};

// The full catalog (a)-(o); every governing equation in the tables appears
// exactly once.
const std::vector<EquationSpec>& equation_registry();

const EquationSpec& equation_by_tag(char tag);

}  // namespace iterlab
