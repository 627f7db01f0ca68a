#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdecheck/registry.hpp"

namespace iterlab {

struct PdePointRecord {
    double x = 0, t = 0;
    double abs_residual = 0;
    double rel_residual = 0;
};

struct PdeResidualReport {
    char tag = '?';
    std::string description;
    std::string grid_summary;
    std::size_t n_points = 0;
    std::vector<PdePointRecord> points;
    double max_abs_residual = 0;
    // Relative to the largest individual term magnitude at the worst point.
    double max_rel_residual = 0;
    std::vector<std::pair<std::string, double>> term_magnitudes;
    double tolerance = 0;
    double budget = 0;  // propagated evaluation-error budget (relative)
    std::string verdict;  // "pass" | "fail" | "inconclusive"

    bool passed() const { return verdict == "pass"; }
};

struct StrongOptions {
    std::optional<Grid1D> grid;
    std::optional<std::vector<double>> times;
    std::optional<double> tolerance;
    EvalContext ctx{};
};

// Assembles the residual of one governing equation over its
// singularity-excluded grid and reports the max relative residual. The
// verdict is "inconclusive" (never "fail") when the propagated evaluation
// error budget alone exceeds the tolerance.
PdeResidualReport strong_residual(const EquationSpec& eq, const StrongOptions& opt = {});

// Entry (o) pointwise: Caputo-1/2 time derivative minus 2^(-3/2) q_xx for
// the IBM density, relative to the larger side.
double fractional_residual(double x, double t, const EvalContext& ctx = {});

// Checks that u(x,t) = f(x t^(-H1H2))/x solves
// t/(H1H2) u_t + x u_x = -u at the given points (FD in both variables).
double scaling_solution_check(const std::function<double(double)>& f, const Hurst& h1, const Hurst& h2,
                              const std::vector<std::pair<double, double>>& points,
                              const DiffConfig& diff = {});

}  // namespace iterlab
