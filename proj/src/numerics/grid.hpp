#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "core/errors.hpp"

namespace iterlab {

struct Grid1D {
    std::vector<double> points;      // strictly increasing, finite
    double excluded_radius = 0.0;    // radius around singular loci to skip

    void validate() const {
        if (excluded_radius < 0) throw DomainError("Grid1D: excluded_radius must be >= 0");
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (!std::isfinite(points[i])) throw DomainError("Grid1D: points must be finite");
            if (i > 0 && !(points[i] > points[i - 1]))
                throw DomainError("Grid1D: points must be strictly increasing");
        }
    }

    static Grid1D uniform(double a, double b, std::size_t n, double excluded = 0.0) {
        Grid1D g;
        g.excluded_radius = excluded;
        g.points.resize(n);
        const double h = (b - a) / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) g.points[i] = a + h * static_cast<double>(i);
        g.validate();
        return g;
    }

    // Uniform spacing check; returns the step.
    double uniform_step() const {
        if (points.size() < 2) throw DomainError("Grid1D: need at least 2 points");
        const double h = points[1] - points[0];
        for (std::size_t i = 1; i + 1 < points.size(); ++i) {
            const double d = points[i + 1] - points[i];
            if (std::fabs(d - h) > 1e-9 * std::fabs(h))
                throw DomainError("Grid1D: grid is not uniform");
        }
        return h;
    }
};

}  // namespace iterlab
