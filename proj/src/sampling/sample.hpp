#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "sampling/process.hpp"
#include "sampling/rng.hpp"

namespace iterlab {

// One draw from the exact marginal law of the model at time t. Marginal
// sampling uses conditional Gaussianity layer by layer: conditionally on the
// inner clock s, a fractional outer value is N(0, s^2H).
//
// Each sample index owns a block of 32 counters in the stream, so draws are
// independent of evaluation order and thread count; ReciprocalCC redraws
// inside its block on an exact-zero denominator (counted via redraw_count).
double sample_marginal(const ProcessModel& model, double t, const RngState& rng, std::uint64_t index = 0,
                       std::atomic<std::uint64_t>* redraw_count = nullptr);

// n draws at indices [0,n), parallelized by index.
std::vector<double> sample_many(const ProcessModel& model, double t, const RngState& rng, std::size_t n,
                                std::atomic<std::uint64_t>* redraw_count = nullptr);

}  // namespace iterlab
