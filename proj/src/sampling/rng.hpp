#pragma once

#include <cstdint>

namespace iterlab {

// Counter-based stream: the k-th variate is a pure function of
// (seed, stream_id, k), so draws are reproducible across thread counts and
// platforms. Distinct stream_ids give statistically independent streams.
struct RngState {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    RngState child(std::uint64_t index) const;  // derived independent stream
};

std::uint64_t rng_bits_at(const RngState& s, std::uint64_t counter);

// Uniform on the open interval (0,1).
double rng_uniform_at(const RngState& s, std::uint64_t counter);

// Standard normal via the inverse CDF (rational approximation, |err|<1e-15;
// no ziggurat so results are bit-stable everywhere).
double rng_gaussian_at(const RngState& s, std::uint64_t counter);

// Inverse standard normal CDF (Wichura's PPND16-style approximation).
double inverse_normal_cdf(double p);

// Sequential view over a stream.
class RngStream {
  public:
    explicit RngStream(RngState s, std::uint64_t start = 0) : state_(s), counter_(start) {}
    double uniform() { return rng_uniform_at(state_, counter_++); }
    double gaussian() { return rng_gaussian_at(state_, counter_++); }
    std::uint64_t counter() const { return counter_; }

  private:
    RngState state_;
    std::uint64_t counter_;
};

}  // namespace iterlab
