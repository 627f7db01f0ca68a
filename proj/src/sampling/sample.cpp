#include "sampling/sample.hpp"

#include <cmath>

#include "core/parallel.hpp"

namespace iterlab {

namespace {

constexpr std::uint64_t kBlock = 32;  // counters reserved per sample index

struct Draw {
    const RngState& rng;
    std::uint64_t ctr;
    double z() { return rng_gaussian_at(rng, ctr++); }
    double u() { return rng_uniform_at(rng, ctr++); }
    double cauchy(double t) { return t * std::tan(M_PI * (u() - 0.5)); }
};

}  // namespace

double sample_marginal(const ProcessModel& model, double t, const RngState& rng, std::uint64_t index,
                       std::atomic<std::uint64_t>* redraw_count) {
    model.validate();
    if (!(t > 0)) {
        switch (model.tag) {
            case ProcessTag::Cauchy:
            case ProcessTag::CauchyOfFBm:
            case ProcessTag::BmOfCauchy:
            case ProcessTag::CauchyOfCauchy:
            case ProcessTag::HalfProductCauchy:
            case ProcessTag::ReciprocalCC:
                throw DomainError("sample_marginal: degenerate time t=0 for Cauchy-family model");
            default:
                throw DomainError("sample_marginal: t must be > 0");
        }
    }
    Draw d{rng, index * kBlock};
    switch (model.tag) {
        case ProcessTag::FBm:
            return std::pow(t, model.hursts[0]) * d.z();
        case ProcessTag::IteratedFBm: {
            const double inner = std::fabs(std::pow(t, model.hursts[1]) * d.z());
            return std::pow(inner, model.hursts[0]) * d.z();
        }
        case ProcessTag::IteratedFBmChain: {
            const std::size_t m = model.hursts.size();
            double v = std::pow(t, model.hursts[m - 1]) * d.z();
            for (std::size_t j = m - 1; j-- > 0;) v = std::pow(std::fabs(v), model.hursts[j]) * d.z();
            return v;
        }
        case ProcessTag::WeightedJ: {
            // J^n_F: clocks raised to 1/H, outer values scale as clock^H.
            const double h = model.hursts[0];
            double v = std::pow(t, h) * d.z();
            for (int j = 0; j < model.n; ++j) {
                const double clock = std::pow(std::fabs(v), 1.0 / h);
                v = std::pow(clock, h) * d.z();
            }
            return v;
        }
        case ProcessTag::ScaledIterated: {
            const double inner = std::fabs(std::pow(t, model.hursts[0]) * d.z());
            return std::pow(t, model.scale_power) * std::sqrt(inner) * d.z();
        }
        case ProcessTag::ProductFBm: {
            const double hf = model.hursts[0] / model.n;
            double v = 1.0;
            for (int j = 0; j < model.n; ++j) v *= std::pow(t, hf) * d.z();
            return v;
        }
        case ProcessTag::Cauchy:
            return d.cauchy(t);
        case ProcessTag::CauchyOfFBm: {
            const double inner = std::fabs(std::pow(t, model.hursts[0]) * d.z());
            return d.cauchy(inner);
        }
        case ProcessTag::BmOfCauchy: {
            const double inner = std::fabs(d.cauchy(t));
            return std::sqrt(inner) * d.z();
        }
        case ProcessTag::CauchyOfCauchy: {
            const double inner = std::fabs(d.cauchy(t));
            return d.cauchy(inner);
        }
        case ProcessTag::HalfProductCauchy: {
            const double s = std::sqrt(2.0 * t);
            return 0.5 * d.cauchy(s) * d.cauchy(s);
        }
        case ProcessTag::ReciprocalCC: {
            // 1 / C1(|C2(1/t)|); an exact-zero denominator has probability
            // zero but floating point can produce it, so redraw in-block.
            for (int attempt = 0; attempt < 15; ++attempt) {
                const double inner = std::fabs(d.cauchy(1.0 / t));
                const double denom = d.cauchy(inner);
                if (denom != 0.0 && inner != 0.0) return 1.0 / denom;
                if (redraw_count) redraw_count->fetch_add(1);
            }
            throw DomainError("sample_marginal: ReciprocalCC redraw budget exhausted");
        }
    }
    throw DomainError("sample_marginal: unhandled tag");
}

std::vector<double> sample_many(const ProcessModel& model, double t, const RngState& rng, std::size_t n,
                                std::atomic<std::uint64_t>* redraw_count) {
    std::vector<double> out(n);
    parallel_for_index(n, [&](std::size_t i) { out[i] = sample_marginal(model, t, rng, i, redraw_count); });
    return out;
}

}  // namespace iterlab
