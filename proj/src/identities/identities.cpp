#include "identities/identities.hpp"

#include <cmath>

#include "analytics/analytics.hpp"
#include "core/parallel.hpp"
#include "densities/cdf.hpp"
#include "sampling/sample.hpp"

namespace iterlab {

const char* identity_tag_name(IdentityTag tag) {
    switch (tag) {
        case IdentityTag::CC_PRODUCT: return "CC_PRODUCT";
        case IdentityTag::CC_RECIPROCAL: return "CC_RECIPROCAL";
        case IdentityTag::J_FACTORIZATION: return "J_FACTORIZATION";
        case IdentityTag::J_BM_CHAIN: return "J_BM_CHAIN";
        case IdentityTag::J1_PAIR: return "J1_PAIR";
    }
    return "?";
}

IdentityTag identity_tag_parse(const std::string& name) {
    for (IdentityTag t : {IdentityTag::CC_PRODUCT, IdentityTag::CC_RECIPROCAL, IdentityTag::J_FACTORIZATION,
                          IdentityTag::J_BM_CHAIN, IdentityTag::J1_PAIR})
        if (name == identity_tag_name(t)) return t;
    throw DomainError("identity_tag_parse: unknown identity '" + name + "'");
}

void IdentityCase::validate() const {
    if (n_samples < 10000) throw DomainError("IdentityCase: n_samples must be >= 10^4");
    if (!(t > 0)) throw DomainError("IdentityCase: t must be > 0");
    if (n < 2) throw DomainError("IdentityCase: chain order must be >= 2");
    Hurst probe(hurst);
    (void)probe;
}

namespace {

constexpr std::uint64_t kBlock = 32;

// Squared-clock standard-BM chain B1(|B2(...|B(n+1)_H(t)|^2...)|^2).
double sample_squared_chain(double t, double h, int layers, const RngState& rng, std::uint64_t index) {
    std::uint64_t ctr = index * kBlock;
    double v = std::pow(t, h) * rng_gaussian_at(rng, ctr++);
    for (int j = 0; j < layers; ++j) {
        const double clock = v * v;
        v = std::sqrt(clock) * rng_gaussian_at(rng, ctr++);
    }
    return v;
}

std::vector<double> draw(const ProcessModel& m, double t, const RngState& rng, std::size_t n,
                         std::atomic<std::uint64_t>* redraws) {
    return sample_many(m, t, rng, n, redraws);
}

}  // namespace

IdentityReport run_identity(const IdentityCase& c) {
    c.validate();
    IdentityReport rep;
    rep.config = c;
    rep.name = identity_tag_name(c.tag);
    std::atomic<std::uint64_t> redraws{0};
    std::vector<double> a, b;
    bool heavy = false;

    switch (c.tag) {
        case IdentityTag::CC_PRODUCT: {
            heavy = true;
            a = draw(ProcessModel::cauchy_of_cauchy(), c.t, c.seed_a, c.n_samples, &redraws);
            b = draw(ProcessModel::half_product_cauchy(), c.t, c.seed_b, c.n_samples, &redraws);
            if (c.negative_control)
                for (auto& v : b) v *= 0.9;  // spoils the exact 1/2 weight
            break;
        }
        case IdentityTag::CC_RECIPROCAL: {
            heavy = true;
            a = draw(ProcessModel::cauchy_of_cauchy(), c.t, c.seed_a, c.n_samples, &redraws);
            const double tb = c.negative_control ? 1.5 * c.t : c.t;
            b = draw(ProcessModel::reciprocal_cc(), tb, c.seed_b, c.n_samples, &redraws);
            break;
        }
        case IdentityTag::J_FACTORIZATION: {
            // J^(n-1)_F uses n motions: WeightedJ with n-1 composition links.
            a = draw(ProcessModel::weighted_j(c.n - 1, c.hurst), c.t, c.seed_a, c.n_samples, &redraws);
            const double hb = c.negative_control ? c.hurst * c.n / (c.n + 1.0) : c.hurst;
            b = draw(ProcessModel::product_fbm(c.n, hb), c.t, c.seed_b, c.n_samples, &redraws);
            // Even-moment cross-check against the Mellin closed form.
            for (int k = 1; k <= 2; ++k) {
                double s1 = 0, s2 = 0;
                for (double v : a) {
                    const double p = std::pow(v, 2.0 * k);
                    s1 += p;
                    s2 += p * p;
                }
                const double mean = s1 / a.size();
                const double var = std::max(s2 / a.size() - mean * mean, 0.0);
                const double se = std::sqrt(var / a.size());
                const double closed = mellin_weighted_chain(2.0 * k + 1.0, c.n, Hurst(c.hurst), c.t);
                rep.moment_sigmas.push_back(se > 0 ? std::fabs(mean - closed) / se : 0.0);
            }
            break;
        }
        case IdentityTag::J_BM_CHAIN: {
            a = draw(ProcessModel::weighted_j(c.n, c.hurst), c.t, c.seed_a, c.n_samples, &redraws);
            const double hb = c.negative_control ? 0.8 * c.hurst : c.hurst;
            b.resize(c.n_samples);
            parallel_for_index(c.n_samples, [&](std::size_t i) {
                b[i] = sample_squared_chain(c.t, hb, c.n, c.seed_b, i);
            });
            break;
        }
        case IdentityTag::J1_PAIR: {
            a = draw(ProcessModel::weighted_j(1, c.hurst), c.t, c.seed_a, c.n_samples, &redraws);
            const double hb = c.negative_control ? 0.8 * c.hurst : c.hurst;
            b = draw(ProcessModel::product_fbm(2, hb), c.t, c.seed_b, c.n_samples, &redraws);
            break;
        }
    }

    rep.ks = ks_two_sample(a, b, heavy);
    rep.redraws = redraws.load();
    // Moment agreement within 4 standard errors where checked.
    bool moments_ok = true;
    for (double s : rep.moment_sigmas)
        if (s > 4.0) moments_ok = false;
    rep.pass = c.negative_control ? !rep.ks.pass : (rep.ks.pass && moments_ok);
    return rep;
}

double cdf_identity_check(double t) {
    if (!(t > 0)) throw DomainError("cdf_identity_check: t must be > 0");
    QuadratureConfig quad{1e-11, 1e-14, 4000};
    const ProcessModel cc = ProcessModel::cauchy_of_cauchy();
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        const double w = t * std::exp(std::log(0.05) + (std::log(20.0) - std::log(0.05)) * i / 49.0);
        const double lhs = cdf(cc, w, t, quad);
        // P(1/X < w) for symmetric continuous X = CC(1/t), w > 0.
        const double rhs = 1.5 - cdf(cc, 1.0 / w, 1.0 / t, quad);
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return worst;
}

std::vector<IdentityCase> identity_default_cases(std::size_t n_samples, std::uint64_t seed,
                                                 bool negative_controls) {
    std::vector<IdentityCase> cases;
    auto mk = [&](IdentityTag tag, double t, int n, double h) {
        IdentityCase c;
        c.tag = tag;
        c.t = t;
        c.n = n;
        c.hurst = h;
        c.n_samples = n_samples;
        c.negative_control = negative_controls;
        const auto idx = static_cast<std::uint64_t>(cases.size());
        c.seed_a = RngState{seed, 2 * idx + 1};
        c.seed_b = RngState{seed, 2 * idx + 2};
        cases.push_back(c);
    };
    mk(IdentityTag::CC_PRODUCT, 1.0, 2, 0.6);
    mk(IdentityTag::CC_RECIPROCAL, 2.0, 2, 0.6);
    mk(IdentityTag::J_FACTORIZATION, 1.5, 2, 0.6);
    mk(IdentityTag::J_FACTORIZATION, 1.5, 3, 0.6);
    mk(IdentityTag::J_BM_CHAIN, 2.0, 2, 0.7);
    mk(IdentityTag::J1_PAIR, 2.0, 2, 0.8);
    return cases;
}

}  // namespace iterlab
