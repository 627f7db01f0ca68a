#include "pdecheck/registry.hpp"

#include <cmath>

#include "densities/density.hpp"
#include "numerics/caputo.hpp"

namespace iterlab {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005;

Grid1D scaled_grid(double scale, double excluded) {
    Grid1D g;
    for (double m : {-2.4, -1.6, -1.08, -0.7, -0.35, 0.35, 0.7, 1.08, 1.6, 2.4})
        g.points.push_back(m * scale);
    g.excluded_radius = excluded;
    g.validate();
    return g;
}

TermValue fd_term(const std::string& name, double coeff, const std::function<double(double)>& f, double at,
                  int order, const DiffConfig& diff) {
    auto r = differentiate_with_error(f, at, order, diff);
    return {name, coeff * r.value, std::fabs(coeff) * r.est_error};
}

TermValue quad_term(const std::string& name, double value, double est) { return {name, value, est}; }

}  // namespace

const std::vector<EquationSpec>& equation_registry() {
    static const std::vector<EquationSpec> registry = [] {
        std::vector<EquationSpec> v;

        // (a) heat equation of fractional Brownian motion:
        //     dp/dt = H t^(2H-1) d2p/dx2
        {
            EquationSpec e;
            e.tag = 'a';
            e.description = "fBm heat equation dp/dt = H t^(2H-1) p_xx";
            e.model = ProcessModel::fbm(0.7);
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-6;
            e.default_grid = [m = e.model](double t) { return scaled_grid(typical_scale(m, t), 0.0); };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                const double h = 0.7;
                std::vector<TermValue> terms;
                terms.push_back(fd_term("dp/dt", 1.0, [&](double tt) { return density(m, x, tt, ctx.quad); }, t, 1,
                                        ctx.diff));
                terms.push_back(fd_term("-H t^(2H-1) p_xx", -h * std::pow(t, 2 * h - 1),
                                        [&](double xx) { return density(m, xx, t, ctx.quad); }, x, 2, ctx.diff));
                return terms;
            };
            v.push_back(e);
        }

        // (b) variance-clock Gaussian: dq/dt = (dg/dt) (1/2) q_xx with
        //     g(t) = t + t^2/2.
        {
            EquationSpec e;
            e.tag = 'b';
            e.description = "variance-clock Gaussian dq/dt = g'(t)/2 q_xx, g = t + t^2/2";
            e.model = ProcessModel::fbm(0.5);  // placeholder model slot; density below is explicit
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-6;
            e.default_grid = [](double t) { return scaled_grid(std::sqrt(t + 0.5 * t * t), 0.0); };
            e.terms_at = [](double x, double t, const EvalContext& ctx) {
                auto g = [](double tt) { return tt + 0.5 * tt * tt; };
                auto q = [&](double xx, double tt) { return kernels::gauss(xx, g(tt)); };
                std::vector<TermValue> terms;
                terms.push_back(fd_term("dq/dt", 1.0, [&](double tt) { return q(x, tt); }, t, 1, ctx.diff));
                terms.push_back(fd_term("-g'/2 q_xx", -0.5 * (1.0 + t), [&](double xx) { return q(xx, t); }, x, 2,
                                        ctx.diff));
                return terms;
            };
            v.push_back(e);
        }

        // (c) scaled iterated process t^K B(|B_H|):
        //     t q_t = -K (x q)_x + (H/4) t^(4K+2H) q_xxxx + delta term (x != 0)
        {
            EquationSpec e;
            e.tag = 'c';
            e.description = "t^K B(|B_H|) fourth-order equation (strong form, x != 0)";
            e.model = ProcessModel::scaled_iterated(0.3, 0.6);
            e.excluded_zero = true;
            e.has_delta = true;
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-6;
            e.default_grid = [m = e.model](double t) {
                const double s = typical_scale(m, t);
                return scaled_grid(s, 0.05 * s);
            };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                const double k = 0.3, h = 0.6;
                std::vector<TermValue> terms;
                terms.push_back(quad_term("t dq/dt", t * density_dt(m, x, t, 1, ctx.quad), 0.0));
                const double q = density(m, x, t, ctx.quad);
                const double qx = density_dx(m, x, t, 1, ctx.quad);
                terms.push_back(quad_term("K (xq)_x", k * (q + x * qx), 0.0));
                terms.push_back(quad_term("-(H/4) t^(4K+2H) q_xxxx",
                                          -(h / 4.0) * std::pow(t, 4 * k + 2 * h) * density_dx(m, x, t, 4, ctx.quad),
                                          0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (d) K = 0 case: t q_t = (H/4) t^(2H) q_xxxx + delta term (x != 0)
        {
            EquationSpec e;
            e.tag = 'd';
            e.description = "B(|B_H|) fourth-order equation (K = 0 strong form, x != 0)";
            e.model = ProcessModel::scaled_iterated(0.0, 0.6);
            e.excluded_zero = true;
            e.has_delta = true;
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-6;
            e.default_grid = [m = e.model](double t) {
                const double s = typical_scale(m, t);
                return scaled_grid(s, 0.05 * s);
            };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                const double h = 0.6;
                std::vector<TermValue> terms;
                terms.push_back(quad_term("t dq/dt", t * density_dt(m, x, t, 1, ctx.quad), 0.0));
                terms.push_back(quad_term("-(H/4) t^(2H) q_xxxx",
                                          -(h / 4.0) * std::pow(t, 2 * h) * density_dx(m, x, t, 4, ctx.quad), 0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (e) iterated Brownian motion fourth-order equation:
        //     q_t = (1/8) q_xxxx + delta term (x != 0)
        {
            EquationSpec e;
            e.tag = 'e';
            e.description = "IBM fourth-order equation q_t = (1/8) q_xxxx (strong form, x != 0)";
            e.model = ProcessModel::iterated_fbm(0.5, 0.5);
            e.excluded_zero = true;
            e.has_delta = true;
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-6;
            e.default_grid = [m = e.model](double t) {
                const double s = typical_scale(m, t);
                return scaled_grid(s, 0.05 * s);
            };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                std::vector<TermValue> terms;
                terms.push_back(quad_term("dq/dt", density_dt(m, x, t, 1, ctx.quad), 0.0));
                terms.push_back(quad_term("-(1/8) q_xxxx", -0.125 * density_dx(m, x, t, 4, ctx.quad), 0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (f) iterated fBm first-order equation: t p_t = -H1 H2 (x p)_x
        {
            EquationSpec e;
            e.tag = 'f';
            e.description = "iterated fBm first-order equation t p_t = -H1H2 (xp)_x";
            e.model = ProcessModel::iterated_fbm(0.6, 0.4);
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-5;
            e.default_grid = [m = e.model](double t) { return scaled_grid(typical_scale(m, t), 0.0); };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                const double th = 0.6 * 0.4;
                std::vector<TermValue> terms;
                terms.push_back(quad_term("t dp/dt", t * density_dt(m, x, t, 1, ctx.quad), 0.0));
                const double p = density(m, x, t, ctx.quad);
                const double px = density_dx(m, x, t, 1, ctx.quad);
                terms.push_back(quad_term("H1H2 (xp)_x", th * (p + x * px), 0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (g) iterated fBm wave-type equation:
        //     (1+H1H2) t p_t + t^2 p_tt = H1^2H2^2 (2x p_x + x^2 p_xx)
        {
            EquationSpec e;
            e.tag = 'g';
            e.description = "iterated fBm second-order equation (telegraph-type)";
            e.model = ProcessModel::iterated_fbm(0.6, 0.4);
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-5;
            e.default_grid = [m = e.model](double t) { return scaled_grid(typical_scale(m, t), 0.0); };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                const double th = 0.6 * 0.4;
                std::vector<TermValue> terms;
                terms.push_back(quad_term("(1+H1H2) t p_t", (1 + th) * t * density_dt(m, x, t, 1, ctx.quad), 0.0));
                terms.push_back(quad_term("t^2 p_tt", t * t * density_dt(m, x, t, 2, ctx.quad), 0.0));
                const double px = density_dx(m, x, t, 1, ctx.quad);
                const double pxx = density_dx(m, x, t, 2, ctx.quad);
                terms.push_back(quad_term("-H1^2H2^2 (2x p_x + x^2 p_xx)", -th * th * (2 * x * px + x * x * pxx),
                                          0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (h) J^1_F third-order equation: p_t = -H t^(2H-1)(2 p_xx + x p_xxx), x != 0
        {
            EquationSpec e;
            e.tag = 'h';
            e.description = "J1_F third-order equation p_t = -H t^(2H-1)(2 p_xx + x p_xxx)";
            e.model = ProcessModel::weighted_j(1, 0.7);
            e.excluded_zero = true;
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-5;
            e.default_grid = [m = e.model](double t) {
                const double s = typical_scale(m, t);
                return scaled_grid(s, 0.05 * s);
            };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                const double h = 0.7;
                std::vector<TermValue> terms;
                terms.push_back(quad_term("dp/dt", density_dt(m, x, t, 1, ctx.quad), 0.0));
                const double pxx = density_dx(m, x, t, 2, ctx.quad);
                const double pxxx = density_dx(m, x, t, 3, ctx.quad);
                terms.push_back(quad_term("H t^(2H-1)(2 p_xx + x p_xxx)",
                                          h * std::pow(t, 2 * h - 1) * (2 * pxx + x * pxxx), 0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (i) J^2_F fourth-order equation:
        //     p_t = H t^(2H-1)(4 p_xx + 5x p_xxx + x^2 p_xxxx), x != 0
        {
            EquationSpec e;
            e.tag = 'i';
            e.description = "J2_F fourth-order equation";
            e.model = ProcessModel::weighted_j(2, 0.7);
            e.excluded_zero = true;
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-5;
            e.default_grid = [m = e.model](double t) {
                const double s = typical_scale(m, t);
                return scaled_grid(s, 0.05 * s);
            };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                const double h = 0.7;
                std::vector<TermValue> terms;
                terms.push_back(quad_term("dp/dt", density_dt(m, x, t, 1, ctx.quad), 0.0));
                const double p2 = density_dx(m, x, t, 2, ctx.quad);
                const double p3 = density_dx(m, x, t, 3, ctx.quad);
                const double p4 = density_dx(m, x, t, 4, ctx.quad);
                terms.push_back(quad_term("-H t^(2H-1)(4 p_xx + 5x p_xxx + x^2 p_xxxx)",
                                          -h * std::pow(t, 2 * h - 1) * (4 * p2 + 5 * x * p3 + x * x * p4), 0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (j) Cauchy Laplace equation: p_tt + p_xx = 0
        {
            EquationSpec e;
            e.tag = 'j';
            e.description = "Cauchy Laplace equation p_tt + p_xx = 0";
            e.model = ProcessModel::cauchy();
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-6;
            e.default_grid = [](double t) { return scaled_grid(t, 0.0); };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                std::vector<TermValue> terms;
                terms.push_back(quad_term("p_tt", density_dt(m, x, t, 2, ctx.quad), 0.0));
                terms.push_back(quad_term("p_xx", density_dx(m, x, t, 2, ctx.quad), 0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (k) Cauchy space-fractional equation: p_t = -dp/d|x| (spectral check)
        {
            EquationSpec e;
            e.tag = 'k';
            e.description = "Cauchy space-fractional equation p_t = -dp/d|x| (spectral)";
            e.model = ProcessModel::cauchy();
            e.default_times = {1.0};
            e.tolerance = 1e-6;
            e.spectral = true;
            e.default_grid = [](double) { return Grid1D{}; };
            v.push_back(e);
        }

        // (l) iterated Cauchy wave equation: q_tt = q_xx - 2/(pi^2 t x^2)
        {
            EquationSpec e;
            e.tag = 'l';
            e.description = "iterated Cauchy wave equation q_tt = q_xx - 2/(pi^2 t x^2)";
            e.model = ProcessModel::cauchy_of_cauchy();
            e.excluded_zero = true;
            e.excluded_diag = true;
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-6;
            e.default_grid = [m = e.model](double t) {
                Grid1D g = scaled_grid(t, 0.05 * t);
                return g;
            };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                // Wider FD steps: the closed form evaluates to ~1e-15, so the
                // optimum for 2nd-order stencils with Richardson sits near
                // eps_eval^(1/7).
                DiffConfig d = ctx.diff;
                d.base_step = 0.06;
                std::vector<TermValue> terms;
                terms.push_back(fd_term("q_tt", 1.0, [&](double tt) { return density(m, x, tt, ctx.quad); }, t, 2, d));
                terms.push_back(fd_term("-q_xx", -1.0, [&](double xx) { return density(m, xx, t, ctx.quad); }, x, 2, d));
                terms.push_back(quad_term("forcing 2/(pi^2 t x^2)", 2.0 / (M_PI * M_PI * t * x * x), 0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (m) C(|B_H|) forced heat equation:
        //     q_t = 2H t^(H-1)/(pi x^2 sqrt(2pi)) - H t^(2H-1) q_xx
        {
            EquationSpec e;
            e.tag = 'm';
            e.description = "C(|B_H|) forced heat equation";
            e.model = ProcessModel::cauchy_of_fbm(0.65);
            e.excluded_zero = true;
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-5;
            e.default_grid = [m = e.model](double t) {
                const double s = typical_scale(m, t);
                return scaled_grid(s, 0.05 * s);
            };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                const double h = 0.65;
                std::vector<TermValue> terms;
                terms.push_back(quad_term("dq/dt", density_dt(m, x, t, 1, ctx.quad), 0.0));
                terms.push_back(quad_term("-forcing 2H t^(H-1)/(pi x^2 sqrt(2pi))",
                                          -2.0 * h * std::pow(t, h - 1) / (M_PI * x * x * kSqrt2Pi), 0.0));
                terms.push_back(quad_term("+H t^(2H-1) q_xx",
                                          h * std::pow(t, 2 * h - 1) * density_dx(m, x, t, 2, ctx.quad), 0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (n) B(|C|) fourth-order equation (1-D):
        //     q_tt = -(1/4) q_xxxx - (1/(pi t)) delta''(x), strong form on x != 0
        {
            EquationSpec e;
            e.tag = 'n';
            e.description = "B(|C|) fourth-order equation q_tt = -(1/4) q_xxxx (strong form, x != 0)";
            e.model = ProcessModel::bm_of_cauchy();
            e.excluded_zero = true;
            e.has_delta = true;
            e.default_times = {0.5, 1.0, 2.0};
            e.tolerance = 1e-6;
            e.default_grid = [m = e.model](double t) {
                const double s = typical_scale(m, t);
                return scaled_grid(s, 0.05 * s);
            };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                std::vector<TermValue> terms;
                terms.push_back(quad_term("q_tt", density_dt(m, x, t, 2, ctx.quad), 0.0));
                terms.push_back(quad_term("(1/4) q_xxxx", 0.25 * density_dx(m, x, t, 4, ctx.quad), 0.0));
                return terms;
            };
            v.push_back(e);
        }

        // (o) IBM time-fractional equation: d^(1/2)q/dt^(1/2) = 2^(-3/2) q_xx
        {
            EquationSpec e;
            e.tag = 'o';
            e.description = "IBM time-fractional equation (Caputo 1/2)";
            e.model = ProcessModel::iterated_fbm(0.5, 0.5);
            e.excluded_zero = true;  // density is not C^2 at x = 0
            e.default_times = {0.5, 1.0};
            e.tolerance = 5e-4;
            e.fractional = true;
            e.default_grid = [m = e.model](double t) {
                const double s = typical_scale(m, t);
                Grid1D g;
                for (double mlt : {-1.7, -1.0, -0.5, 0.5, 1.0, 1.7}) g.points.push_back(mlt * s);
                g.excluded_radius = 0.05 * s;
                g.validate();
                return g;
            };
            e.terms_at = [m = e.model](double x, double t, const EvalContext& ctx) {
                std::vector<TermValue> terms;
                CaputoInfo info;
                auto q = [&](double xx, double ss) { return density(m, xx, ss, ctx.quad); };
                const double lhs = caputo_half_time_derivative(q, x, t, ctx.quad, ctx.diff, &info);
                terms.push_back(quad_term("caputo^(1/2) q", lhs, info.discarded_bound));
                terms.push_back(quad_term("-2^(-3/2) q_xx",
                                          -std::pow(2.0, -1.5) * density_dx(m, x, t, 2, ctx.quad), 0.0));
                return terms;
            };
            v.push_back(e);
        }

        return v;
    }();
    return registry;
}

const EquationSpec& equation_by_tag(char tag) {
    for (const auto& e : equation_registry())
        if (e.tag == tag) return e;
    throw DomainError(std::string("equation_by_tag: unknown tag '") + tag + "'");
}

}  // namespace iterlab
