#include "iterlab/iterlab.h"

#include <cstring>
#include <string>
#include <vector>

#include "analytics/analytics.hpp"
#include "densities/cdf.hpp"
#include "densities/density.hpp"
#include "sampling/fbm_path.hpp"
#include "sampling/sample.hpp"
#include "suite/suite.hpp"

using namespace iterlab;

struct itl_model {
    ProcessModel m;
};

struct itl_report {
    std::vector<std::string> lines;
    std::vector<int> verdicts;
    std::vector<std::string> csv;
    int exit_code = 0;
};

namespace {

thread_local std::string g_last_error;

itl_status fail(itl_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <class Fn>
itl_status guarded(Fn&& fn) {
    try {
        fn();
        return ITL_OK;
    } catch (const SingularPoint& e) {
        return fail(ITL_ESINGULAR, e.what());
    } catch (const NonConvergence& e) {
        return fail(ITL_ENOCONV, e.what());
    } catch (const GridTooCoarse& e) {
        return fail(ITL_EGRID, e.what());
    } catch (const EmbeddingFailure& e) {
        return fail(ITL_EEMBED, e.what());
    } catch (const NotPositiveDefinite& e) {
        return fail(ITL_EEMBED, e.what());
    } catch (const Overflow& e) {
        return fail(ITL_EOVERFLOW, e.what());
    } catch (const SeriesDivergence& e) {
        return fail(ITL_ESERIES, e.what());
    } catch (const UnsupportedModel& e) {
        return fail(ITL_EUNSUPPORTED, e.what());
    } catch (const DomainError& e) {
        return fail(ITL_EDOMAIN, e.what());
    } catch (const Error& e) {
        return fail(ITL_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(ITL_EINTERNAL, e.what());
    }
}

itl_report* make_report(const std::vector<SuiteEntry>& entries) {
    auto* r = new itl_report;
    for (const auto& e : entries) {
        r->lines.push_back(e.line.dump());
        r->verdicts.push_back(static_cast<int>(e.verdict));
        for (const auto& row : e.csv_rows) {
            std::string joined;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) joined += ",";
                joined += row[i];
            }
            r->csv.push_back(std::move(joined));
        }
    }
    r->exit_code = suite_exit_code(entries);
    return r;
}

}  // namespace

extern "C" {

const char* itl_version(void) { return kToolVersion; }

const char* itl_last_error(void) { return g_last_error.c_str(); }

itl_status itl_model_parse(const char* spec, itl_model** out) {
    if (!spec || !out) return fail(ITL_EINVAL, "itl_model_parse: null argument");
    return guarded([&] { *out = new itl_model{ProcessModel::parse(spec)}; });
}

void itl_model_free(itl_model* m) { delete m; }

itl_status itl_model_name(const itl_model* m, char* buf, size_t cap) {
    if (!m || !buf || cap == 0) return fail(ITL_EINVAL, "itl_model_name: null argument");
    return guarded([&] {
        const std::string name = m->m.name();
        std::strncpy(buf, name.c_str(), cap - 1);
        buf[cap - 1] = '\0';
    });
}

int itl_model_has_density(const itl_model* m) { return m && has_density(m->m) ? 1 : 0; }

itl_status itl_density(const itl_model* m, double x, double t, double* value, double* err_estimate) {
    if (!m || !value) return fail(ITL_EINVAL, "itl_density: null argument");
    return guarded([&] {
        auto r = density_with_error(m->m, x, t);
        *value = r.value;
        if (err_estimate) *err_estimate = r.est_error;
    });
}

itl_status itl_cdf(const itl_model* m, double x, double t, double* value) {
    if (!m || !value) return fail(ITL_EINVAL, "itl_cdf: null argument");
    return guarded([&] { *value = cdf(m->m, x, t); });
}

itl_status itl_density_cc_integral(double x, double t, double* value) {
    if (!value) return fail(ITL_EINVAL, "itl_density_cc_integral: null argument");
    return guarded([&] { *value = density_cc_integral(x, t); });
}

itl_status itl_density_cc_expweights(double x, double t, double* value) {
    if (!value) return fail(ITL_EINVAL, "itl_density_cc_expweights: null argument");
    return guarded([&] { *value = density_cc_expweights(x, t); });
}

itl_status itl_sample(const itl_model* m, double t, uint64_t seed, uint64_t stream, size_t n, double* out) {
    if (!m || !out) return fail(ITL_EINVAL, "itl_sample: null argument");
    return guarded([&] {
        auto v = sample_many(m->m, t, RngState{seed, stream}, n);
        std::memcpy(out, v.data(), n * sizeof(double));
    });
}

itl_status itl_fbm_path_cholesky(double hurst, const double* times, size_t n, uint64_t seed, uint64_t stream,
                                 double* out_values) {
    if (!times || !out_values) return fail(ITL_EINVAL, "itl_fbm_path_cholesky: null argument");
    return guarded([&] {
        std::vector<double> tv(times, times + n);
        auto p = fbm_path_cholesky(Hurst(hurst), tv, RngState{seed, stream});
        std::memcpy(out_values, p.values.data(), n * sizeof(double));
    });
}

itl_status itl_fbm_path_circulant(double hurst, size_t n, double dt, uint64_t seed, uint64_t stream,
                                  double* out_values) {
    if (!out_values) return fail(ITL_EINVAL, "itl_fbm_path_circulant: null argument");
    return guarded([&] {
        auto p = fbm_path_circulant(Hurst(hurst), n, dt, RngState{seed, stream});
        std::memcpy(out_values, p.values.data(), n * sizeof(double));
    });
}

itl_status itl_moment_chain(const double* hursts, size_t n_hurst, int k, double t, double* out) {
    if (!hursts || !out) return fail(ITL_EINVAL, "itl_moment_chain: null argument");
    return guarded([&] {
        MomentSpec spec{k, std::vector<double>(hursts, hursts + n_hurst)};
        *out = moment_iterated(spec, t);
    });
}

itl_status itl_variance_iterated(double h1, double h2, double t, double* out) {
    if (!out) return fail(ITL_EINVAL, "itl_variance_iterated: null argument");
    return guarded([&] { *out = variance_iterated(Hurst(h1), Hurst(h2), t); });
}

itl_status itl_mellin_chain(double alpha, int n, double hurst, double t, double* out) {
    if (!out) return fail(ITL_EINVAL, "itl_mellin_chain: null argument");
    return guarded([&] { *out = mellin_weighted_chain(alpha, n, Hurst(hurst), t); });
}

itl_status itl_charfn(const itl_model* m, double beta, double t, double* out) {
    if (!m || !out) return fail(ITL_EINVAL, "itl_charfn: null argument");
    return guarded([&] { *out = charfn_numeric(m->m, beta, t); });
}

itl_status itl_run_pde_suite(const itl_run_options* opt, itl_report** out) {
    if (!out) return fail(ITL_EINVAL, "itl_run_pde_suite: null argument");
    return guarded([&] {
        PdeSuiteOptions po;
        if (opt && opt->tags) po.tags = opt->tags;
        if (opt && opt->tolerance > 0) po.tolerance = opt->tolerance;
        *out = make_report(run_pde_suite(po));
    });
}

itl_status itl_run_identity_suite(const itl_run_options* opt, itl_report** out) {
    if (!out) return fail(ITL_EINVAL, "itl_run_identity_suite: null argument");
    return guarded([&] {
        IdentitySuiteOptions io;
        if (opt && opt->tags) io.tags = opt->tags;
        if (opt && opt->n_samples) io.n_samples = opt->n_samples;
        if (opt && opt->seed) io.seed = opt->seed;
        if (opt) io.negative_controls = opt->negative_controls != 0;
        *out = make_report(run_identity_suite(io));
    });
}

size_t itl_report_count(const itl_report* r) { return r ? r->lines.size() : 0; }

const char* itl_report_json_line(const itl_report* r, size_t i) {
    return r && i < r->lines.size() ? r->lines[i].c_str() : nullptr;
}

int itl_report_verdict(const itl_report* r, size_t i) {
    return r && i < r->verdicts.size() ? r->verdicts[i] : -1;
}

int itl_report_exit_code(const itl_report* r) { return r ? r->exit_code : 1; }

size_t itl_report_csv_count(const itl_report* r) { return r ? r->csv.size() : 0; }

const char* itl_report_csv_row(const itl_report* r, size_t i) {
    return r && i < r->csv.size() ? r->csv[i].c_str() : nullptr;
}

void itl_report_free(itl_report* r) { delete r; }

}  // extern "C"
