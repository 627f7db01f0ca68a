#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "iterlab/iterlab.h"

TEST_CASE("capi: model parse, name, capabilities") {
    itl_model* m = nullptr;
    REQUIRE(itl_model_parse("j:n=1,H=0.25", &m) == ITL_OK);
    char buf[64];
    REQUIRE(itl_model_name(m, buf, sizeof buf) == ITL_OK);
    CHECK(std::string(buf) == "j:n=1,H=0.25");
    CHECK(itl_model_has_density(m) == 1);
    itl_model_free(m);

    itl_model* chain = nullptr;
    REQUIRE(itl_model_parse("j:n=3,H=0.5", &chain) == ITL_OK);
    CHECK(itl_model_has_density(chain) == 0);
    itl_model_free(chain);

    itl_model* bad = nullptr;
    CHECK(itl_model_parse("fbm:H=2", &bad) == ITL_EDOMAIN);
    CHECK(std::strlen(itl_last_error()) > 0);
}

TEST_CASE("capi: density, singular points, cdf") {
    itl_model* m = nullptr;
    REQUIRE(itl_model_parse("fbm:H=0.5", &m) == ITL_OK);
    double v = 0, err = 0;
    REQUIRE(itl_density(m, 0.0, 1.0, &v, &err) == ITL_OK);
    CHECK(std::fabs(v - 1.0 / std::sqrt(2 * M_PI)) < 1e-14);
    double c = 0;
    REQUIRE(itl_cdf(m, 0.0, 1.0, &c) == ITL_OK);
    CHECK(c == 0.5);
    itl_model_free(m);

    itl_model* cc = nullptr;
    REQUIRE(itl_model_parse("cc", &cc) == ITL_OK);
    CHECK(itl_density(cc, 0.0, 1.0, &v, &err) == ITL_ESINGULAR);
    CHECK(itl_density(cc, 0.5, -1.0, &v, &err) == ITL_EDOMAIN);
    itl_model_free(cc);

    double a = 0, b = 0;
    REQUIRE(itl_density_cc_integral(0.5, 1.0, &a) == ITL_OK);
    REQUIRE(itl_density_cc_expweights(0.5, 1.0, &b) == ITL_OK);
    CHECK(std::fabs(a - b) < 1e-6);
}

TEST_CASE("capi: sampling determinism and path generators") {
    itl_model* m = nullptr;
    REQUIRE(itl_model_parse("cc", &m) == ITL_OK);
    std::vector<double> s1(1000), s2(1000);
    REQUIRE(itl_sample(m, 1.0, 7, 1, s1.size(), s1.data()) == ITL_OK);
    REQUIRE(itl_sample(m, 1.0, 7, 1, s2.size(), s2.data()) == ITL_OK);
    CHECK(s1 == s2);
    REQUIRE(itl_sample(m, 1.0, 7, 2, s2.size(), s2.data()) == ITL_OK);
    CHECK(s1 != s2);
    itl_model_free(m);

    const double times[3] = {0.5, 1.0, 2.0};
    double path[3];
    REQUIRE(itl_fbm_path_cholesky(0.7, times, 3, 1, 1, path) == ITL_OK);
    double circ[64];
    REQUIRE(itl_fbm_path_circulant(0.3, 64, 1.0 / 64, 1, 1, circ) == ITL_OK);
    CHECK(itl_fbm_path_circulant(1.5, 64, 1.0 / 64, 1, 1, circ) == ITL_EDOMAIN);
}

TEST_CASE("capi: analytics surface") {
    const double chain[2] = {0.5, 0.5};
    double v = 0;
    REQUIRE(itl_moment_chain(chain, 2, 1, 1.0, &v) == ITL_OK);
    CHECK(std::fabs(v - std::sqrt(2.0 / M_PI)) < 1e-13);
    REQUIRE(itl_variance_iterated(0.5, 0.5, 1.0, &v) == ITL_OK);
    CHECK(std::fabs(v - std::sqrt(2.0 / M_PI)) < 1e-13);
    REQUIRE(itl_mellin_chain(1.0, 2, 0.6, 1.7, &v) == ITL_OK);
    CHECK(std::fabs(v - 1.0) < 1e-13);
    const double big_chain[2] = {0.9, 0.9};
    CHECK(itl_moment_chain(big_chain, 2, 500, 1.0, &v) == ITL_EOVERFLOW);

    itl_model* m = nullptr;
    REQUIRE(itl_model_parse("cauchy", &m) == ITL_OK);
    REQUIRE(itl_charfn(m, 1.0, 1.0, &v) == ITL_OK);
    CHECK(std::fabs(v - std::exp(-1.0)) < 1e-6);
    itl_model_free(m);
}

TEST_CASE("capi: pde suite report plumbing") {
    itl_run_options opt{};
    opt.tags = "a,j";
    itl_report* rep = nullptr;
    REQUIRE(itl_run_pde_suite(&opt, &rep) == ITL_OK);
    REQUIRE(itl_report_count(rep) == 2);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(itl_report_verdict(rep, i) == 0);
        const std::string line = itl_report_json_line(rep, i);
        CHECK(line.find("\"verdict\":\"pass\"") != std::string::npos);
        CHECK(line.find("\"schema_version\"") != std::string::npos);
    }
    CHECK(itl_report_exit_code(rep) == 0);
    CHECK(itl_report_csv_count(rep) > 0);
    itl_report_free(rep);
}

TEST_CASE("capi: identity suite report plumbing") {
    itl_run_options opt{};
    opt.tags = "CC_PRODUCT";
    opt.n_samples = 20000;
    opt.seed = 42;
    itl_report* rep = nullptr;
    REQUIRE(itl_run_identity_suite(&opt, &rep) == ITL_OK);
    REQUIRE(itl_report_count(rep) == 1);
    CHECK(itl_report_verdict(rep, 0) == 0);
    itl_report_free(rep);
}
