// Batch command surface over the iterlab C API: verification suites,
// density/moment evaluation, sample generation, report persistence.
// Every run writes a manifest that `rerun` replays bit-exactly.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iterlab/iterlab.h"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

constexpr int kExitUsage = 64;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string iso_now() {
    std::time_t tt = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const fs::path& dir, const std::string& command, const Json& params,
                    const std::vector<std::string>& verdicts) {
    Json m{{"schema_version", 1},
           {"tool_version", itl_version()},
           {"command", command},
           {"params", params},
           {"timestamp", iso_now()},
           {"verdicts", verdicts}};
    std::ofstream os(dir / "manifest.json");
    os << m.dump(2) << "\n";
}

[[noreturn]] void die_api(const std::string& where) {
    std::cerr << "error: " << where << ": " << itl_last_error() << "\n";
    std::exit(1);
}

struct ModelHandle {
    itl_model* m = nullptr;
    explicit ModelHandle(const std::string& spec) {
        if (itl_model_parse(spec.c_str(), &m) != ITL_OK) {
            std::cerr << "error: bad model spec '" << spec << "': " << itl_last_error() << "\n";
            std::exit(kExitUsage);
        }
    }
    ~ModelHandle() { itl_model_free(m); }
};

struct ReportHandle {
    itl_report* r = nullptr;
    ~ReportHandle() { itl_report_free(r); }
};

void dump_report(const ReportHandle& rep, const fs::path& dir, const std::string& jsonl_name,
                 const std::string& csv_name, const std::string& csv_header,
                 std::vector<std::string>& verdicts) {
    std::ofstream os(dir / jsonl_name);
    for (size_t i = 0; i < itl_report_count(rep.r); ++i) {
        const std::string line = itl_report_json_line(rep.r, i);
        os << line << "\n";
        std::cout << line << "\n";
        const int v = itl_report_verdict(rep.r, i);
        verdicts.push_back(v == 0 ? "pass" : v == 2 ? "inconclusive" : "fail");
    }
    if (!csv_name.empty()) {
        std::ofstream cs(dir / csv_name);
        cs << "# schema=" << csv_header.substr(0, csv_header.find(',')) << ".residuals version=1\n";
        cs << csv_header << "\n";
        for (size_t i = 0; i < itl_report_csv_count(rep.r); ++i) cs << itl_report_csv_row(rep.r, i) << "\n";
    }
}

// ---- command runners (shared by flag parsing and manifest replay) ---------

int run_verify_pde(const Json& params, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const std::string tags = params.value("tags", "all");
    const double tol = params.value("tol", 0.0);
    itl_run_options opt{};
    opt.tags = tags.c_str();
    opt.tolerance = tol;
    ReportHandle rep;
    if (itl_run_pde_suite(&opt, &rep.r) != ITL_OK) die_api("verify-pde");
    std::vector<std::string> verdicts;
    dump_report(rep, out_dir, "pde_report.jsonl", "pde_residuals.csv", "tag,x,t,abs_residual,rel_residual",
                verdicts);
    write_manifest(out_dir, "verify-pde", params, verdicts);
    return itl_report_exit_code(rep.r);
}

int run_verify_identities(const Json& params, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const std::string tags = params.value("tags", "all");
    const uint64_t samples = params.value("samples", uint64_t{100000});
    const uint64_t seed = params.value("seed", uint64_t{42});
    const bool negative = params.value("negative_controls", false);
    itl_run_options opt{};
    opt.tags = tags.c_str();
    opt.n_samples = samples;
    opt.seed = seed;
    opt.negative_controls = negative ? 1 : 0;
    ReportHandle rep;
    if (itl_run_identity_suite(&opt, &rep.r) != ITL_OK) die_api("verify-identities");
    std::vector<std::string> verdicts;
    dump_report(rep, out_dir, "identity_report.jsonl", "", "", verdicts);
    write_manifest(out_dir, "verify-identities", params, verdicts);
    return itl_report_exit_code(rep.r);
}

int run_density(const Json& params, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    ModelHandle model(params.at("model").get<std::string>());
    const auto ts = params.at("t").get<std::vector<double>>();
    const double x0 = params.at("x0").get<double>();
    const double x1 = params.at("x1").get<double>();
    const double dx = params.at("dx").get<double>();

    std::ofstream cs(out_dir / "density.csv");
    cs << "# schema=iterlab.density version=1\n";
    cs << "x,t,density,err_estimate,singular\n";
    for (double t : ts) {
        const long steps = dx > 0 ? std::lround((x1 - x0) / dx) : 0;
        for (long i = 0; i <= steps; ++i) {
            const double x = x0 + dx * static_cast<double>(i);
            double value = 0, err = 0;
            const itl_status st = itl_density(model.m, x, t, &value, &err);
            if (st == ITL_OK) {
                cs << num(x) << "," << num(t) << "," << num(value) << "," << num(err) << ",0\n";
            } else if (st == ITL_ESINGULAR) {
                cs << num(x) << "," << num(t) << ",,,1\n";
            } else {
                die_api("density");
            }
        }
    }
    write_manifest(out_dir, "density", params, {});
    std::cout << (out_dir / "density.csv").string() << "\n";
    return 0;
}

int run_sample(const Json& params, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    ModelHandle model(params.at("model").get<std::string>());
    const double t = params.at("t").get<double>();
    const uint64_t n = params.at("n").get<uint64_t>();
    const uint64_t seed = params.value("seed", uint64_t{42});
    const uint64_t stream = params.value("stream", uint64_t{1});
    std::vector<double> values(n);
    if (itl_sample(model.m, t, seed, stream, n, values.data()) != ITL_OK) die_api("sample");
    std::ofstream cs(out_dir / "samples.csv");
    cs << "# schema=iterlab.samples version=1\n";
    cs << "index,value\n";
    for (uint64_t i = 0; i < n; ++i) cs << i << "," << num(values[i]) << "\n";
    write_manifest(out_dir, "sample", params, {});
    std::cout << (out_dir / "samples.csv").string() << "\n";
    return 0;
}

int run_moments(const Json& params, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const auto chain = params.at("chain").get<std::vector<double>>();
    const auto ks = params.at("k").get<std::vector<int>>();
    const double t = params.at("t").get<double>();
    const uint64_t samples = params.value("samples", uint64_t{1000000});
    const uint64_t seed = params.value("seed", uint64_t{42});

    std::string spec = "chain:";
    for (size_t i = 0; i < chain.size(); ++i)
        spec += (i ? "," : "") + ("H" + std::to_string(i + 1) + "=") + num(chain[i]);
    ModelHandle model(spec);
    std::vector<double> draws(samples);
    if (itl_sample(model.m, t, seed, 1, samples, draws.data()) != ITL_OK) die_api("moments: sampling");

    std::ofstream cs(out_dir / "moments.csv");
    cs << "# schema=iterlab.moments version=1\n";
    cs << "k,closed_form,mc_estimate,std_error,verdict\n";
    std::cout << "k  closed_form           mc_estimate           std_error             verdict\n";
    std::vector<std::string> verdicts;
    int exit_code = 0;
    for (int k : ks) {
        double closed = 0;
        if (itl_moment_chain(chain.data(), chain.size(), k, t, &closed) != ITL_OK) die_api("moments");
        double s1 = 0, s2 = 0;
        for (double v : draws) {
            const double p = std::pow(v, 2.0 * k);
            s1 += p;
            s2 += p * p;
        }
        const double mean = s1 / static_cast<double>(samples);
        const double var = std::max(s2 / static_cast<double>(samples) - mean * mean, 0.0);
        const double se = std::sqrt(var / static_cast<double>(samples));
        const bool ok = std::fabs(mean - closed) <= 4.0 * se;
        if (!ok) exit_code = 1;
        verdicts.push_back(ok ? "pass" : "fail");
        cs << k << "," << num(closed) << "," << num(mean) << "," << num(se) << "," << (ok ? "pass" : "fail")
           << "\n";
        std::printf("%-2d %-21.15g %-21.15g %-21.15g %s\n", k, closed, mean, se, ok ? "pass" : "fail");
    }
    write_manifest(out_dir, "moments", params, verdicts);
    return exit_code;
}

int dispatch(const std::string& command, const Json& params, const fs::path& out_dir) {
    if (command == "verify-pde") return run_verify_pde(params, out_dir);
    if (command == "verify-identities") return run_verify_identities(params, out_dir);
    if (command == "density") return run_density(params, out_dir);
    if (command == "sample") return run_sample(params, out_dir);
    if (command == "moments") return run_moments(params, out_dir);
    std::cerr << "error: unknown command in manifest: " << command << "\n";
    return kExitUsage;
}

std::vector<double> parse_comma_doubles(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stod(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"iterlab: iterated fractional Brownian motion & Cauchy process laboratory"};
    app.require_subcommand(1);
    std::string out_dir = "iterlab-out";
    app.add_option("--out", out_dir, "output directory for reports and manifests")->capture_default_str();

    // verify-pde
    auto* pde = app.add_subcommand("verify-pde", "run the governing-equation residual suite");
    std::string pde_tags = "all";
    double pde_tol = 0.0;
    bool pde_all = false;
    pde->add_option("--tags", pde_tags, "comma list of registry tags a..o");
    pde->add_flag("--all", pde_all, "run every registry entry");
    pde->add_option("--tol", pde_tol, "override the budgeted tolerance");

    // verify-identities
    auto* ident = app.add_subcommand("verify-identities", "run the distributional-identity suite");
    std::string id_tags = "all";
    uint64_t id_samples = 100000;
    uint64_t id_seed = 42;
    bool id_all = false, id_negative = false;
    ident->add_option("--tags", id_tags, "comma list of identity tags");
    ident->add_flag("--all", id_all, "run every identity");
    ident->add_option("--samples", id_samples, "draws per side (>= 10^4)");
    ident->add_option("--seed", id_seed, "base seed");
    ident->add_flag("--negative-controls", id_negative, "run the perturbed power checks (each must fail)");

    // density
    auto* dens = app.add_subcommand("density", "evaluate a density on an x-grid");
    std::string d_model, d_x = "-3:3:0.01", d_t = "1";
    dens->add_option("--model", d_model, "model spec, e.g. cc or j:n=1,H=0.25")->required();
    dens->add_option("--x", d_x, "grid as lo:hi:step, or a single value");
    dens->add_option("--t", d_t, "comma list of times");

    // sample
    auto* samp = app.add_subcommand("sample", "draw reproducible marginal samples");
    std::string s_model;
    double s_t = 1.0;
    uint64_t s_n = 1000, s_seed = 42, s_stream = 1;
    samp->add_option("--model", s_model, "model spec")->required();
    samp->add_option("--t", s_t, "time");
    samp->add_option("--n", s_n, "number of draws");
    samp->add_option("--seed", s_seed, "seed");
    samp->add_option("--stream", s_stream, "stream id");

    // moments
    auto* mom = app.add_subcommand("moments", "closed-form vs Monte Carlo moment table");
    std::string m_chain = "0.5,0.5", m_k = "1,2,3";
    double m_t = 1.0;
    uint64_t m_samples = 1000000, m_seed = 42;
    mom->add_option("--chain", m_chain, "Hurst chain H1,H2,...");
    mom->add_option("--k", m_k, "comma list of half-orders (moment order 2k)");
    mom->add_option("--t", m_t, "time");
    mom->add_option("--samples", m_samples, "Monte Carlo draws");
    mom->add_option("--seed", m_seed, "seed");

    // rerun
    auto* rerun = app.add_subcommand("rerun", "replay a manifest bit-exactly");
    std::string manifest_path;
    rerun->add_option("--manifest", manifest_path, "path to manifest.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (pde->parsed()) {
            Json params{{"tags", pde_all ? "all" : pde_tags}};
            if (pde_tol > 0) params["tol"] = pde_tol;
            return run_verify_pde(params, out_dir);
        }
        if (ident->parsed()) {
            if (id_samples < 10000) {
                std::cerr << "error: --samples below the 10^4 minimum\n";
                return kExitUsage;
            }
            Json params{{"tags", id_all ? "all" : id_tags},
                        {"samples", id_samples},
                        {"seed", id_seed},
                        {"negative_controls", id_negative}};
            return run_verify_identities(params, out_dir);
        }
        if (dens->parsed()) {
            double x0, x1, dx;
            const auto c1 = d_x.find(':');
            if (c1 == std::string::npos) {
                x0 = x1 = std::stod(d_x);
                dx = 1.0;
            } else {
                const auto c2 = d_x.find(':', c1 + 1);
                if (c2 == std::string::npos) {
                    std::cerr << "error: --x expects lo:hi:step\n";
                    return kExitUsage;
                }
                x0 = std::stod(d_x.substr(0, c1));
                x1 = std::stod(d_x.substr(c1 + 1, c2 - c1 - 1));
                dx = std::stod(d_x.substr(c2 + 1));
            }
            Json params{{"model", d_model}, {"t", parse_comma_doubles(d_t)}, {"x0", x0}, {"x1", x1}, {"dx", dx}};
            return run_density(params, out_dir);
        }
        if (samp->parsed()) {
            Json params{{"model", s_model}, {"t", s_t}, {"n", s_n}, {"seed", s_seed}, {"stream", s_stream}};
            return run_sample(params, out_dir);
        }
        if (mom->parsed()) {
            std::vector<int> kk;
            for (double v : parse_comma_doubles(m_k)) kk.push_back(static_cast<int>(v));
            Json params{{"chain", parse_comma_doubles(m_chain)},
                        {"k", kk},
                        {"t", m_t},
                        {"samples", m_samples},
                        {"seed", m_seed}};
            return run_moments(params, out_dir);
        }
        if (rerun->parsed()) {
            std::ifstream is(manifest_path);
            if (!is) {
                std::cerr << "error: cannot open manifest " << manifest_path << "\n";
                return kExitUsage;
            }
            Json m;
            is >> m;
            return dispatch(m.at("command").get<std::string>(), m.at("params"), out_dir);
        }
    } catch (const std::invalid_argument&) {
        std::cerr << "error: malformed numeric argument\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
