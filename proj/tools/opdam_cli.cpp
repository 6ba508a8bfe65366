#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opdam/errors.hpp"
#include "opdam/io.hpp"
#include "opdam/specfun.hpp"
#include "opdam/suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
    double alpha = 0.0;
    double beta = 0.0;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::string corpus_file;
    std::string constants_file;
    std::string out_dir = ".";
    std::string format = "csv,json";
    std::string suites = "all";
    std::uint64_t seed = 0;
};

opdam::RunConfig make_config(const CommonOpts& o) {
    opdam::RunConfig cfg;
    cfg.params = opdam::Parameters(o.alpha, o.beta);
    cfg.quad.rel_tol = o.rel_tol;
    cfg.quad.abs_tol = o.abs_tol;
    cfg.quad.validate();
    if (!o.corpus_file.empty()) cfg.corpus = opdam::read_corpus_json(o.corpus_file);
    cfg.corpus.seed = o.seed;
    cfg.output_dir = o.out_dir;
    cfg.write_csv = o.format.find("csv") != std::string::npos;
    cfg.write_json = o.format.find("json") != std::string::npos;
    if (!cfg.write_csv && !cfg.write_json)
        throw opdam::DomainError("--format must include csv or json");
    return cfg;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int run_kernel(const CommonOpts& opts, double lambda, double x_lo, double x_hi, int n) {
    if (!(x_hi > x_lo) || n < 2) {
        std::cerr << "kernel: need x-max > x-min and at least 2 points\n";
        return kExitUsage;
    }
    opdam::Parameters p(opts.alpha, opts.beta);
    std::cout << "x,re,im\n";
    for (int i = 0; i < n; ++i) {
        double x = x_lo + (x_hi - x_lo) * i / (n - 1);
        opdam::Complex g = opdam::opdam_kernel(p, lambda, x);
        std::cout << opdam::format_full(x) << ',' << opdam::format_full(g.real()) << ','
                  << opdam::format_full(g.imag()) << '\n';
    }
    return kExitPass;
}

int run_verify(const CommonOpts& opts) {
    auto cfg = make_config(opts);
    std::vector<opdam::Theorem> selected;
    if (opts.suites == "all") {
        for (int t = 0; t <= static_cast<int>(opdam::Theorem::HausdorffYoung); ++t)
            selected.push_back(static_cast<opdam::Theorem>(t));
    } else {
        for (const auto& name : split_list(opts.suites)) {
            auto t = opdam::theorem_from_name(name);
            if (!t) {
                std::cerr << "unknown suite name: " << name << "\n";
                return kExitUsage;
            }
            selected.push_back(*t);
        }
    }
    if (selected.empty()) {
        std::cerr << "empty suite selection\n";
        return kExitUsage;
    }

    opdam::SuiteRunner runner(cfg);
    if (!opts.constants_file.empty()) {
        opdam::ConstantsFit fit;
        opdam::RayleighEstimate est;
        opdam::read_constants_json(opts.constants_file, fit, est);
        runner.set_constants(fit, est);
    }
    auto result = runner.run(selected);

    std::filesystem::create_directories(cfg.output_dir);
    if (cfg.write_json)
        opdam::write_reports_json(result.reports,
                                  (std::filesystem::path(cfg.output_dir) / "report.json").string());
    if (cfg.write_csv)
        opdam::write_reports_csv(result.reports,
                                 (std::filesystem::path(cfg.output_dir) / "report.csv").string());

    int passed = 0;
    for (const auto& r : result.reports) {
        if (r.pass) ++passed;
        if (!r.pass && !r.out_of_regime)
            std::cout << "FAIL " << opdam::theorem_name(r.name) << " " << r.params_echo << "\n";
        if (r.out_of_regime)
            std::cout << "OUT-OF-REGIME " << opdam::theorem_name(r.name) << " " << r.params_echo
                      << "\n";
    }
    std::cout << "reports: " << result.reports.size() << "  passed: " << passed
              << "  failed: " << result.failures << "  out-of-regime: " << result.out_of_regime
              << "\n";
    return result.failures == 0 ? kExitPass : kExitViolation;
}

int run_constants(const CommonOpts& opts) {
    auto cfg = make_config(opts);
    if (!(cfg.fit.lambda_max > cfg.fit.bigN)) {
        std::cerr << "constants: fit window must satisfy lambda_max > bigN\n";
        return kExitUsage;
    }
    opdam::SuiteRunner runner(cfg);
    std::filesystem::create_directories(cfg.output_dir);
    auto path = (std::filesystem::path(cfg.output_dir) / "constants.json").string();
    opdam::write_constants_json(runner.constants(), runner.rayleigh(), path);
    std::cout << "wrote " << path << "  k1=" << runner.constants().k1
              << " k2=" << runner.constants().k2 << " rayleigh=" << runner.rayleigh().value
              << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Opdam-Cherednik transform toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts opts;
    app.add_option("--alpha", opts.alpha, "Weight parameter alpha");
    app.add_option("--beta", opts.beta, "Weight parameter beta");
    app.add_option("--rel-tol", opts.rel_tol, "Quadrature relative tolerance");
    app.add_option("--abs-tol", opts.abs_tol, "Quadrature absolute tolerance");
    app.add_option("--corpus", opts.corpus_file, "Corpus spec JSON file");
    app.add_option("--constants", opts.constants_file, "Fitted constants JSON file");
    app.add_option("--out", opts.out_dir, "Output directory");
    app.add_option("--format", opts.format, "Report formats: csv, json or csv,json");
    app.add_option("--suite", opts.suites, "Comma-separated suite names or 'all'");
    app.add_option("--seed", opts.seed, "Corpus seed");

    double lambda = 1.0, x_lo = -1.0, x_hi = 1.0;
    int n = 11;
    auto* kernel = app.add_subcommand("kernel", "Tabulate the kernel G_lambda on an x-range");
    kernel->add_option("--lambda", lambda, "Spectral parameter");
    kernel->add_option("--x-min", x_lo, "Range start");
    kernel->add_option("--x-max", x_hi, "Range end");
    kernel->add_option("--points", n, "Number of sample points");

    auto* verify = app.add_subcommand("verify", "Run the inequality verification suites");
    auto* constants = app.add_subcommand("constants", "Fit c-function constants and Rayleigh bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (kernel->parsed()) return run_kernel(opts, lambda, x_lo, x_hi, n);
        if (verify->parsed()) return run_verify(opts);
        if (constants->parsed()) return run_constants(opts);
        return kExitUsage;
    } catch (const opdam::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const opdam::Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
