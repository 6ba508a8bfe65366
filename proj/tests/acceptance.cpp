// Acceptance gate: one pass/fail line per criterion, across the reference
// parameter sets (0,0), (1/2,-1/2), (1,0). Exit code = number of failures.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "opdam/io.hpp"
#include "opdam/specfun.hpp"
#include "opdam/suite.hpp"

using namespace opdam;

namespace {

struct Gate {
    int failures = 0;
    std::vector<std::string> lines;

    void criterion(int n, const std::string& what, bool ok, const std::string& detail = {}) {
        if (!ok) ++failures;
        std::ostringstream ss;
        ss << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
        if (!detail.empty()) ss << " [" << detail << "]";
        lines.push_back(ss.str());
        std::printf("%s\n", ss.str().c_str());
        std::fflush(stdout);
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool starts_with(const std::string& s, const char* pre) { return s.rfind(pre, 0) == 0; }

double l2(const SampledFunction& f, const Parameters& p, MeasureSide side,
          const QuadratureSpec& quad) {
    return weighted_norm(f, p, 2.0, 0.0, side, quad);
}

}  // namespace

int main() {
    Gate gate;
    const std::vector<Parameters> param_sets = {Parameters(0.0, 0.0), Parameters(0.5, -0.5),
                                                Parameters(1.0, 0.0)};
    QuadratureSpec quad;

    // ---- 1. kernel normalization at the origin --------------------------
    {
        int pairs = 0;
        double worst = 0.0;
        for (const Parameters& p : param_sets) {
            for (int k = 0; k < 17; ++k) {
                double lam = -10.0 + 20.0 * k / 16.0;
                worst = std::max(worst,
                                 std::abs(opdam_kernel(p, Complex(lam, 0.0), 0.0) - Complex(1.0)));
                ++pairs;
            }
        }
        std::ostringstream d;
        d << pairs << " pairs, max |G(0)-1| = " << worst;
        gate.criterion(1, "kernel normalization at the origin", pairs >= 50 && worst <= 1e-10,
                       d.str());
    }

    // ---- 2. eigen-equation residual -------------------------------------
    {
        double worst = 0.0;
        for (const Parameters& p : param_sets) {
            for (double lam : {0.5, 1.0, 2.0, 5.0}) {
                auto g = [&](double x) { return opdam_kernel(p, Complex(lam, 0.0), x); };
                for (int k = 0; k <= 24; ++k) {
                    double x = -3.0 + 6.0 * k / 24.0;
                    if (std::fabs(x) < 1e-9) x = 1e-6;
                    Complex lhs = cherednik_apply(g, p, x);
                    Complex rhs = Complex(0.0, lam) * g(x);
                    worst = std::max(worst, std::abs(lhs - rhs) /
                                                std::max(std::abs(rhs), 1e-12));
                }
            }
        }
        std::ostringstream d;
        d << "max relative residual = " << worst;
        gate.criterion(2, "Cherednik eigen-equation on the kernel", worst <= 1e-6, d.str());
    }

    // Shared suite runners (corpus + cached transforms) per parameter set.
    std::vector<SuiteRunner> runners;
    for (const Parameters& p : param_sets) {
        RunConfig cfg;
        cfg.params = p;
        cfg.write_csv = cfg.write_json = false;
        runners.emplace_back(cfg);
    }

    // ---- 3. heat identity -------------------------------------------------
    // The scale-1 heat members of the corpus are exactly E_t; their cached
    // transforms cover |lambda| <= 10 on the default spectral grid.
    {
        double worst = 0.0;
        bool ok = true;
        for (SuiteRunner& run : runners) {
            const auto& corpus = run.corpus();
            for (std::size_t i = 0; i < corpus.size(); ++i) {
                const std::string& lab = corpus[i].label();
                if (!starts_with(lab, "heat") || lab.find("_c=") != std::string::npos) continue;
                double t = std::stod(lab.substr(lab.find("t=") + 2));
                const SampledFunction& hf = run.transform_of(i);
                for (int j = 0; j < hf.grid().size(); ++j) {
                    double lam = hf.grid()(j);
                    if (std::fabs(lam) > 10.0) continue;
                    double err = std::abs(hf.values()(j) - Complex(std::exp(-t * lam * lam)));
                    worst = std::max(worst, err);
                }
            }
        }
        ok = worst <= 1e-5;
        std::ostringstream d;
        d << "sup error = " << worst;
        gate.criterion(3, "heat identity H(E_t) = exp(-t lambda^2), t in {0.5,1,2}", ok, d.str());
    }

    // ---- 4. Plancherel ----------------------------------------------------
    {
        double worst_res = 0.0, worst_imag = 0.0;
        double ratio_lo = 1e300, ratio_hi = 0.0;
        for (std::size_t s = 0; s < runners.size(); ++s) {
            SuiteRunner& run = runners[s];
            const auto& corpus = run.corpus();
            for (std::size_t i = 0; i < corpus.size(); ++i) {
                // full sweep at (0,0); one member per family elsewhere
                if (s > 0 && i % 3 != 0) continue;
                PlancherelReport rep =
                    plancherel_residual(corpus[i], run.config().params, quad);
                worst_res = std::max(worst_res, rep.residual);
                worst_imag = std::max(worst_imag, rep.rhs_imag_fraction);
                ratio_lo = std::min(ratio_lo, rep.simplified_ratio);
                ratio_hi = std::max(ratio_hi, rep.simplified_ratio);
            }
        }
        std::ostringstream d;
        d << "max residual = " << worst_res << "; simplified ratio in [" << ratio_lo << ", "
          << ratio_hi << "] (signed-measure discrepancy, reported)";
        gate.criterion(4, "Plancherel residual <= 1e-5 over the corpus", worst_res <= 1e-5,
                       d.str());
    }

    // ---- 5. round trip ----------------------------------------------------
    {
        double worst = 0.0;
        Eigen::ArrayXd probes(9);
        probes << -3.0, -1.5, -0.5, -0.1, 0.0, 0.3, 0.9, 1.8, 2.7;
        for (SuiteRunner& run : runners) {
            const auto& corpus = run.corpus();
            for (std::size_t i = 0; i < corpus.size(); ++i) {
                const std::string& lab = corpus[i].label();
                if (!starts_with(lab, "heat") && !starts_with(lab, "gauss")) continue;
                SampledFunction back =
                    inverse(run.transform_of(i), run.config().params, probes, quad);
                double sup = 0.0, scale = 0.0;
                for (int j = 0; j < probes.size(); ++j) {
                    sup = std::max(sup, std::abs(back.values()(j) - corpus[i](probes(j))));
                    scale = std::max(scale, std::abs(corpus[i](probes(j))));
                }
                worst = std::max(worst, sup / std::max(scale, 1e-300));
            }
        }
        std::ostringstream d;
        d << "max sup-norm relative error = " << worst;
        gate.criterion(5, "round trip inverse(forward(f)) on heat and Gaussian members",
                       worst <= 1e-4, d.str());
    }

    // ---- 6. c-function asymptotics ---------------------------------------
    {
        bool ok = true;
        std::ostringstream d;
        for (SuiteRunner& run : runners) {
            const Parameters& p = run.config().params;
            const ConstantsFit& fit = run.constants();
            if (!(fit.k1 <= fit.k2)) ok = false;
            // held-out samples on an offset grid
            for (int k = 0; k < 83; ++k) {
                double lam = 2.0 + (100.0 - 2.0) * (k + 0.37) / 83.0;
                double v = inv_c_abs_sq(p, lam) / std::pow(lam, 2.0 * p.alpha() + 2.0);
                if (v < fit.k1 * 0.99 || v > fit.k2 * 1.01) ok = false;
            }
            d << "(" << p.alpha() << "," << p.beta() << "): k1=" << fit.k1 << " k2=" << fit.k2
              << "  ";
        }
        gate.criterion(6, "c-function growth constants fit and held-out band", ok, d.str());
    }

    // ---- 7. measure bounds ------------------------------------------------
    {
        bool ok = true;
        for (SuiteRunner& run : runners) {
            const Parameters& p = run.config().params;
            const ConstantsFit& fit = run.constants();
            double rho = p.rho();
            for (double r : {1.0, 2.0, 3.0, 4.0, 5.0}) {
                if (!(ball_measure(p, r, MeasureSide::SpaceWeight, quad) <=
                      2.0 * r * std::exp(2.0 * rho * r)))
                    ok = false;
                if (!(ball_measure(p, r, MeasureSide::PlancherelAbs, quad) <=
                      fit.c_sigma(p) * std::pow(r, 2.0 * p.alpha() + 3.0)))
                    ok = false;
            }
            for (double t : {0.5, 1.0, 2.0, 4.0})
                for (double q : {1.0, 2.0, 4.0}) {
                    double lhs = std::pow(gamma_t_norm(p, t, q, quad), q);
                    double rhs = fit.c_gamma(p) +
                                 fit.d_gamma(p, q) * std::pow(t, -(p.alpha() + 1.5));
                    if (!(lhs <= rhs)) ok = false;
                }
            for (double r : {2.0, 4.0})
                for (double q : {2.0, 4.0})
                    for (double a : {0.1, 0.2}) {
                        double lhs = weighted_indicator_norm(p, r, a, q, quad);
                        double rhs = indicator_bound_constant(p, a, q) *
                                     std::pow(r, 1.0 / q) * std::exp(2.0 * rho * r / q);
                        if (!(lhs <= rhs)) ok = false;
                    }
        }
        gate.criterion(7, "measure bounds: balls, gamma_t, weighted indicator", ok);
    }

    // ---- 8. Hausdorff-Young endpoint -------------------------------------
    {
        bool ok = true;
        for (SuiteRunner& run : runners) {
            const auto& corpus = run.corpus();
            for (std::size_t i = 0; i < corpus.size(); ++i) {
                auto r = verify_hausdorff_young(corpus[i], run.transform_of(i),
                                                run.config().params, 1.0, quad);
                if (!r.pass) ok = false;
            }
        }
        gate.criterion(8, "Hausdorff-Young endpoint ||Hf||_inf <= ||f||_1 over the corpus", ok);
    }

    // ---- 9. HPW suite ----------------------------------------------------
    {
        bool ok = true;
        std::ostringstream d;
        double ratio_min = 1e300;
        for (SuiteRunner& run : runners) {
            const Parameters& p = run.config().params;
            const auto& corpus = run.corpus();
            double lam = run.lam_lower();
            const ConstantsFit& fit = run.constants();
            for (std::size_t i = 0; i < corpus.size(); ++i) {
                auto base = verify_hpw(corpus[i], run.transform_of(i), p, fit, lam, quad);
                if (!(base.ratio > 0.0)) ok = false;
                ratio_min = std::min(ratio_min, base.ratio);
                // scale invariance under f -> c f
                const SampledFunction& f = corpus[i];
                const SampledFunction& hf = run.transform_of(i);
                SampledFunction f2(f.grid(), 7.0 * f.values(), f.decay(), f.side());
                SampledFunction hf2(hf.grid(), 7.0 * hf.values(), hf.decay(), hf.side());
                auto scaled = verify_hpw(f2, hf2, p, fit, lam, quad);
                if (std::fabs(scaled.ratio - base.ratio) > 1e-8 * base.ratio) ok = false;
                // weighted variant reduces to the square root at a = b = 1
                auto w = verify_weighted_hpw(f, hf, p, 1.0, 1.0, base.constant, quad);
                if (std::fabs(w.lhs - std::sqrt(base.lhs)) > 1e-8 * w.lhs) ok = false;
                if (std::fabs(w.rhs - std::sqrt(base.rhs)) >
                    1e-8 * std::max(w.rhs, 1e-30))
                    ok = false;
            }
        }
        // refinement stability of the ratio, spot-checked at (0,0)
        {
            SuiteRunner& run = runners[0];
            const Parameters& p = run.config().params;
            const SampledFunction& f = run.corpus()[7];
            auto base = verify_hpw(f, run.transform_of(7), p, run.constants(),
                                   run.lam_lower(), quad);
            QuadratureSpec tight = quad;
            tight.rel_tol *= 0.5;
            tight.abs_tol *= 0.5;
            Eigen::ArrayXd fine = graded_grid(16.0, 0.05, 40.0, 0.25);
            SampledFunction hf_fine = forward(f, p, fine, tight).samples_only();
            auto refined = verify_hpw(f, hf_fine, p, run.constants(), run.lam_lower(), tight);
            if (std::fabs(refined.ratio - base.ratio) > 0.01 * base.ratio) ok = false;
            d << "refined ratio drift = "
              << std::fabs(refined.ratio - base.ratio) / base.ratio << "; ";
        }
        d << "corpus min ratio = " << ratio_min << " (regression baseline)";
        gate.criterion(9, "HPW product ratio: positive, scale-invariant, refinement-stable", ok,
                       d.str());
    }

    // ---- 10. Nash and Clarkson -------------------------------------------
    {
        bool ok = true;
        for (SuiteRunner& run : runners) {
            const Parameters& p = run.config().params;
            const auto& corpus = run.corpus();
            for (std::size_t i = 0; i < corpus.size(); ++i)
                for (double s : {0.5, 1.0, 2.0}) {
                    if (!verify_nash(corpus[i], run.transform_of(i), p, s, run.constants(), quad)
                             .pass)
                        ok = false;
                    if (!verify_clarkson(corpus[i], p, s, quad).pass) ok = false;
                    double dd = 2.0 * p.alpha() + 3.0;
                    // Nash rhs exponents sum to 2, Clarkson's to 1, exactly
                    if (std::fabs(4.0 * s / (dd + 2.0 * s) + 2.0 * dd / (dd + 2.0 * s) - 2.0) >
                        1e-15)
                        ok = false;
                    if (std::fabs(4.0 * s / (1.0 + 4.0 * s) + 1.0 / (1.0 + 4.0 * s) - 1.0) >
                        1e-15)
                        ok = false;
                }
        }
        gate.criterion(10, "Nash and Clarkson inequalities with the explicit constants", ok);
    }

    // ---- 11. decay lemma and Lp uncertainty -------------------------------
    {
        bool ok = true;
        int reports = 0, oor = 0;
        for (SuiteRunner& run : runners) {
            const Parameters& p = run.config().params;
            const auto& corpus = run.corpus();
            double cp = run.c_p_empirical(2.0);
            for (std::size_t i = 0; i < corpus.size(); ++i) {
                if (!starts_with(corpus[i].label(), "heat")) continue;
                for (double t : {2.0, 4.0}) {
                    auto r = verify_decay_lemma(corpus[i], run.transform_of(i), p, 2.0, 0.25, t,
                                                run.constants(), cp, quad);
                    if (!r.pass) ok = false;
                    ++reports;
                }
                for (double b : {1.0, 3.0}) {
                    auto r = verify_lp_hpw(corpus[i], run.transform_of(i), p, 2.0, 0.25, b,
                                           run.constants(), cp, quad);
                    ++reports;
                    if (r.out_of_regime) {
                        ++oor;
                        if (r.pass) ok = false;  // out-of-regime is never a pass
                    }
                    if (b == 1.0 && !r.out_of_regime) {
                        // branch consistency at b = 1: re-evaluate the direct
                        // (b <= 2) bound from the norms and the reported
                        // constant and compare against the report's rhs
                        double q = 2.0, a = 0.25, rho = p.rho();
                        double xa = weighted_norm(corpus[i], p, 2.0, a,
                                                  MeasureSide::SpaceWeight, quad);
                        double yb = weighted_norm(run.transform_of(i), p, q, 1.0,
                                                  MeasureSide::PlancherelAbs, quad);
                        double nn = static_cast<double>(archimedean_n(a * xa / yb));
                        double t0 = std::pow(a, 2.0 / (a + 1.0)) *
                                    std::pow(nn * xa / yb, 2.0 / (a + 1.0));
                        double rhs_direct = r.constant *
                                            std::pow(t0, 1.0 / (2.0 * q) + 1.0) *
                                            std::exp(2.0 * rho * std::sqrt(t0) / q) *
                                            std::pow(xa, 1.0 / (a + 1.0)) *
                                            std::pow(yb, a / (a + 1.0));
                        if (std::fabs(rhs_direct - r.rhs) > 1e-9 * r.rhs) ok = false;
                    }
                }
            }
        }
        std::ostringstream d;
        d << reports << " reports, " << oor << " out-of-regime";
        gate.criterion(11, "decay lemma and Lp uncertainty reports on the heat sub-corpus", ok,
                       d.str());
    }

    // ---- 12. Hardy-Littlewood ---------------------------------------------
    {
        bool ok = true;
        std::ostringstream d;
        for (SuiteRunner& run : runners) {
            const Parameters& p = run.config().params;
            // Young sublevel identity over three decades
            for (double t : {0.01, 0.1, 1.0, 10.0}) {
                // invert phi(x) = A(B_x) by bisection, then A(B_{x(t)}) = t
                double lo = 0.0, hi = 14.0;
                for (int it = 0; it < 200; ++it) {
                    double mid = 0.5 * (lo + hi);
                    if (young_canonical(p, mid, quad) < t) lo = mid;
                    else hi = mid;
                }
                double achieved = young_canonical(p, 0.5 * (lo + hi), quad);
                if (std::fabs(achieved - t) > 1e-6 * t) ok = false;
            }
        }
        // empirical C_q finiteness + refinement stability, spot-checked at (0,0)
        {
            SuiteRunner& run = runners[0];
            const Parameters& p = run.config().params;
            CumulativeWeight phi(p, 12.0, quad);
            auto phi_fn = [&phi](double x) { return phi(x); };
            const SampledFunction& f = run.corpus()[2];  // E_2, scale 1... heat member
            for (double q : {3.0, 4.0}) {
                auto r = verify_hardy_littlewood(f, run.transform_of(2), p, q, phi_fn, quad);
                if (!(std::isfinite(r.constant) && r.constant > 0.0)) ok = false;
                QuadratureSpec tight = quad;
                tight.rel_tol *= 0.5;
                Eigen::ArrayXd fine = graded_grid(16.0, 0.05, 40.0, 0.25);
                SampledFunction hf_fine = forward(f, p, fine, tight).samples_only();
                auto r2 = verify_hardy_littlewood(f, hf_fine, p, q, phi_fn, tight);
                double drift = std::fabs(r2.constant - r.constant) / r.constant;
                if (drift > 0.01) ok = false;
                d << "q=" << q << " C_q=" << r.constant << " drift=" << drift << "  ";
            }
        }
        gate.criterion(12, "Hardy-Littlewood: Young sublevel identity and stable empirical C_q",
                       ok, d.str());
    }

    // ---- 13. determinism ---------------------------------------------------
    {
        namespace fs = std::filesystem;
        const std::vector<Theorem> all = {
            Theorem::AdditiveHPW, Theorem::HPW,  Theorem::WeightedHPW,
            Theorem::DecayLemma,  Theorem::LpHPW, Theorem::HardyLittlewood,
            Theorem::Nash,        Theorem::Clarkson, Theorem::HausdorffYoung,
        };
        std::string d1 = "/tmp/opdam_accept_run1", d2 = "/tmp/opdam_accept_run2";
        fs::create_directories(d1);
        fs::create_directories(d2);
        bool ok = true;
        for (const std::string& dir : {d1, d2}) {
            RunConfig cfg;
            cfg.params = param_sets[0];
            cfg.write_csv = cfg.write_json = false;
            SuiteRunner fresh(cfg);
            SuiteResult res = fresh.run(all);
            write_reports_json(res.reports, dir + "/report.json");
            write_reports_csv(res.reports, dir + "/report.csv");
            write_constants_json(res.constants, res.rayleigh, dir + "/constants.json");
        }
        for (const char* name : {"report.json", "report.csv", "constants.json"}) {
            if (slurp(d1 + "/" + name) != slurp(d2 + "/" + name)) ok = false;
        }
        fs::remove_all(d1);
        fs::remove_all(d2);
        gate.criterion(13, "two identical full-suite runs emit byte-identical reports", ok);
    }

    std::printf("%d of 13 criteria passed\n", 13 - gate.failures);
    return gate.failures;
}
