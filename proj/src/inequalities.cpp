#include "opdam/inequalities.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "opdam/errors.hpp"
#include "opdam/transform.hpp"

namespace opdam {

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::AdditiveHPW: return "AdditiveHPW";
        case Theorem::HPW: return "HPW";
        case Theorem::WeightedHPW: return "WeightedHPW";
        case Theorem::DecayLemma: return "DecayLemma";
        case Theorem::LpHPW: return "LpHPW";
        case Theorem::HardyLittlewood: return "HardyLittlewood";
        case Theorem::Nash: return "Nash";
        case Theorem::Clarkson: return "Clarkson";
        case Theorem::HausdorffYoung: return "HausdorffYoung";
    }
    return "?";
}

std::string provenance_name(ConstantProvenance p) {
    switch (p) {
        case ConstantProvenance::PaperExplicit: return "PaperExplicit";
        case ConstantProvenance::FittedFromK: return "FittedFromK";
        case ConstantProvenance::EmpiricalEstimate: return "EmpiricalEstimate";
    }
    return "?";
}

namespace {

std::string echo(const Parameters& p, const SampledFunction& f,
                 std::initializer_list<std::pair<const char*, double>> extra) {
    std::ostringstream os;
    os << "member=" << (f.label().empty() ? "anonymous" : f.label()) << " alpha=" << p.alpha()
       << " beta=" << p.beta();
    for (const auto& [k, v] : extra) os << " " << k << "=" << v;
    return os.str();
}

double l2_space(const SampledFunction& f, const Parameters& p, const QuadratureSpec& quad) {
    return weighted_norm(f, p, 2.0, 0.0, MeasureSide::SpaceWeight, quad);
}

void require_nonzero(double nf) {
    if (!(nf > 0.0)) throw DegenerateInput("verification: ||f|| = 0");
}

// sup_{u>0} u^{-b/2} (1 - e^{-u}), finite for 0 < b <= 2 (equals 1 at b = 2).
double one_minus_exp_sup(double b) {
    if (b >= 2.0) return 1.0;
    auto g = [b](double logu) {
        double u = std::exp(logu);
        return std::pow(u, -b / 2.0) * (1.0 - std::exp(-u));
    };
    double lo = -40.0, hi = 40.0;
    for (int iter = 0; iter < 200; ++iter) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (g(m1) < g(m2)) lo = m1;
        else hi = m2;
    }
    return g(0.5 * (lo + hi));
}

// ||gamma_t Hf||_{L^q(|sigma|)} = (int e^{-q t l^2} |Hf|^q d|sigma|)^{1/q}
double gamma_weighted_q_norm(const SampledFunction& hf, const Parameters& p, double t, double q,
                             const QuadratureSpec& quad) {
    auto integrand = [&](double l) {
        double v = std::abs(hf(l));
        if (v == 0.0) return 0.0;
        return std::exp(-q * t * l * l) * std::pow(v, q) *
               plancherel_density(p, l, DensityKind::Abs).real();
    };
    double lo = hf.grid_min(), hi = hf.grid_max();
    double integral = integrate<double>(integrand, lo, 0.0, quad) +
                      integrate<double>(integrand, 0.0, hi, quad);
    return std::pow(integral, 1.0 / q);
}

// proof-chain constant of the decay lemma
double decay_chain_constant(const Parameters& p, const ConstantsFit& constants, double a,
                            double q, double c_p_empirical) {
    double gamma_part = std::pow(constants.c_gamma(p) + constants.d_gamma(p, q), 1.0 / q);
    return c_p_empirical + gamma_part * indicator_bound_constant(p, a, q);
}

}  // namespace

long archimedean_n(double x) {
    if (!(x > 0.0)) throw DomainError("archimedean_n: x must be positive");
    double n = std::floor(1.0 / x) + 1.0;
    while ((n - 1.0) * x > 1.0) n -= 1.0;  // float guard
    while (n * x <= 1.0) n += 1.0;
    return static_cast<long>(n);
}

double rayleigh_quotient(const SampledFunction& f, const SampledFunction& hf,
                         const Parameters& p, const QuadratureSpec& quad) {
    double nf = l2_space(f, p, quad);
    require_nonzero(nf);
    double xd = weighted_norm(f, p, 2.0, 1.0, MeasureSide::SpaceWeight, quad);
    double ld = weighted_norm(hf, p, 2.0, 1.0, MeasureSide::PlancherelAbs, quad);
    return (xd * xd + ld * ld) / (nf * nf);
}

RayleighEstimate estimate_lambda_min(const std::vector<SampledFunction>& corpus,
                                     const std::vector<SampledFunction>& transforms,
                                     const Parameters& p, const QuadratureSpec& quad) {
    if (corpus.empty()) throw DomainError("estimate_lambda_min: empty corpus");
    if (corpus.size() != transforms.size())
        throw DomainError("estimate_lambda_min: corpus/transform size mismatch");
    RayleighEstimate est;
    est.value = std::numeric_limits<double>::infinity();
    est.corpus_size = static_cast<int>(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        double q = rayleigh_quotient(corpus[i], transforms[i], p, quad);
        if (q < est.value) {
            est.value = q;
            est.witness = corpus[i].label();
        }
    }
    return est;
}

InequalityReport verify_additive_hpw(const SampledFunction& f, const SampledFunction& hf,
                                     const Parameters& p, double lam_lower,
                                     const QuadratureSpec& quad) {
    double nf = l2_space(f, p, quad);
    require_nonzero(nf);
    double xd = weighted_norm(f, p, 2.0, 1.0, MeasureSide::SpaceWeight, quad);
    double ld = weighted_norm(hf, p, 2.0, 1.0, MeasureSide::PlancherelAbs, quad);
    InequalityReport r;
    r.name = Theorem::AdditiveHPW;
    r.lhs = xd * xd + ld * ld;
    r.constant = lam_lower;
    r.rhs = lam_lower * nf * nf;
    r.provenance = ConstantProvenance::EmpiricalEstimate;
    r.ratio = r.lhs / (nf * nf);
    r.pass = r.lhs >= r.rhs;
    r.params_echo = echo(p, f, {{"lam_lower", lam_lower}});
    return r;
}

InequalityReport verify_hpw(const SampledFunction& f, const SampledFunction& hf,
                            const Parameters& p, const ConstantsFit& constants, double lam_lower,
                            const QuadratureSpec& quad) {
    double nf = l2_space(f, p, quad);
    require_nonzero(nf);
    double xd = weighted_norm(f, p, 2.0, 1.0, MeasureSide::SpaceWeight, quad);
    double ld = weighted_norm(hf, p, 2.0, 1.0, MeasureSide::PlancherelAbs, quad);
    long n = archimedean_n(xd / ld);
    double nn = static_cast<double>(n);
    InequalityReport r;
    r.name = Theorem::HPW;
    r.lhs = xd * ld;
    r.constant = constants.k1 * constants.k1 * nn /
                 (constants.k2 * constants.k2 * (nn * nn + 1.0)) * lam_lower;
    r.rhs = r.constant * nf * nf;
    r.provenance = ConstantProvenance::FittedFromK;
    r.ratio = r.lhs / (nf * nf);
    r.pass = r.lhs >= r.rhs;
    r.params_echo = echo(p, f, {{"lam_lower", lam_lower}, {"N", nn}});
    return r;
}

InequalityReport verify_weighted_hpw(const SampledFunction& f, const SampledFunction& hf,
                                     const Parameters& p, double a, double b, double c_base,
                                     const QuadratureSpec& quad) {
    if (!(a >= 1.0) || !(b >= 1.0)) throw DomainError("verify_weighted_hpw: need a, b >= 1");
    double nf = l2_space(f, p, quad);
    require_nonzero(nf);
    double xa = weighted_norm(f, p, 2.0, a, MeasureSide::SpaceWeight, quad);
    double yb = weighted_norm(hf, p, 2.0, b, MeasureSide::PlancherelAbs, quad);
    double wa = b / (a + b), wb = a / (a + b);
    InequalityReport r;
    r.name = Theorem::WeightedHPW;
    r.lhs = std::pow(xa, wa) * std::pow(yb, wb);
    r.constant = c_base;
    r.rhs = std::pow(c_base, a * b / (a + b)) * nf;
    r.provenance = ConstantProvenance::FittedFromK;
    r.ratio = r.lhs / nf;
    r.pass = r.lhs >= r.rhs;
    r.params_echo = echo(p, f, {{"a", a}, {"b", b}, {"c_base", c_base}});
    return r;
}

InequalityReport verify_decay_lemma(const SampledFunction& f, const SampledFunction& hf,
                                    const Parameters& p, double pexp, double a, double t,
                                    const ConstantsFit& constants, double c_p_empirical,
                                    const QuadratureSpec& quad) {
    if (!(pexp > 1.0) || !(pexp <= 2.0)) throw DomainError("verify_decay_lemma: p in (1,2]");
    double q = pexp / (pexp - 1.0);
    if (!(a > 0.0) || !(a < 1.0 / q)) throw DomainError("verify_decay_lemma: need 0 < a < 1/q");
    if (!(t > 1.0)) throw DomainError("verify_decay_lemma: need t > 1");
    double xa = weighted_norm(f, p, pexp, a, MeasureSide::SpaceWeight, quad);
    require_nonzero(xa);
    double c = decay_chain_constant(p, constants, a, q, c_p_empirical);
    InequalityReport r;
    r.name = Theorem::DecayLemma;
    r.lhs = gamma_weighted_q_norm(hf, p, t, q, quad);
    r.constant = c;
    r.rhs = c * std::pow(t, 1.0 / (2.0 * q) + 1.0) * std::exp(2.0 * p.rho() * std::sqrt(t) / q) *
            std::pow(t, -a / 2.0) * xa;
    r.provenance = ConstantProvenance::FittedFromK;
    r.ratio = r.lhs / r.rhs;
    r.pass = r.lhs <= r.rhs;
    r.params_echo = echo(p, f, {{"p", pexp}, {"a", a}, {"t", t}});
    return r;
}

InequalityReport verify_lp_hpw(const SampledFunction& f, const SampledFunction& hf,
                               const Parameters& p, double pexp, double a, double b,
                               const ConstantsFit& constants, double c_p_empirical,
                               const QuadratureSpec& quad) {
    if (!(pexp > 1.0) || !(pexp <= 2.0)) throw DomainError("verify_lp_hpw: p in (1,2]");
    double q = pexp / (pexp - 1.0);
    if (!(a > 0.0) || !(a < 1.0 / q)) throw DomainError("verify_lp_hpw: need 0 < a < 1/q");
    if (!(b > 0.0)) throw DomainError("verify_lp_hpw: need b > 0");
    double xa = weighted_norm(f, p, pexp, a, MeasureSide::SpaceWeight, quad);
    double yb = weighted_norm(hf, p, q, b, MeasureSide::PlancherelAbs, quad);
    require_nonzero(xa);
    require_nonzero(yb);
    double rho = p.rho();

    InequalityReport r;
    r.name = Theorem::LpHPW;
    r.lhs = weighted_norm(hf, p, q, 0.0, MeasureSide::PlancherelAbs, quad);
    r.provenance = ConstantProvenance::FittedFromK;
    r.params_echo = echo(p, f, {{"p", pexp}, {"a", a}, {"b", b}});

    auto paper_constant = [&](double bb, double yy) {
        // C(a, bb) = C2 [ (bb/(aN))^{a/(a+bb)} + (aN/bb)^{bb/(a+bb)} ],
        // C2 = max(decay-chain constant, sup_u u^{-bb/2}(1 - e^{-u}))
        long n = archimedean_n(a * xa / (bb * yy));
        double nn = static_cast<double>(n);
        double c2 = std::max(decay_chain_constant(p, constants, a, q, c_p_empirical),
                             one_minus_exp_sup(bb));
        double c = c2 * (std::pow(bb / (a * nn), a / (a + bb)) +
                         std::pow(a * nn / bb, bb / (a + bb)));
        double t0 = std::pow(a / bb, 2.0 / (a + bb)) * std::pow(nn * xa / yy, 2.0 / (a + bb));
        return std::pair<double, double>(c, t0);
    };

    if (b <= 2.0) {
        auto [c, t0] = paper_constant(b, yb);
        r.constant = c;
        if (t0 <= 1.0) {
            r.out_of_regime = true;
            r.rhs = 0.0;
            r.ratio = 0.0;
            r.pass = false;
            return r;
        }
        r.rhs = c * std::pow(t0, 1.0 / (2.0 * q) + 1.0) *
                std::exp(2.0 * rho * std::sqrt(t0) / q) * std::pow(xa, b / (a + b)) *
                std::pow(yb, a / (a + b));
    } else {
        double y1 = weighted_norm(hf, p, q, 1.0, MeasureSide::PlancherelAbs, quad);
        require_nonzero(y1);
        auto [c1, t1] = paper_constant(1.0, y1);
        r.constant = c1;
        if (t1 <= 1.0) {
            r.out_of_regime = true;
            r.rhs = 0.0;
            r.ratio = 0.0;
            r.pass = false;
            return r;
        }
        double expo = b * (a + 1.0) / (a + b);
        double bracket = b * std::pow(b - 1.0, 1.0 / b - 1.0);
        r.rhs = std::pow(c1, expo) * std::pow(bracket, a * b / (a + b)) *
                std::pow(std::pow(t1, 1.0 / (2.0 * q) + 1.0) *
                             std::exp(2.0 * rho * std::sqrt(t1) / q),
                         expo) *
                std::pow(xa, b / (a + b)) * std::pow(yb, a / (a + b));
    }
    r.ratio = r.lhs / r.rhs;
    r.pass = r.lhs <= r.rhs;
    return r;
}

InequalityReport verify_hardy_littlewood(const SampledFunction& f, const SampledFunction& hf,
                                         const Parameters& p, double q,
                                         const std::function<double(double)>& phi,
                                         const QuadratureSpec& quad) {
    if (!(q > 2.0)) throw DomainError("verify_hardy_littlewood: q must be > 2");
    double orlicz = orlicz_norm(f, p, q, phi, quad);
    require_nonzero(orlicz);
    double hq = weighted_norm(hf, p, q, 0.0, MeasureSide::PlancherelAbs, quad);
    InequalityReport r;
    r.name = Theorem::HardyLittlewood;
    r.lhs = std::pow(hq, q);
    r.rhs = std::pow(orlicz, q);
    r.constant = hq / orlicz;  // empirical C_q
    r.provenance = ConstantProvenance::EmpiricalEstimate;
    r.ratio = r.constant;
    r.pass = std::isfinite(r.constant) && r.constant > 0.0;
    r.params_echo = echo(p, f, {{"q", q}});
    return r;
}

InequalityReport verify_nash(const SampledFunction& f, const SampledFunction& hf,
                             const Parameters& p, double s, const ConstantsFit& constants,
                             const QuadratureSpec& quad) {
    if (!(s > 0.0)) throw DomainError("verify_nash: s must be positive");
    double l1 = weighted_norm(f, p, 1.0, 0.0, MeasureSide::SpaceWeight, quad);
    require_nonzero(l1);
    double h2 = weighted_norm(hf, p, 2.0, 0.0, MeasureSide::PlancherelAbs, quad);
    double ys = weighted_norm(hf, p, 2.0, s, MeasureSide::PlancherelAbs, quad);
    double d = 2.0 * p.alpha() + 3.0;
    long n = archimedean_n(ys * ys / (l1 * l1));
    double nn = static_cast<double>(n);
    InequalityReport r;
    r.name = Theorem::Nash;
    r.lhs = h2 * h2;
    r.constant = (constants.c_sigma(p) * nn + 1.0) * std::pow(nn, -2.0 * s / (d + 2.0 * s));
    r.rhs = r.constant * std::pow(l1, 4.0 * s / (d + 2.0 * s)) *
            std::pow(ys, 2.0 * d / (d + 2.0 * s));
    r.provenance = ConstantProvenance::FittedFromK;
    r.ratio = r.lhs / r.rhs;
    r.pass = r.lhs <= r.rhs;
    r.params_echo = echo(p, f, {{"s", s}, {"N", nn}});
    return r;
}

InequalityReport verify_clarkson(const SampledFunction& f, const Parameters& p, double s,
                                 const QuadratureSpec& quad) {
    if (!(s > 0.0)) throw DomainError("verify_clarkson: s must be positive");
    double l1 = weighted_norm(f, p, 1.0, 0.0, MeasureSide::SpaceWeight, quad);
    require_nonzero(l1);
    double l2 = l2_space(f, p, quad);
    double m = weighted_norm(f, p, 1.0, 2.0 * s, MeasureSide::SpaceWeight, quad);
    long n = archimedean_n(m / l2);
    double nn = static_cast<double>(n);
    InequalityReport r;
    r.name = Theorem::Clarkson;
    r.lhs = l1;
    r.constant = (std::sqrt(2.0) * nn + 1.0) * std::pow(nn, -4.0 * s / (1.0 + 4.0 * s));
    r.rhs = r.constant *
            std::exp(p.rho() * std::pow(nn * m / l2, 2.0 / (1.0 + 4.0 * s))) *
            std::pow(l2, 4.0 * s / (1.0 + 4.0 * s)) * std::pow(m, 1.0 / (1.0 + 4.0 * s));
    r.provenance = ConstantProvenance::PaperExplicit;
    r.ratio = r.lhs / r.rhs;
    r.pass = r.lhs <= r.rhs;
    r.params_echo = echo(p, f, {{"s", s}, {"N", nn}});
    return r;
}

InequalityReport verify_hausdorff_young(const SampledFunction& f, const SampledFunction& hf,
                                        const Parameters& p, double pexp,
                                        const QuadratureSpec& quad) {
    if (!(pexp >= 1.0 && pexp <= 2.0))
        throw DomainError("verify_hausdorff_young: p in [1, 2]");
    InequalityReport r;
    r.name = Theorem::HausdorffYoung;
    r.params_echo = echo(p, f, {{"p", pexp}});
    if (pexp == 1.0) {
        double l1 = weighted_norm(f, p, 1.0, 0.0, MeasureSide::SpaceWeight, quad);
        require_nonzero(l1);
        double hinf = weighted_norm(hf, p, std::numeric_limits<double>::infinity(), 0.0,
                                    MeasureSide::PlancherelAbs, quad);
        r.lhs = hinf;
        r.rhs = l1 * (1.0 + 1e-8);
        r.constant = 1.0;
        r.provenance = ConstantProvenance::PaperExplicit;
        r.ratio = hinf / l1;
        r.pass = r.lhs <= r.rhs;
        return r;
    }
    double nf = weighted_norm(f, p, pexp, 0.0, MeasureSide::SpaceWeight, quad);
    require_nonzero(nf);
    if (pexp == 2.0) {
        double h2 = weighted_norm(hf, p, 2.0, 0.0, MeasureSide::PlancherelAbs, quad);
        r.lhs = h2;
        r.rhs = nf;
        r.constant = h2 / nf;
        r.provenance = ConstantProvenance::EmpiricalEstimate;
        r.ratio = r.constant;
        // the signed Plancherel pairing is not |Hf|^2, so the absolute-measure
        // ratio is reported, not asserted to be 1
        r.pass = std::isfinite(r.ratio) && r.ratio > 0.0;
        return r;
    }
    double pprime = pexp / (pexp - 1.0);
    double hp = weighted_norm(hf, p, pprime, 0.0, MeasureSide::PlancherelAbs, quad);
    r.lhs = hp;
    r.rhs = nf;
    r.constant = hp / nf;  // empirical C_p
    r.provenance = ConstantProvenance::EmpiricalEstimate;
    r.ratio = r.constant;
    r.pass = std::isfinite(r.constant) && r.constant > 0.0;
    return r;
}

}  // namespace opdam
