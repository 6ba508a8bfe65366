#include "opdam/measure.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "opdam/specfun.hpp"

namespace opdam {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double weight_a(const Parameters& p, double x) {
    double ax = std::fabs(x);
    if (ax == 0.0) return 0.0;
    return std::pow(std::sinh(ax), 2.0 * p.alpha() + 1.0) *
           std::pow(std::cosh(ax), 2.0 * p.beta() + 1.0);
}

Complex harish_chandra_c(const Parameters& p, Complex lambda) {
    // poles at lambda in i N (Gamma(i lambda) at 0, -1, -2, ...)
    if (std::abs(lambda.real()) < 1e-12) {
        double k = std::round(lambda.imag());
        if (k >= -0.5 && std::abs(lambda.imag() - k) < 1e-12)
            throw PoleError("harish_chandra_c: lambda in i*N");
    }
    // Normalization: the power-of-two prefactor is 2^{-i lambda} (modulus 1),
    // not 2^{rho - i lambda}. With the extra 2^{rho} the composition of the
    // transform with its inverse comes out as 2^{-2 rho} times the identity
    // (checked numerically at rho = 1, 2, 3); dropping it restores
    // H o H^{-1} = id together with the Plancherel formula.
    Complex il = Complex(0.0, 1.0) * lambda;
    Complex ln_c = -il * std::log(2.0) + ln_gamma(Complex(p.alpha() + 1.0, 0.0)) +
                   ln_gamma(il) - ln_gamma((p.rho() + il) / 2.0) -
                   ln_gamma((p.alpha() - p.beta() + 1.0 + il) / 2.0);
    return std::exp(ln_c);
}

double inv_c_abs_sq(const Parameters& p, double lambda) {
    if (lambda == 0.0) throw PoleError("inv_c_abs_sq: lambda = 0");
    // same 2^{-i lambda} normalization as harish_chandra_c
    Complex il(0.0, lambda);
    Complex ln_c = ln_gamma(Complex(p.alpha() + 1.0, 0.0)) + ln_gamma(il) -
                   ln_gamma((p.rho() + il) / 2.0) -
                   ln_gamma((p.alpha() - p.beta() + 1.0 + il) / 2.0);
    return std::exp(-2.0 * ln_c.real());
}

Complex plancherel_density(const Parameters& p, double lambda, DensityKind kind) {
    if (lambda == 0.0) return Complex(0.0, 0.0);
    double inv_c2 = inv_c_abs_sq(p, lambda);
    double rho = p.rho();
    if (kind == DensityKind::Abs)
        return Complex(std::sqrt(1.0 + rho * rho / (lambda * lambda)) * inv_c2 / (8.0 * kPi), 0.0);
    return Complex(1.0, rho / lambda) * inv_c2 / (8.0 * kPi);
}

double ball_measure(const Parameters& p, double r, MeasureSide side, const QuadratureSpec& quad) {
    if (r < 0.0) throw DomainError("ball_measure: r must be >= 0");
    if (r == 0.0) return 0.0;
    quad.validate();
    if (side == MeasureSide::SpaceWeight)
        return 2.0 * integrate<double>([&](double x) { return weight_a(p, x); }, 0.0, r, quad);
    return 2.0 * integrate<double>(
                     [&](double l) { return plancherel_density(p, l, DensityKind::Abs).real(); },
                     0.0, r, quad);
}

double ConstantsFit::d_gamma(const Parameters& p, double q) const {
    return c_gamma(p) * std::tgamma(p.alpha() + 1.5) / (2.0 * std::pow(q, p.alpha() + 1.5));
}

ConstantsFit fit_c_constants(const Parameters& p, double bigN, double lambda_max, int samples) {
    if (samples < 10) throw DomainError("fit_c_constants: need at least 10 samples");
    if (!(bigN >= 1.0)) throw DomainError("fit_c_constants: bigN must be >= 1");
    if (!(bigN < lambda_max)) throw FitError("fit_c_constants: empty fit window");
    double exponent = 2.0 * p.alpha() + 2.0;
    double k1 = std::numeric_limits<double>::infinity();
    double k2 = 0.0;
    int used = 0;
    for (int j = 0; j < samples; ++j) {
        double lam = bigN * std::pow(lambda_max / bigN, static_cast<double>(j) / (samples - 1));
        double ratio;
        try {
            ratio = inv_c_abs_sq(p, lam) / std::pow(lam, exponent);
        } catch (const PoleError&) {
            continue;
        }
        k1 = std::min(k1, ratio);
        k2 = std::max(k2, ratio);
        ++used;
    }
    if (used == 0) throw FitError("fit_c_constants: all samples failed");
    return ConstantsFit{k1, k2, bigN, lambda_max};
}

double gamma_t_norm(const Parameters& p, double t, double q, const QuadratureSpec& quad) {
    if (!(t > 0.0)) throw DomainError("gamma_t_norm: t must be positive");
    if (!(q >= 1.0)) throw DomainError("gamma_t_norm: q must be >= 1");
    quad.validate();
    // truncate where e^{-q t l^2} l^{2 alpha + 3} falls below the tail target
    double target = std::min(quad.tail_target, 1e-12);
    double radius = 1.0;
    while (std::exp(-q * t * radius * radius) * std::pow(radius, 2.0 * p.alpha() + 3.0) > target &&
           radius < 1e4)
        radius *= 1.25;
    double integral = 2.0 * integrate<double>(
                                [&](double l) {
                                    return std::exp(-q * t * l * l) *
                                           plancherel_density(p, l, DensityKind::Abs).real();
                                },
                                0.0, radius, quad);
    return std::pow(integral, 1.0 / q);
}

double weighted_indicator_norm(const Parameters& p, double r, double a, double q,
                               const QuadratureSpec& quad) {
    if (!(r > 1.0)) throw DomainError("weighted_indicator_norm: r must be > 1");
    if (!(q >= 2.0)) throw DomainError("weighted_indicator_norm: q must be >= 2");
    if (!(a > 0.0) || !(a < 1.0 / q))
        throw DomainError("weighted_indicator_norm: need 0 < a < 1/q");
    quad.validate();
    double integral =
        2.0 * integrate<double>([&](double x) { return std::pow(x, -a * q) * weight_a(p, x); },
                                0.0, r, quad);
    return std::pow(integral, 1.0 / q);
}

double indicator_bound_constant(const Parameters& p, double a, double q) {
    return std::pow(2.0 * weight_a(p, 1.0) / (1.0 - a * q) + 2.0, 1.0 / q);
}

double young_canonical(const Parameters& p, double x, const QuadratureSpec& quad) {
    return ball_measure(p, std::fabs(x), MeasureSide::SpaceWeight, quad);
}

CumulativeWeight::CumulativeWeight(const Parameters& p, double x_max, const QuadratureSpec& quad) {
    const int n = 2049;
    Eigen::ArrayXd grid = uniform_grid(0.0, x_max, n);
    Eigen::ArrayXcd vals(n);
    vals(0) = 0.0;
    double acc = 0.0;
    for (int i = 1; i < n; ++i) {
        acc += 2.0 * integrate<double>([&](double u) { return weight_a(p, u); }, grid(i - 1),
                                       grid(i), quad);
        vals(i) = acc;
    }
    table_ = SampledFunction(grid, vals, DecayClass::generic(), Side::Space);
}

double CumulativeWeight::operator()(double x) const {
    double ax = std::fabs(x);
    if (ax > table_.grid_max())
        throw DomainError("CumulativeWeight: evaluation beyond tabulated range");
    return table_(ax).real();
}

double orlicz_norm(const SampledFunction& f, const Parameters& p, double q,
                   const std::function<double(double)>& phi, const QuadratureSpec& quad) {
    if (!(q > 2.0)) throw DomainError("orlicz_norm: q must be > 2");
    quad.validate();
    auto integrand = [&](double x) {
        double af = std::abs(f(x));
        if (af == 0.0) return 0.0;
        return std::pow(af, q) * std::pow(std::fabs(phi(x)), q - 2.0) * weight_a(p, x);
    };
    // Pre-split dyadically around the origin: the integrand can live on a
    // support much narrower than the grid (scaled bumps), where a single
    // Gauss-Kronrod panel over the full grid misses it entirely.
    double hi = std::max(std::fabs(f.grid_min()), std::fabs(f.grid_max()));
    if (f.decay().kind == DecayClass::Kind::Compact) hi = std::min(hi, f.decay().param);
    std::vector<double> cuts{0.0};
    for (double c = 0.125; c < hi; c *= 2.0) cuts.push_back(c);
    cuts.push_back(hi);
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        integral += integrate<double>(integrand, cuts[i], cuts[i + 1], quad);
        integral += integrate<double>(integrand, -cuts[i + 1], -cuts[i], quad);
    }
    if (!std::isfinite(integral)) throw AccuracyError("orlicz_norm: divergent integral");
    return std::pow(integral, 1.0 / q);
}

double weak_lp_norm(const SampledFunction& g, const Parameters& p, double pexp, MeasureSide side,
                    const QuadratureSpec& quad) {
    if (!(pexp >= 1.0)) throw DomainError("weak_lp_norm: p must be >= 1");
    quad.validate();
    double gmax = g.max_abs();
    if (gmax == 0.0) return 0.0;

    // dense midpoint samples of |g| and the measure density
    const int n = 16384;
    double lo = g.grid_min(), hi = g.grid_max();
    double du = (hi - lo) / n;
    std::vector<double> absg(n), dens(n);
    for (int i = 0; i < n; ++i) {
        double u = lo + (i + 0.5) * du;
        absg[i] = std::abs(g(u));
        dens[i] = side == MeasureSide::SpaceWeight
                      ? weight_a(p, u)
                      : plancherel_density(p, u, DensityKind::Abs).real();
    }

    const int kThresholds = 400;
    double best = 0.0;
    for (int j = 0; j < kThresholds; ++j) {
        double t = gmax * 1e-8 * std::pow(1e12, static_cast<double>(j) / (kThresholds - 1));
        double mu = 0.0;
        for (int i = 0; i < n; ++i)
            if (absg[i] > t) mu += dens[i];
        mu *= du;
        best = std::max(best, t * std::pow(mu, 1.0 / pexp));
    }
    return best;
}

}  // namespace opdam
