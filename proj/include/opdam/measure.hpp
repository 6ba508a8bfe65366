#pragma once

#include <complex>

#include "opdam/parameters.hpp"
#include "opdam/quadrature.hpp"
#include "opdam/sampled_function.hpp"

namespace opdam {

/// Selects the space-side weight A(x) dx or the spectral-side measure d|sigma|.
enum class MeasureSide { SpaceWeight, PlancherelAbs };

/// Signed density (complex, used by the inverse transform) vs its modulus
/// (used by every norm).
enum class DensityKind { Signed, Abs };

/// Weight A(x) = (sinh|x|)^{2 alpha + 1} (cosh|x|)^{2 beta + 1}.
double weight_a(const Parameters& p, double x);

/// Harish-Chandra-type c-function
///   C(lambda) = 2^{rho - i lambda} Gamma(alpha+1) Gamma(i lambda)
///               / (Gamma((rho + i lambda)/2) Gamma((alpha - beta + 1 + i lambda)/2)).
/// Poles at lambda in i N (including 0) raise PoleError.
Complex harish_chandra_c(const Parameters& p, Complex lambda);

/// |C(lambda)|^{-2} for real lambda != 0, evaluated in log space.
double inv_c_abs_sq(const Parameters& p, double lambda);

/// Plancherel density at real lambda:
///   Signed: (1 + i rho / lambda) / (8 pi |C(lambda)|^2)
///   Abs:    sqrt(1 + rho^2 / lambda^2) / (8 pi |C(lambda)|^2)
/// Both vanish at lambda = 0 by the continuity limit.
Complex plancherel_density(const Parameters& p, double lambda, DensityKind kind);

/// Measure of the ball B_r = {|x| <= r} under the chosen side.
double ball_measure(const Parameters& p, double r, MeasureSide side, const QuadratureSpec& quad);

/// Fitted constants of the c-function growth estimate
/// k1 |lambda|^{2 alpha + 2} <= |C(lambda)|^{-2} <= k2 |lambda|^{2 alpha + 2}
/// on [bigN, lambda_max], plus the measure constants derived from k2.
struct ConstantsFit {
    double k1 = 0.0;
    double k2 = 0.0;
    double bigN = 0.0;
    double lambda_max = 0.0;

    /// Ball bound sigma(B_r) <= c_sigma r^{2 alpha + 3}.
    double c_sigma(const Parameters& p) const {
        double rho = p.rho();
        return k2 / (4.0 * M_PI) * std::sqrt(1.0 + rho * rho) *
               (1.0 + 1.0 / (2.0 * p.alpha() + 3.0));
    }
    /// ||gamma_t||_q^q <= c_gamma + d_gamma(q) t^{-(alpha + 3/2)}.
    double c_gamma(const Parameters& p) const {
        double rho = p.rho();
        return k2 / (4.0 * M_PI) * std::sqrt(1.0 + rho * rho);
    }
    double d_gamma(const Parameters& p, double q) const;
};

/// min/max of |C(lambda)|^{-2} / |lambda|^{2 alpha + 2} over log-spaced
/// samples of [bigN, lambda_max].
ConstantsFit fit_c_constants(const Parameters& p, double bigN, double lambda_max, int samples);

/// (integral of e^{-q t lambda^2} d|sigma|)^{1/q}.
double gamma_t_norm(const Parameters& p, double t, double q, const QuadratureSpec& quad);

/// || |x|^{-a} chi_{B_r} ||_{L^q(A)} for q >= 2, 0 < a < 1/q, r > 1.
double weighted_indicator_norm(const Parameters& p, double r, double a, double q,
                               const QuadratureSpec& quad);

/// The proof constant of the indicator bound: (2 A(1)/(1 - a q) + 2)^{1/q}.
double indicator_bound_constant(const Parameters& p, double a, double q);

/// Canonical Young function phi(x) = A(B_{|x|}), the cumulative weight
/// measure. Satisfies the Young condition with C = 1 exactly.
double young_canonical(const Parameters& p, double x, const QuadratureSpec& quad);

/// Precomputed cumulative weight, cheap to evaluate many times.
class CumulativeWeight {
  public:
    CumulativeWeight(const Parameters& p, double x_max, const QuadratureSpec& quad);
    double operator()(double x) const;

  private:
    SampledFunction table_;
};

/// Orlicz-type norm (integral of |f|^q |phi|^{q-2} A dx)^{1/q}, q > 2.
double orlicz_norm(const SampledFunction& f, const Parameters& p, double q,
                   const std::function<double(double)>& phi, const QuadratureSpec& quad);

/// Weak L^p norm sup_t t mu(|g| > t)^{1/p}, with the sup over a geometric
/// threshold grid. Never exceeds the strong L^p norm.
double weak_lp_norm(const SampledFunction& g, const Parameters& p, double pexp, MeasureSide side,
                    const QuadratureSpec& quad);

}  // namespace opdam
