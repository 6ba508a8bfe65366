#pragma once

#include "opdam/measure.hpp"
#include "opdam/parameters.hpp"
#include "opdam/quadrature.hpp"
#include "opdam/sampled_function.hpp"

namespace opdam {

/// Forward transform Hf(lambda) = integral f(x) G_lambda(-x) A(x) dx,
/// evaluated on the given lambda grid. The integration radius comes from the
/// truncation policy and the function's decay class.
SampledFunction forward(const SampledFunction& f, const Parameters& p,
                        const Eigen::ArrayXd& lambdas, const QuadratureSpec& quad);

/// Inverse transform H^{-1}g(x) = integral g(lambda) G_lambda(x) dsigma(lambda)
/// with the signed density, on the given x grid.
SampledFunction inverse(const SampledFunction& g, const Parameters& p, const Eigen::ArrayXd& xs,
                        const QuadratureSpec& quad);

/// Heat kernel E_t = H^{-1}(e^{-t lambda^2}) on the given x grid.
SampledFunction heat_kernel(const Parameters& p, double t, const Eigen::ArrayXd& xs,
                            const QuadratureSpec& quad);

/// Weighted norm (integral (|x|^a |h(x)|)^p dmu)^{1/p} under the chosen
/// measure; p = infinity gives the essential sup of |x|^a |h| over the grid.
double weighted_norm(const SampledFunction& h, const Parameters& p, double pexp, double a,
                     MeasureSide side, const QuadratureSpec& quad);

/// Plancherel check. `residual` is |LHS - RHS| / LHS with
///   LHS = integral |f|^2 A dx,
///   RHS = integral Hf(lambda) conj(H f_check(-lambda)) dsigma(lambda)
/// computed verbatim with the signed density (f_check(x) = f(-x)).
/// `simplified_ratio` is ||Hf||_{L^2(|sigma|)}^2 / ||f||_{L^2(A)}^2 and
/// `rhs_imag_fraction` is |Im RHS| / LHS.
struct PlancherelReport {
    double residual = 0.0;
    double simplified_ratio = 0.0;
    double rhs_imag_fraction = 0.0;
};

PlancherelReport plancherel_residual(const SampledFunction& f, const Parameters& p,
                                     const QuadratureSpec& quad);

/// Integration radius implied by a decay class and truncation policy
/// (also used by the norm integrals on the space side).
double truncation_radius(const SampledFunction& f, const Parameters& p,
                         const QuadratureSpec& quad);

}  // namespace opdam
