#pragma once

#include <complex>
#include <functional>

#include "opdam/parameters.hpp"

namespace opdam {

/// Principal-branch log-Gamma for complex argument (Lanczos approximation,
/// reflection for Re z < 1/2). Throws PoleError at nonpositive integers.
Complex ln_gamma(Complex z);

/// Gamma via exp(ln_gamma).
Complex gamma_fn(Complex z);

/// Gauss hypergeometric 2F1(a, b; c; z) for real z <= 0.
///
/// Small |z| is summed in the Pfaff variable w = z/(z-1) in [0, 1); once w
/// gets close to 1 the series is exchanged for the 1/(1-z) connection
/// formula, whose argument is 1 - w. The degenerate case b - a near an
/// integer is handled by a symmetric parameter nudge.
Complex gauss_2f1(Complex a, Complex b, Complex c, double z);

/// Jacobi function phi_lambda(x) = 2F1((rho+il)/2, (rho-il)/2; alpha+1; -sinh^2 x).
/// Even in x; phi(0) = 1.
Complex jacobi_phi(const Parameters& p, Complex lambda, double x);

/// Opdam kernel G_lambda(x), the eigenfunction of the Jacobi-Cherednik
/// operator with eigenvalue i*lambda, normalized so G_lambda(0) = 1.
/// Computed from the derivative-free formula
///   G = phi + (rho + i lambda) / (4 (alpha+1)) * sinh(2x) * phi^{alpha+1,beta+1}.
Complex opdam_kernel(const Parameters& p, Complex lambda, double x);

/// Jacobi-Cherednik operator applied to an evaluable function:
///   T f(x) = f'(x) + [(2a+1) coth x + (2b+1) tanh x] (f(x) - f(-x))/2 - rho f(-x).
/// Derivatives by Richardson-extrapolated central differences. For
/// |x| < 1e-4 the coth singularity is removed by the analytic limit
/// T f(0) = (2a+2) f'(0) - rho f(0).
Complex cherednik_apply(const std::function<Complex(double)>& f, const Parameters& p, double x);

}  // namespace opdam
