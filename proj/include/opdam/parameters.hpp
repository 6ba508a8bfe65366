#pragma once

#include <cmath>
#include <complex>

#include "opdam/errors.hpp"

namespace opdam {

using Complex = std::complex<double>;

/// The parameter triple (alpha, beta, rho = alpha + beta + 1) that every
/// kernel, weight and density depends on. Admissibility is
/// alpha >= beta >= -1/2 with alpha > -1/2, which forces rho > 0.
class Parameters {
  public:
    Parameters(double alpha, double beta) : alpha_(alpha), beta_(beta), rho_(alpha + beta + 1.0) {
        if (!(alpha >= beta) || !(beta >= -0.5) || !(alpha > -0.5))
            throw DomainError("Parameters: need alpha >= beta >= -1/2 and alpha > -1/2");
        if (!(rho_ > 0.0)) throw DomainError("Parameters: rho must be positive");
    }

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double rho() const { return rho_; }

    /// Same parameters shifted by (+1, +1); used by the derivative-free
    /// kernel formula. Its rho is rho + 2.
    Parameters shifted() const { return Parameters(alpha_ + 1.0, beta_ + 1.0); }

    bool operator==(const Parameters& o) const { return alpha_ == o.alpha_ && beta_ == o.beta_; }

  private:
    double alpha_;
    double beta_;
    double rho_;
};

}  // namespace opdam
