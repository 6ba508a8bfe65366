#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opdam/parameters.hpp"
#include "opdam/quadrature.hpp"
#include "opdam/sampled_function.hpp"

namespace opdam {

/// One test-function family instance.
struct Family {
    enum class Kind { Heat, Gaussian, Bump };
    Kind kind;
    double a = 0.0;  // Heat: t; Gaussian: rate; Bump: center
    double b = 0.0;  // Bump: width

    static Family heat(double t) { return {Kind::Heat, t, 0.0}; }
    static Family gaussian(double rate) { return {Kind::Gaussian, rate, 0.0}; }
    static Family bump(double center, double width) { return {Kind::Bump, center, width}; }
};

/// Deterministic description of the verification corpus.
struct CorpusSpec {
    std::vector<Family> families;
    std::vector<double> scale_factors{1.0};
    std::uint64_t seed = 0;

    static CorpusSpec standard();
};

/// Realize one family member on the given space grid.
/// Heat members delegate to heat_kernel (same code path as the transform
/// module); Gaussian and Bump are closed-form.
SampledFunction make_function(const Family& fam, const Parameters& p, const Eigen::ArrayXd& grid,
                              const QuadratureSpec& quad);

/// Scaling f_c(x) = f(c x): grid divides by c, Compact support radius
/// divides by c, Gaussian rate multiplies by c^2.
SampledFunction scale(const SampledFunction& f, double c);

/// Expand a spec into the ordered member list. Every member is screened for
/// finite ||f||_1, ||f||_2 and || |x|^a f || up to a = 4.
std::vector<SampledFunction> generate_corpus(const CorpusSpec& spec, const Parameters& p,
                                             const Eigen::ArrayXd& grid,
                                             const QuadratureSpec& quad);

}  // namespace opdam
