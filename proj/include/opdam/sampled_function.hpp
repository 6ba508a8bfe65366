#pragma once

#include <Eigen/Core>
#include <complex>
#include <functional>
#include <string>
#include <utility>

#include "opdam/errors.hpp"
#include "opdam/parameters.hpp"

namespace opdam {

/// Which side of the transform a function lives on.
enum class Side { Space, Spectral };

/// Decay metadata driving tail truncation of the transform integrals.
struct DecayClass {
    enum class Kind { Compact, Gaussian, Generic };
    Kind kind = Kind::Generic;
    double param = 0.0;  // Compact: support radius; Gaussian: rate r in e^{-r x^2}

    static DecayClass compact(double radius) { return {Kind::Compact, radius}; }
    static DecayClass gaussian(double rate) { return {Kind::Gaussian, rate}; }
    static DecayClass generic() { return {Kind::Generic, 0.0}; }
};

/// A complex-valued function on a strictly increasing 1-D grid.
///
/// Evaluation between grid points uses an attached analytic evaluator when
/// one is present (corpus members, transforms of known functions), otherwise
/// cubic Hermite interpolation of the stored samples; outside the grid the
/// function is treated as zero.
class SampledFunction {
  public:
    SampledFunction() = default;
    SampledFunction(Eigen::ArrayXd grid, Eigen::ArrayXcd values, DecayClass decay, Side side,
                    std::function<Complex(double)> evaluator = {}, std::string label = {})
        : grid_(std::move(grid)),
          values_(std::move(values)),
          decay_(decay),
          side_(side),
          evaluator_(std::move(evaluator)),
          label_(std::move(label)) {
        validate();
    }

    /// Build from an analytic function sampled on the given grid.
    static SampledFunction from_function(const std::function<Complex(double)>& f,
                                         const Eigen::ArrayXd& grid, DecayClass decay, Side side,
                                         std::string label = {});

    const Eigen::ArrayXd& grid() const { return grid_; }
    const Eigen::ArrayXcd& values() const { return values_; }
    DecayClass decay() const { return decay_; }
    Side side() const { return side_; }
    const std::string& label() const { return label_; }
    bool has_evaluator() const { return static_cast<bool>(evaluator_); }

    Complex operator()(double x) const;

    double grid_min() const { return grid_(0); }
    double grid_max() const { return grid_(grid_.size() - 1); }
    double max_abs() const { return values_.abs().maxCoeff(); }

    /// Copy without the analytic evaluator (what serialization preserves).
    SampledFunction samples_only() const {
        return SampledFunction(grid_, values_, decay_, side_, {}, label_);
    }

  private:
    void validate() const;
    Complex interpolate(double x) const;

    Eigen::ArrayXd grid_;
    Eigen::ArrayXcd values_;
    DecayClass decay_;
    Side side_ = Side::Space;
    std::function<Complex(double)> evaluator_;
    std::string label_;
};

/// Uniform grid helper: n points covering [lo, hi].
Eigen::ArrayXd uniform_grid(double lo, double hi, int n);

/// Symmetric graded grid: step core_step on [-core, core], step outer_step
/// out to +-outer.
Eigen::ArrayXd graded_grid(double core, double core_step, double outer, double outer_step);

/// Default grids: space on [-12, 12] (covers heat kernels up to t = 2 to
/// below integrand tolerance), spectral on [-40, 40].
Eigen::ArrayXd default_space_grid();
Eigen::ArrayXd default_spectral_grid();

}  // namespace opdam
