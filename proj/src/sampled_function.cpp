#include "opdam/sampled_function.hpp"

#include <cmath>

namespace opdam {

SampledFunction SampledFunction::from_function(const std::function<Complex(double)>& f,
                                               const Eigen::ArrayXd& grid, DecayClass decay,
                                               Side side, std::string label) {
    Eigen::ArrayXcd vals(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i) vals(i) = f(grid(i));
    return SampledFunction(grid, std::move(vals), decay, side, f, std::move(label));
}

void SampledFunction::validate() const {
    if (grid_.size() < 2) throw DomainError("SampledFunction: grid needs at least two points");
    if (grid_.size() != values_.size())
        throw DomainError("SampledFunction: grid/value length mismatch");
    for (Eigen::Index i = 1; i < grid_.size(); ++i)
        if (!(grid_(i) > grid_(i - 1)))
            throw DomainError("SampledFunction: grid must be strictly increasing");
    for (Eigen::Index i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_(i).real()) || !std::isfinite(values_(i).imag()))
            throw DomainError("SampledFunction: non-finite sample value");
}

Complex SampledFunction::operator()(double x) const {
    if (evaluator_) return evaluator_(x);
    return interpolate(x);
}

Complex SampledFunction::interpolate(double x) const {
    if (x < grid_(0) || x > grid_(grid_.size() - 1)) return Complex(0.0, 0.0);
    // locate panel [i, i+1]
    Eigen::Index lo = 0, hi = grid_.size() - 1;
    while (hi - lo > 1) {
        Eigen::Index mid = (lo + hi) / 2;
        if (grid_(mid) <= x) lo = mid;
        else hi = mid;
    }
    Eigen::Index i = lo;
    double h = grid_(i + 1) - grid_(i);
    double t = (x - grid_(i)) / h;
    // finite-difference slopes (one-sided at the ends)
    auto slope = [&](Eigen::Index k) -> Complex {
        if (k == 0) return (values_(1) - values_(0)) / (grid_(1) - grid_(0));
        if (k == grid_.size() - 1)
            return (values_(k) - values_(k - 1)) / (grid_(k) - grid_(k - 1));
        return (values_(k + 1) - values_(k - 1)) / (grid_(k + 1) - grid_(k - 1));
    };
    Complex m0 = slope(i) * h;
    Complex m1 = slope(i + 1) * h;
    double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * values_(i) + (t3 - 2 * t2 + t) * m0 +
           (-2 * t3 + 3 * t2) * values_(i + 1) + (t3 - t2) * m1;
}

Eigen::ArrayXd uniform_grid(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) throw DomainError("uniform_grid: bad range");
    Eigen::ArrayXd g(n);
    for (int i = 0; i < n; ++i) g(i) = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return g;
}

Eigen::ArrayXd graded_grid(double core, double core_step, double outer, double outer_step) {
    // symmetric grid: dense |x| <= core, coarse out to |x| = outer
    std::vector<double> pos;
    long nc = std::lround(core / core_step);
    long no = std::lround((outer - core) / outer_step);
    for (long k = 1; k <= nc; ++k) pos.push_back(static_cast<double>(k) * core_step);
    for (long k = 1; k <= no; ++k) pos.push_back(core + static_cast<double>(k) * outer_step);
    Eigen::ArrayXd g(2 * static_cast<Eigen::Index>(pos.size()) + 1);
    Eigen::Index n = static_cast<Eigen::Index>(pos.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        g(n - 1 - i) = -pos[static_cast<std::size_t>(i)];
        g(n + 1 + i) = pos[static_cast<std::size_t>(i)];
    }
    g(n) = 0.0;
    return g;
}

Eigen::ArrayXd default_space_grid() { return graded_grid(6.0, 1.0 / 64.0, 12.0, 1.0 / 8.0); }

Eigen::ArrayXd default_spectral_grid() { return graded_grid(16.0, 0.1, 40.0, 0.5); }

}  // namespace opdam
