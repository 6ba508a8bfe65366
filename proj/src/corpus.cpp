#include "opdam/corpus.hpp"

#include <cmath>

#include "opdam/errors.hpp"
#include "opdam/transform.hpp"

namespace opdam {

namespace {

std::string trim_num(double v) {
    std::string s = std::to_string(v);
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

// C^2 smoothstep profile: q(v) = 6v^5 - 15v^4 + 10v^3 on v in [0,1]
double smoothstep5(double v) { return ((6.0 * v - 15.0) * v + 10.0) * v * v * v; }

}  // namespace

CorpusSpec CorpusSpec::standard() {
    CorpusSpec s;
    s.families = {Family::heat(0.5),     Family::heat(1.0),     Family::heat(2.0),
                  Family::gaussian(0.5), Family::gaussian(1.0), Family::gaussian(2.0),
                  Family::bump(0.0, 1.0), Family::bump(0.0, 2.0), Family::bump(0.5, 1.0)};
    s.scale_factors = {1.0, 2.0};
    return s;
}

SampledFunction make_function(const Family& fam, const Parameters& p, const Eigen::ArrayXd& grid,
                              const QuadratureSpec& quad) {
    switch (fam.kind) {
        case Family::Kind::Heat: {
            if (!(fam.a > 0.0)) throw DomainError("make_function: heat time must be positive");
            return heat_kernel(p, fam.a, grid, quad);
        }
        case Family::Kind::Gaussian: {
            double rate = fam.a;
            if (!(rate > 0.0)) throw DomainError("make_function: gaussian rate must be positive");
            auto ev = [rate](double x) { return Complex(std::exp(-rate * x * x), 0.0); };
            return SampledFunction::from_function(ev, grid, DecayClass::gaussian(rate),
                                                  Side::Space, "gaussian_r=" + trim_num(rate));
        }
        case Family::Kind::Bump: {
            double center = fam.a, width = fam.b;
            if (!(width > 0.0)) throw DomainError("make_function: bump width must be positive");
            auto ev = [center, width](double x) {
                double u = std::fabs(x - center) / width;
                if (u >= 1.0) return Complex(0.0, 0.0);
                return Complex(smoothstep5(1.0 - u), 0.0);
            };
            double radius = std::fabs(center) + width;
            return SampledFunction::from_function(
                ev, grid, DecayClass::compact(radius), Side::Space,
                "bump_c=" + trim_num(center) + "_w=" + trim_num(width));
        }
    }
    throw DomainError("make_function: unknown family");
}

SampledFunction scale(const SampledFunction& f, double c) {
    if (!(c > 0.0)) throw DomainError("scale: factor must be positive");
    if (c == 1.0) return f;
    Eigen::ArrayXd grid = f.grid() / c;
    DecayClass d = f.decay();
    if (d.kind == DecayClass::Kind::Compact) d.param /= c;
    else if (d.kind == DecayClass::Kind::Gaussian) d.param *= c * c;
    std::function<Complex(double)> ev;
    if (f.has_evaluator()) {
        SampledFunction copy = f;
        ev = [copy, c](double x) { return copy(c * x); };
    }
    return SampledFunction(grid, f.values(), d, f.side(), ev,
                           f.label() + "_c=" + trim_num(c));
}

std::vector<SampledFunction> generate_corpus(const CorpusSpec& spec, const Parameters& p,
                                             const Eigen::ArrayXd& grid,
                                             const QuadratureSpec& quad) {
    std::vector<SampledFunction> out;
    for (double c : spec.scale_factors)
        if (!(c > 0.0)) throw DomainError("generate_corpus: scale factors must be positive");
    for (const Family& fam : spec.families) {
        SampledFunction base = make_function(fam, p, grid, quad);
        for (double c : spec.scale_factors) {
            SampledFunction member = scale(base, c);
            for (double a : {0.0, 1.0, 2.0, 4.0}) {
                for (double pw : {1.0, 2.0}) {
                    double nrm = weighted_norm(member, p, pw, a, MeasureSide::SpaceWeight, quad);
                    if (!std::isfinite(nrm))
                        throw GenerationError("generate_corpus: member " + member.label() +
                                              " failed the finiteness screen");
                }
            }
            out.push_back(std::move(member));
        }
    }
    return out;
}

}  // namespace opdam
