#include "opdam/suite.hpp"

#include <algorithm>
#include <cmath>

#include "opdam/errors.hpp"

namespace opdam {

std::optional<Theorem> theorem_from_name(const std::string& name) {
    static const std::vector<Theorem> all = {
        Theorem::AdditiveHPW, Theorem::HPW,  Theorem::WeightedHPW,
        Theorem::DecayLemma,  Theorem::LpHPW, Theorem::HardyLittlewood,
        Theorem::Nash,        Theorem::Clarkson, Theorem::HausdorffYoung,
    };
    for (Theorem t : all)
        if (theorem_name(t) == name) return t;
    return std::nullopt;
}

SuiteRunner::SuiteRunner(RunConfig config) : config_(std::move(config)) {
    config_.quad.validate();
}

const std::vector<SampledFunction>& SuiteRunner::corpus() {
    if (corpus_.empty()) {
        corpus_ = generate_corpus(config_.corpus, config_.params, default_space_grid(),
                                  config_.quad);
        transforms_.resize(corpus_.size());
        transform_ready_.assign(corpus_.size(), false);
    }
    return corpus_;
}

const SampledFunction& SuiteRunner::transform_of(std::size_t i) {
    corpus();
    if (i >= corpus_.size()) throw DomainError("transform_of: index out of range");
    if (!transform_ready_[i]) {
        transforms_[i] =
            forward(corpus_[i], config_.params, default_spectral_grid(), config_.quad)
                .samples_only();
        transform_ready_[i] = true;
    }
    return transforms_[i];
}

const ConstantsFit& SuiteRunner::constants() {
    if (!constants_)
        constants_ = fit_c_constants(config_.params, config_.fit.bigN, config_.fit.lambda_max,
                                     config_.fit.samples);
    return *constants_;
}

void SuiteRunner::set_constants(const ConstantsFit& fit, const RayleighEstimate& est) {
    constants_ = fit;
    rayleigh_ = est;
}

const RayleighEstimate& SuiteRunner::rayleigh() {
    if (!rayleigh_) {
        corpus();
        std::vector<SampledFunction> hfs;
        hfs.reserve(corpus_.size());
        for (std::size_t i = 0; i < corpus_.size(); ++i) hfs.push_back(transform_of(i));
        rayleigh_ = estimate_lambda_min(corpus_, hfs, config_.params, config_.quad);
    }
    return *rayleigh_;
}

double SuiteRunner::lam_lower() {
    if (!lam_lower_) {
        corpus();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < corpus_.size(); ++i) {
            if (is_eval_member(i)) continue;  // training half only
            best = std::min(best, rayleigh_quotient(corpus_[i], transform_of(i), config_.params,
                                                    config_.quad));
        }
        if (!std::isfinite(best)) throw DomainError("lam_lower: no training members");
        lam_lower_ = best;
    }
    return *lam_lower_;
}

double SuiteRunner::c_p_empirical(double pexp) {
    auto it = c_p_cache_.find(pexp);
    if (it != c_p_cache_.end()) return it->second;
    corpus();
    double worst = 0.0;
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
        auto r = verify_hausdorff_young(corpus_[i], transform_of(i), config_.params, pexp,
                                        config_.quad);
        worst = std::max(worst, r.ratio);
    }
    c_p_cache_[pexp] = worst;
    return worst;
}

bool SuiteRunner::is_heat_member(std::size_t i) const {
    return corpus_[i].label().rfind("heat", 0) == 0;
}

SuiteResult SuiteRunner::run(const std::vector<Theorem>& selected) {
    corpus();
    SuiteResult result;
    auto wants = [&](Theorem t) {
        return std::find(selected.begin(), selected.end(), t) != selected.end();
    };
    const Parameters& p = config_.params;
    const QuadratureSpec& quad = config_.quad;

    if (wants(Theorem::AdditiveHPW)) {
        for (std::size_t i = 0; i < corpus_.size(); ++i) {
            if (!is_eval_member(i)) continue;
            result.reports.push_back(
                verify_additive_hpw(corpus_[i], transform_of(i), p, lam_lower(), quad));
        }
    }
    if (wants(Theorem::HPW) || wants(Theorem::WeightedHPW)) {
        const std::vector<double> exps = {1.0, 2.0, 3.0};
        for (std::size_t i = 0; i < corpus_.size(); ++i) {
            if (!is_eval_member(i)) continue;
            auto hpw =
                verify_hpw(corpus_[i], transform_of(i), p, constants(), lam_lower(), quad);
            if (wants(Theorem::HPW)) result.reports.push_back(hpw);
            if (wants(Theorem::WeightedHPW)) {
                for (double a : exps)
                    for (double b : exps)
                        result.reports.push_back(verify_weighted_hpw(
                            corpus_[i], transform_of(i), p, a, b, hpw.constant, quad));
            }
        }
    }
    if (wants(Theorem::DecayLemma)) {
        double cp = c_p_empirical(2.0);
        for (std::size_t i = 0; i < corpus_.size(); ++i) {
            if (!is_heat_member(i)) continue;
            for (double t : {2.0, 4.0})
                result.reports.push_back(verify_decay_lemma(corpus_[i], transform_of(i), p, 2.0,
                                                            0.25, t, constants(), cp, quad));
        }
    }
    if (wants(Theorem::LpHPW)) {
        double cp = c_p_empirical(2.0);
        for (std::size_t i = 0; i < corpus_.size(); ++i) {
            if (!is_heat_member(i)) continue;
            for (double b : {1.0, 3.0})
                result.reports.push_back(verify_lp_hpw(corpus_[i], transform_of(i), p, 2.0, 0.25,
                                                       b, constants(), cp, quad));
        }
    }
    if (wants(Theorem::HardyLittlewood)) {
        CumulativeWeight phi(p, default_space_grid()(default_space_grid().size() - 1), quad);
        auto phi_fn = [&phi](double x) { return phi(x); };
        for (std::size_t i = 0; i < corpus_.size(); ++i) {
            for (double q : {3.0, 4.0})
                result.reports.push_back(
                    verify_hardy_littlewood(corpus_[i], transform_of(i), p, q, phi_fn, quad));
        }
    }
    if (wants(Theorem::Nash)) {
        for (std::size_t i = 0; i < corpus_.size(); ++i)
            for (double s : {0.5, 1.0, 2.0})
                result.reports.push_back(
                    verify_nash(corpus_[i], transform_of(i), p, s, constants(), quad));
    }
    if (wants(Theorem::Clarkson)) {
        for (std::size_t i = 0; i < corpus_.size(); ++i)
            for (double s : {0.5, 1.0, 2.0})
                result.reports.push_back(verify_clarkson(corpus_[i], p, s, quad));
    }
    if (wants(Theorem::HausdorffYoung)) {
        for (std::size_t i = 0; i < corpus_.size(); ++i)
            for (double pe : {1.0, 1.5, 2.0})
                result.reports.push_back(
                    verify_hausdorff_young(corpus_[i], transform_of(i), p, pe, quad));
    }

    std::stable_sort(result.reports.begin(), result.reports.end(),
                     [](const InequalityReport& a, const InequalityReport& b) {
                         if (a.name != b.name)
                             return static_cast<int>(a.name) < static_cast<int>(b.name);
                         return a.params_echo < b.params_echo;
                     });
    for (const auto& r : result.reports) {
        if (r.out_of_regime) ++result.out_of_regime;
        else if (!r.pass) ++result.failures;
    }
    result.constants = constants();
    result.rayleigh = rayleigh();
    return result;
}

}  // namespace opdam
