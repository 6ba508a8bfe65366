#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opdam/corpus.hpp"
#include "opdam/inequalities.hpp"
#include "opdam/measure.hpp"
#include "opdam/parameters.hpp"
#include "opdam/quadrature.hpp"
#include "opdam/transform.hpp"

namespace opdam {

/// Window used when fitting the c-function growth constants.
struct FitWindow {
    double bigN = 2.0;
    double lambda_max = 100.0;
    int samples = 200;
};

/// Everything one verification run depends on; no hidden state.
struct RunConfig {
    Parameters params{0.0, 0.0};
    QuadratureSpec quad;
    CorpusSpec corpus = CorpusSpec::standard();
    FitWindow fit;
    std::string output_dir = ".";
    bool write_csv = true;
    bool write_json = true;
};

/// Parse a theorem name ("HPW", "Nash", ...); empty optional if unknown.
std::optional<Theorem> theorem_from_name(const std::string& name);

/// Aggregated outcome of a suite run.
struct SuiteResult {
    std::vector<InequalityReport> reports;
    ConstantsFit constants;
    RayleighEstimate rayleigh;
    int failures = 0;
    int out_of_regime = 0;
};

/// Runs the per-theorem verification sweeps over the corpus, computing each
/// member's transform exactly once. The lambda_min lower bound uses a
/// train/evaluate split: Rayleigh quotients estimated on even-index members,
/// constants tested on odd-index members only.
class SuiteRunner {
  public:
    explicit SuiteRunner(RunConfig config);

    const RunConfig& config() const { return config_; }
    const std::vector<SampledFunction>& corpus();
    /// Cached forward transform of member i (samples only, on the default
    /// spectral grid).
    const SampledFunction& transform_of(std::size_t i);

    const ConstantsFit& constants();
    /// Load fitted constants from a previous run instead of refitting.
    void set_constants(const ConstantsFit& fit, const RayleighEstimate& est);
    /// Rayleigh estimate over the full corpus (reported, not used for pass/fail).
    const RayleighEstimate& rayleigh();
    /// Lower-bound estimate from the training half of the corpus.
    double lam_lower();
    /// Empirical Hausdorff-Young constant: max over the corpus of
    /// ||Hf||_{p'} / ||f||_p.
    double c_p_empirical(double pexp);

    /// Run the selected theorem sweeps; reports come back deterministically
    /// sorted by (theorem, parameter echo).
    SuiteResult run(const std::vector<Theorem>& selected);

  private:
    bool is_eval_member(std::size_t i) const { return i % 2 == 1; }
    bool is_heat_member(std::size_t i) const;

    RunConfig config_;
    std::vector<SampledFunction> corpus_;
    std::vector<SampledFunction> transforms_;
    std::vector<bool> transform_ready_;
    std::optional<ConstantsFit> constants_;
    std::optional<RayleighEstimate> rayleigh_;
    std::optional<double> lam_lower_;
    std::map<double, double> c_p_cache_;
};

}  // namespace opdam
