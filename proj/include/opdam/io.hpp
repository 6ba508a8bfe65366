#pragma once

#include <string>
#include <vector>

#include "opdam/corpus.hpp"
#include "opdam/inequalities.hpp"
#include "opdam/measure.hpp"
#include "opdam/sampled_function.hpp"

namespace opdam {

// Format a double with 17 significant digits (lossless round trip).
std::string format_full(double v);

// RFC-4180 quoting: wrap in quotes when the field contains comma, quote or newline.
std::string csv_escape(const std::string& field);

// SampledFunction <-> CSV (columns x, re[, im]; header row included).
void write_function_csv(const SampledFunction& f, const std::string& path);
SampledFunction read_function_csv(const std::string& path, Side side,
                                  DecayClass decay = DecayClass::generic());

// SampledFunction <-> JSON (full structure: grid, values, side, decay, label).
void write_function_json(const SampledFunction& f, const std::string& path);
SampledFunction read_function_json(const std::string& path);

// ConstantsFit + RayleighEstimate <-> flat JSON document.
void write_constants_json(const ConstantsFit& fit, const RayleighEstimate& est,
                          const std::string& path);
void read_constants_json(const std::string& path, ConstantsFit& fit, RayleighEstimate& est);

// CorpusSpec from a JSON document.
CorpusSpec read_corpus_json(const std::string& path);
void write_corpus_json(const CorpusSpec& spec, const std::string& path);

// Reports: JSON array and flat CSV, one row per report.
void write_reports_json(const std::vector<InequalityReport>& reports, const std::string& path);
void write_reports_csv(const std::vector<InequalityReport>& reports, const std::string& path);

}  // namespace opdam
