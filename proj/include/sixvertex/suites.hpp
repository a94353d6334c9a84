#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sixvertex/report.hpp"
#include "sixvertex/types.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

struct SuiteConfig {
  std::string suite = "all";
  std::string weight_family = "field-trig";
  Complex rho{2.0, 0.0};
  int L = 3;
  int M = 2;
  std::vector<std::uint64_t> seeds{7};
  std::map<std::string, double> tol_overrides;
  std::string out_path;
};

struct SuiteResult {
  VerificationReport report;
  nlohmann::json details = nlohmann::json::object();
};

/// Runs one named verification suite. Deterministic for a fixed config and
/// independent of the worker-thread count (SIXVERTEX_THREADS).
SuiteResult run_suite(const SuiteConfig& cfg);

/// Factorial-sum versus determinant timings and value spreads for the
/// domain-wall partition function, M = 2 .. cfg.M.
nlohmann::json run_benchmark(const SuiteConfig& cfg);

/// Full report document (config echo + checks + details).
nlohmann::json suite_document(const SuiteConfig& cfg, const SuiteResult& result);

/// Copy of `w` with one named weight function shifted by `delta`
/// ("a-" | "b+" | "b-" | "c+" | "c-"); used as a negative control.
WeightSet perturb_weight_function(const WeightSet& w, const std::string& which,
                                  Complex delta);

double tolerance_for(const SuiteConfig& cfg, const std::string& name,
                     double fallback);

}  // namespace sixvertex
