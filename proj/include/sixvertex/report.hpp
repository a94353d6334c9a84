#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sixvertex/types.hpp"

namespace sixvertex {

struct CheckRecord {
  std::string id;
  std::string params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Accumulates per-identity residuals for one verification sweep.
/// A report passes iff every record passes.
struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::map<std::string, double> timings_ms;

  void add(const std::string& id, double residual, double tolerance,
           const std::string& params = {});
  void merge(const VerificationReport& other);
  bool passed() const;
  double max_residual() const;
  const CheckRecord* first_failure() const;
  nlohmann::json to_json() const;
};

// 17 significant digits, round-trip safe.
std::string format_residual(double value);

/// Debug export: row-major flat array of [re, im] pairs plus dimensions.
nlohmann::json matrix_to_json(const MatX& m);

}  // namespace sixvertex
