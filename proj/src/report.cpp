#include "sixvertex/report.hpp"

#include "sixvertex/types.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace sixvertex {

void VerificationReport::add(const std::string& id, double residual, double tolerance,
                             const std::string& params) {
  checks.push_back({id, params, residual, tolerance, residual < tolerance});
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& [k, v] : other.timings_ms) timings_ms[k] += v;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

const CheckRecord* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

std::string format_residual(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

nlohmann::json matrix_to_json(const MatX& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back({m(r, c).real(), m(r, c).imag()});
  j["entries"] = std::move(entries);
  return j;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["artifact_version"] = kArtifactVersion;
  j["suite"] = suite;
  j["seed"] = seed;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"id", c.id},
                           {"params", c.params},
                           {"residual", format_residual(c.residual)},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  }
  j["timings_ms"] = timings_ms;
  j["pass"] = passed();
  return j;
}

}  // namespace sixvertex
