#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sixvertex/types.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

std::uint64_t splitmix64(std::uint64_t x);

/// Seeded draws of rapidities and fields. Values come from an annulus sector
/// |arg| <= pi/3 so that every square root of a pairwise product stays on the
/// principal sheet and the determinant/sum route identities hold exactly
/// rather than up to sign. Rejection keeps all guarded denominators away from
/// zero and site rapidities pairwise separated.
class ParameterSampler {
 public:
  explicit ParameterSampler(std::uint64_t seed);

  Complex sector_annulus(double r_min, double r_max);
  Complex rapidity();     // modulus in [0.5, 1.5]
  Complex field_value();  // modulus in [0.5, 2.0]

  SpectralPoint point(bool with_field = true);

  /// n points with pairwise rapidity separation >= min_sep, each admissible
  /// against every previously drawn point of the list under w (when given).
  std::vector<SpectralPoint> distinct_points(int n, const WeightSet* w,
                                             bool with_field = true,
                                             double min_sep = 1e-2);

  /// One point admissible against (and separated from) every point in `others`.
  SpectralPoint point_away_from(const std::vector<SpectralPoint>& others,
                                const WeightSet* w, bool with_field = true,
                                double min_sep = 1e-2);

 private:
  bool pair_admissible(const WeightSet& w, const SpectralPoint& a,
                       const SpectralPoint& b) const;
  std::mt19937_64 rng_;
};

}  // namespace sixvertex
