#include "sixvertex/sampling.hpp"

#include <cmath>

namespace sixvertex {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

ParameterSampler::ParameterSampler(std::uint64_t seed) : rng_(splitmix64(seed)) {}

Complex ParameterSampler::sector_annulus(double r_min, double r_max) {
  std::uniform_real_distribution<double> radius(r_min, r_max);
  std::uniform_real_distribution<double> angle(-M_PI / 3.0, M_PI / 3.0);
  const double r = radius(rng_);
  const double phi = angle(rng_);
  return Complex{r * std::cos(phi), r * std::sin(phi)};
}

Complex ParameterSampler::rapidity() { return sector_annulus(0.5, 1.5); }

Complex ParameterSampler::field_value() { return sector_annulus(0.5, 2.0); }

SpectralPoint ParameterSampler::point(bool with_field) {
  SpectralPoint p;
  p.rapidity = rapidity();
  p.field = with_field ? field_value() : Complex{1.0, 0.0};
  return p;
}

bool ParameterSampler::pair_admissible(const WeightSet& w, const SpectralPoint& a,
                                       const SpectralPoint& b) const {
  try {
    (void)w.a_minus(a, b);
    (void)w.b_plus(a, b);
    (void)w.b_minus(a, b);
    (void)w.c_plus(a, b);
    (void)w.c_minus(a, b);
    (void)w.a_minus(b, a);
    (void)w.b_plus(b, a);
    (void)w.b_minus(b, a);
    (void)w.c_plus(b, a);
    (void)w.c_minus(b, a);
  } catch (const SingularPoint&) {
    return false;
  }
  return true;
}

std::vector<SpectralPoint> ParameterSampler::distinct_points(int n, const WeightSet* w,
                                                             bool with_field,
                                                             double min_sep) {
  std::vector<SpectralPoint> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) < n)
    pts.push_back(point_away_from(pts, w, with_field, min_sep));
  return pts;
}

SpectralPoint ParameterSampler::point_away_from(const std::vector<SpectralPoint>& others,
                                                const WeightSet* w, bool with_field,
                                                double min_sep) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    SpectralPoint cand = point(with_field);
    bool ok = true;
    for (const auto& o : others) {
      if (std::abs(cand.rapidity - o.rapidity) < min_sep) { ok = false; break; }
      if (w != nullptr && !pair_admissible(*w, cand, o)) { ok = false; break; }
    }
    if (ok) return cand;
  }
  throw SingularPoint("sampler failed to draw an admissible point");
}

}  // namespace sixvertex
