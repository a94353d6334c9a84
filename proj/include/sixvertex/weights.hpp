#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sixvertex/report.hpp"
#include "sixvertex/types.hpp"

namespace sixvertex {

/// A rapidity together with its (non-additive) field coordinate.
/// Field-free models ignore the field; it defaults to 1 and must stay nonzero.
struct SpectralPoint {
  Complex rapidity{};
  Complex field{1.0, 0.0};
};

/// The six Boltzmann weights of an ice-rule vertex, normalized so the
/// all-parallel weight is 1. Each entry is a function of an ordered pair of
/// spectral points; the functions must be pure.
struct WeightSet {
  using Fn = std::function<Complex(const SpectralPoint&, const SpectralPoint&)>;
  Fn a_minus, b_plus, b_minus, c_plus, c_minus;
  std::optional<Complex> anisotropy;
  std::string label;
};

WeightSet make_generic_weights(WeightSet::Fn a_minus, WeightSet::Fn b_plus,
                               WeightSet::Fn b_minus, WeightSet::Fn c_plus,
                               WeightSet::Fn c_minus,
                               std::string label = "generic");

/// Trigonometric weights with site-dependent horizontal/vertical fields.
/// Requires rho outside {0, 1}.
WeightSet make_field_trig_weights(Complex rho);

/// Field-free symmetric trigonometric weights (b+ = b- = b, c+ = c- = c,
/// a- = 1); field coordinates are ignored.
WeightSet make_symmetric_trig_weights(Complex rho);

/// b = 0, c = 1, a- = 1: the R-matrix is the two-site swap at every pair.
WeightSet make_permutation_point_weights();

/// Field-trig weights conjugated by a random diagonal gauge g(p); c+ picks up
/// g(p1)/g(p2) and c- the reciprocal, so all unitarity and star-triangle
/// relations survive while c+ != c- and no displayed parameterization applies.
WeightSet make_gauged_weights(Complex rho, std::uint64_t seed);

/// 4x4 two-site matrix in the basis (uu, ud, du, dd); entry (1,1) is exactly 1
/// and the support is the six ice-rule positions.
Mat4 r_matrix(const WeightSet& w, const SpectralPoint& p1, const SpectralPoint& p2);

/// Five scalar inversion relations plus the 4x4 matrix inversion residual
/// || R12(p1,p2) R21(p2,p1) - I ||.
VerificationReport check_unitarity(const WeightSet& w, const SpectralPoint& p1,
                                   const SpectralPoint& p2, double tol);

/// The 8x8 star-triangle residual || R12 R13 R23 - R23 R13 R12 || together
/// with the eight scalar weight relations yb1..yb8 it implies.
VerificationReport check_yang_baxter(const WeightSet& w, const SpectralPoint& p1,
                                     const SpectralPoint& p2, const SpectralPoint& p3,
                                     double tol);

WeightSet weight_family_by_name(const std::string& name, Complex rho,
                                std::uint64_t seed = 0);

}  // namespace sixvertex
