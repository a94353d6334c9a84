#pragma once

#include <vector>

#include "sixvertex/report.hpp"
#include "sixvertex/scalar_product.hpp"
#include "sixvertex/types.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

/// Shared parameters for the rational-function identities behind the
/// determinant formulas.
struct IdentityContext {
  std::vector<Complex> mus;
  std::vector<Complex> nus;           // on-shell where required
  std::vector<SpectralPoint> sites;   // xi with z fields
  Complex rho{2.0, 0.0};
  std::vector<double> bethe_residuals;
};

/// Partial-fraction identity: the Cauchy-kernel column sums reproduce the
/// site-ratio values g_i for every i.
VerificationReport verify_phi_identity(const IdentityContext& ctx, double tol);

/// Cofactor-expansion identity for the kernel determinant (the Cramer
/// consequence of the partial-fraction identity).
VerificationReport verify_det_recursion(const IdentityContext& ctx, double tol);

/// On-shell summation identity relating the site sum of dressed kernel values
/// to determinant-column entries plus lower-border corrections.
VerificationReport verify_H_identity(const IdentityContext& ctx,
                                     const std::vector<int>& subset, int q, int i,
                                     double tol);

}  // namespace sixvertex
