#pragma once

#include <vector>

#include "sixvertex/fbasis.hpp"
#include "sixvertex/monodromy.hpp"
#include "sixvertex/report.hpp"
#include "sixvertex/tensor_space.hpp"
#include "sixvertex/types.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

/// Monodromy blocks conjugated into the factorized basis, held as structured
/// sums of tensor-product terms: Dt is one diagonal term, Ct and Bt carry one
/// single-flip term per site, At is a diagonal term plus Bt Dt^{-1} Ct.
struct TwistedOps {
  TensorOperator Dt, Ct, Bt, At;
  SpectralPoint aux;
  std::vector<SpectralPoint> sites;
};

/// Explicit closed forms; requires pairwise-distinct site rapidities.
TwistedOps build_twisted_ops(const WeightSet& w, const SpectralPoint& aux,
                             const std::vector<SpectralPoint>& sites);

/// Alternative assembly of the single-flip operators through the ordered
/// theta factor; agrees entrywise with the split-product forms.
TensorOperator twisted_B_theta(const WeightSet& w, const SpectralPoint& aux,
                               const std::vector<SpectralPoint>& sites);
TensorOperator twisted_C_theta(const WeightSet& w, const SpectralPoint& aux,
                               const std::vector<SpectralPoint>& sites);

struct DenseTwisted {
  MatX Dt, Ct, Bt, At;
};

/// Similarity-transform oracle: curlyF X curlyF^{-1} for each block.
DenseTwisted oracle_twist(const MonodromyBlocks& blocks, const FMatrixBundle& bundle);

/// The four block recurrences obtained by splitting off site 1, driven by the
/// explicit curlyF_{1..L} curlyF_{2..L}^{-1} corner matrix, plus its inverse
/// identity.
VerificationReport verify_twisted_recurrences(const WeightSet& w, const SpectralPoint& aux,
                                              const std::vector<SpectralPoint>& sites,
                                              double tol);

/// M-site creation/annihilation operators restricted to a selected site
/// subset (ordered), with the theta factors of the reduced construction.
TensorOperator reduced_B(const WeightSet& w, const SpectralPoint& mu,
                         const std::vector<SpectralPoint>& selected);
TensorOperator reduced_C(const WeightSet& w, const SpectralPoint& nu,
                         const std::vector<SpectralPoint>& selected);

}  // namespace sixvertex
