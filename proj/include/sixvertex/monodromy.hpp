#pragma once

#include <vector>

#include "sixvertex/report.hpp"
#include "sixvertex/tensor_space.hpp"
#include "sixvertex/types.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

/// Dense 2x2-block decomposition of the row transfer operator over the
/// auxiliary space: A and C are upper triangular, B and D lower triangular
/// with zero diagonals on B and C.
struct MonodromyBlocks {
  MatX A, B, C, D;
  SpectralPoint aux;
  std::vector<SpectralPoint> sites;
};

/// Ordered product over sites L..1 assembled by appending one site at a time
/// (dense; throws beyond the cutoff length).
MonodromyBlocks build_monodromy(const WeightSet& w, const SpectralPoint& aux,
                                const std::vector<SpectralPoint>& sites);

/// Same operator assembled by splitting off site 1 instead; used to
/// cross-check the two constructions against each other.
MonodromyBlocks build_monodromy_tail(const WeightSet& w, const SpectralPoint& aux,
                                     const std::vector<SpectralPoint>& sites);

/// Applies monodromy blocks to state vectors in O(L 2^L) without forming
/// dense matrices, by sweeping the local 2x2 factors across the chain.
class MonodromyApplier {
 public:
  MonodromyApplier(const WeightSet& w, const SpectralPoint& aux,
                   const std::vector<SpectralPoint>& sites);

  VecX apply_A(const VecX& v) const;
  VecX apply_B(const VecX& v) const;
  VecX apply_C(const VecX& v) const;
  VecX apply_D(const VecX& v) const;

 private:
  struct Entries { VecX a, b, c, d; };
  Entries sweep(const VecX& v) const;

  const WeightSet* w_;
  SpectralPoint aux_;
  std::vector<SpectralPoint> sites_;
};

MatX transfer_matrix(const MonodromyBlocks& blocks);

/// Triangularity, zero diagonals, the diagonal of D as a tensor product of
/// local weights, and the final row of D.
VerificationReport verify_block_structure(const WeightSet& w,
                                          const MonodromyBlocks& blocks, double tol);

/// The eight quadratic exchange relations among the blocks at a seeded pair of
/// auxiliary points, plus the full intertwining residual on the doubled
/// auxiliary space.
VerificationReport verify_exchange_relations(const WeightSet& w, int L, double tol,
                                             std::uint64_t seed);

/// Builds the creation-operator state for the given rapidities and compares
/// the dense action of A and D against the wanted/unwanted term expansion.
VerificationReport act_eigen_formulas(const WeightSet& w, const SpectralPoint& lambda,
                                      const std::vector<SpectralPoint>& sites,
                                      const std::vector<SpectralPoint>& nus, double tol);

/// Relative mismatch of the rapidity constraints, one entry per rapidity,
/// evaluated from the weight functions.
std::vector<double> bethe_residual(const WeightSet& w,
                                   const std::vector<SpectralPoint>& nus,
                                   const std::vector<SpectralPoint>& sites);

/// Specialized polynomial form for the field-trig family (cross-check route).
std::vector<double> bethe_residual_field_trig(Complex rho,
                                              const std::vector<Complex>& nus,
                                              const std::vector<SpectralPoint>& sites);

/// C(nu_M) ... C(nu_1) |all-down>.
VecX bethe_vector(const WeightSet& w, const std::vector<SpectralPoint>& sites,
                  const std::vector<SpectralPoint>& nus);

}  // namespace sixvertex
