#pragma once

#include <cstdint>
#include <vector>

#include "sixvertex/types.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

/// Bilinear pairing of a bra built from creation operators with a ket built
/// from annihilation operators; bra and ket rapidities are independent.
struct ScalarProductInput {
  std::vector<SpectralPoint> bra;   // M points
  std::vector<SpectralPoint> ket;   // M points
  std::vector<SpectralPoint> sites; // L points
  const WeightSet* weights = nullptr;
};

/// Direct route through monodromy operators applied to state vectors.
Complex scalar_direct(const ScalarProductInput& in);

/// Same value through the factorized-basis single-flip operators.
Complex scalar_twisted(const ScalarProductInput& in);

/// Weighted bilinear sum of type-B and type-C domain-wall factors over site
/// subsets.
Complex scalar_bilinear(const ScalarProductInput& in);

/// Field-trig value as a field prefactor times the field-free symmetric-model
/// scalar product evaluated through its single-flip operators.
Complex scalar_field_factorized(const ScalarProductInput& in, Complex rho);

struct BetheState {
  std::vector<SpectralPoint> roots;   // fields default to 1; callers may attach
  std::vector<double> residuals;      // relative equation mismatch per root
};

/// All M=1 roots via the companion matrix of the cleared polynomial.
std::vector<BetheState> bethe_roots_m1(Complex rho,
                                       const std::vector<SpectralPoint>& sites);

/// One root set: exact polynomial solve for M=1, damped Newton with seeded
/// restarts for M>=2. Roots are sorted lexicographically by (re, im).
BetheState bethe_solve(Complex rho, const std::vector<SpectralPoint>& sites, int M,
                       std::uint64_t seed);

/// On-shell determinant form of the scalar product for the field-trig family.
/// Requires the ket roots to satisfy the rapidity constraints to 1e-8.
Complex slavnov_determinant(const std::vector<SpectralPoint>& mus,
                            const BetheState& bethe,
                            const std::vector<SpectralPoint>& sites, Complex rho);

struct IntermediateG {
  Complex by_definition;  // symmetric-model operator route
  Complex by_ladder;      // bordered-determinant route (needs on-shell kets)
};

/// Partial overlaps interpolating between the symmetric scalar product (k=0)
/// and the Cauchy-kernel determinant (k=M), computed both ways.
IntermediateG intermediate_G(int k, const std::vector<int>& subset,
                             const std::vector<Complex>& mus,
                             const BetheState& bethe,
                             const std::vector<SpectralPoint>& sites, Complex rho);

/// Matrix element of the on-shell determinant kernel (exposed for the
/// identity checks).
Complex slavnov_H_entry(int i, int j, const std::vector<Complex>& mus,
                        const std::vector<Complex>& nus,
                        const std::vector<SpectralPoint>& sites, Complex rho);

}  // namespace sixvertex
