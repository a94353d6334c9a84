#pragma once

#include <vector>

#include "sixvertex/types.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

enum class DwpfKind { B, C };

/// Domain-wall matrix element on M sites: type B is the all-down bra against
/// the all-up ket through creation operators; type C the reverse through
/// annihilation operators.
struct DwpfInput {
  DwpfKind kind = DwpfKind::B;
  std::vector<SpectralPoint> rapidities;
  std::vector<SpectralPoint> sites;
  const WeightSet* weights = nullptr;
};

struct BraKetValue {
  Complex untwisted;
  Complex twisted;
};

/// Direct bra-ket route: the untwisted value through monodromy operators
/// applied to state vectors, and the twisted value through the reduced
/// single-flip operators. They differ by the pairwise a-minus factor.
BraKetValue dwpf_bra_ket(const DwpfInput& in);

/// Peel-one-rapidity recursion, memoized over remaining-site subsets.
Complex dwpf_recursive(const DwpfInput& in);

/// Permutation sum with the ordered theta factor (M! terms).
Complex dwpf_sum(const DwpfInput& in);

/// Cauchy-kernel determinant of the field-free symmetric model.
Complex izergin_determinant(const std::vector<Complex>& rapidities,
                            const std::vector<Complex>& sites, Complex rho);

/// Reciprocal condition estimate of the kernel matrix; reported alongside
/// determinant values so accuracy loss near coincident parameters is visible.
double izergin_kernel_rcond(const std::vector<Complex>& rapidities,
                            const std::vector<Complex>& sites, Complex rho);

/// Field-dressed determinant: half-integer powers of the field ratios times
/// the Cauchy-kernel determinant; type C reverses the field pairing.
Complex dwpf_determinant(const DwpfInput& in, Complex rho);

}  // namespace sixvertex
