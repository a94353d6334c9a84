#pragma once

#include <vector>

#include "sixvertex/permutation.hpp"
#include "sixvertex/report.hpp"
#include "sixvertex/types.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

/// One tensor-product term: a 2x2 factor per site.
struct ProductTerm {
  std::vector<Mat2> factors;
};

/// Operator on (C^2)^{tensor L} held as a sum of tensor-product terms.
/// Application to a vector costs O(terms * L * 2^L); materializing a dense
/// matrix is allowed only up to the dense cutoff.
class TensorOperator {
 public:
  TensorOperator(int sites, std::vector<ProductTerm> terms);

  static TensorOperator identity(int sites);
  static TensorOperator single(std::vector<Mat2> factors);

  int sites() const { return sites_; }
  const std::vector<ProductTerm>& terms() const { return terms_; }

  VecX apply(const VecX& v) const;
  MatX dense() const;

  TensorOperator operator*(const TensorOperator& o) const;  // term-wise products
  TensorOperator operator+(const TensorOperator& o) const;
  TensorOperator scaled(Complex factor) const;

 private:
  int sites_ = 0;
  std::vector<ProductTerm> terms_;
};

/// In-place action of a 2x2 matrix on one site of a state vector.
void apply_site_inplace(const Mat2& m, int site, int L, VecX& v);

MatX embed_site_op(const Mat2& m, int site, int L);

/// Acts as `m` on slots (i, j) in that order and as identity elsewhere;
/// embed_pair_op(m, j, i) == embed_pair_op(P m P, i, j).
MatX embed_pair_op(const Mat4& m, int i, int j, int L);

enum class Hand { Left, Right };

/// Ordered product of two-site R operators sharing one pivot slot.
/// Left hand:  R_{pivot,k} with k running backwards through `others`
///             (R_{pivot,last} applied leftmost).
/// Right hand: R_{k,pivot} with k ascending (R_{first,pivot} leftmost).
MatX ordered_R_product(const WeightSet& w, int pivot, const std::vector<int>& others,
                       const std::vector<SpectralPoint>& points, Hand hand);

/// Swap-operator representation of sigma; conjugating by it relabels site
/// factors: perm_rep(sigma^{-1}) X perm_rep(sigma) carries a factor at site k
/// to site sigma(k).
MatX perm_rep(const Permutation& sigma, int L);

/// Braid-form product for sigma's adjacent word with rapidity tracking: each
/// elementary factor is P_{a,a+1} R_{a,a+1} evaluated at the currently held
/// points of slots a, a+1.
MatX r_hat_rep(const Permutation& sigma, const WeightSet& w,
               std::vector<SpectralPoint> points);

/// Same as r_hat_rep for an explicit word (used for the braid relations whose
/// two sides are different words for one permutation).
MatX r_hat_of_word(const std::vector<int>& letters_rightmost_first, const WeightSet& w,
                   std::vector<SpectralPoint> points);

/// perm_rep(sigma^{-1}) * r_hat_rep(sigma); for the cycle this equals the
/// left-handed ordered product with pivot 1.
MatX permuted_R(const Permutation& sigma, const WeightSet& w,
                const std::vector<SpectralPoint>& points);

/// Global inversion and co-cycle identities for ordered R products at seeded
/// points.
VerificationReport verify_product_identities(const WeightSet& w, int L, double tol,
                                             std::uint64_t seed);

/// Braid-group relations for the swap representation (plain matrices) and for
/// the braid-form R factors (with rapidity tracking across the word).
VerificationReport verify_rhat_relations(const WeightSet& w,
                                         const std::vector<SpectralPoint>& points,
                                         double tol);

}  // namespace sixvertex
