#include "sixvertex/fbasis.hpp"

#include <algorithm>
#include <cmath>

namespace sixvertex {

namespace {

MatX diag_to_dense(const VecX& d) {
  MatX m = MatX::Zero(d.size(), d.size());
  m.diagonal() = d;
  return m;
}

VecX diag_inverse(const VecX& d) {
  VecX out(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (std::abs(d[i]) < 1e-12) throw NonInvertible("diagonal entry below 1e-12");
    out[i] = 1.0 / d[i];
  }
  return out;
}

/// Diagonal pair factor with value at the component where both slots are down.
VecX diag_pair(int slot_a, int slot_b, int L, Complex value) {
  VecX d = VecX::Ones(dim_of(L));
  for (Eigen::Index n = 0; n < d.size(); ++n)
    if (site_bit(n, slot_a, L) == 1 && site_bit(n, slot_b, L) == 1) d[n] = value;
  return d;
}

}  // namespace

SqrtAMinusTable::SqrtAMinusTable(const WeightSet& w,
                                 const std::vector<SpectralPoint>& sites)
    : n_(static_cast<int>(sites.size())), forward_(n_ * n_, Complex{1.0, 0.0}) {
  for (int p = 1; p <= n_; ++p)
    for (int q = p + 1; q <= n_; ++q)
      forward_[(p - 1) * n_ + (q - 1)] = std::sqrt(w.a_minus(sites[p - 1], sites[q - 1]));
}

Complex SqrtAMinusTable::operator()(int p, int q) const {
  if (p == q) throw EqualSlots("sqrt a-minus needs distinct sites");
  if (p < q) return forward_[(p - 1) * n_ + (q - 1)];
  return 1.0 / forward_[(q - 1) * n_ + (p - 1)];
}

VecX build_N_diag(const WeightSet& w, const std::vector<SpectralPoint>& sites,
                  const Permutation& sigma) {
  const int L = static_cast<int>(sites.size());
  const SqrtAMinusTable sqrt_a(w, sites);
  VecX d = VecX::Ones(dim_of(L));
  for (int i = 1; i <= L; ++i)
    for (int j = i + 1; j <= L; ++j) {
      const int p = sigma(i), q = sigma(j);
      const Complex value = 1.0 / sqrt_a(p, q);
      for (Eigen::Index n = 0; n < d.size(); ++n)
        if (site_bit(n, p, L) == 1 && site_bit(n, q, L) == 1) d[n] *= value;
    }
  return d;
}

VecX build_N_diag(const WeightSet& w, const std::vector<SpectralPoint>& sites) {
  return build_N_diag(w, sites, Permutation::identity(static_cast<int>(sites.size())));
}

namespace {

/// e11_pivot + e22_pivot * (left-handed R product with the given tail slots).
MatX curly_partial_left(const WeightSet& w, const std::vector<SpectralPoint>& sites,
                        int pivot, int first, int last) {
  const int L = static_cast<int>(sites.size());
  std::vector<int> others;
  for (int k = first; k <= last; ++k) others.push_back(k);
  const MatX rprod = ordered_R_product(w, pivot, others, sites, Hand::Left);
  return embed_site_op(unit22(1, 1), pivot, L) +
         embed_site_op(unit22(2, 2), pivot, L) * rprod;
}

/// Diagonal twist product pairing `pivot` (first label) with each slot in
/// [first, last].
VecX curlyR_pivot_first(const WeightSet& w, const std::vector<SpectralPoint>& sites,
                        int pivot, int first, int last) {
  const int L = static_cast<int>(sites.size());
  VecX d = VecX::Ones(dim_of(L));
  for (int j = first; j <= last; ++j)
    d = d.cwiseProduct(
        diag_pair(pivot, j, L, 1.0 / w.a_minus(sites[pivot - 1], sites[j - 1])));
  return d;
}

/// Diagonal twist product pairing each slot in [first, last] (first label)
/// with `pivot`.
VecX curlyR_pivot_second(const WeightSet& w, const std::vector<SpectralPoint>& sites,
                         int pivot, int first, int last) {
  const int L = static_cast<int>(sites.size());
  VecX d = VecX::Ones(dim_of(L));
  for (int j = first; j <= last; ++j)
    d = d.cwiseProduct(
        diag_pair(j, pivot, L, 1.0 / w.a_minus(sites[j - 1], sites[pivot - 1])));
  return d;
}

/// Right-handed partial transform with pivot at the final slot:
/// curlyR_{L, first..L-1} (e11_L R_{first..L-1, L} + e22_L).
MatX curly_partial_right(const WeightSet& w, const std::vector<SpectralPoint>& sites,
                         int first, int pivot) {
  const int L = static_cast<int>(sites.size());
  std::vector<int> others;
  for (int k = first; k <= pivot - 1; ++k) others.push_back(k);
  const MatX rprod = ordered_R_product(w, pivot, others, sites, Hand::Right);
  const VecX twist = curlyR_pivot_first(w, sites, pivot, first, pivot - 1);
  return diag_to_dense(twist) * (embed_site_op(unit22(1, 1), pivot, L) * rprod +
                                 embed_site_op(unit22(2, 2), pivot, L));
}

}  // namespace

MatX build_curlyF(const WeightSet& w, const std::vector<SpectralPoint>& sites) {
  const int L = static_cast<int>(sites.size());
  if (L > kDenseCutoff) throw DenseCutoffExceeded("curlyF beyond dense cutoff");
  MatX acc = MatX::Identity(dim_of(L), dim_of(L));
  for (int i = L - 1; i >= 1; --i) acc = acc * curly_partial_left(w, sites, i, i + 1, L);
  return acc;
}

FMatrixBundle build_F(const WeightSet& w, const std::vector<SpectralPoint>& sites) {
  FMatrixBundle b;
  b.sites = sites;
  b.N_diag = build_N_diag(w, sites);
  b.curlyF = build_curlyF(w, sites);
  b.F = diag_to_dense(b.N_diag) * b.curlyF;
  for (Eigen::Index i = 0; i < b.F.rows(); ++i)
    if (std::abs(b.F(i, i)) < 1e-12)
      throw NonInvertible("factorizing transform has a vanishing diagonal entry");
  // forward substitution on the triangular core keeps the inverse accurate
  // even when the corner-weight products span several orders of magnitude
  const MatX id = MatX::Identity(b.curlyF.rows(), b.curlyF.cols());
  b.curlyF_inv = b.curlyF.triangularView<Eigen::Lower>().solve(id);
  b.F_inv = b.curlyF_inv * diag_to_dense(diag_inverse(b.N_diag));
  return b;
}

MatX permuted_curlyF(const WeightSet& w, const std::vector<SpectralPoint>& sites,
                     const Permutation& sigma) {
  const int L = static_cast<int>(sites.size());
  const auto permuted = permute_sequence(sigma, sites);
  const MatX core = build_curlyF(w, permuted);
  return perm_rep(sigma.inverse(), L) * core * perm_rep(sigma, L);
}

MatX permuted_F(const WeightSet& w, const std::vector<SpectralPoint>& sites,
                const Permutation& sigma) {
  return diag_to_dense(build_N_diag(w, sites, sigma)) * permuted_curlyF(w, sites, sigma);
}

MatX twisted_R_rep(const Permutation& sigma, const WeightSet& w,
                   const std::vector<SpectralPoint>& sites) {
  const int L = static_cast<int>(sites.size());
  const AdjacentWord word = adjacent_decomposition(sigma);
  Mat4 swap = Mat4::Zero();
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;

  std::vector<SpectralPoint> cur = sites;
  MatX acc = MatX::Identity(dim_of(L), dim_of(L));
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    const int a = *it;
    Mat4 twist = Mat4::Identity();
    twist(3, 3) = 1.0 / w.a_minus(cur[a - 1], cur[a]);
    acc = embed_pair_op(Mat4(swap * twist), a, a + 1, L) * acc;
    std::swap(cur[a - 1], cur[a]);
  }
  return perm_rep(sigma.inverse(), L) * acc;
}

MatX twisted_R_from_N(const Permutation& sigma, const WeightSet& w,
                      const std::vector<SpectralPoint>& sites) {
  const VecX n_id = build_N_diag(w, sites);
  const VecX n_sigma = build_N_diag(w, sites, sigma);
  VecX quotient(n_id.size());
  for (Eigen::Index i = 0; i < n_id.size(); ++i) quotient[i] = n_id[i] / n_sigma[i];
  return diag_to_dense(quotient);
}

VerificationReport verify_factorization(const WeightSet& w, const FMatrixBundle& bundle,
                                        const Permutation& sigma, double tol) {
  VerificationReport rep;
  rep.suite = "factorization";
  const MatX r_sigma = permuted_R(sigma, w, bundle.sites);
  const MatX f_sigma = permuted_F(w, bundle.sites, sigma);
  rep.add("factorization", rel_diff(MatX(f_sigma * r_sigma), bundle.F), tol);

  const MatX curly_sigma = permuted_curlyF(w, bundle.sites, sigma);
  const MatX twist = twisted_R_rep(sigma, w, bundle.sites);
  rep.add("factorization-twisted",
          rel_diff(MatX(curly_sigma * r_sigma), MatX(twist * bundle.curlyF)), tol);
  return rep;
}

VerificationReport verify_F_cocycle(const WeightSet& w,
                                    const std::vector<SpectralPoint>& sites, double tol) {
  const int L = static_cast<int>(sites.size());
  if (L < 3) throw IndexOutOfRange("co-cycle check needs at least three sites");
  VerificationReport rep;
  rep.suite = "fbasis-cocycle";

  // Restriction of the chain to slots 1..L-1, embedded back into L slots.
  std::vector<SpectralPoint> head(sites.begin(), sites.end() - 1);
  const MatX curly_head = kron(build_curlyF(w, head), MatX::Identity(2, 2));

  const MatX lhs = diag_to_dense(curlyR_pivot_first(w, sites, L, 1, L - 1)) *
                   curly_partial_left(w, sites, 1, 2, L - 1) *
                   diag_to_dense(curlyR_pivot_second(w, sites, L, 1, L - 1)) *
                   curly_partial_right(w, sites, 1, L);
  const MatX rhs = curly_partial_right(w, sites, 2, L) *
                   curly_partial_left(w, sites, 1, 2, L);
  rep.add("co-cycle", rel_diff(lhs, rhs), tol, "L=" + std::to_string(L));

  const MatX reconstructed = diag_to_dense(curlyR_pivot_first(w, sites, L, 1, L - 1)) *
                             curly_head *
                             diag_to_dense(curlyR_pivot_second(w, sites, L, 1, L - 1)) *
                             curly_partial_right(w, sites, 1, L);
  rep.add("right-handed-reconstruction", rel_diff(reconstructed, build_curlyF(w, sites)),
          tol);

  for (const auto& [name, sigma] :
       {std::pair<std::string, Permutation>{"adjacent", Permutation::adjacent(1, L)},
        std::pair<std::string, Permutation>{"cyclic", Permutation::cyclic(L)}}) {
    rep.add("normalizer-quotient[" + name + "]",
            rel_diff(twisted_R_rep(sigma, w, sites), twisted_R_from_N(sigma, w, sites)),
            tol);
  }

  // Global inversion of the diagonal twists.
  const VecX left = curlyR_pivot_first(w, sites, 1, 2, L);
  const VecX right = curlyR_pivot_second(w, sites, 1, 2, L);
  rep.add("twist-inversion",
          rel_diff(MatX(diag_to_dense(left) * diag_to_dense(right)),
                   MatX(MatX::Identity(dim_of(L), dim_of(L)))),
          tol);
  return rep;
}

VerificationReport reference_state_factors(const WeightSet& w,
                                           const FMatrixBundle& bundle, double tol) {
  VerificationReport rep;
  rep.suite = "reference-states";
  const Eigen::Index dim = bundle.curlyF.rows();
  const Eigen::Index top = 0, bottom = dim - 1;
  const double scale = std::max(kResidualFloor, max_abs(bundle.curlyF));

  auto unit_row_residual = [&](const MatX& m, Eigen::Index row, Complex factor) {
    double worst = 0.0;
    for (Eigen::Index c = 0; c < dim; ++c) {
      const Complex expect = (c == row) ? factor : Complex{0.0, 0.0};
      worst = std::max(worst, std::abs(m(row, c) - expect));
    }
    return worst / scale;
  };
  auto unit_col_residual = [&](const MatX& m, Eigen::Index col, Complex factor) {
    double worst = 0.0;
    for (Eigen::Index r = 0; r < dim; ++r) {
      const Complex expect = (r == col) ? factor : Complex{0.0, 0.0};
      worst = std::max(worst, std::abs(m(r, col) - expect));
    }
    return worst / scale;
  };

  rep.add("all-up-bra", unit_row_residual(bundle.curlyF, top, 1.0), tol);
  rep.add("all-up-ket", unit_col_residual(bundle.curlyF, top, 1.0), tol);
  rep.add("all-up-bra-inverse", unit_row_residual(bundle.curlyF_inv, top, 1.0), tol);
  rep.add("all-up-ket-inverse", unit_col_residual(bundle.curlyF_inv, top, 1.0), tol);

  const int L = static_cast<int>(bundle.sites.size());
  Complex forward = 1.0, backward = 1.0;
  for (int i = 1; i <= L; ++i)
    for (int j = i + 1; j <= L; ++j) {
      forward *= w.a_minus(bundle.sites[i - 1], bundle.sites[j - 1]);
      backward *= w.a_minus(bundle.sites[j - 1], bundle.sites[i - 1]);
    }
  rep.add("all-down-bra", unit_row_residual(bundle.curlyF, bottom, forward), tol);
  rep.add("all-down-ket-inverse", unit_col_residual(bundle.curlyF_inv, bottom, backward),
          tol);
  return rep;
}

}  // namespace sixvertex
