#include "sixvertex/tensor_space.hpp"

#include <algorithm>

#include "sixvertex/sampling.hpp"

namespace sixvertex {

TensorOperator::TensorOperator(int sites, std::vector<ProductTerm> terms)
    : sites_(sites), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (static_cast<int>(t.factors.size()) != sites_)
      throw DimensionMismatch("tensor term must carry one factor per site");
}

TensorOperator TensorOperator::identity(int sites) {
  ProductTerm term;
  term.factors.assign(sites, Mat2::Identity());
  return TensorOperator(sites, {term});
}

TensorOperator TensorOperator::single(std::vector<Mat2> factors) {
  const int n = static_cast<int>(factors.size());
  ProductTerm term;
  term.factors = std::move(factors);
  return TensorOperator(n, {term});
}

void apply_site_inplace(const Mat2& m, int site, int L, VecX& v) {
  const Eigen::Index stride = Eigen::Index{1} << (L - site);
  const Eigen::Index dim = v.size();
  for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      const Complex up = v[base + off];
      const Complex down = v[base + off + stride];
      v[base + off] = m(0, 0) * up + m(0, 1) * down;
      v[base + off + stride] = m(1, 0) * up + m(1, 1) * down;
    }
  }
}

VecX TensorOperator::apply(const VecX& v) const {
  if (v.size() != dim_of(sites_))
    throw DimensionMismatch("tensor operator applied to wrong dimension");
  VecX out = VecX::Zero(v.size());
  for (const auto& term : terms_) {
    VecX work = v;
    for (int s = 1; s <= sites_; ++s) apply_site_inplace(term.factors[s - 1], s, sites_, work);
    out += work;
  }
  return out;
}

MatX TensorOperator::dense() const {
  if (sites_ > kDenseCutoff)
    throw DenseCutoffExceeded("dense materialization beyond the cutoff length");
  MatX out = MatX::Zero(dim_of(sites_), dim_of(sites_));
  for (const auto& term : terms_) {
    MatX acc = MatX::Identity(1, 1);
    for (const auto& f : term.factors) acc = kron(acc, MatX(f));
    out += acc;
  }
  return out;
}

TensorOperator TensorOperator::operator*(const TensorOperator& o) const {
  if (sites_ != o.sites_) throw DimensionMismatch("tensor operator product: size mismatch");
  std::vector<ProductTerm> terms;
  terms.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      ProductTerm t;
      t.factors.resize(sites_);
      for (int s = 0; s < sites_; ++s) t.factors[s] = a.factors[s] * b.factors[s];
      terms.push_back(std::move(t));
    }
  return TensorOperator(sites_, std::move(terms));
}

TensorOperator TensorOperator::operator+(const TensorOperator& o) const {
  if (sites_ != o.sites_) throw DimensionMismatch("tensor operator sum: size mismatch");
  std::vector<ProductTerm> terms = terms_;
  terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
  return TensorOperator(sites_, std::move(terms));
}

TensorOperator TensorOperator::scaled(Complex factor) const {
  std::vector<ProductTerm> terms = terms_;
  for (auto& t : terms)
    if (!t.factors.empty()) t.factors.front() *= factor;
  return TensorOperator(sites_, std::move(terms));
}

MatX embed_site_op(const Mat2& m, int site, int L) {
  if (site < 1 || site > L) throw IndexOutOfRange("embed_site_op: site out of range");
  MatX out = MatX::Zero(dim_of(L), dim_of(L));
  for (Eigen::Index col = 0; col < out.cols(); ++col) {
    const int b = site_bit(col, site, L);
    for (int nb = 0; nb < 2; ++nb) {
      if (m(nb, b) == Complex{0.0, 0.0}) continue;
      out(with_site_bit(col, site, L, nb), col) += m(nb, b);
    }
  }
  return out;
}

MatX embed_pair_op(const Mat4& m, int i, int j, int L) {
  if (i < 1 || i > L || j < 1 || j > L)
    throw IndexOutOfRange("embed_pair_op: slot out of range");
  if (i == j) throw EqualSlots("embed_pair_op: slots must differ");
  MatX out = MatX::Zero(dim_of(L), dim_of(L));
  for (Eigen::Index col = 0; col < out.cols(); ++col) {
    const int bi = site_bit(col, i, L), bj = site_bit(col, j, L);
    for (int ni = 0; ni < 2; ++ni)
      for (int nj = 0; nj < 2; ++nj) {
        const Complex val = m(2 * ni + nj, 2 * bi + bj);
        if (val == Complex{0.0, 0.0}) continue;
        Eigen::Index row = with_site_bit(col, i, L, ni);
        row = with_site_bit(row, j, L, nj);
        out(row, col) += val;
      }
  }
  return out;
}

MatX ordered_R_product(const WeightSet& w, int pivot, const std::vector<int>& others,
                       const std::vector<SpectralPoint>& points, Hand hand) {
  const int L = static_cast<int>(points.size());
  MatX acc = MatX::Identity(dim_of(L), dim_of(L));
  if (hand == Hand::Left) {
    for (int k : others) {
      const Mat4 r = r_matrix(w, points[pivot - 1], points[k - 1]);
      acc = embed_pair_op(r, pivot, k, L) * acc;  // R_{pivot,last} ends leftmost
    }
  } else {
    for (int k : others) {
      const Mat4 r = r_matrix(w, points[k - 1], points[pivot - 1]);
      acc = acc * embed_pair_op(r, k, pivot, L);  // R_{first,pivot} stays leftmost
    }
  }
  return acc;
}

namespace {

Mat4 pair_swap() {
  Mat4 p = Mat4::Zero();
  p(0, 0) = p(3, 3) = 1.0;
  p(1, 2) = p(2, 1) = 1.0;
  return p;
}

}  // namespace

MatX perm_rep(const Permutation& sigma, int L) {
  const AdjacentWord word = adjacent_decomposition(sigma);
  MatX acc = MatX::Identity(dim_of(L), dim_of(L));
  for (int a : word.letters) acc = acc * embed_pair_op(pair_swap(), a, a + 1, L);
  return acc;
}

MatX r_hat_of_word(const std::vector<int>& letters_rightmost_first, const WeightSet& w,
                   std::vector<SpectralPoint> points) {
  const int L = static_cast<int>(points.size());
  MatX acc = MatX::Identity(dim_of(L), dim_of(L));
  const Mat4 p = pair_swap();
  for (auto it = letters_rightmost_first.rbegin(); it != letters_rightmost_first.rend();
       ++it) {
    const int a = *it;
    const Mat4 factor = p * r_matrix(w, points[a - 1], points[a]);
    acc = embed_pair_op(factor, a, a + 1, L) * acc;
    std::swap(points[a - 1], points[a]);
  }
  return acc;
}

MatX r_hat_rep(const Permutation& sigma, const WeightSet& w,
               std::vector<SpectralPoint> points) {
  return r_hat_of_word(adjacent_decomposition(sigma).letters, w, std::move(points));
}

MatX permuted_R(const Permutation& sigma, const WeightSet& w,
                const std::vector<SpectralPoint>& points) {
  const int L = static_cast<int>(points.size());
  return perm_rep(sigma.inverse(), L) * r_hat_rep(sigma, w, points);
}

VerificationReport verify_product_identities(const WeightSet& w, int L, double tol,
                                             std::uint64_t seed) {
  if (L < 2) throw IndexOutOfRange("verify_product_identities: L >= 2 required");
  VerificationReport report;
  report.suite = "product-identities";
  report.seed = seed;
  ParameterSampler sampler(seed);
  const auto pts = sampler.distinct_points(L, &w);

  std::vector<int> others;
  for (int k = 2; k <= L; ++k) others.push_back(k);
  const MatX left = ordered_R_product(w, 1, others, pts, Hand::Left);
  const MatX right = ordered_R_product(w, 1, others, pts, Hand::Right);
  report.add("global-inversion", rel_diff(MatX(left * right),
                                          MatX(MatX::Identity(dim_of(L), dim_of(L)))),
             tol, "L=" + std::to_string(L));

  if (L >= 3) {
    std::vector<int> mid;          // 2..L-1
    std::vector<int> head_others;  // 2..L
    std::vector<int> tail_others;  // 1..L-1
    for (int k = 2; k <= L - 1; ++k) mid.push_back(k);
    for (int k = 2; k <= L; ++k) head_others.push_back(k);
    for (int k = 1; k <= L - 1; ++k) tail_others.push_back(k);
    const MatX lhs = ordered_R_product(w, 1, mid, pts, Hand::Left) *
                     ordered_R_product(w, L, tail_others, pts, Hand::Right);
    std::vector<int> mid_to_last = mid;
    const MatX rhs = ordered_R_product(w, L, mid_to_last, pts, Hand::Right) *
                     ordered_R_product(w, 1, head_others, pts, Hand::Left);
    report.add("co-cycle", rel_diff(lhs, rhs), tol, "L=" + std::to_string(L));
  } else {
    // Both identities collapse to two-site inversion.
    Mat4 swap = pair_swap();
    const Mat4 r12 = r_matrix(w, pts[0], pts[1]);
    const Mat4 r21 = swap * r_matrix(w, pts[1], pts[0]) * swap;
    report.add("co-cycle", rel_diff(MatX(r12 * r21), MatX(Mat4::Identity())), tol, "L=2");
  }
  return report;
}

VerificationReport verify_rhat_relations(const WeightSet& w,
                                         const std::vector<SpectralPoint>& points,
                                         double tol) {
  const int L = static_cast<int>(points.size());
  VerificationReport report;
  report.suite = "braid-relations";
  const MatX id = MatX::Identity(dim_of(L), dim_of(L));
  for (int a = 1; a <= L - 1; ++a) {
    const MatX prod = r_hat_of_word({a, a}, w, points);
    report.add("involution[" + std::to_string(a) + "]", rel_diff(prod, id), tol);
  }
  for (int a = 1; a + 1 <= L - 1; ++a) {
    const MatX lhs = r_hat_of_word({a, a + 1, a}, w, points);
    const MatX rhs = r_hat_of_word({a + 1, a, a + 1}, w, points);
    report.add("braid[" + std::to_string(a) + "," + std::to_string(a + 1) + "]",
               rel_diff(lhs, rhs), tol);
  }
  for (int a = 1; a <= L - 1; ++a)
    for (int b = a + 2; b <= L - 1; ++b) {
      const MatX lhs = r_hat_of_word({a, b}, w, points);
      const MatX rhs = r_hat_of_word({b, a}, w, points);
      report.add("commute[" + std::to_string(a) + "," + std::to_string(b) + "]",
                 rel_diff(lhs, rhs), tol);
    }
  return report;
}

}  // namespace sixvertex
