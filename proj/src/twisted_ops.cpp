#include "sixvertex/twisted_ops.hpp"

#include <algorithm>

namespace sixvertex {

namespace {

Complex theta_ordered(const WeightSet& w, const std::vector<SpectralPoint>& pts, int i,
                      int j) {
  // Ordered factor over tuple positions: a-minus for i < j, 1 otherwise.
  return i < j ? w.a_minus(pts[i - 1], pts[j - 1]) : Complex{1.0, 0.0};
}

void check_site_separation(const WeightSet& w, const std::vector<SpectralPoint>& sites) {
  for (std::size_t i = 0; i < sites.size(); ++i)
    for (std::size_t j = 0; j < sites.size(); ++j) {
      if (i == j) continue;
      if (std::abs(w.b_minus(sites[i], sites[j])) < kSingularGuard)
        throw SingularPoint("coincident inhomogeneities in twisted operators");
    }
}

}  // namespace

TensorOperator twisted_C_theta(const WeightSet& w, const SpectralPoint& aux,
                               const std::vector<SpectralPoint>& sites) {
  const int L = static_cast<int>(sites.size());
  std::vector<ProductTerm> terms;
  terms.reserve(L);
  for (int l = 1; l <= L; ++l) {
    ProductTerm t;
    t.factors.resize(L);
    for (int i = 1; i <= L; ++i) {
      if (i == l) {
        t.factors[i - 1] = w.c_minus(aux, sites[l - 1]) * unit22(1, 2);
      } else {
        t.factors[i - 1] =
            diag2(w.b_minus(aux, sites[i - 1]) / w.b_minus(sites[l - 1], sites[i - 1]),
                  w.a_minus(aux, sites[i - 1]) / theta_ordered(w, sites, l, i));
      }
    }
    terms.push_back(std::move(t));
  }
  return TensorOperator(L, std::move(terms));
}

TensorOperator twisted_B_theta(const WeightSet& w, const SpectralPoint& aux,
                               const std::vector<SpectralPoint>& sites) {
  const int L = static_cast<int>(sites.size());
  std::vector<ProductTerm> terms;
  terms.reserve(L);
  for (int l = 1; l <= L; ++l) {
    ProductTerm t;
    t.factors.resize(L);
    for (int i = 1; i <= L; ++i) {
      if (i == l) {
        t.factors[i - 1] = w.c_plus(aux, sites[l - 1]) * unit22(2, 1);
      } else {
        t.factors[i - 1] =
            diag2(w.b_minus(aux, sites[i - 1]),
                  w.a_minus(aux, sites[i - 1]) * theta_ordered(w, sites, i, l) /
                      w.b_minus(sites[i - 1], sites[l - 1]));
      }
    }
    terms.push_back(std::move(t));
  }
  return TensorOperator(L, std::move(terms));
}

TwistedOps build_twisted_ops(const WeightSet& w, const SpectralPoint& aux,
                             const std::vector<SpectralPoint>& sites) {
  const int L = static_cast<int>(sites.size());
  check_site_separation(w, sites);

  std::vector<Mat2> d_factors(L);
  for (int i = 1; i <= L; ++i)
    d_factors[i - 1] = diag2(w.b_minus(aux, sites[i - 1]), w.a_minus(aux, sites[i - 1]));
  TensorOperator Dt = TensorOperator::single(d_factors);

  // Split-product forms: the factors left and right of the flipped site carry
  // different ratios.
  std::vector<ProductTerm> c_terms, b_terms;
  for (int l = 1; l <= L; ++l) {
    ProductTerm ct, bt;
    ct.factors.resize(L);
    bt.factors.resize(L);
    for (int i = 1; i <= L; ++i) {
      if (i == l) {
        ct.factors[i - 1] = w.c_minus(aux, sites[l - 1]) * unit22(1, 2);
        bt.factors[i - 1] = w.c_plus(aux, sites[l - 1]) * unit22(2, 1);
      } else if (i < l) {
        ct.factors[i - 1] =
            diag2(w.b_minus(aux, sites[i - 1]) / w.b_minus(sites[l - 1], sites[i - 1]),
                  w.a_minus(aux, sites[i - 1]));
        bt.factors[i - 1] =
            diag2(w.b_minus(aux, sites[i - 1]),
                  w.a_minus(aux, sites[i - 1]) * w.a_minus(sites[i - 1], sites[l - 1]) /
                      w.b_minus(sites[i - 1], sites[l - 1]));
      } else {
        ct.factors[i - 1] =
            diag2(w.b_minus(aux, sites[i - 1]) / w.b_minus(sites[l - 1], sites[i - 1]),
                  w.a_minus(aux, sites[i - 1]) / w.a_minus(sites[l - 1], sites[i - 1]));
        bt.factors[i - 1] =
            diag2(w.b_minus(aux, sites[i - 1]),
                  w.a_minus(aux, sites[i - 1]) / w.b_minus(sites[i - 1], sites[l - 1]));
      }
    }
    c_terms.push_back(std::move(ct));
    b_terms.push_back(std::move(bt));
  }
  TensorOperator Ct(L, std::move(c_terms));
  TensorOperator Bt(L, std::move(b_terms));

  std::vector<Mat2> omega0(L), d_inv(L);
  for (int i = 1; i <= L; ++i) {
    omega0[i - 1] = diag2(1.0, 1.0 / w.b_minus(sites[i - 1], aux));
    d_inv[i - 1] = diag2(1.0 / w.b_minus(aux, sites[i - 1]),
                         1.0 / w.a_minus(aux, sites[i - 1]));
  }
  TensorOperator At =
      TensorOperator::single(omega0) + Bt * TensorOperator::single(d_inv) * Ct;

  return {std::move(Dt), std::move(Ct), std::move(Bt), std::move(At), aux, sites};
}

DenseTwisted oracle_twist(const MonodromyBlocks& blocks, const FMatrixBundle& bundle) {
  DenseTwisted out;
  out.Dt = bundle.curlyF * blocks.D * bundle.curlyF_inv;
  out.Ct = bundle.curlyF * blocks.C * bundle.curlyF_inv;
  out.Bt = bundle.curlyF * blocks.B * bundle.curlyF_inv;
  out.At = bundle.curlyF * blocks.A * bundle.curlyF_inv;
  return out;
}

VerificationReport verify_twisted_recurrences(const WeightSet& w, const SpectralPoint& aux,
                                              const std::vector<SpectralPoint>& sites,
                                              double tol) {
  const int L = static_cast<int>(sites.size());
  if (L < 2) throw IndexOutOfRange("twisted recurrences need at least two sites");
  VerificationReport rep;
  rep.suite = "twisted-recurrences";

  const std::vector<SpectralPoint> tail(sites.begin() + 1, sites.end());
  const SpectralPoint xi1 = sites.front();

  const TwistedOps full = build_twisted_ops(w, aux, sites);
  const TwistedOps sub_mu = build_twisted_ops(w, aux, tail);
  const TwistedOps sub_xi = build_twisted_ops(w, xi1, tail);

  const Eigen::Index sub_dim = dim_of(L - 1);
  const MatX id_sub = MatX::Identity(sub_dim, sub_dim);
  auto corner_block = [&](const MatX& tl, const MatX& tr, const MatX& bl,
                          const MatX& br) -> MatX {
    return kron(MatX(unit22(1, 1)), tl) + kron(MatX(unit22(1, 2)), tr) +
           kron(MatX(unit22(2, 1)), bl) + kron(MatX(unit22(2, 2)), br);
  };

  const MatX sub_C_xi = sub_xi.Ct.dense();
  const MatX sub_D_xi = sub_xi.Dt.dense();
  const MatX ff = corner_block(id_sub, MatX::Zero(sub_dim, sub_dim), sub_C_xi, sub_D_xi);

  // Direct check of the corner form of curlyF_{1..L} curlyF_{2..L}^{-1} and of
  // its closed-form inverse.
  const MatX curly_full = build_curlyF(w, sites);
  const MatX curly_tail = kron(MatX::Identity(2, 2), build_curlyF(w, tail));
  rep.add("corner-form", rel_diff(MatX(curly_full * curly_tail.partialPivLu().inverse()), ff),
          tol);
  const MatX sub_D_xi_inv = sub_D_xi.partialPivLu().inverse();
  const MatX ff_inv = corner_block(id_sub, MatX::Zero(sub_dim, sub_dim),
                                   MatX(-sub_D_xi_inv * sub_C_xi), sub_D_xi_inv);
  rep.add("corner-inverse",
          rel_diff(MatX(ff * ff_inv), MatX(MatX::Identity(dim_of(L), dim_of(L)))), tol);

  const Complex bm = w.b_minus(aux, xi1), bp = w.b_plus(aux, xi1);
  const Complex cm = w.c_minus(aux, xi1), cp = w.c_plus(aux, xi1);
  const Complex am = w.a_minus(aux, xi1);
  const MatX Dm = sub_mu.Dt.dense(), Cm = sub_mu.Ct.dense(), Bm = sub_mu.Bt.dense(),
             Am = sub_mu.At.dense();
  const MatX Dx = sub_D_xi, Cx = sub_C_xi;

  const MatX zero = MatX::Zero(sub_dim, sub_dim);
  rep.add("recurrence-D",
          rel_diff(MatX(full.Dt.dense() * ff),
                   corner_block(bm * Dm, zero, MatX(bm * (Cx * Dm) + cp * (Dx * Cm)),
                                MatX(am * (Dx * Dm)))),
          tol);
  rep.add("recurrence-C",
          rel_diff(MatX(full.Ct.dense() * ff),
                   corner_block(Cm, cm * Dm, MatX(Cx * Cm),
                                MatX(cm * (Cx * Dm) + bp * (Dx * Cm)))),
          tol);
  rep.add("recurrence-B",
          rel_diff(MatX(full.Bt.dense() * ff),
                   corner_block(bm * Bm, zero,
                                MatX(bm * (Cx * Bm) + cp * (Dx * Am)),
                                MatX(am * (Dx * Bm)))),
          tol);
  rep.add("recurrence-A",
          rel_diff(MatX(full.At.dense() * ff),
                   corner_block(Am, cm * Bm, MatX(Cx * Am),
                                MatX(cm * (Cx * Bm) + bp * (Dx * Am)))),
          tol);
  return rep;
}

TensorOperator reduced_B(const WeightSet& w, const SpectralPoint& mu,
                         const std::vector<SpectralPoint>& selected) {
  const int M = static_cast<int>(selected.size());
  std::vector<ProductTerm> terms;
  terms.reserve(M);
  for (int q = 1; q <= M; ++q) {
    ProductTerm t;
    t.factors.resize(M);
    for (int i = 1; i <= M; ++i) {
      if (i == q) {
        t.factors[i - 1] = w.c_plus(mu, selected[q - 1]) * unit22(2, 1);
      } else {
        t.factors[i - 1] =
            diag2(w.b_minus(mu, selected[i - 1]),
                  w.a_minus(mu, selected[i - 1]) * theta_ordered(w, selected, i, q) /
                      w.b_minus(selected[i - 1], selected[q - 1]));
      }
    }
    terms.push_back(std::move(t));
  }
  return TensorOperator(M, std::move(terms));
}

TensorOperator reduced_C(const WeightSet& w, const SpectralPoint& nu,
                         const std::vector<SpectralPoint>& selected) {
  const int M = static_cast<int>(selected.size());
  std::vector<ProductTerm> terms;
  terms.reserve(M);
  for (int q = 1; q <= M; ++q) {
    ProductTerm t;
    t.factors.resize(M);
    for (int i = 1; i <= M; ++i) {
      if (i == q) {
        t.factors[i - 1] = w.c_minus(nu, selected[q - 1]) * unit22(1, 2);
      } else {
        t.factors[i - 1] =
            diag2(w.b_minus(nu, selected[i - 1]) / w.b_minus(selected[q - 1], selected[i - 1]),
                  w.a_minus(nu, selected[i - 1]) / theta_ordered(w, selected, q, i));
      }
    }
    terms.push_back(std::move(t));
  }
  return TensorOperator(M, std::move(terms));
}

}  // namespace sixvertex
