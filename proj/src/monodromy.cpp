#include "sixvertex/monodromy.hpp"

#include <algorithm>

#include "sixvertex/sampling.hpp"

namespace sixvertex {

namespace {

struct LocalWeights {
  Complex bp, bm, cp, cm, am;
};

LocalWeights local_weights(const WeightSet& w, const SpectralPoint& aux,
                           const SpectralPoint& site) {
  return {w.b_plus(aux, site), w.b_minus(aux, site), w.c_plus(aux, site),
          w.c_minus(aux, site), w.a_minus(aux, site)};
}

}  // namespace

MonodromyBlocks build_monodromy(const WeightSet& w, const SpectralPoint& aux,
                                const std::vector<SpectralPoint>& sites) {
  const int L = static_cast<int>(sites.size());
  if (L > kDenseCutoff) throw DenseCutoffExceeded("dense monodromy beyond cutoff");
  MatX A = MatX::Identity(1, 1), B = MatX::Zero(1, 1);
  MatX C = MatX::Zero(1, 1), D = MatX::Identity(1, 1);
  for (int k = 1; k <= L; ++k) {
    const LocalWeights lw = local_weights(w, aux, sites[k - 1]);
    const MatX a_site = diag2(1.0, lw.bp);
    const MatX b_site = lw.cp * unit22(2, 1);
    const MatX c_site = lw.cm * unit22(1, 2);
    const MatX d_site = diag2(lw.bm, lw.am);
    MatX A2 = kron(A, a_site) + kron(C, b_site);
    MatX B2 = kron(B, a_site) + kron(D, b_site);
    MatX C2 = kron(A, c_site) + kron(C, d_site);
    MatX D2 = kron(B, c_site) + kron(D, d_site);
    A = std::move(A2);
    B = std::move(B2);
    C = std::move(C2);
    D = std::move(D2);
  }
  return {std::move(A), std::move(B), std::move(C), std::move(D), aux, sites};
}

MonodromyBlocks build_monodromy_tail(const WeightSet& w, const SpectralPoint& aux,
                                     const std::vector<SpectralPoint>& sites) {
  const int L = static_cast<int>(sites.size());
  if (L > kDenseCutoff) throw DenseCutoffExceeded("dense monodromy beyond cutoff");
  MatX A = MatX::Identity(1, 1), B = MatX::Zero(1, 1);
  MatX C = MatX::Zero(1, 1), D = MatX::Identity(1, 1);
  for (int k = L; k >= 1; --k) {
    const LocalWeights lw = local_weights(w, aux, sites[k - 1]);
    const MatX a_site = diag2(1.0, lw.bp);
    const MatX b_site = lw.cp * unit22(2, 1);
    const MatX c_site = lw.cm * unit22(1, 2);
    const MatX d_site = diag2(lw.bm, lw.am);
    MatX A2 = kron(a_site, A) + kron(c_site, B);
    MatX B2 = kron(b_site, A) + kron(d_site, B);
    MatX C2 = kron(a_site, C) + kron(c_site, D);
    MatX D2 = kron(b_site, C) + kron(d_site, D);
    A = std::move(A2);
    B = std::move(B2);
    C = std::move(C2);
    D = std::move(D2);
  }
  return {std::move(A), std::move(B), std::move(C), std::move(D), aux, sites};
}

MonodromyApplier::MonodromyApplier(const WeightSet& w, const SpectralPoint& aux,
                                   const std::vector<SpectralPoint>& sites)
    : w_(&w), aux_(aux), sites_(sites) {}

MonodromyApplier::Entries MonodromyApplier::sweep(const VecX& v) const {
  const int L = static_cast<int>(sites_.size());
  if (v.size() != dim_of(L)) throw DimensionMismatch("monodromy applied to wrong dimension");
  Entries e{v, VecX::Zero(v.size()), VecX::Zero(v.size()), v};
  for (int k = 1; k <= L; ++k) {
    const LocalWeights lw = local_weights(*w_, aux_, sites_[k - 1]);
    const Mat2 a_site = diag2(1.0, lw.bp);
    const Mat2 b_site = lw.cp * unit22(2, 1);
    const Mat2 c_site = lw.cm * unit22(1, 2);
    const Mat2 d_site = diag2(lw.bm, lw.am);
    auto on = [&](const Mat2& m, const VecX& x) {
      VecX y = x;
      apply_site_inplace(m, k, L, y);
      return y;
    };
    VecX a2 = on(a_site, e.a) + on(b_site, e.c);
    VecX b2 = on(a_site, e.b) + on(b_site, e.d);
    VecX c2 = on(c_site, e.a) + on(d_site, e.c);
    VecX d2 = on(c_site, e.b) + on(d_site, e.d);
    e.a = std::move(a2);
    e.b = std::move(b2);
    e.c = std::move(c2);
    e.d = std::move(d2);
  }
  return e;
}

VecX MonodromyApplier::apply_A(const VecX& v) const { return sweep(v).a; }
VecX MonodromyApplier::apply_B(const VecX& v) const { return sweep(v).b; }
VecX MonodromyApplier::apply_C(const VecX& v) const { return sweep(v).c; }
VecX MonodromyApplier::apply_D(const VecX& v) const { return sweep(v).d; }

MatX transfer_matrix(const MonodromyBlocks& blocks) { return blocks.A + blocks.D; }

VerificationReport verify_block_structure(const WeightSet& w,
                                          const MonodromyBlocks& blocks, double tol) {
  VerificationReport rep;
  rep.suite = "block-structure";
  const int L = static_cast<int>(blocks.sites.size());
  const Eigen::Index dim = dim_of(L);
  const double scale = std::max(
      {kResidualFloor, max_abs(blocks.A), max_abs(blocks.B), max_abs(blocks.C),
       max_abs(blocks.D)});

  auto lower_violation = [&](const MatX& m) {
    double worst = 0.0;
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = r + 1; c < dim; ++c) worst = std::max(worst, std::abs(m(r, c)));
    return worst / scale;
  };
  auto upper_violation = [&](const MatX& m) {
    double worst = 0.0;
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < r; ++c) worst = std::max(worst, std::abs(m(r, c)));
    return worst / scale;
  };
  auto diag_magnitude = [&](const MatX& m) {
    return m.diagonal().cwiseAbs().maxCoeff() / scale;
  };

  rep.add("A-upper-triangular", upper_violation(blocks.A), tol);
  rep.add("C-upper-triangular", upper_violation(blocks.C), tol);
  rep.add("B-lower-triangular", lower_violation(blocks.B), tol);
  rep.add("D-lower-triangular", lower_violation(blocks.D), tol);
  rep.add("B-zero-diagonal", diag_magnitude(blocks.B), tol);
  rep.add("C-zero-diagonal", diag_magnitude(blocks.C), tol);

  // Diagonal of D is the tensor product of the local diag(b-, a-) factors.
  VecX expected_diag = VecX::Ones(1);
  Complex am_product = 1.0;
  for (int i = 0; i < L; ++i) {
    const Complex bm = w.b_minus(blocks.aux, blocks.sites[i]);
    const Complex am = w.a_minus(blocks.aux, blocks.sites[i]);
    am_product *= am;
    VecX next(expected_diag.size() * 2);
    for (Eigen::Index r = 0; r < expected_diag.size(); ++r) {
      next[2 * r] = expected_diag[r] * bm;
      next[2 * r + 1] = expected_diag[r] * am;
    }
    expected_diag = std::move(next);
  }
  rep.add("D-diagonal", (blocks.D.diagonal() - expected_diag).cwiseAbs().maxCoeff() / scale,
          tol);

  double row_violation = 0.0;
  for (Eigen::Index c = 0; c + 1 < dim; ++c)
    row_violation = std::max(row_violation, std::abs(blocks.D(dim - 1, c)));
  rep.add("D-final-row", row_violation / scale, tol);
  rep.add("D-corner",
          std::abs(blocks.D(dim - 1, dim - 1) - am_product) / scale, tol);
  return rep;
}

VerificationReport verify_exchange_relations(const WeightSet& w, int L, double tol,
                                             std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "exchange-relations";
  rep.seed = seed;
  ParameterSampler sampler(seed);
  const auto sites = sampler.distinct_points(L, &w);
  const SpectralPoint mu = sampler.point_away_from(sites, &w);
  auto with_mu = sites;
  with_mu.push_back(mu);
  const SpectralPoint nu = sampler.point_away_from(with_mu, &w);

  const MonodromyBlocks tm = build_monodromy(w, mu, sites);
  const MonodromyBlocks tn = build_monodromy(w, nu, sites);
  const Complex bp = w.b_plus(mu, nu), bm = w.b_minus(mu, nu);
  const Complex cp = w.c_plus(mu, nu), cm = w.c_minus(mu, nu);
  const Complex am = w.a_minus(mu, nu);

  auto add_rel = [&](const std::string& id, std::initializer_list<MatX> lhs_terms,
                     std::initializer_list<MatX> rhs_terms) {
    const Eigen::Index dim = dim_of(L);
    MatX lhs = MatX::Zero(dim, dim), rhs = MatX::Zero(dim, dim);
    double scale = kResidualFloor;
    for (const MatX& t : lhs_terms) {
      lhs += t;
      scale = std::max(scale, max_abs(t));
    }
    for (const MatX& t : rhs_terms) {
      rhs += t;
      scale = std::max(scale, max_abs(t));
    }
    rep.add(id, max_abs(lhs - rhs) / scale, tol);
  };

  add_rel("exchange-AD", {tm.A * tn.D, -(tn.A * tm.D)},
          {(bp / cm) * (tn.B * tm.C), -(bm / cm) * (tm.C * tn.B)});
  add_rel("exchange-AC", {tm.A * tn.C},
          {(1.0 / bp) * (tn.C * tm.A), -(cp / bp) * (tm.C * tn.A)});
  add_rel("exchange-DA", {tn.D * tm.A, -(tm.A * tn.D)},
          {(cp / bp) * (tm.C * tn.B), -(cm / bp) * (tn.C * tm.B)});
  add_rel("exchange-DArev", {tm.D * tn.A, -(tn.D * tm.A)},
          {(bm / cp) * (tn.C * tm.B), -(bp / cp) * (tm.B * tn.C)});
  add_rel("exchange-CC", {tn.C * tm.C}, {am * (tm.C * tn.C)});
  add_rel("exchange-DC", {tn.D * tm.C},
          {(am / bp) * (tm.C * tn.D), -(cm / bp) * (tn.C * tm.D)});
  add_rel("exchange-CD", {tn.C * tm.D},
          {(am / bm) * (tm.D * tn.C), -(cp / bm) * (tn.D * tm.C)});
  add_rel("exchange-DD", {tm.D * tn.D}, {tn.D * tm.D});

  // Full intertwining residual on the doubled auxiliary space.
  const Eigen::Index dim = dim_of(L);
  auto lift = [&](const MonodromyBlocks& t, bool first_slot) {
    MatX out = MatX::Zero(4 * dim, 4 * dim);
    const MatX* entries[2][2] = {{&t.A, &t.B}, {&t.C, &t.D}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        MatX aux_part = MatX::Zero(4, 4);
        for (int k = 0; k < 2; ++k) {
          const int row = first_slot ? 2 * i + k : 2 * k + i;
          const int col = first_slot ? 2 * j + k : 2 * k + j;
          aux_part(row, col) = 1.0;
        }
        out += kron(aux_part, *entries[i][j]);
      }
    return out;
  };
  const MatX ta = lift(tm, true);
  const MatX tb = lift(tn, false);
  const MatX r_ab = kron(MatX(r_matrix(w, mu, nu)), MatX::Identity(dim, dim));
  rep.add("intertwining", rel_diff(MatX(r_ab * ta * tb), MatX(tb * ta * r_ab)), tol);
  return rep;
}

namespace {

Complex theta_fn(const WeightSet& w, const std::vector<SpectralPoint>& pts, int j, int k) {
  return j < k ? w.a_minus(pts[j - 1], pts[k - 1]) : Complex{1.0, 0.0};
}

}  // namespace

VecX bethe_vector(const WeightSet& w, const std::vector<SpectralPoint>& sites,
                  const std::vector<SpectralPoint>& nus) {
  const int L = static_cast<int>(sites.size());
  VecX v = VecX::Zero(dim_of(L));
  v[dim_of(L) - 1] = 1.0;  // all-down reference state
  for (const auto& nu : nus) {
    MonodromyApplier applier(w, nu, sites);
    v = applier.apply_C(v);
  }
  return v;
}

VerificationReport act_eigen_formulas(const WeightSet& w, const SpectralPoint& lambda,
                                      const std::vector<SpectralPoint>& sites,
                                      const std::vector<SpectralPoint>& nus, double tol) {
  const int L = static_cast<int>(sites.size());
  const int M = static_cast<int>(nus.size());
  if (L > 8 || M > 3) throw DenseCutoffExceeded("eigen-action check limited to L<=8, M<=3");

  VerificationReport rep;
  rep.suite = "eigen-action";
  const VecX ket = bethe_vector(w, sites, nus);
  MonodromyApplier lam(w, lambda, sites);

  Complex wanted_a = 1.0, wanted_d = 1.0;
  for (const auto& s : sites) {
    wanted_a *= w.b_plus(lambda, s);
    wanted_d *= w.a_minus(lambda, s);
  }
  for (const auto& nu : nus) {
    wanted_a /= w.b_plus(lambda, nu);
    wanted_d *= w.a_minus(nu, lambda) / w.b_plus(nu, lambda);
  }

  VecX rhs_a = wanted_a * ket;
  VecX rhs_d = wanted_d * ket;
  for (int j = 1; j <= M; ++j) {
    std::vector<SpectralPoint> rest;
    for (int k = 1; k <= M; ++k)
      if (k != j) rest.push_back(nus[k - 1]);
    const VecX partial = lam.apply_C(bethe_vector(w, sites, rest));

    Complex coeff_a = -w.c_plus(lambda, nus[j - 1]) / w.b_plus(lambda, nus[j - 1]);
    Complex coeff_d = -w.c_minus(nus[j - 1], lambda) / w.b_plus(nus[j - 1], lambda);
    for (const auto& s : sites) {
      coeff_a *= w.b_plus(nus[j - 1], s);
      coeff_d *= w.a_minus(nus[j - 1], s);
    }
    for (int k = 1; k <= M; ++k) {
      if (k == j) continue;
      coeff_a *= theta_fn(w, nus, j, k) / w.b_plus(nus[j - 1], nus[k - 1]);
      coeff_d *= theta_fn(w, nus, k, j) / w.b_plus(nus[k - 1], nus[j - 1]);
    }
    rhs_a += coeff_a * partial;
    rhs_d += coeff_d * partial;
  }

  rep.add("action-A", rel_diff(lam.apply_A(ket), rhs_a), tol,
          "L=" + std::to_string(L) + ",M=" + std::to_string(M));
  rep.add("action-D", rel_diff(lam.apply_D(ket), rhs_d), tol,
          "L=" + std::to_string(L) + ",M=" + std::to_string(M));
  return rep;
}

std::vector<double> bethe_residual(const WeightSet& w,
                                   const std::vector<SpectralPoint>& nus,
                                   const std::vector<SpectralPoint>& sites) {
  const int M = static_cast<int>(nus.size());
  std::vector<double> out(M);
  for (int j = 1; j <= M; ++j) {
    Complex lhs = 1.0, rhs = 1.0;
    for (int k = 1; k <= M; ++k) {
      if (k == j) continue;
      lhs *= w.b_plus(nus[k - 1], nus[j - 1]) * w.a_minus(nus[j - 1], nus[k - 1]) /
             w.b_plus(nus[j - 1], nus[k - 1]);
    }
    for (const auto& s : sites) rhs *= w.a_minus(nus[j - 1], s) / w.b_plus(nus[j - 1], s);
    out[j - 1] = std::abs(lhs - rhs) / std::max(kResidualFloor, std::abs(lhs) + std::abs(rhs));
  }
  return out;
}

std::vector<double> bethe_residual_field_trig(Complex rho, const std::vector<Complex>& nus,
                                              const std::vector<SpectralPoint>& sites) {
  const int M = static_cast<int>(nus.size());
  const int L = static_cast<int>(sites.size());
  Complex field_product = 1.0;
  for (const auto& s : sites) field_product *= s.field;
  const Complex rhs_const = std::pow(std::sqrt(rho), -L) * field_product;

  std::vector<double> out(M);
  for (int j = 0; j < M; ++j) {
    Complex lhs = 1.0, rhs = rhs_const;
    for (const auto& s : sites) lhs *= (s.rapidity - nus[j]) / (s.rapidity - nus[j] * rho);
    for (int m = 0; m < M; ++m) {
      if (m == j) continue;
      lhs *= nus[m] - nus[j] * rho;
      rhs *= nus[m] * rho - nus[j];
    }
    out[j] = std::abs(lhs - rhs) / std::max(kResidualFloor, std::abs(lhs) + std::abs(rhs));
  }
  return out;
}

}  // namespace sixvertex
