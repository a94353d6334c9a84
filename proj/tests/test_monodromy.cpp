#include <doctest.h>

#include <cmath>
#include <random>

#include "sixvertex/monodromy.hpp"
#include "sixvertex/sampling.hpp"
#include "sixvertex/scalar_product.hpp"

using namespace sixvertex;

namespace {

VecX random_vector(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  VecX v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex{unit(rng), unit(rng)};
  return v;
}

}  // namespace

TEST_CASE("single-site blocks read off the local vertex") {
  const WeightSet w = make_field_trig_weights({2.0, 0.0});
  ParameterSampler sampler(1);
  const auto sites = sampler.distinct_points(1, &w);
  const SpectralPoint mu = sampler.point_away_from(sites, &w);
  const MonodromyBlocks b = build_monodromy(w, mu, sites);
  CHECK(rel_diff(b.A, MatX(diag2(1.0, w.b_plus(mu, sites[0])))) < 1e-15);
  CHECK(rel_diff(b.B, MatX(w.c_plus(mu, sites[0]) * unit22(2, 1))) < 1e-15);
  CHECK(rel_diff(b.C, MatX(w.c_minus(mu, sites[0]) * unit22(1, 2))) < 1e-15);
  CHECK(rel_diff(b.D, MatX(diag2(w.b_minus(mu, sites[0]), w.a_minus(mu, sites[0])))) <
        1e-15);
  CHECK(verify_block_structure(w, b, 1e-14).passed());
}

TEST_CASE("block structure holds at larger sizes") {
  const WeightSet w = make_field_trig_weights({2.0, 0.0});
  for (std::uint64_t seed : {2, 3, 4}) {
    ParameterSampler sampler(seed);
    const auto sites = sampler.distinct_points(3, &w);
    const SpectralPoint mu = sampler.point_away_from(sites, &w);
    CHECK(verify_block_structure(w, build_monodromy(w, mu, sites), 1e-12).passed());
  }
  // swapped blocks violate triangularity
  ParameterSampler sampler(5);
  const auto sites = sampler.distinct_points(2, &w);
  const SpectralPoint mu = sampler.point_away_from(sites, &w);
  MonodromyBlocks b = build_monodromy(w, mu, sites);
  std::swap(b.A, b.B);
  CHECK_FALSE(verify_block_structure(w, b, 1e-12).passed());
}

TEST_CASE("both assembly orders produce identical blocks") {
  for (auto family : {"field-trig", "gauged"}) {
    const WeightSet w = weight_family_by_name(family, {2.0, 0.0}, 6);
    ParameterSampler sampler(6);
    const auto sites = sampler.distinct_points(4, &w);
    const SpectralPoint mu = sampler.point_away_from(sites, &w);
    const MonodromyBlocks head = build_monodromy(w, mu, sites);
    const MonodromyBlocks tail = build_monodromy_tail(w, mu, sites);
    CHECK(rel_diff(head.A, tail.A) < 1e-12);
    CHECK(rel_diff(head.B, tail.B) < 1e-12);
    CHECK(rel_diff(head.C, tail.C) < 1e-12);
    CHECK(rel_diff(head.D, tail.D) < 1e-12);
  }
}

TEST_CASE("vector application agrees with dense blocks") {
  const WeightSet w = make_gauged_weights({2.0, 0.0}, 7);
  ParameterSampler sampler(7);
  const auto sites = sampler.distinct_points(5, &w);
  const SpectralPoint mu = sampler.point_away_from(sites, &w);
  const MonodromyBlocks b = build_monodromy(w, mu, sites);
  const MonodromyApplier applier(w, mu, sites);
  const VecX v = random_vector(dim_of(5), 71);
  CHECK(rel_diff(applier.apply_A(v), VecX(b.A * v)) < 1e-12);
  CHECK(rel_diff(applier.apply_B(v), VecX(b.B * v)) < 1e-12);
  CHECK(rel_diff(applier.apply_C(v), VecX(b.C * v)) < 1e-12);
  CHECK(rel_diff(applier.apply_D(v), VecX(b.D * v)) < 1e-12);
}

TEST_CASE("annihilation at a coincident symmetric point makes single flips") {
  const WeightSet sym = make_symmetric_trig_weights({2.0, 0.0});
  ParameterSampler sampler(8);
  const auto sites = sampler.distinct_points(3, &sym, false);
  const MonodromyApplier applier(sym, sites[0], sites);
  VecX down = VecX::Zero(8);
  down[7] = 1.0;
  const VecX out = applier.apply_C(down);
  // support only on states with exactly one raised site
  for (Eigen::Index idx = 0; idx < 8; ++idx) {
    int ups = 0;
    for (int s = 1; s <= 3; ++s) ups += 1 - site_bit(idx, s, 3);
    if (ups != 1) CHECK(std::abs(out[idx]) < 1e-14);
  }
  CHECK(out.cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("exchange relations hold at seeded points") {
  const WeightSet w = make_field_trig_weights({2.0, 0.0});
  CHECK(verify_exchange_relations(w, 1, 1e-12, 9).passed());
  const VerificationReport rep = verify_exchange_relations(w, 4, 1e-11, 10);
  CHECK_MESSAGE(rep.passed(), "max residual ", rep.max_residual());
  const WeightSet g = make_gauged_weights({2.0, 0.0}, 11);
  CHECK(verify_exchange_relations(g, 3, 1e-11, 11).passed());
}

TEST_CASE("transfer operators at different rapidities commute") {
  const WeightSet w = make_gauged_weights({2.0, 0.0}, 12);
  for (std::uint64_t seed : {12, 13, 14}) {
    ParameterSampler sampler(seed);
    const int L = (seed == 14) ? 6 : 5;
    const auto sites = sampler.distinct_points(L, &w);
    const SpectralPoint mu = sampler.point_away_from(sites, &w);
    auto taken = sites;
    taken.push_back(mu);
    const SpectralPoint nu = sampler.point_away_from(taken, &w);
    const MatX t1 = transfer_matrix(build_monodromy(w, mu, sites));
    const MatX t2 = transfer_matrix(build_monodromy(w, nu, sites));
    CHECK(rel_diff(MatX(t1 * t2), MatX(t2 * t1)) < 1e-10);
  }
}

TEST_CASE("reordering two ket rapidities rescales the state") {
  const WeightSet w = make_field_trig_weights({2.0, 0.0});
  ParameterSampler sampler(14);
  const auto sites = sampler.distinct_points(4, &w);
  auto taken = sites;
  const SpectralPoint nu1 = sampler.point_away_from(taken, &w);
  taken.push_back(nu1);
  const SpectralPoint nu2 = sampler.point_away_from(taken, &w);
  const VecX direct = bethe_vector(w, sites, {nu1, nu2});
  const VecX swapped = bethe_vector(w, sites, {nu2, nu1});
  CHECK(rel_diff(swapped, VecX(w.a_minus(nu2, nu1) * direct)) < 1e-12);
}

TEST_CASE("operator actions expand into wanted and unwanted terms") {
  const WeightSet w = make_field_trig_weights({2.0, 0.0});
  ParameterSampler sampler(15);
  const auto sites = sampler.distinct_points(3, &w);
  const SpectralPoint lambda = sampler.point_away_from(sites, &w);

  // empty state: pure product eigenvalues
  {
    const MonodromyApplier applier(w, lambda, sites);
    VecX down = VecX::Zero(8);
    down[7] = 1.0;
    Complex coeff_a = 1.0, coeff_d = 1.0;
    for (const auto& s : sites) {
      coeff_a *= w.b_plus(lambda, s);
      coeff_d *= w.a_minus(lambda, s);
    }
    CHECK(rel_diff(applier.apply_A(down), VecX(coeff_a * down)) < 1e-13);
    CHECK(rel_diff(applier.apply_D(down), VecX(coeff_d * down)) < 1e-13);
  }

  auto taken = sites;
  taken.push_back(lambda);
  std::vector<SpectralPoint> nus;
  for (int m = 1; m <= 3; ++m) {
    nus.push_back(sampler.point_away_from(taken, &w));
    taken.push_back(nus.back());
    CHECK(act_eigen_formulas(w, lambda, sites, nus, 1e-10).passed());
  }
  CHECK_THROWS_AS(
      act_eigen_formulas(w, lambda, sites, std::vector<SpectralPoint>(4, nus[0]), 1e-10),
      DenseCutoffExceeded);
}

TEST_CASE("on-shell states are transfer eigenvectors") {
  const Complex rho{2.0, 0.0};
  const WeightSet w = make_field_trig_weights(rho);
  ParameterSampler sampler(16);
  const auto sites = sampler.distinct_points(4, &w);
  const BetheState st = bethe_solve(rho, sites, 2, 16);

  std::vector<SpectralPoint> nus = st.roots;
  for (auto& nu : nus) nu.field = sampler.field_value();
  const VecX state = bethe_vector(w, sites, nus);
  const SpectralPoint lambda = sampler.point_away_from(sites, &w);
  const MonodromyApplier applier(w, lambda, sites);
  const VecX mapped = applier.apply_A(state) + applier.apply_D(state);

  Complex wanted_a = 1.0, wanted_d = 1.0;
  for (const auto& s : sites) {
    wanted_a *= w.b_plus(lambda, s);
    wanted_d *= w.a_minus(lambda, s);
  }
  for (const auto& nu : nus) {
    wanted_a /= w.b_plus(lambda, nu);
    wanted_d *= w.a_minus(nu, lambda) / w.b_plus(nu, lambda);
  }
  CHECK(rel_diff(mapped, VecX((wanted_a + wanted_d) * state)) < 1e-9);
}

TEST_CASE("rapidity constraints: closed-form root at one site") {
  const Complex rho{2.0, 0.0};
  const WeightSet sym = make_symmetric_trig_weights(rho);
  SpectralPoint site;
  site.rapidity = {1.0, 0.0};
  const Complex sqrt_rho = std::sqrt(rho);
  SpectralPoint root;
  root.rapidity = site.rapidity * (1.0 - sqrt_rho) / (rho - sqrt_rho);
  const auto res = bethe_residual(sym, {root}, {site});
  CHECK(res[0] < 1e-14);

  // a generic off-shell point is far from solving the constraint
  SpectralPoint off;
  off.rapidity = {0.55, 0.4};
  CHECK(bethe_residual(sym, {off}, {site})[0] > 1e-3);
}

TEST_CASE("generic and specialized residual routes agree") {
  const Complex rho{2.0, 0.0};
  const WeightSet w = make_field_trig_weights(rho);
  ParameterSampler sampler(18);
  const auto sites = sampler.distinct_points(3, &w);
  auto taken = sites;
  std::vector<SpectralPoint> nus;
  std::vector<Complex> nu_values;
  for (int m = 0; m < 2; ++m) {
    nus.push_back(sampler.point_away_from(taken, &w));
    nus.back().field = {1.0, 0.0};
    taken.push_back(nus.back());
    nu_values.push_back(nus.back().rapidity);
  }
  const auto generic = bethe_residual(w, nus, sites);
  const auto special = bethe_residual_field_trig(rho, nu_values, sites);
  for (int j = 0; j < 2; ++j) CHECK(std::abs(generic[j] - special[j]) < 1e-12);
}
