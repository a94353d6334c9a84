#include <doctest.h>

#include <cmath>

#include "sixvertex/dwpf.hpp"
#include "sixvertex/sampling.hpp"

using namespace sixvertex;

namespace {

DwpfInput seeded_input(const WeightSet& w, DwpfKind kind, int M, std::uint64_t seed) {
  ParameterSampler sampler(seed);
  DwpfInput in;
  in.kind = kind;
  in.weights = &w;
  in.sites = sampler.distinct_points(M, &w);
  for (int m = 0; m < M; ++m)
    in.rapidities.push_back(sampler.point_away_from(in.sites, &w));
  return in;
}

// Two-term closed forms at M = 2, written out independently of the library
// routes.
Complex closed_form_2(const DwpfInput& in) {
  const WeightSet& w = *in.weights;
  const SpectralPoint &r1 = in.rapidities[0], &r2 = in.rapidities[1];
  const SpectralPoint &s1 = in.sites[0], &s2 = in.sites[1];
  if (in.kind == DwpfKind::B) {
    return w.c_plus(r1, s1) * w.c_plus(r2, s2) * w.b_minus(r2, s1) * w.a_minus(r1, s2) /
               (w.b_minus(s2, s1) * w.a_minus(s1, s2)) +
           w.c_plus(r1, s2) * w.c_plus(r2, s1) * w.b_minus(r2, s2) * w.a_minus(r1, s1) /
               w.b_minus(s1, s2);
  }
  return w.c_minus(r1, s1) * w.c_minus(r2, s2) * w.b_minus(r2, s1) * w.a_minus(r1, s2) /
             w.b_minus(s2, s1) +
         w.c_minus(r1, s2) * w.c_minus(r2, s1) * w.b_minus(r2, s2) * w.a_minus(r1, s1) *
             w.a_minus(s1, s2) / w.b_minus(s1, s2);
}

}  // namespace

TEST_CASE("one-column partition function is a single weight") {
  const WeightSet w = make_field_trig_weights({2.0, 0.0});
  const DwpfInput in = seeded_input(w, DwpfKind::B, 1, 1);
  const Complex expect = w.c_plus(in.rapidities[0], in.sites[0]);
  CHECK(rel_diff(dwpf_bra_ket(in).untwisted, expect) < 1e-14);
  CHECK(rel_diff(dwpf_recursive(in), expect) < 1e-14);
  CHECK(rel_diff(dwpf_sum(in), expect) < 1e-14);
  CHECK(rel_diff(dwpf_determinant(in, {2.0, 0.0}), expect) < 1e-13);
}

TEST_CASE("two-column values match the closed two-term forms") {
  const WeightSet w = make_field_trig_weights({2.0, 0.0});
  for (DwpfKind kind : {DwpfKind::B, DwpfKind::C}) {
    const DwpfInput in = seeded_input(w, kind, 2, 2);
    const Complex expect = closed_form_2(in);
    CHECK(rel_diff(dwpf_bra_ket(in).untwisted, expect) < 1e-13);
    CHECK(rel_diff(dwpf_recursive(in), expect) < 1e-13);
    CHECK(rel_diff(dwpf_sum(in), expect) < 1e-13);
  }
}

TEST_CASE("twisted and plain values differ by the pairwise corner factor") {
  const WeightSet w = make_gauged_weights({2.0, 0.0}, 3);
  for (DwpfKind kind : {DwpfKind::B, DwpfKind::C}) {
    const DwpfInput in = seeded_input(w, kind, 3, 3);
    const BraKetValue v = dwpf_bra_ket(in);
    Complex factor = 1.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        if (kind == DwpfKind::B)
          factor *= w.a_minus(in.sites[i], in.sites[j]);
        else
          factor *= w.a_minus(in.sites[j], in.sites[i]);
      }
    CHECK(rel_diff(v.twisted, Complex(factor * v.untwisted)) < 1e-12);
  }
}

TEST_CASE("recursion matches the direct route at three columns") {
  const WeightSet w = make_field_trig_weights({2.0, 0.0});
  for (DwpfKind kind : {DwpfKind::B, DwpfKind::C}) {
    const DwpfInput in = seeded_input(w, kind, 3, 4);
    CHECK(rel_diff(dwpf_recursive(in), dwpf_bra_ket(in).untwisted) < 1e-11);
    CHECK(rel_diff(dwpf_recursive(in), dwpf_sum(in)) < 1e-11);
  }
}

TEST_CASE("all four routes agree for the field family") {
  const Complex rho{2.0, 0.0};
  const WeightSet w = make_field_trig_weights(rho);
  for (int M : {4, 6}) {
    for (DwpfKind kind : {DwpfKind::B, DwpfKind::C}) {
      const DwpfInput in = seeded_input(w, kind, M, 50 + M);
      const Complex a = dwpf_bra_ket(in).untwisted;
      const Complex b = dwpf_recursive(in);
      const Complex c = dwpf_sum(in);
      const Complex d = dwpf_determinant(in, rho);
      CHECK(rel_diff(a, b) < 1e-10);
      CHECK(rel_diff(a, c) < 1e-10);
      CHECK(rel_diff(a, d) < 1e-10);
    }
  }
}

TEST_CASE("three routes agree for gauge-twisted weights") {
  const WeightSet w = make_gauged_weights({2.0, 0.0}, 77);
  for (int M : {3, 5}) {
    for (DwpfKind kind : {DwpfKind::B, DwpfKind::C}) {
      const DwpfInput in = seeded_input(w, kind, M, 60 + M);
      const Complex a = dwpf_bra_ket(in).untwisted;
      CHECK(rel_diff(a, dwpf_recursive(in)) < 1e-10);
      CHECK(rel_diff(a, dwpf_sum(in)) < 1e-10);
    }
  }
}

TEST_CASE("Cauchy-kernel determinant basics") {
  const Complex rho{2.0, 0.0};
  // single point: reduces to the field-free c weight
  const WeightSet sym = make_symmetric_trig_weights(rho);
  ParameterSampler sampler(7);
  const auto pts = sampler.distinct_points(2, &sym, false);
  const Complex value = izergin_determinant({pts[0].rapidity}, {pts[1].rapidity}, rho);
  CHECK(rel_diff(value, sym.c_plus(pts[0], pts[1])) < 1e-14);

  // two points: equals the permutation sum of the symmetric family
  DwpfInput in = seeded_input(sym, DwpfKind::B, 2, 8);
  for (auto& p : in.sites) p.field = {1.0, 0.0};
  for (auto& p : in.rapidities) p.field = {1.0, 0.0};
  std::vector<Complex> mus, xis;
  for (const auto& p : in.rapidities) mus.push_back(p.rapidity);
  for (const auto& p : in.sites) xis.push_back(p.rapidity);
  CHECK(rel_diff(izergin_determinant(mus, xis, rho), dwpf_sum(in)) < 1e-12);

  CHECK_THROWS_AS(izergin_determinant({mus[0], mus[0]}, xis, rho), DegenerateRapidities);
}

TEST_CASE("near-coincident rapidities degrade gracefully") {
  const Complex rho{2.0, 0.0};
  const WeightSet sym = make_symmetric_trig_weights(rho);
  DwpfInput in = seeded_input(sym, DwpfKind::B, 3, 9);
  for (auto& p : in.sites) p.field = {1.0, 0.0};
  for (auto& p : in.rapidities) p.field = {1.0, 0.0};
  in.rapidities[1].rapidity = in.rapidities[0].rapidity + Complex{1e-4, 0.0};
  std::vector<Complex> mus, xis;
  for (const auto& p : in.rapidities) mus.push_back(p.rapidity);
  for (const auto& p : in.sites) xis.push_back(p.rapidity);
  CHECK(rel_diff(izergin_determinant(mus, xis, rho), dwpf_sum(in)) < 1e-6);
}

TEST_CASE("field prefactor reduces to the bare determinant at unit fields") {
  const Complex rho{2.0, 0.0};
  const WeightSet w = make_field_trig_weights(rho);
  DwpfInput in = seeded_input(w, DwpfKind::B, 3, 10);
  for (auto& p : in.sites) p.field = {1.0, 0.0};
  for (auto& p : in.rapidities) p.field = {1.0, 0.0};
  std::vector<Complex> mus, xis;
  for (const auto& p : in.rapidities) mus.push_back(p.rapidity);
  for (const auto& p : in.sites) xis.push_back(p.rapidity);
  CHECK(rel_diff(dwpf_determinant(in, rho), izergin_determinant(mus, xis, rho)) < 1e-13);
}

TEST_CASE("determinant route with fields agrees with the sum at five columns") {
  const Complex rho{2.0, 0.0};
  const WeightSet w = make_field_trig_weights(rho);
  for (DwpfKind kind : {DwpfKind::B, DwpfKind::C}) {
    const DwpfInput in = seeded_input(w, kind, 5, 11);
    CHECK(rel_diff(dwpf_determinant(in, rho), dwpf_sum(in)) < 1e-9);
  }
}

TEST_CASE("rapidity exchange symmetry holds only for the symmetric family") {
  const Complex rho{2.0, 0.0};
  const WeightSet sym = make_symmetric_trig_weights(rho);
  DwpfInput in = seeded_input(sym, DwpfKind::B, 3, 12);
  for (auto& p : in.sites) p.field = {1.0, 0.0};
  for (auto& p : in.rapidities) p.field = {1.0, 0.0};
  DwpfInput swapped = in;
  std::swap(swapped.rapidities[0], swapped.rapidities[2]);
  CHECK(rel_diff(dwpf_sum(in), dwpf_sum(swapped)) < 1e-11);

  const WeightSet w = make_field_trig_weights(rho);
  DwpfInput asym = seeded_input(w, DwpfKind::B, 2, 13);
  DwpfInput asym_swapped = asym;
  std::swap(asym_swapped.rapidities[0], asym_swapped.rapidities[1]);
  CHECK(rel_diff(dwpf_sum(asym), dwpf_sum(asym_swapped)) > 1e-4);
}

TEST_CASE("degenerate sites are rejected") {
  const WeightSet w = make_field_trig_weights({2.0, 0.0});
  DwpfInput in = seeded_input(w, DwpfKind::B, 2, 14);
  in.sites[1] = in.sites[0];
  CHECK_THROWS_AS(dwpf_sum(in), SingularPoint);
}
