#include "sixvertex/weights.hpp"

#include <cmath>
#include <random>

namespace sixvertex {

namespace {

void guard_field_trig(const SpectralPoint& p1, const SpectralPoint& p2, Complex rho) {
  const Complex mu = p1.rapidity, xi = p2.rapidity;
  if (std::abs(mu * rho - xi) < kSingularGuard)
    throw SingularPoint("field-trig weights: |mu*rho - xi| below guard");
  if (std::abs(p1.field) < kSingularGuard || std::abs(p2.field) < kSingularGuard)
    throw SingularPoint("field-trig weights: vanishing field coordinate");
  if (mu * xi == Complex{0.0, 0.0})
    throw SingularPoint("field-trig weights: mu*xi = 0 under a square root");
}

}  // namespace

WeightSet make_generic_weights(WeightSet::Fn a_minus, WeightSet::Fn b_plus,
                               WeightSet::Fn b_minus, WeightSet::Fn c_plus,
                               WeightSet::Fn c_minus, std::string label) {
  WeightSet w;
  w.a_minus = std::move(a_minus);
  w.b_plus = std::move(b_plus);
  w.b_minus = std::move(b_minus);
  w.c_plus = std::move(c_plus);
  w.c_minus = std::move(c_minus);
  w.label = std::move(label);
  return w;
}

WeightSet make_field_trig_weights(Complex rho) {
  if (rho == Complex{0.0, 0.0} || rho == Complex{1.0, 0.0})
    throw ConfigError("field-trig weights need rho outside {0,1}");
  const Complex sqrt_rho = std::sqrt(rho);
  WeightSet w;
  w.anisotropy = rho;
  w.label = "field-trig";
  w.a_minus = [rho](const SpectralPoint& p1, const SpectralPoint& p2) {
    guard_field_trig(p1, p2, rho);
    return p2.field / p1.field;
  };
  w.b_plus = [rho, sqrt_rho](const SpectralPoint& p1, const SpectralPoint& p2) {
    guard_field_trig(p1, p2, rho);
    return sqrt_rho / p1.field * (p1.rapidity - p2.rapidity) /
           (p1.rapidity * rho - p2.rapidity);
  };
  w.b_minus = [rho, sqrt_rho](const SpectralPoint& p1, const SpectralPoint& p2) {
    guard_field_trig(p1, p2, rho);
    return sqrt_rho * p2.field * (p1.rapidity - p2.rapidity) /
           (p1.rapidity * rho - p2.rapidity);
  };
  auto c = [rho](const SpectralPoint& p1, const SpectralPoint& p2) {
    guard_field_trig(p1, p2, rho);
    return (rho - 1.0) * std::sqrt(p2.field / p1.field) *
           std::sqrt(p1.rapidity * p2.rapidity) / (p1.rapidity * rho - p2.rapidity);
  };
  w.c_plus = c;
  w.c_minus = c;
  return w;
}

WeightSet make_symmetric_trig_weights(Complex rho) {
  if (rho == Complex{0.0, 0.0} || rho == Complex{1.0, 0.0})
    throw ConfigError("symmetric-trig weights need rho outside {0,1}");
  const Complex sqrt_rho = std::sqrt(rho);
  WeightSet w;
  w.anisotropy = rho;
  w.label = "sym-trig";
  w.a_minus = [](const SpectralPoint&, const SpectralPoint&) { return Complex{1.0, 0.0}; };
  auto b = [rho, sqrt_rho](const SpectralPoint& p1, const SpectralPoint& p2) {
    const Complex mu = p1.rapidity, xi = p2.rapidity;
    if (std::abs(mu * rho - xi) < kSingularGuard)
      throw SingularPoint("sym-trig weights: |mu*rho - xi| below guard");
    return sqrt_rho * (mu - xi) / (mu * rho - xi);
  };
  auto c = [rho](const SpectralPoint& p1, const SpectralPoint& p2) {
    const Complex mu = p1.rapidity, xi = p2.rapidity;
    if (std::abs(mu * rho - xi) < kSingularGuard)
      throw SingularPoint("sym-trig weights: |mu*rho - xi| below guard");
    if (mu * xi == Complex{0.0, 0.0})
      throw SingularPoint("sym-trig weights: mu*xi = 0 under a square root");
    return (rho - 1.0) * std::sqrt(mu * xi) / (mu * rho - xi);
  };
  w.b_plus = b;
  w.b_minus = b;
  w.c_plus = c;
  w.c_minus = c;
  return w;
}

WeightSet make_permutation_point_weights() {
  WeightSet w;
  w.label = "permutation-point";
  auto one = [](const SpectralPoint&, const SpectralPoint&) { return Complex{1.0, 0.0}; };
  auto zero = [](const SpectralPoint&, const SpectralPoint&) { return Complex{0.0, 0.0}; };
  w.a_minus = one;
  w.b_plus = zero;
  w.b_minus = zero;
  w.c_plus = one;
  w.c_minus = one;
  return w;
}

WeightSet make_gauged_weights(Complex rho, std::uint64_t seed) {
  WeightSet base = make_field_trig_weights(rho);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  // |d1*mu| <= 0.25 and |d2*x| <= 0.25 on the sampled domain keeps g away
  // from zero.
  const Complex d1 = Complex(unit(rng), unit(rng)) * (0.25 / 1.5 / std::sqrt(2.0));
  const Complex d2 = Complex(unit(rng), unit(rng)) * (0.25 / 2.0 / std::sqrt(2.0));
  auto gauge = [d1, d2](const SpectralPoint& p) {
    return Complex{1.0, 0.0} + d1 * p.rapidity + d2 * p.field;
  };
  WeightSet w;
  w.anisotropy = rho;
  w.label = "gauged";
  w.a_minus = base.a_minus;
  w.b_plus = base.b_plus;
  w.b_minus = base.b_minus;
  w.c_plus = [c = base.c_plus, gauge](const SpectralPoint& p1, const SpectralPoint& p2) {
    return gauge(p1) / gauge(p2) * c(p1, p2);
  };
  w.c_minus = [c = base.c_minus, gauge](const SpectralPoint& p1, const SpectralPoint& p2) {
    return gauge(p2) / gauge(p1) * c(p1, p2);
  };
  return w;
}

Mat4 r_matrix(const WeightSet& w, const SpectralPoint& p1, const SpectralPoint& p2) {
  Mat4 r = Mat4::Zero();
  r(0, 0) = 1.0;
  r(1, 1) = w.b_plus(p1, p2);
  r(1, 2) = w.c_plus(p1, p2);
  r(2, 1) = w.c_minus(p1, p2);
  r(2, 2) = w.b_minus(p1, p2);
  r(3, 3) = w.a_minus(p1, p2);
  return r;
}

VerificationReport check_unitarity(const WeightSet& w, const SpectralPoint& p1,
                                   const SpectralPoint& p2, double tol) {
  VerificationReport rep;
  rep.suite = "unitarity";
  const Complex bm12 = w.b_minus(p1, p2), bm21 = w.b_minus(p2, p1);
  const Complex bp12 = w.b_plus(p1, p2), bp21 = w.b_plus(p2, p1);
  const Complex cm12 = w.c_minus(p1, p2), cm21 = w.c_minus(p2, p1);
  const Complex cp12 = w.c_plus(p1, p2), cp21 = w.c_plus(p2, p1);
  const Complex am12 = w.a_minus(p1, p2), am21 = w.a_minus(p2, p1);

  auto scalar_residual = [&](Complex lhs, Complex rhs, double scale) {
    return std::abs(lhs - rhs) / std::max(kResidualFloor, scale);
  };
  auto mag = [](Complex a, Complex b) { return std::max(std::abs(a), std::abs(b)); };

  rep.add("uni1", scalar_residual(bm12 * bp21 + cm12 * cm21, 1.0,
                                  std::max(1.0, mag(bm12 * bp21, cm12 * cm21))),
          tol);
  rep.add("uni2", scalar_residual(bm12 * bp21 + cp12 * cp21, 1.0,
                                  std::max(1.0, mag(bm12 * bp21, cp12 * cp21))),
          tol);
  rep.add("uni3", scalar_residual(cp12 * bm21 + bm12 * cm21, 0.0,
                                  std::max(1.0, mag(cp12 * bm21, bm12 * cm21))),
          tol);
  rep.add("uni4", scalar_residual(cm12 * bp21 + bp12 * cp21, 0.0,
                                  std::max(1.0, mag(cm12 * bp21, bp12 * cp21))),
          tol);
  rep.add("uni5", scalar_residual(am12 * am21, 1.0, std::max(1.0, std::abs(am12 * am21))),
          tol);

  const Mat4 r12 = r_matrix(w, p1, p2);
  Mat4 swap = Mat4::Zero();
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  const Mat4 r21 = swap * r_matrix(w, p2, p1) * swap;
  rep.add("matrix-inversion", rel_diff(MatX(r12 * r21), MatX(Mat4::Identity())), tol);
  return rep;
}

VerificationReport check_yang_baxter(const WeightSet& w, const SpectralPoint& p1,
                                     const SpectralPoint& p2, const SpectralPoint& p3,
                                     double tol) {
  VerificationReport rep;
  rep.suite = "yang-baxter";

  auto bp = [&](const SpectralPoint& a, const SpectralPoint& b) { return w.b_plus(a, b); };
  auto bm = [&](const SpectralPoint& a, const SpectralPoint& b) { return w.b_minus(a, b); };
  auto cp = [&](const SpectralPoint& a, const SpectralPoint& b) { return w.c_plus(a, b); };
  auto cm = [&](const SpectralPoint& a, const SpectralPoint& b) { return w.c_minus(a, b); };
  auto am = [&](const SpectralPoint& a, const SpectralPoint& b) { return w.a_minus(a, b); };

  auto add_rel = [&](const std::string& id, std::initializer_list<Complex> lhs_terms,
                     std::initializer_list<Complex> rhs_terms) {
    Complex lhs = 0.0, rhs = 0.0;
    double scale = kResidualFloor;
    for (Complex t : lhs_terms) {
      lhs += t;
      scale = std::max(scale, std::abs(t));
    }
    for (Complex t : rhs_terms) {
      rhs += t;
      scale = std::max(scale, std::abs(t));
    }
    rep.add(id, std::abs(lhs - rhs) / scale, tol);
  };

  add_rel("yb1", {cp(p1, p2) * bm(p2, p3), bm(p1, p2) * cp(p1, p3) * cm(p2, p3)},
          {cp(p1, p2) * bm(p1, p3)});
  add_rel("yb2", {cm(p1, p2) * bm(p2, p3), bm(p1, p2) * cm(p1, p3) * cp(p2, p3)},
          {cm(p1, p2) * bm(p1, p3)});
  add_rel("yb3", {bp(p1, p2) * cm(p2, p3), cp(p1, p2) * cm(p1, p3) * bp(p2, p3)},
          {bp(p1, p3) * cm(p2, p3)});
  add_rel("yb4", {bp(p1, p2) * cp(p1, p3) * bm(p2, p3), cp(p1, p2) * am(p1, p3) * cp(p2, p3)},
          {am(p1, p2) * cp(p1, p3) * am(p2, p3)});
  add_rel("yb5", {bp(p1, p2) * cm(p1, p3) * bm(p2, p3), cm(p1, p2) * am(p1, p3) * cm(p2, p3)},
          {am(p1, p2) * cm(p1, p3) * am(p2, p3)});
  add_rel("yb6", {bm(p1, p2) * am(p1, p3) * cm(p2, p3), cp(p1, p2) * cm(p1, p3) * bm(p2, p3)},
          {am(p1, p2) * bm(p1, p3) * cm(p2, p3)});
  add_rel("yb7", {cm(p1, p2) * cp(p1, p3) * cm(p2, p3)},
          {cp(p1, p2) * cm(p1, p3) * cp(p2, p3)});
  add_rel("yb8", {bp(p1, p2) * cp(p1, p3) * cm(p2, p3), cp(p1, p2) * am(p1, p3) * bp(p2, p3)},
          {cp(p1, p2) * bp(p1, p3) * am(p2, p3)});

  // 8x8 star-triangle residual on three tensor slots.
  auto embed3 = [](const Mat4& m, int slot_a, int slot_b) {
    MatX out = MatX::Zero(8, 8);
    for (Eigen::Index col = 0; col < 8; ++col) {
      const int ba = site_bit(col, slot_a, 3), bb = site_bit(col, slot_b, 3);
      for (int na = 0; na < 2; ++na)
        for (int nb = 0; nb < 2; ++nb) {
          Eigen::Index row = with_site_bit(col, slot_a, 3, na);
          row = with_site_bit(row, slot_b, 3, nb);
          out(row, col) += m(2 * na + nb, 2 * ba + bb);
        }
    }
    return out;
  };
  const MatX r12 = embed3(r_matrix(w, p1, p2), 1, 2);
  const MatX r13 = embed3(r_matrix(w, p1, p3), 1, 3);
  const MatX r23 = embed3(r_matrix(w, p2, p3), 2, 3);
  rep.add("star-triangle-8x8", rel_diff(MatX(r12 * r13 * r23), MatX(r23 * r13 * r12)), tol);
  return rep;
}

WeightSet weight_family_by_name(const std::string& name, Complex rho, std::uint64_t seed) {
  if (name == "field-trig") return make_field_trig_weights(rho);
  if (name == "sym-trig") return make_symmetric_trig_weights(rho);
  if (name == "permutation-point") return make_permutation_point_weights();
  if (name == "gauged") return make_gauged_weights(rho, seed);
  throw ConfigError("unknown weight family: " + name);
}

}  // namespace sixvertex
