#include "sixvertex/scalar_product.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "sixvertex/dwpf.hpp"
#include "sixvertex/monodromy.hpp"
#include "sixvertex/sampling.hpp"
#include "sixvertex/twisted_ops.hpp"

namespace sixvertex {

namespace {

void check_input(const ScalarProductInput& in) {
  if (in.weights == nullptr) throw ConfigError("scalar product carries no weight set");
  if (in.bra.size() != in.ket.size())
    throw LengthMismatch("scalar product needs equal bra and ket sizes");
  if (in.bra.size() > in.sites.size())
    throw LengthMismatch("scalar product needs M <= L");
}

Complex sqrt_rho_power(Complex rho, int exponent) {
  const Complex root = std::sqrt(rho);
  Complex acc = 1.0;
  for (int i = 0; i < std::abs(exponent); ++i) acc *= root;
  return exponent >= 0 ? acc : 1.0 / acc;
}

}  // namespace

Complex scalar_direct(const ScalarProductInput& in) {
  check_input(in);
  const int L = static_cast<int>(in.sites.size());
  const int M = static_cast<int>(in.bra.size());
  if (L > 14) throw DenseCutoffExceeded("scalar product limited to 14 sites");
  const WeightSet& w = *in.weights;

  VecX v = VecX::Zero(dim_of(L));
  v[dim_of(L) - 1] = 1.0;
  for (int m = 1; m <= M; ++m) {
    MonodromyApplier applier(w, in.ket[m - 1], in.sites);
    v = applier.apply_C(v);
  }
  for (int m = M; m >= 1; --m) {
    MonodromyApplier applier(w, in.bra[m - 1], in.sites);
    v = applier.apply_B(v);
  }
  return v[dim_of(L) - 1];
}

Complex scalar_twisted(const ScalarProductInput& in) {
  check_input(in);
  const int L = static_cast<int>(in.sites.size());
  const int M = static_cast<int>(in.bra.size());
  if (L > 14) throw DenseCutoffExceeded("scalar product limited to 14 sites");
  const WeightSet& w = *in.weights;

  VecX v = VecX::Zero(dim_of(L));
  v[dim_of(L) - 1] = 1.0;
  for (int m = 1; m <= M; ++m) v = twisted_C_theta(w, in.ket[m - 1], in.sites).apply(v);
  for (int m = M; m >= 1; --m) v = twisted_B_theta(w, in.bra[m - 1], in.sites).apply(v);
  return v[dim_of(L) - 1];
}

Complex scalar_bilinear(const ScalarProductInput& in) {
  check_input(in);
  const int L = static_cast<int>(in.sites.size());
  const int M = static_cast<int>(in.bra.size());
  if (M == 0) return Complex{1.0, 0.0};
  if (L > 12 || M > 5)
    throw DenseCutoffExceeded("bilinear sum limited to 12 sites and 5 rapidities");
  const WeightSet& w = *in.weights;

  std::vector<int> subset(M);
  std::iota(subset.begin(), subset.end(), 1);
  Complex total = 0.0;
  while (true) {
    std::vector<SpectralPoint> selected(M);
    for (int m = 0; m < M; ++m) selected[m] = in.sites[subset[m] - 1];

    Complex coeff = 1.0;
    for (int m = 0; m < M; ++m) {
      for (int p = 1; p <= L; ++p) {
        if (std::find(subset.begin(), subset.end(), p) != subset.end()) continue;
        const SpectralPoint& off_site = in.sites[p - 1];
        coeff *= w.a_minus(in.bra[m], off_site) * w.a_minus(in.ket[m], off_site) /
                 (w.b_minus(off_site, selected[m]) * w.a_minus(selected[m], off_site));
      }
    }

    DwpfInput zb{DwpfKind::B, in.bra, selected, &w};
    DwpfInput zc{DwpfKind::C, in.ket, selected, &w};
    total += coeff * dwpf_sum(zc) * dwpf_sum(zb);

    // next ordered subset
    int pos = M - 1;
    while (pos >= 0 && subset[pos] == L - (M - 1 - pos)) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int t = pos + 1; t < M; ++t) subset[t] = subset[t - 1] + 1;
  }
  return total;
}

Complex scalar_field_factorized(const ScalarProductInput& in, Complex rho) {
  check_input(in);
  const int L = static_cast<int>(in.sites.size());
  const int M = static_cast<int>(in.bra.size());

  Complex prefactor = 1.0;
  for (const auto& s : in.sites) {
    Complex acc = 1.0;
    for (int m = 0; m < M; ++m) acc *= s.field;
    prefactor *= acc;
  }
  for (int m = 1; m <= M; ++m) {
    const Complex xy = in.bra[m - 1].field * in.ket[m - 1].field;
    Complex power = std::sqrt(xy);  // exponent L + 1/2 - m
    for (int t = 0; t < L - m; ++t) power *= xy;
    prefactor /= power;
  }

  const WeightSet sym = make_symmetric_trig_weights(rho);
  ScalarProductInput stripped;
  std::vector<SpectralPoint> bra(in.bra), ket(in.ket), sites(in.sites);
  for (auto* pts : {&bra, &ket, &sites})
    for (auto& p : *pts) p.field = Complex{1.0, 0.0};
  stripped.bra = bra;
  stripped.ket = ket;
  stripped.sites = sites;
  stripped.weights = &sym;
  return prefactor * scalar_twisted(stripped);
}

namespace {

/// Coefficients of prod_k (xi_k - s * nu) as a polynomial in nu.
std::vector<Complex> product_poly(const std::vector<Complex>& xis, Complex s) {
  std::vector<Complex> poly{Complex{1.0, 0.0}};
  for (Complex xi : xis) {
    std::vector<Complex> next(poly.size() + 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += xi * poly[i];
      next[i + 1] -= s * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

Complex field_constant(Complex rho, const std::vector<SpectralPoint>& sites) {
  Complex z_product = 1.0;
  for (const auto& s : sites) z_product *= s.field;
  return sqrt_rho_power(rho, -static_cast<int>(sites.size())) * z_product;
}

struct NewtonSystem {
  Complex rho;
  Complex constant;  // rho^{-L/2} prod z
  std::vector<Complex> xis;

  VecX value(const VecX& nu) const {
    const int M = static_cast<int>(nu.size());
    VecX f(M);
    for (int j = 0; j < M; ++j) {
      Complex lhs = 1.0, rhs = constant;
      for (Complex xi : xis) {
        lhs *= xi - nu[j];
        rhs *= xi - nu[j] * rho;
      }
      for (int m = 0; m < M; ++m) {
        if (m == j) continue;
        lhs *= nu[m] - nu[j] * rho;
        rhs *= nu[m] * rho - nu[j];
      }
      f[j] = lhs - rhs;
    }
    return f;
  }

  MatX jacobian(const VecX& nu) const {
    const int M = static_cast<int>(nu.size());
    MatX jac = MatX::Zero(M, M);
    for (int j = 0; j < M; ++j) {
      Complex site_lhs = 1.0, site_rhs = 1.0;
      Complex d_site_lhs = 0.0, d_site_rhs = 0.0;
      for (Complex xi : xis) {
        d_site_lhs = d_site_lhs * (xi - nu[j]) - site_lhs;
        d_site_rhs = d_site_rhs * (xi - nu[j] * rho) - rho * site_rhs;
        site_lhs *= xi - nu[j];
        site_rhs *= xi - nu[j] * rho;
      }
      Complex pair_lhs = 1.0, pair_rhs = 1.0;
      Complex d_pair_lhs = 0.0, d_pair_rhs = 0.0;
      for (int m = 0; m < M; ++m) {
        if (m == j) continue;
        d_pair_lhs = d_pair_lhs * (nu[m] - nu[j] * rho) - rho * pair_lhs;
        d_pair_rhs = d_pair_rhs * (nu[m] * rho - nu[j]) - pair_rhs;
        pair_lhs *= nu[m] - nu[j] * rho;
        pair_rhs *= nu[m] * rho - nu[j];
      }
      jac(j, j) = d_site_lhs * pair_lhs + site_lhs * d_pair_lhs -
                  constant * (d_site_rhs * pair_rhs + site_rhs * d_pair_rhs);
      for (int k = 0; k < M; ++k) {
        if (k == j) continue;
        Complex lhs_other = site_lhs, rhs_other = constant * site_rhs;
        for (int m = 0; m < M; ++m) {
          if (m == j || m == k) continue;
          lhs_other *= nu[m] - nu[j] * rho;
          rhs_other *= nu[m] * rho - nu[j];
        }
        jac(j, k) = lhs_other - rho * rhs_other;
      }
    }
    return jac;
  }
};

std::vector<SpectralPoint> to_points(const std::vector<Complex>& values) {
  std::vector<SpectralPoint> pts(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) pts[i].rapidity = values[i];
  return pts;
}

void sort_roots(std::vector<Complex>& roots) {
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

std::vector<BetheState> bethe_roots_m1(Complex rho,
                                       const std::vector<SpectralPoint>& sites) {
  std::vector<Complex> xis(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) xis[i] = sites[i].rapidity;
  const Complex constant = field_constant(rho, sites);

  const std::vector<Complex> lhs = product_poly(xis, Complex{1.0, 0.0});
  const std::vector<Complex> rhs = product_poly(xis, rho);
  std::vector<Complex> poly(lhs.size());
  double coeff_scale = kResidualFloor;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    poly[i] = lhs[i] - constant * rhs[i];
    coeff_scale = std::max(coeff_scale, std::abs(poly[i]));
  }
  while (poly.size() > 1 && std::abs(poly.back()) < 1e-13 * coeff_scale) poly.pop_back();
  const int degree = static_cast<int>(poly.size()) - 1;
  if (degree < 1) throw NoConvergence("rapidity polynomial degenerated to a constant");

  MatX companion = MatX::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -poly[i] / poly[degree];
  Eigen::ComplexEigenSolver<MatX> solver(companion);

  std::vector<Complex> roots(degree);
  for (int i = 0; i < degree; ++i) roots[i] = solver.eigenvalues()[i];
  sort_roots(roots);

  std::vector<BetheState> states;
  for (Complex r : roots) {
    // One Newton polish step on the cleared form to tighten the eigenvalue.
    NewtonSystem sys{rho, constant, xis};
    VecX nu(1);
    nu[0] = r;
    for (int it = 0; it < 8; ++it) {
      const VecX f = sys.value(nu);
      const MatX j = sys.jacobian(nu);
      if (std::abs(j(0, 0)) < kResidualFloor) break;
      nu[0] -= f[0] / j(0, 0);
    }
    BetheState state;
    state.roots = to_points({nu[0]});
    state.residuals = bethe_residual_field_trig(rho, {nu[0]}, sites);
    states.push_back(std::move(state));
  }
  return states;
}

BetheState bethe_solve(Complex rho, const std::vector<SpectralPoint>& sites, int M,
                       std::uint64_t seed) {
  if (M < 1) throw ConfigError("bethe_solve needs M >= 1");
  if (M == 1) {
    auto states = bethe_roots_m1(rho, sites);
    for (const auto& s : states)
      if (s.residuals[0] < 1e-10) return s;
    throw NoConvergence("no polynomial root met the residual target");
  }

  std::vector<Complex> xis(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) xis[i] = sites[i].rapidity;
  NewtonSystem sys{rho, field_constant(rho, sites), xis};

  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_real_distribution<double> radius(0.2, 2.5);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);

  for (int restart = 0; restart < 50; ++restart) {
    VecX nu(M);
    for (int j = 0; j < M; ++j) {
      const double r = radius(rng), phi = angle(rng);
      nu[j] = Complex{r * std::cos(phi), r * std::sin(phi)};
    }
    double fnorm = sys.value(nu).norm();
    bool stalled = false;
    for (int it = 0; it < 200 && !stalled; ++it) {
      const VecX f = sys.value(nu);
      fnorm = f.norm();
      if (fnorm < 1e-14) break;
      const MatX jac = sys.jacobian(nu);
      const VecX step = jac.partialPivLu().solve(f);
      if (!step.allFinite()) { stalled = true; break; }
      double damping = 1.0;
      VecX cand = nu - damping * step;
      for (int halvings = 0; halvings < 30; ++halvings) {
        if (sys.value(cand).norm() <= fnorm) break;
        damping *= 0.5;
        cand = nu - damping * step;
        if (halvings == 29) stalled = true;
      }
      nu = cand;
    }

    std::vector<Complex> roots(M);
    for (int j = 0; j < M; ++j) roots[j] = nu[j];
    sort_roots(roots);
    bool distinct = true;
    for (int a = 0; a < M && distinct; ++a)
      for (int b = a + 1; b < M; ++b)
        if (std::abs(roots[a] - roots[b]) < 1e-6) { distinct = false; break; }
    if (!distinct) continue;

    const auto residuals = bethe_residual_field_trig(rho, roots, sites);
    if (*std::max_element(residuals.begin(), residuals.end()) < 1e-10) {
      BetheState state;
      state.roots = to_points(roots);
      state.residuals = residuals;
      return state;
    }
  }
  throw NoConvergence("rapidity solver exhausted its restart budget");
}

Complex slavnov_H_entry(int i, int j, const std::vector<Complex>& mus,
                        const std::vector<Complex>& nus,
                        const std::vector<SpectralPoint>& sites, Complex rho) {
  const int M = static_cast<int>(nus.size());
  const Complex nu_i = nus[i - 1], mu_j = mus[j - 1];
  if (std::abs(nu_i - mu_j) < kSingularGuard)
    throw DegenerateRapidities("kernel entry needs nu_i != mu_j");
  Complex first = field_constant(rho, sites);
  Complex second = 1.0;
  for (const auto& s : sites) second *= (mu_j - s.rapidity) / (mu_j * rho - s.rapidity);
  for (int m = 0; m < M; ++m) {
    if (m == i - 1) continue;
    first *= nus[m] * rho - mu_j;
    second *= nus[m] - mu_j * rho;
  }
  return (rho - 1.0) / (nu_i - mu_j) * (first - second);
}

Complex slavnov_determinant(const std::vector<SpectralPoint>& mus,
                            const BetheState& bethe,
                            const std::vector<SpectralPoint>& sites, Complex rho) {
  const int M = static_cast<int>(mus.size());
  const int L = static_cast<int>(sites.size());
  if (static_cast<int>(bethe.roots.size()) != M)
    throw LengthMismatch("determinant needs equal bra and ket sizes");
  for (double r : bethe.residuals)
    if (r > 1e-8) throw OffShellInput("determinant form needs an on-shell ket");

  std::vector<Complex> mu_vals(M), nu_vals(M);
  for (int m = 0; m < M; ++m) {
    mu_vals[m] = mus[m].rapidity;
    nu_vals[m] = bethe.roots[m].rapidity;
  }

  Complex prefactor = 1.0;
  for (const auto& s : sites) {
    Complex acc = 1.0;
    for (int m = 0; m < M; ++m) acc *= s.field;
    prefactor *= acc;
  }
  for (int m = 1; m <= M; ++m) {
    const Complex xy = mus[m - 1].field * bethe.roots[m - 1].field;
    Complex power = std::sqrt(xy);
    for (int t = 0; t < L - m; ++t) power *= xy;
    prefactor /= power;
  }
  prefactor *= sqrt_rho_power(rho, M * (L - M));
  for (int k = 0; k < M; ++k) prefactor *= std::sqrt(mu_vals[k] * nu_vals[k]);
  for (int q = 0; q < M; ++q)
    for (int l = q + 1; l < M; ++l) {
      const Complex denom = (mu_vals[l] - mu_vals[q]) * (nu_vals[q] - nu_vals[l]);
      if (std::abs(denom) < kSingularGuard)
        throw DegenerateRapidities("coincident rapidities in determinant prefactor");
      prefactor /= denom;
    }

  MatX h(M, M);
  for (int i = 1; i <= M; ++i)
    for (int j = 1; j <= M; ++j)
      h(i - 1, j - 1) = slavnov_H_entry(i, j, mu_vals, nu_vals, sites, rho);
  return prefactor * h.partialPivLu().determinant();
}

IntermediateG intermediate_G(int k, const std::vector<int>& subset,
                             const std::vector<Complex>& mus, const BetheState& bethe,
                             const std::vector<SpectralPoint>& sites, Complex rho) {
  const int M = static_cast<int>(mus.size());
  const int L = static_cast<int>(sites.size());
  if (static_cast<int>(subset.size()) != k)
    throw LengthMismatch("intermediate overlap needs a subset of size k");
  std::vector<Complex> nus(M);
  for (int m = 0; m < M; ++m) nus[m] = bethe.roots[m].rapidity;

  IntermediateG out{};

  // Definition route: symmetric-model operators on the chain.
  {
    const WeightSet sym = make_symmetric_trig_weights(rho);
    std::vector<SpectralPoint> bare_sites(L);
    for (int s = 0; s < L; ++s) bare_sites[s].rapidity = sites[s].rapidity;
    VecX v = VecX::Zero(dim_of(L));
    v[dim_of(L) - 1] = 1.0;
    for (int m = 0; m < M; ++m) {
      SpectralPoint nu;
      nu.rapidity = nus[m];
      v = twisted_C_theta(sym, nu, bare_sites).apply(v);
    }
    for (int m = M; m >= k + 1; --m) {
      SpectralPoint mu;
      mu.rapidity = mus[m - 1];
      v = twisted_B_theta(sym, mu, bare_sites).apply(v);
    }
    Eigen::Index index = dim_of(L) - 1;  // all down, then raise the subset
    for (int p : subset) index = with_site_bit(index, p, L, 0);
    out.by_definition = v[index];
  }

  // Ladder route: bordered determinant, valid on shell.
  {
    for (double r : bethe.residuals)
      if (r > 1e-8) throw OffShellInput("intermediate ladder needs an on-shell ket");
    const int l = M - k;
    std::vector<Complex> xi_p(k);
    for (int j = 0; j < k; ++j) xi_p[j] = sites[subset[j] - 1].rapidity;

    Complex front = sqrt_rho_power(rho, l * (L - l));
    for (int m = 0; m < M; ++m) front *= std::sqrt(nus[m]);
    for (int m = 0; m < M; ++m)
      for (int n = m + 1; n < M; ++n) front /= nus[n] - nus[m];

    int sign_exp = 0;
    for (int r = M - l; r <= M - 1; ++r) sign_exp += r;
    Complex factor = (sign_exp % 2 == 0) ? Complex{1.0, 0.0} : Complex{-1.0, 0.0};
    for (int j = k; j < M; ++j) factor *= std::sqrt(mus[j]);
    for (int m1 = k; m1 < M; ++m1)
      for (int m2 = m1 + 1; m2 < M; ++m2) factor /= mus[m2] - mus[m1];
    for (int j = 0; j < k; ++j) factor *= std::sqrt(xi_p[j]);
    for (int j3 = 0; j3 < M; ++j3)
      for (int j4 = 0; j4 < k; ++j4) factor *= nus[j3] - xi_p[j4];
    for (int n1 = 0; n1 < k; ++n1)
      for (int n2 = n1 + 1; n2 < k; ++n2) factor /= xi_p[n1] - xi_p[n2];
    for (int k1 = k; k1 < M; ++k1)
      for (int k2 = 0; k2 < k; ++k2) factor /= mus[k1] * rho - xi_p[k2];

    MatX bordered(M, M);
    for (int i = 1; i <= M; ++i) {
      for (int j = 1; j <= k; ++j)
        bordered(i - 1, j - 1) = (rho - 1.0) / ((nus[i - 1] * rho - xi_p[j - 1]) *
                                                (nus[i - 1] - xi_p[j - 1]));
      for (int j = k + 1; j <= M; ++j)
        bordered(i - 1, j - 1) = slavnov_H_entry(i, j, mus, nus, sites, rho);
    }
    out.by_ladder = front * factor * bordered.partialPivLu().determinant();
  }
  return out;
}

}  // namespace sixvertex
