#include "sixvertex/identities.hpp"

#include <algorithm>
#include <cmath>

namespace sixvertex {

namespace {

Complex phi_kernel(Complex mu, Complex xi, Complex rho) {
  const Complex denom = (mu * rho - xi) * (mu - xi);
  if (std::abs(denom) < kSingularGuard)
    throw SingularPoint("kernel denominator below guard");
  return 1.0 / denom;
}

Complex big_phi(int k, const std::vector<Complex>& mus, const std::vector<Complex>& xis) {
  const int M = static_cast<int>(mus.size());
  Complex value = 1.0;
  for (int m = 0; m < M; ++m) value *= mus[k - 1] - xis[m];
  for (int n = 0; n < M; ++n) {
    if (n == k - 1) continue;
    const Complex denom = mus[k - 1] - mus[n];
    if (std::abs(denom) < kSingularGuard)
      throw SingularPoint("coincident rapidities in partial-fraction weight");
    value /= denom;
  }
  return value;
}

Complex small_g(int p, const std::vector<Complex>& mus, const std::vector<Complex>& xis,
                Complex rho) {
  const int M = static_cast<int>(mus.size());
  Complex value = 1.0;
  for (int m = 0; m < M; ++m) {
    if (m == p - 1) continue;
    value *= xis[m] * rho - xis[p - 1];
  }
  for (int n = 0; n < M; ++n) {
    const Complex denom = mus[n] * rho - xis[p - 1];
    if (std::abs(denom) < kSingularGuard)
      throw SingularPoint("site-ratio denominator below guard");
    value /= denom;
  }
  return value;
}

Complex sqrt_rho_power(Complex rho, int exponent) {
  const Complex root = std::sqrt(rho);
  Complex acc = 1.0;
  for (int i = 0; i < std::abs(exponent); ++i) acc *= root;
  return exponent >= 0 ? acc : 1.0 / acc;
}

std::vector<Complex> first_m_rapidities(const IdentityContext& ctx) {
  std::vector<Complex> xis(ctx.mus.size());
  for (std::size_t i = 0; i < xis.size(); ++i) xis[i] = ctx.sites[i].rapidity;
  return xis;
}

}  // namespace

VerificationReport verify_phi_identity(const IdentityContext& ctx, double tol) {
  VerificationReport rep;
  rep.suite = "phi-identity";
  const int M = static_cast<int>(ctx.mus.size());
  const std::vector<Complex> xis = first_m_rapidities(ctx);
  for (int i = 1; i <= M; ++i) {
    Complex rhs = 0.0;
    double scale = kResidualFloor;
    for (int k = 1; k <= M; ++k) {
      const Complex term = big_phi(k, ctx.mus, xis) * phi_kernel(ctx.mus[k - 1], xis[i - 1], ctx.rho);
      rhs += term;
      scale = std::max(scale, std::abs(term));
    }
    const Complex lhs = small_g(i, ctx.mus, xis, ctx.rho);
    scale = std::max(scale, std::abs(lhs));
    rep.add("phi[" + std::to_string(i) + "]", std::abs(lhs - rhs) / scale, tol,
            "M=" + std::to_string(M));
  }
  return rep;
}

VerificationReport verify_det_recursion(const IdentityContext& ctx, double tol) {
  VerificationReport rep;
  rep.suite = "det-recursion";
  const int M = static_cast<int>(ctx.mus.size());
  if (M < 2) throw LengthMismatch("determinant recursion needs M >= 2");
  const std::vector<Complex> xis = first_m_rapidities(ctx);

  MatX kernel(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      kernel(i, j) = phi_kernel(ctx.mus[i], xis[j], ctx.rho);
  const Complex lhs = kernel.partialPivLu().determinant();

  Complex rhs = 0.0;
  for (int p = 1; p <= M; ++p) {
    MatX minor(M - 1, M - 1);
    for (int i = 2; i <= M; ++i) {
      int col = 0;
      for (int j = 1; j <= M; ++j) {
        if (j == p) continue;
        minor(i - 2, col++) = phi_kernel(ctx.mus[i - 1], xis[j - 1], ctx.rho);
      }
    }
    const Complex det_minor =
        (M == 2) ? minor(0, 0) : Complex(minor.partialPivLu().determinant());
    const double sign = (p % 2 == 1) ? 1.0 : -1.0;
    rhs += sign * small_g(p, ctx.mus, xis, ctx.rho) * det_minor;
  }
  rhs /= big_phi(1, ctx.mus, xis);

  rep.add("det-recursion", std::abs(lhs - rhs) /
                               std::max({kResidualFloor, std::abs(lhs), std::abs(rhs)}),
          tol, "M=" + std::to_string(M));
  return rep;
}

VerificationReport verify_H_identity(const IdentityContext& ctx,
                                     const std::vector<int>& subset, int q, int i,
                                     double tol) {
  VerificationReport rep;
  rep.suite = "H-identity";
  const int M = static_cast<int>(ctx.mus.size());
  const int L = static_cast<int>(ctx.sites.size());
  if (q < 1 || q > M) throw IndexOutOfRange("column index q out of range");
  if (i < 1 || i > M) throw IndexOutOfRange("row index i out of range");
  if (static_cast<int>(subset.size()) != q - 1)
    throw LengthMismatch("need q-1 previously fixed sites");
  for (double r : ctx.bethe_residuals)
    if (r > 1e-8) throw OffShellInput("summation identity needs on-shell rapidities");

  const Complex rho = ctx.rho;
  const Complex nu_i = ctx.nus[i - 1];

  Complex lhs = 0.0;
  double scale = kResidualFloor;
  for (int pq = 1; pq <= L; ++pq) {
    const Complex xi = ctx.sites[pq - 1].rapidity;
    Complex term = (rho - 1.0) * (rho - 1.0) * xi / (nu_i * rho - xi);
    for (int j = q; j <= M; ++j) term /= ctx.mus[j - 1] * rho - xi;
    for (int k = 1; k <= L; ++k) {
      if (k == pq) continue;
      const Complex xk = ctx.sites[k - 1].rapidity;
      term *= (xk * rho - xi) / (xk - xi);
    }
    for (int m = 1; m <= M; ++m) {
      if (m == i) continue;
      term *= ctx.nus[m - 1] - xi;
    }
    for (int n = 1; n <= q - 1; ++n)
      term /= ctx.sites[subset[n - 1] - 1].rapidity * rho - xi;
    lhs += term;
    scale = std::max(scale, std::abs(term));
  }

  Complex z_product = 1.0;
  for (const auto& s : ctx.sites) z_product *= s.field;

  Complex rhs = 0.0;
  for (int l = q; l <= M; ++l) {
    Complex term = sqrt_rho_power(rho, 2 * (L - M)) *
                   slavnov_H_entry(i, l, ctx.mus, ctx.nus, ctx.sites, rho);
    for (int m = q; m <= M; ++m) {
      if (m == l) continue;
      term /= ctx.mus[m - 1] - ctx.mus[l - 1];
    }
    for (int n = 1; n <= q - 1; ++n)
      term /= ctx.sites[subset[n - 1] - 1].rapidity - ctx.mus[l - 1];
    rhs += term;
    scale = std::max(scale, std::abs(term));
  }
  for (int l = 1; l <= q - 1; ++l) {
    const Complex xi_l = ctx.sites[subset[l - 1] - 1].rapidity;
    Complex kappa = (rho - 1.0) * sqrt_rho_power(rho, L - 2 * M) * z_product;
    for (int s = q; s <= M; ++s) kappa /= ctx.mus[s - 1] - xi_l;
    for (int n = 1; n <= M; ++n) kappa *= ctx.nus[n - 1] * rho - xi_l;
    for (int m = 1; m <= q - 1; ++m) {
      if (m == l) continue;
      kappa /= ctx.sites[subset[m - 1] - 1].rapidity - xi_l;
    }
    const Complex term = kappa / ((nu_i * rho - xi_l) * (nu_i - xi_l));
    rhs += term;
    scale = std::max(scale, std::abs(term));
  }

  rep.add("H-identity", std::abs(lhs - rhs) / scale, tol,
          "q=" + std::to_string(q) + ",i=" + std::to_string(i));
  return rep;
}

}  // namespace sixvertex
