#include "sixvertex/dwpf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "sixvertex/monodromy.hpp"
#include "sixvertex/twisted_ops.hpp"

namespace sixvertex {

namespace {

void check_input(const DwpfInput& in) {
  if (in.weights == nullptr) throw ConfigError("dwpf input carries no weight set");
  if (in.rapidities.size() != in.sites.size())
    throw LengthMismatch("dwpf needs as many rapidities as sites");
  for (std::size_t i = 0; i < in.sites.size(); ++i)
    for (std::size_t j = i + 1; j < in.sites.size(); ++j) {
      if (std::abs(in.sites[i].rapidity - in.sites[j].rapidity) < kSingularGuard)
        throw SingularPoint("dwpf sites must be pairwise distinct");
      if (std::abs(in.weights->b_minus(in.sites[i], in.sites[j])) < kSingularGuard)
        throw SingularPoint("dwpf needs nonvanishing b- between sites");
    }
}

Complex theta_ordered(const WeightSet& w, const std::vector<SpectralPoint>& pts, int i,
                      int j) {
  return i < j ? w.a_minus(pts[i - 1], pts[j - 1]) : Complex{1.0, 0.0};
}

}  // namespace

BraKetValue dwpf_bra_ket(const DwpfInput& in) {
  check_input(in);
  const int M = static_cast<int>(in.sites.size());
  if (M > 12) throw DenseCutoffExceeded("dwpf bra-ket limited to 12 sites");
  const WeightSet& w = *in.weights;
  const Eigen::Index dim = dim_of(M);

  BraKetValue out{};
  if (in.kind == DwpfKind::B) {
    // <all-down| B(mu_1) ... B(mu_M) |all-up>
    VecX v = VecX::Zero(dim);
    v[0] = 1.0;
    for (int m = M; m >= 1; --m) {
      MonodromyApplier applier(w, in.rapidities[m - 1], in.sites);
      v = applier.apply_B(v);
    }
    out.untwisted = v[dim - 1];

    VecX tv = VecX::Zero(dim);
    tv[0] = 1.0;
    for (int m = M; m >= 1; --m) tv = reduced_B(w, in.rapidities[m - 1], in.sites).apply(tv);
    out.twisted = tv[dim - 1];
  } else {
    // <all-up| C(nu_M) ... C(nu_1) |all-down>
    VecX v = VecX::Zero(dim);
    v[dim - 1] = 1.0;
    for (int m = 1; m <= M; ++m) {
      MonodromyApplier applier(w, in.rapidities[m - 1], in.sites);
      v = applier.apply_C(v);
    }
    out.untwisted = v[0];

    VecX tv = VecX::Zero(dim);
    tv[dim - 1] = 1.0;
    for (int m = 1; m <= M; ++m) tv = reduced_C(w, in.rapidities[m - 1], in.sites).apply(tv);
    out.twisted = tv[0];
  }
  return out;
}

Complex dwpf_recursive(const DwpfInput& in) {
  check_input(in);
  const int M = static_cast<int>(in.sites.size());
  if (M > 16) throw DenseCutoffExceeded("dwpf recursion limited to 16 sites");
  const WeightSet& w = *in.weights;

  // Memoized over the subset of remaining sites; the rapidity prefix length is
  // implied by the subset size.
  std::unordered_map<std::uint32_t, Complex> memo;
  auto solve = [&](auto&& self, std::uint32_t mask) -> Complex {
    if (mask == 0) return Complex{1.0, 0.0};
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    std::vector<int> remaining;  // original 1-based site positions, ascending
    for (int s = 1; s <= M; ++s)
      if (mask & (1u << (s - 1))) remaining.push_back(s);
    const int m_here = static_cast<int>(remaining.size());
    const int rap_index = M - m_here;  // rapidity consumed at this level
    const SpectralPoint& first = in.rapidities[rap_index];

    Complex total = 0.0;
    for (int q : remaining) {
      const SpectralPoint& site_q = in.sites[q - 1];
      Complex term = (in.kind == DwpfKind::B) ? w.c_plus(first, site_q)
                                              : w.c_minus(first, site_q);
      for (int j : remaining) {
        if (j == q) continue;
        const SpectralPoint& site_j = in.sites[j - 1];
        term *= w.a_minus(first, site_j) / w.b_minus(site_j, site_q);
        if (in.kind == DwpfKind::B) {
          // positions in the remaining tuple keep the original order
          term /= (q < j) ? w.a_minus(site_q, site_j) : Complex{1.0, 0.0};
        } else {
          term *= (j < q) ? w.a_minus(site_j, site_q) : Complex{1.0, 0.0};
        }
      }
      for (int m = rap_index + 2; m <= M; ++m)
        term *= w.b_minus(in.rapidities[m - 1], site_q);
      total += term * self(self, mask & ~(1u << (q - 1)));
    }
    memo.emplace(mask, total);
    return total;
  };
  return solve(solve, (M >= 32) ? 0u : ((1u << M) - 1u));
}

Complex dwpf_sum(const DwpfInput& in) {
  check_input(in);
  const int M = static_cast<int>(in.sites.size());
  if (M > 10) throw DenseCutoffExceeded("dwpf permutation sum limited to 10 sites");
  const WeightSet& w = *in.weights;

  std::vector<int> perm(M);
  std::iota(perm.begin(), perm.end(), 1);
  Complex total = 0.0;
  do {
    Complex term = 1.0;
    for (int i = 1; i <= M; ++i) {
      const SpectralPoint& site = in.sites[perm[i - 1] - 1];
      term *= (in.kind == DwpfKind::B) ? w.c_plus(in.rapidities[i - 1], site)
                                       : w.c_minus(in.rapidities[i - 1], site);
    }
    for (int j = 1; j <= M; ++j)
      for (int k = j + 1; k <= M; ++k) {
        const SpectralPoint& site_j = in.sites[perm[j - 1] - 1];
        const SpectralPoint& site_k = in.sites[perm[k - 1] - 1];
        term *= w.b_minus(in.rapidities[k - 1], site_j) *
                w.a_minus(in.rapidities[j - 1], site_k) /
                w.b_minus(site_k, site_j);
        if (in.kind == DwpfKind::B) {
          term /= theta_ordered(w, in.sites, perm[j - 1], perm[k - 1]);
        } else {
          term *= theta_ordered(w, in.sites, perm[k - 1], perm[j - 1]);
        }
      }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Complex izergin_determinant(const std::vector<Complex>& rapidities,
                            const std::vector<Complex>& sites, Complex rho) {
  const int M = static_cast<int>(rapidities.size());
  if (static_cast<int>(sites.size()) != M)
    throw LengthMismatch("determinant needs as many rapidities as sites");
  for (int p = 0; p < M; ++p)
    for (int q = p + 1; q < M; ++q) {
      if (std::abs(rapidities[p] - rapidities[q]) < kSingularGuard ||
          std::abs(sites[p] - sites[q]) < kSingularGuard)
        throw DegenerateRapidities("coincident parameters in determinant prefactor");
    }

  Complex prefactor = 1.0;
  for (int k = 0; k < M; ++k) prefactor *= std::sqrt(rapidities[k] * sites[k]);
  for (int m = 0; m < M; ++m)
    for (int n = 0; n < M; ++n) prefactor *= rapidities[m] - sites[n];
  for (int p = 0; p < M; ++p)
    for (int q = p + 1; q < M; ++q)
      prefactor /= (rapidities[p] - rapidities[q]) * (sites[q] - sites[p]);

  MatX kernel(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      kernel(i, j) =
          (rho - 1.0) / ((rapidities[i] * rho - sites[j]) * (rapidities[i] - sites[j]));
  return prefactor * kernel.partialPivLu().determinant();
}

double izergin_kernel_rcond(const std::vector<Complex>& rapidities,
                            const std::vector<Complex>& sites, Complex rho) {
  const int M = static_cast<int>(rapidities.size());
  MatX kernel(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      kernel(i, j) =
          (rho - 1.0) / ((rapidities[i] * rho - sites[j]) * (rapidities[i] - sites[j]));
  return kernel.partialPivLu().rcond();
}

Complex dwpf_determinant(const DwpfInput& in, Complex rho) {
  check_input(in);
  const int M = static_cast<int>(in.sites.size());
  std::vector<Complex> raps(M), xis(M);
  for (int i = 0; i < M; ++i) {
    raps[i] = in.rapidities[i].rapidity;
    xis[i] = in.sites[i].rapidity;
  }

  // Half-integer powers of the field ratios, one factor per column, with the
  // principal square root taken per factor.
  Complex prefactor = 1.0;
  for (int k = 1; k <= M; ++k) {
    Complex ratio;
    if (in.kind == DwpfKind::B) {
      ratio = in.sites[k - 1].field / in.rapidities[k - 1].field;
    } else {
      ratio = in.sites[M - k].field / in.rapidities[k - 1].field;
    }
    const int whole = M - k;  // exponent is whole + 1/2
    Complex power = std::sqrt(ratio);
    for (int t = 0; t < whole; ++t) power *= ratio;
    prefactor *= power;
  }
  return prefactor * izergin_determinant(raps, xis, rho);
}

}  // namespace sixvertex
