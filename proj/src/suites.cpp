#include "sixvertex/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "sixvertex/dwpf.hpp"
#include "sixvertex/fbasis.hpp"
#include "sixvertex/identities.hpp"
#include "sixvertex/monodromy.hpp"
#include "sixvertex/sampling.hpp"
#include "sixvertex/scalar_product.hpp"
#include "sixvertex/tensor_space.hpp"
#include "sixvertex/twisted_ops.hpp"

namespace sixvertex {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename F>
void parallel_for(int n, F&& body) {
  int threads = 1;
  if (const char* env = std::getenv("SIXVERTEX_THREADS"))
    threads = std::max(1, std::atoi(env));
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      int i;
      while ((i = next.fetch_add(1)) < n) body(i);
    });
  for (auto& th : pool) th.join();
}

std::string tag(std::uint64_t seed) { return "seed=" + std::to_string(seed); }

WeightSet make_family(const SuiteConfig& cfg, std::uint64_t seed) {
  return weight_family_by_name(cfg.weight_family, cfg.rho, seed);
}

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

void append_indexed(VerificationReport& into, std::vector<VerificationReport>& parts) {
  for (auto& part : parts) into.merge(part);
}

VerificationReport suite_unitarity(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "unitarity";
  const double tol = tolerance_for(cfg, "unitarity", 1e-11);
  std::vector<VerificationReport> parts(cfg.seeds.size());
  parallel_for(static_cast<int>(cfg.seeds.size()), [&](int idx) {
    const std::uint64_t seed = cfg.seeds[idx];
    WeightSet w = make_family(cfg, seed);
    ParameterSampler sampler(seed);
    const auto pts = sampler.distinct_points(2, &w);
    VerificationReport rep = check_unitarity(w, pts[0], pts[1], tol);
    for (auto& c : rep.checks) c.params = tag(seed);
    parts[idx] = std::move(rep);
  });
  append_indexed(report, parts);
  return report;
}

VerificationReport suite_yang_baxter(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "yang-baxter";
  const double tol = tolerance_for(cfg, "yang-baxter", 1e-11);
  const double tol_prod = tolerance_for(cfg, "product-identities", 1e-10);
  const int L = std::min(cfg.L, 6);
  std::vector<VerificationReport> parts(cfg.seeds.size());
  parallel_for(static_cast<int>(cfg.seeds.size()), [&](int idx) {
    const std::uint64_t seed = cfg.seeds[idx];
    WeightSet w = make_family(cfg, seed);
    ParameterSampler sampler(seed);
    const auto pts = sampler.distinct_points(3, &w);
    VerificationReport rep = check_yang_baxter(w, pts[0], pts[1], pts[2], tol);
    rep.merge(verify_product_identities(w, std::max(2, L), tol_prod, seed));

    // Swap representation (plain matrices) and braid factors (with rapidity
    // tracking) both satisfy the generator relations.
    const auto sites = sampler.distinct_points(std::max(3, L), &w);
    const int n = static_cast<int>(sites.size());
    std::vector<MatX> swap_rep;
    for (int a = 1; a <= n - 1; ++a)
      swap_rep.push_back(perm_rep(Permutation::adjacent(a, n), n));
    rep.merge(verify_group_relations(swap_rep, n, tol));
    rep.merge(verify_rhat_relations(w, sites, tol));
    for (auto& c : rep.checks)
      if (c.params.empty()) c.params = tag(seed);
    parts[idx] = std::move(rep);
  });
  append_indexed(report, parts);
  return report;
}

VerificationReport suite_fbasis(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "fbasis";
  const double tol_fact = tolerance_for(cfg, "factorization", 1e-10);
  const double tol_cocycle = tolerance_for(cfg, "cocycle", 1e-10);
  const double tol_ref = tolerance_for(cfg, "reference-states", 1e-11);
  const int L = cfg.L;
  if (L > kDenseCutoff) throw ConfigError("fbasis suite needs L <= 10");
  std::vector<VerificationReport> parts(cfg.seeds.size());
  parallel_for(static_cast<int>(cfg.seeds.size()), [&](int idx) {
    const std::uint64_t seed = cfg.seeds[idx];
    WeightSet w = make_family(cfg, seed);
    ParameterSampler sampler(seed);
    const auto sites = sampler.distinct_points(L, &w);
    const FMatrixBundle bundle = build_F(w, sites);

    VerificationReport rep;
    if (L <= 4) {
      std::vector<int> images(L);
      std::iota(images.begin(), images.end(), 1);
      do {
        const Permutation sigma{std::vector<int>(images)};
        VerificationReport one = verify_factorization(w, bundle, sigma, tol_fact);
        std::string perm_tag;
        for (int v : images) perm_tag += (perm_tag.empty() ? "" : ",") + std::to_string(v);
        for (auto& c : one.checks) c.id += "[" + perm_tag + "]";
        rep.merge(one);
      } while (std::next_permutation(images.begin(), images.end()));
    } else {
      std::mt19937_64 rng(splitmix64(seed));
      for (int k = 0; k < 8; ++k) {
        std::vector<int> images(L);
        std::iota(images.begin(), images.end(), 1);
        std::shuffle(images.begin(), images.end(), rng);
        const Permutation sigma{std::vector<int>(images)};
        VerificationReport one = verify_factorization(w, bundle, sigma, tol_fact);
        for (auto& c : one.checks) c.id += "[sample" + std::to_string(k) + "]";
        rep.merge(one);
      }
    }
    if (L >= 3) rep.merge(verify_F_cocycle(w, sites, tol_cocycle));
    rep.merge(reference_state_factors(w, bundle, tol_ref));
    for (auto& c : rep.checks)
      if (c.params.empty()) c.params = tag(seed);
    parts[idx] = std::move(rep);
  });
  append_indexed(report, parts);
  return report;
}

VerificationReport suite_twisted(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "twisted";
  const double tol = tolerance_for(cfg, "twisted", 1e-10);
  const int L = cfg.L;
  if (L > 8) throw ConfigError("twisted suite needs L <= 8");
  std::vector<VerificationReport> parts(cfg.seeds.size());
  parallel_for(static_cast<int>(cfg.seeds.size()), [&](int idx) {
    const std::uint64_t seed = cfg.seeds[idx];
    WeightSet w = make_family(cfg, seed);
    ParameterSampler sampler(seed);
    const auto sites = sampler.distinct_points(L, &w);
    const SpectralPoint aux = sampler.point_away_from(sites, &w);

    VerificationReport rep;
    const TwistedOps ops = build_twisted_ops(w, aux, sites);
    const MonodromyBlocks blocks = build_monodromy(w, aux, sites);
    const FMatrixBundle bundle = build_F(w, sites);
    const DenseTwisted oracle = oracle_twist(blocks, bundle);
    rep.add("twisted-D", rel_diff(ops.Dt.dense(), oracle.Dt), tol);
    rep.add("twisted-C", rel_diff(ops.Ct.dense(), oracle.Ct), tol);
    rep.add("twisted-B", rel_diff(ops.Bt.dense(), oracle.Bt), tol);
    rep.add("twisted-A", rel_diff(ops.At.dense(), oracle.At), tol);
    rep.add("theta-form-B",
            rel_diff(twisted_B_theta(w, aux, sites).dense(), ops.Bt.dense()), tol);
    rep.add("theta-form-C",
            rel_diff(twisted_C_theta(w, aux, sites).dense(), ops.Ct.dense()), tol);
    if (L >= 2) rep.merge(verify_twisted_recurrences(w, aux, sites, tol));
    for (auto& c : rep.checks)
      if (c.params.empty()) c.params = tag(seed);
    parts[idx] = std::move(rep);
  });
  append_indexed(report, parts);
  return report;
}

SuiteResult suite_dwpf(const SuiteConfig& cfg) {
  SuiteResult result;
  result.report.suite = "dwpf";
  const double tol = tolerance_for(cfg, "dwpf", 1e-9);
  const int M = cfg.M;
  result.details["routes"] = nlohmann::json::array();
  for (std::uint64_t seed : cfg.seeds) {
    WeightSet w = make_family(cfg, seed);
    ParameterSampler sampler(seed);
    for (DwpfKind kind : {DwpfKind::B, DwpfKind::C}) {
      DwpfInput in;
      in.kind = kind;
      in.weights = &w;
      in.sites = sampler.distinct_points(M, &w);
      in.rapidities.clear();
      for (int m = 0; m < M; ++m)
        in.rapidities.push_back(sampler.point_away_from(in.sites, &w));

      const auto t0 = Clock::now();
      const BraKetValue bra_ket = dwpf_bra_ket(in);
      const double t_braket = ms_since(t0);
      const auto t1 = Clock::now();
      const Complex rec = dwpf_recursive(in);
      const double t_rec = ms_since(t1);
      const auto t2 = Clock::now();
      const Complex sum = dwpf_sum(in);
      const double t_sum = ms_since(t2);

      std::vector<Complex> values{bra_ket.untwisted, rec, sum};
      double t_det = 0.0;
      double rcond = 0.0;
      const bool has_det = cfg.weight_family == "field-trig";
      Complex det{};
      if (has_det) {
        const auto t3 = Clock::now();
        det = dwpf_determinant(in, cfg.rho);
        t_det = ms_since(t3);
        values.push_back(det);
        std::vector<Complex> raps(M), xis(M);
        for (int m = 0; m < M; ++m) {
          raps[m] = in.rapidities[m].rapidity;
          xis[m] = in.sites[m].rapidity;
        }
        rcond = izergin_kernel_rcond(raps, xis, cfg.rho);
      }
      double spread = 0.0;
      double scale = kResidualFloor;
      for (Complex v : values) scale = std::max(scale, std::abs(v));
      for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b)
          spread = std::max(spread, std::abs(values[a] - values[b]) / scale);
      const std::string kind_name = (kind == DwpfKind::B) ? "B" : "C";
      result.report.add("route-spread[" + kind_name + "]", spread, tol, tag(seed));
      if (M == 1) {
        const Complex base = (kind == DwpfKind::B)
                                 ? w.c_plus(in.rapidities[0], in.sites[0])
                                 : w.c_minus(in.rapidities[0], in.sites[0]);
        result.report.add("base-case[" + kind_name + "]",
                          rel_diff(bra_ket.untwisted, base), tol, tag(seed));
      }

      nlohmann::json entry;
      entry["kind"] = kind_name;
      entry["seed"] = seed;
      entry["bra_ket"] = complex_json(bra_ket.untwisted);
      entry["bra_ket_twisted"] = complex_json(bra_ket.twisted);
      entry["recursive"] = complex_json(rec);
      entry["sum"] = complex_json(sum);
      if (has_det) {
        entry["determinant"] = complex_json(det);
        entry["kernel_rcond"] = rcond;
      }
      entry["spread"] = spread;
      entry["timings_ms"] = {{"bra_ket", t_braket},
                             {"recursive", t_rec},
                             {"sum", t_sum},
                             {"determinant", t_det}};
      result.details["routes"].push_back(entry);
    }
  }
  return result;
}

SuiteResult suite_scalar(const SuiteConfig& cfg) {
  SuiteResult result;
  result.report.suite = "scalar";
  const double tol = tolerance_for(cfg, "scalar", 1e-9);
  const int L = cfg.L, M = cfg.M;
  result.details["values"] = nlohmann::json::array();
  for (std::uint64_t seed : cfg.seeds) {
    WeightSet w = make_family(cfg, seed);
    ParameterSampler sampler(seed);
    ScalarProductInput in;
    in.weights = &w;
    in.sites = sampler.distinct_points(L, &w);
    auto taken = in.sites;
    for (int m = 0; m < M; ++m) {
      in.bra.push_back(sampler.point_away_from(taken, &w));
      taken.push_back(in.bra.back());
      in.ket.push_back(sampler.point_away_from(taken, &w));
      taken.push_back(in.ket.back());
    }
    const Complex direct = scalar_direct(in);
    const Complex twisted = scalar_twisted(in);
    const Complex bilinear = scalar_bilinear(in);
    result.report.add("direct-vs-twisted", rel_diff(direct, twisted), tol, tag(seed));
    result.report.add("direct-vs-bilinear", rel_diff(direct, bilinear), tol, tag(seed));
    nlohmann::json entry;
    entry["seed"] = seed;
    entry["direct"] = complex_json(direct);
    entry["twisted"] = complex_json(twisted);
    entry["bilinear"] = complex_json(bilinear);
    if (cfg.weight_family == "field-trig") {
      const Complex factored = scalar_field_factorized(in, cfg.rho);
      result.report.add("direct-vs-factorized", rel_diff(direct, factored), tol, tag(seed));
      entry["field_factorized"] = complex_json(factored);
    }
    result.details["values"].push_back(entry);
  }
  return result;
}

SuiteResult suite_bethe(const SuiteConfig& cfg) {
  SuiteResult result;
  result.report.suite = "bethe";
  const double tol = tolerance_for(cfg, "bethe", 1e-10);
  const int L = cfg.L, M = std::max(1, cfg.M);
  result.details["roots"] = nlohmann::json::array();
  for (std::uint64_t seed : cfg.seeds) {
    WeightSet w = make_field_trig_weights(cfg.rho);
    ParameterSampler sampler(seed);
    const auto sites = sampler.distinct_points(L, &w);
    if (M == 1) {
      const auto states = bethe_roots_m1(cfg.rho, sites);
      int idx = 0;
      for (const auto& st : states) {
        result.report.add("root-residual[" + std::to_string(idx) + "]", st.residuals[0],
                          tol, tag(seed));
        // Cross-check the weight-function form of the constraints.
        const auto generic = bethe_residual(w, st.roots, sites);
        result.report.add("generic-route[" + std::to_string(idx) + "]", generic[0],
                          std::max(tol, 1e-9), tag(seed));
        result.details["roots"].push_back(
            {{"seed", seed}, {"root", complex_json(st.roots[0].rapidity)},
             {"residual", st.residuals[0]}});
        ++idx;
      }
    } else {
      const BetheState st = bethe_solve(cfg.rho, sites, M, seed);
      for (int j = 0; j < M; ++j)
        result.report.add("root-residual[" + std::to_string(j) + "]", st.residuals[j], tol,
                          tag(seed));
      const auto generic = bethe_residual(w, st.roots, sites);
      for (int j = 0; j < M; ++j)
        result.report.add("generic-route[" + std::to_string(j) + "]", generic[j],
                          std::max(tol, 1e-9), tag(seed));
      nlohmann::json roots = nlohmann::json::array();
      for (const auto& r : st.roots) roots.push_back(complex_json(r.rapidity));
      result.details["roots"].push_back({{"seed", seed}, {"roots", roots}});
    }
  }
  return result;
}

VerificationReport suite_identities(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "identities";
  const double tol = tolerance_for(cfg, "identities", 1e-10);
  const int M = std::max(2, cfg.M);
  for (std::uint64_t seed : cfg.seeds) {
    ParameterSampler sampler(seed);
    WeightSet w = make_field_trig_weights(cfg.rho);
    IdentityContext ctx;
    ctx.rho = cfg.rho;
    ctx.sites = sampler.distinct_points(std::max(cfg.L, M), &w);
    for (int m = 0; m < M; ++m)
      ctx.mus.push_back(sampler.point_away_from(ctx.sites, &w).rapidity);
    VerificationReport rep = verify_phi_identity(ctx, tol);
    rep.merge(verify_det_recursion(ctx, tol));

    // On-shell summation identity with solved rapidities.
    const int m_shell = std::min(std::max(cfg.M, 1), 2);
    const BetheState st = bethe_solve(cfg.rho, ctx.sites, m_shell, seed);
    IdentityContext shell;
    shell.rho = cfg.rho;
    shell.sites = ctx.sites;
    shell.bethe_residuals = st.residuals;
    for (const auto& r : st.roots) shell.nus.push_back(r.rapidity);
    for (int m = 0; m < m_shell; ++m)
      shell.mus.push_back(sampler.point_away_from(ctx.sites, &w).rapidity);
    std::mt19937_64 rng(splitmix64(seed ^ 0x5bd1));
    for (int q = 1; q <= m_shell; ++q) {
      std::vector<int> all(shell.sites.size());
      std::iota(all.begin(), all.end(), 1);
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<int> subset(all.begin(), all.begin() + (q - 1));
      const int i = 1 + static_cast<int>(rng() % m_shell);
      VerificationReport one = verify_H_identity(shell, subset, q, i, tol);
      for (auto& c : one.checks) c.id += "[q=" + std::to_string(q) + "]";
      rep.merge(one);
    }
    for (auto& c : rep.checks)
      if (c.params.empty()) c.params = tag(seed);
    report.merge(rep);
  }
  return report;
}

SuiteResult suite_all(const SuiteConfig& cfg) {
  SuiteResult result;
  result.report.suite = "all";
  SuiteConfig sub = cfg;
  sub.suite = "unitarity";
  result.report.merge(suite_unitarity(sub));
  result.report.merge(suite_yang_baxter(sub));
  {
    SuiteConfig f = cfg;
    f.L = std::min(cfg.L, 4);
    result.report.merge(suite_fbasis(f));
    result.report.merge(suite_twisted(f));
  }
  {
    SuiteResult d = suite_dwpf(cfg);
    result.report.merge(d.report);
    result.details["dwpf"] = d.details;
  }
  {
    SuiteResult s = suite_scalar(cfg);
    result.report.merge(s.report);
    result.details["scalar"] = s.details;
    SuiteConfig b = cfg;
    b.weight_family = "field-trig";
    SuiteResult bs = suite_bethe(b);
    result.report.merge(bs.report);
    result.details["bethe"] = bs.details;
    result.report.merge(suite_identities(b));
  }
  return result;
}

}  // namespace

double tolerance_for(const SuiteConfig& cfg, const std::string& name, double fallback) {
  auto it = cfg.tol_overrides.find(name);
  return it == cfg.tol_overrides.end() ? fallback : it->second;
}

WeightSet perturb_weight_function(const WeightSet& w, const std::string& which,
                                  Complex delta) {
  auto shifted = [delta](WeightSet::Fn fn) {
    return [fn = std::move(fn), delta](const SpectralPoint& a, const SpectralPoint& b) {
      return fn(a, b) + delta;
    };
  };
  WeightSet out = w;
  out.label = w.label + "+perturbed(" + which + ")";
  if (which == "a-") out.a_minus = shifted(w.a_minus);
  else if (which == "b+") out.b_plus = shifted(w.b_plus);
  else if (which == "b-") out.b_minus = shifted(w.b_minus);
  else if (which == "c+") out.c_plus = shifted(w.c_plus);
  else if (which == "c-") out.c_minus = shifted(w.c_minus);
  else throw ConfigError("unknown weight function: " + which);
  return out;
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  if (cfg.L < 1 || cfg.L > 14) throw ConfigError("L must lie in 1..14");
  if (cfg.M < 0 || cfg.M > std::min(cfg.L, 8)) throw ConfigError("M must lie in 0..min(L,8)");
  if (cfg.seeds.empty()) throw ConfigError("at least one seed is required");

  const auto start = Clock::now();
  SuiteResult result;
  if (cfg.suite == "unitarity") result.report = suite_unitarity(cfg);
  else if (cfg.suite == "yang-baxter") result.report = suite_yang_baxter(cfg);
  else if (cfg.suite == "fbasis") result.report = suite_fbasis(cfg);
  else if (cfg.suite == "twisted") result.report = suite_twisted(cfg);
  else if (cfg.suite == "dwpf") result = suite_dwpf(cfg);
  else if (cfg.suite == "scalar") result = suite_scalar(cfg);
  else if (cfg.suite == "bethe") result = suite_bethe(cfg);
  else if (cfg.suite == "identities") result.report = suite_identities(cfg);
  else if (cfg.suite == "all") result = suite_all(cfg);
  else throw ConfigError("unknown suite: " + cfg.suite);

  result.report.suite = cfg.suite;
  result.report.seed = cfg.seeds.front();
  result.report.timings_ms["total"] = ms_since(start);
  return result;
}

nlohmann::json run_benchmark(const SuiteConfig& cfg) {
  if (cfg.weight_family != "field-trig")
    throw ConfigError("benchmark needs the field-trig family");
  nlohmann::json out;
  out["artifact_version"] = kArtifactVersion;
  out["suite"] = "bench";
  out["entries"] = nlohmann::json::array();
  const int m_max = std::max(2, cfg.M);
  bool all_ok = true;
  for (int m = 2; m <= m_max; ++m) {
    WeightSet w = make_field_trig_weights(cfg.rho);
    ParameterSampler sampler(cfg.seeds.front() + m);
    DwpfInput in;
    in.kind = DwpfKind::B;
    in.weights = &w;
    in.sites = sampler.distinct_points(m, &w);
    for (int i = 0; i < m; ++i)
      in.rapidities.push_back(sampler.point_away_from(in.sites, &w));

    const auto t0 = Clock::now();
    const Complex sum = dwpf_sum(in);
    const double t_sum = ms_since(t0);

    const int det_reps = 64;
    const auto t1 = Clock::now();
    Complex det{};
    for (int r = 0; r < det_reps; ++r) det = dwpf_determinant(in, cfg.rho);
    const double t_det = ms_since(t1) / det_reps;

    const double spread = rel_diff(sum, det);
    all_ok = all_ok && spread < 1e-8;
    out["entries"].push_back({{"M", m},
                              {"sum_ms", t_sum},
                              {"determinant_ms", t_det},
                              {"speedup", t_det > 0 ? t_sum / t_det : 0.0},
                              {"sum", complex_json(sum)},
                              {"determinant", complex_json(det)},
                              {"spread", format_residual(spread)}});
  }
  out["pass"] = all_ok;
  return out;
}

nlohmann::json suite_document(const SuiteConfig& cfg, const SuiteResult& result) {
  nlohmann::json doc = result.report.to_json();
  doc["weight_family"] = cfg.weight_family;
  doc["rho"] = complex_json(cfg.rho);
  doc["L"] = cfg.L;
  doc["M"] = cfg.M;
  doc["seeds"] = cfg.seeds;
  if (!result.details.empty()) doc["details"] = result.details;
  return doc;
}

}  // namespace sixvertex
