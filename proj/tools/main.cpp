#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sixvertex/suites.hpp"

namespace {

sixvertex::Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

int write_and_summarize(const sixvertex::SuiteConfig& cfg, const nlohmann::json& doc,
                        bool passed) {
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    if (!out) {
      std::cerr << "cannot open output file: " << cfg.out_path << "\n";
      return 2;
    }
    out << doc.dump(2) << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }
  if (!cfg.out_path.empty())
    std::cout << (passed ? "PASS" : "FAIL") << " suite=" << cfg.suite
              << " report=" << cfg.out_path << "\n";
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification toolkit for ice-rule vertex-model algebra"};
  app.require_subcommand(1);

  sixvertex::SuiteConfig cfg;
  std::string rho_text = "2,0";
  std::vector<std::string> tol_texts;
  std::vector<std::uint64_t> seeds;

  const std::vector<std::string> suites = {"unitarity", "yang-baxter", "fbasis",
                                           "twisted",   "dwpf",        "scalar",
                                           "bethe",     "identities",  "all",
                                           "bench"};
  std::vector<CLI::App*> subs;
  for (const auto& name : suites) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " suite");
    sub->add_option("--weights", cfg.weight_family,
                    "weight family: field-trig | sym-trig | permutation-point | gauged");
    sub->add_option("--rho", rho_text, "anisotropy as RE or RE,IM");
    sub->add_option("--L", cfg.L, "chain length");
    sub->add_option("--M", cfg.M, "number of rapidities");
    sub->add_option("--seed", seeds, "seed (repeatable)");
    sub->add_option("--tol", tol_texts, "tolerance override name=value (repeatable)");
    sub->add_option("--out", cfg.out_path, "write the JSON report to this file");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i]->parsed()) cfg.suite = suites[i];
    cfg.rho = parse_complex(rho_text);
    if (!seeds.empty()) cfg.seeds = seeds;
    for (const auto& t : tol_texts) {
      const auto eq = t.find('=');
      if (eq == std::string::npos)
        throw sixvertex::ConfigError("tolerance override must look like name=value");
      cfg.tol_overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    }

    if (cfg.suite == "bench") {
      const nlohmann::json doc = sixvertex::run_benchmark(cfg);
      return write_and_summarize(cfg, doc, doc["pass"].get<bool>());
    }

    const sixvertex::SuiteResult result = sixvertex::run_suite(cfg);
    const nlohmann::json doc = sixvertex::suite_document(cfg, result);
    if (const auto* failure = result.report.first_failure())
      std::cerr << "first failing check: " << failure->id
                << " residual=" << sixvertex::format_residual(failure->residual)
                << " tolerance=" << failure->tolerance << "\n";
    return write_and_summarize(cfg, doc, result.report.passed());
  } catch (const sixvertex::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
