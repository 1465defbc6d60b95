#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "toroidal/expr.hpp"
#include "toroidal/relations.hpp"
#include "toroidal/representation.hpp"

using namespace toroidal;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInput = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_bracket(const std::string& a, const std::string& b, const std::string& mu, const std::string& nu,
                const std::string& rho, int n, const std::string& alg_name) {
  const ToroidalAlgebra alg(builtin_algebra(alg_name), n);
  const CocycleParams p{Rational::parse(mu), Rational::parse(nu), Rational::parse(rho)};
  std::cout << print_element(alg.bracket(parse_element(a, alg), parse_element(b, alg), p), alg) << "\n";
  return kExitPass;
}

int cmd_jacobi(int n, int samples, std::uint64_t seed, int range, const std::string& alg_name) {
  const ToroidalAlgebra alg(builtin_algebra(alg_name), n);
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int i = 0; i < samples; ++i) {
    const CocycleParams p{random_rational(rng), random_rational(rng), random_rational(rng)};
    const ToroidalElement x = element(random_symbol(rng, alg, range));
    const ToroidalElement y = element(random_symbol(rng, alg, range));
    const ToroidalElement z = element(random_symbol(rng, alg, range));
    const ToroidalElement r = alg.jacobi_residual(x, y, z, p);
    if (!r.empty()) {
      ++failures;
      std::cout << "residual for x=" << print_element(x, alg) << " y=" << print_element(y, alg)
                << " z=" << print_element(z, alg) << " mu=" << p.mu << " nu=" << p.nu << " rho=" << p.rho << ": "
                << print_element(r, alg) << "\n";
    }
  }
  std::cout << (failures == 0 ? "pass" : "fail") << " jacobi N=" << n << " samples=" << samples << " seed=" << seed
            << " failures=" << failures << "\n";
  return failures == 0 ? kExitPass : kExitFailure;
}

struct VerifyOptions {
  std::string config;
  std::string relations;
  bool negative_controls = false;
  std::string perturb;
  int workers = 0;
  int mode_range = 2;
  int range = 1;
  bool stop_on_failure = false;
};

int cmd_verify(const VerifyOptions& o) {
  const ModuleSpec spec = load_module_spec(o.config);
  ToroidalParams p = params(spec);
  if (o.perturb == "mu") {
    p.mu += Rational(1);
  } else if (o.perturb == "nu") {
    p.nu += Rational(1);
  } else if (o.perturb == "rho") {
    p.rho += Rational(1);
  } else if (o.perturb == "rank") {
    p.rank += Rational(1);
  } else if (!o.perturb.empty()) {
    throw InputError("--perturb takes mu, nu, rho or rank");
  }
  std::vector<std::string> ids = o.relations.empty() ? relation_ids() : split(o.relations, ',');
  for (const auto& id : ids) {
    if (relation_statement(id).empty()) throw InputError("unknown relation id '" + id + "'");
  }

  std::vector<RelationInstance> instances;
  for (const auto& id : ids) {
    for (auto& inst : relation_instances(id, spec.alg, spec.n, p.cocycle(), p.rank, o.range)) {
      if (!o.negative_controls) {
        instances.push_back(std::move(inst));
      } else if (auto ctl = negative_control(inst)) {
        instances.push_back(std::move(*ctl));
      }
    }
  }
  const int workers = o.workers > 0 ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  const GridResult grid = run_grid(spec, instances, o.mode_range, workers, o.stop_on_failure,
                                   [](const RelationReport& r) { std::cout << r.to_json().dump() << "\n" << std::flush; });
  std::int64_t passed = 0, failed = 0, saturated = 0, inconclusive = 0;
  for (const auto& s : summarize(grid.reports)) {
    std::cout << Json{{"summary", s.relation}, {"reports", s.reports}, {"passed", s.passed}, {"failed", s.failed},
                      {"saturated", s.saturated}, {"inconclusive", s.inconclusive}}
                     .dump()
              << "\n";
    passed += s.passed;
    failed += s.failed;
    saturated += s.saturated;
    inconclusive += s.inconclusive;
  }
  const int code = failed > 0 ? kExitFailure : inconclusive > 0 ? kExitInconclusive : kExitPass;
  std::cout << (code == kExitPass ? "PASS" : code == kExitFailure ? "FAIL" : "INCONCLUSIVE")
            << " instances=" << instances.size() << " reports=" << grid.reports.size() << " passed=" << passed
            << " failed=" << failed << " saturated=" << saturated << " inconclusive=" << inconclusive
            << (grid.stopped_early ? " (stopped at first failure)" : "") << "\n";
  return code;
}

int cmd_params(const std::string& c, const std::string& c1, const std::string& c2, int n, const std::string& alg) {
  const ToroidalParams p = params(Rational::parse(c), Rational::parse(c1), Rational::parse(c2), n, builtin_algebra(alg));
  std::cout << "mu=" << p.mu << " nu=" << p.nu << " rho=" << p.rho << "\n";
  std::cout << "rank=" << p.rank << "\n";
  return kExitPass;
}

int cmd_character(const std::string& config, int depth, int window, bool json) {
  ModuleSpec spec = load_module_spec(config);
  const Engine e(spec, depth);
  const CharacterTable t = character(e, depth, window);
  std::cout << (json ? t.to_json().dump(2) + "\n" : t.to_text());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toroidal Lie algebra and vertex operator checks"};
  app.require_subcommand(1);

  std::string a, b, mu = "0", nu = "0", rho = "0", alg = "sl2";
  int n = 2;
  auto* bracket = app.add_subcommand("bracket", "Canonical bracket of two elements");
  bracket->add_option("a", a, "First element")->required();
  bracket->add_option("b", b, "Second element")->required();
  bracket->add_option("--mu", mu, "Cocycle parameter mu");
  bracket->add_option("--nu", nu, "Cocycle parameter nu");
  bracket->add_option("--rho", rho, "Virasoro coupling rho");
  bracket->add_option("--n", n, "Number of loop variables N");
  bracket->add_option("--alg", alg, "Simple Lie algebra (sl2, sl3, ...)");

  int samples = 200, range = 3;
  std::uint64_t seed = 1;
  auto* jacobi = app.add_subcommand("jacobi", "Seeded Jacobi fuzzing on random basis triples");
  jacobi->add_option("--n", n, "Number of loop variables N");
  jacobi->add_option("--samples", samples, "Number of triples");
  jacobi->add_option("--seed", seed, "RNG seed");
  jacobi->add_option("--range", range, "Exponent range");
  jacobi->add_option("--alg", alg, "Simple Lie algebra");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Check the commutation relations on a truncated module");
  verify->add_option("--config", vo.config, "Module spec JSON")->required();
  verify->add_option("--relations", vo.relations, "Comma-separated relation ids (default: all)");
  verify->add_flag("--negative-controls", vo.negative_controls, "Check deliberately wrong relations instead");
  verify->add_option("--perturb", vo.perturb, "Add 1 to one parameter: mu, nu, rho or rank");
  verify->add_option("--workers", vo.workers, "Worker threads (default: hardware concurrency)");
  verify->add_option("--mode-range", vo.mode_range, "Mode indices |j|, |k| <= this");
  verify->add_option("--range", vo.range, "Exponents m, r in [-range, range]^N");
  verify->add_flag("--stop-on-failure", vo.stop_on_failure, "End the run at the first failing report");

  std::string c = "1", c1 = "1", c2 = "1";
  auto* par = app.add_subcommand("params", "mu, nu, rho and the Virasoro rank for (c, c1, c2, N)");
  par->add_option("--c", c, "Affine level c");
  par->add_option("--c1", c1, "sl_N level c1");
  par->add_option("--c2", c2, "Heisenberg level c2");
  par->add_option("--n", n, "N");
  par->add_option("--alg", alg, "Simple Lie algebra");

  std::string config;
  int depth = 3, window = 2;
  bool json = false;
  auto* chr = app.add_subcommand("character", "Graded dimensions of the module in a config");
  chr->add_option("--config", config, "Module spec JSON")->required();
  chr->add_option("--depth", depth, "Maximal weight");
  chr->add_option("--window", window, "Lattice window");
  chr->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }
  try {
    if (*bracket) return cmd_bracket(a, b, mu, nu, rho, n, alg);
    if (*jacobi) return cmd_jacobi(n, samples, seed, range, alg);
    if (*verify) return cmd_verify(vo);
    if (*par) return cmd_params(c, c1, c2, n, alg);
    if (*chr) return cmd_character(config, depth, window, json);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SaturationError& e) {
    std::cerr << "saturated: " << e.what() << "\n";
    return kExitInconclusive;
  }
  return kExitInput;
}
