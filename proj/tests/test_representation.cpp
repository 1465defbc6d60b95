#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "toroidal/representation.hpp"

using namespace toroidal;

namespace {

const std::string kConfigs = TOROIDAL_CONFIG_DIR;

Json module_json() {
  return {{"N", 2},          {"alg", "sl2"}, {"c", 1},     {"c1", 3},  {"c2", 2}, {"c3", "5/7"},
          {"Vdot", "adjoint"}, {"W", {{"builtin", "natural"}}}, {"depth", 2}, {"window", 1}};
}

bool all_pass(const std::vector<WitnessStep>& steps) {
  for (const auto& s : steps) {
    INFO(s.name << ": " << s.detail);
    if (!s.pass) return false;
  }
  return !steps.empty();
}

}  // namespace

TEST_CASE("parameters") {
  const auto sl2 = builtin_sl(2);
  const auto p = params(Rational(1), Rational(3), Rational(2), 2, sl2);
  CHECK(p.mu == Rational(-2));
  CHECK(p.nu == Rational(1));
  CHECK(p.rho == Rational(1, 2));
  CHECK(p.rank == Rational(39, 5));
  const auto q = params(Rational(2), Rational(1), Rational(1), 2, sl2);
  CHECK(q.mu == Rational(0));
  CHECK(q.nu == Rational(1, 8));
  CHECK(q.rho == Rational(1, 4));
  CHECK(q.rank == Rational(15, 2));
  CHECK(params(Rational(1), Rational(1), Rational(0), 1, sl2).rank == Rational(1) + Rational(2));
  CHECK_THROWS_AS(params(Rational(0), Rational(1), Rational(1), 2, sl2), InputError);
  CHECK_THROWS_AS(params(Rational(-2), Rational(1), Rational(1), 2, sl2), InputError);
  CHECK_THROWS_AS(params(Rational(1), Rational(-2), Rational(1), 2, sl2), InputError);
}

TEST_CASE("module spec json") {
  const ModuleSpec s = module_spec_from_json(module_json());
  CHECK(s.vdot.dim == 3);
  CHECK(s.w.dim == 2);
  CHECK(s.c3 == Rational(5, 7));
  CHECK(s.depth == 2);
  const ModuleSpec back = module_spec_from_json(module_spec_to_json(s));
  CHECK(module_spec_to_json(back) == module_spec_to_json(s));

  Json bad = module_json();
  bad["c"] = -2;
  CHECK_THROWS_AS(module_spec_from_json(bad), InputError);
  bad = module_json();
  bad.erase("c1");
  CHECK_THROWS_AS(module_spec_from_json(bad), InputError);
  bad = module_json();
  bad["W"] = {{"name", "broken"}, {"dim", 1}, {"matrices", {{"e", {{1}}}, {"f", {{0}}}, {"h", {{0}}}}}};
  CHECK_THROWS_AS(module_spec_from_json(bad), InputError);
  bad = module_json();
  bad["alg"] = "nonexistent.json";
  CHECK_THROWS_AS(module_spec_from_json(bad), InputError);
  CHECK_THROWS_AS(load_module_spec("/nonexistent/spec.json"), InputError);
}

TEST_CASE("shipped configs load") {
  for (const auto* name : {"default_sl2_n2.json", "sl2_n2_level2.json", "module_adjoint_natural.json"}) {
    INFO(name);
    const ModuleSpec s = load_module_spec(kConfigs + "/" + name);
    CHECK(s.n == 2);
    CHECK(s.alg.dim == 3);
  }
}

TEST_CASE("algebra from a file path") {
  const auto dir = std::filesystem::temp_directory_path() / "toroidal_rep_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "alg.json") << lie_algebra_to_json(builtin_sl(2)).dump();
  Json j = module_json();
  j["alg"] = "alg.json";
  std::ofstream(dir / "spec.json") << j.dump();
  const ModuleSpec s = load_module_spec((dir / "spec.json").string());
  CHECK(s.alg.dim == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("top action on modules") {
  Engine m = build_module_M(module_spec_from_json(module_json()));
  const auto rep = top_action_check(m);
  for (const auto& s : rep.samples) INFO(s);
  CHECK(rep.pass());
  CHECK(rep.checked == 3 * 2 * 9 * 9 * (3 + 1 + 2 * 2));

  Json one = module_json();
  one["N"] = 1;
  one["W"] = "trivial";
  one["c3"] = 3;
  Engine m1 = build_module_M(module_spec_from_json(one));
  CHECK(top_action_check(m1).pass());
}

TEST_CASE("vacuum engine drops the tops") {
  const ModuleSpec s = module_spec_from_json(module_json());
  Engine v = build_vacuum_voa(s);
  CHECK(v.trivial_tops());
  CHECK(v.spec().c3.is_zero());
  CHECK(v.spec().c == s.c);
}

TEST_CASE("character table") {
  Engine m = build_module_M(module_spec_from_json(module_json()), 4);
  const CharacterTable t = character(m, 4, 1);
  CHECK(t.factors.at("heisenberg") == std::vector<std::int64_t>{1, 1, 2, 3, 5});
  // affine over the 3-dim top with 3 generators: 3 * (1, 3, 9, 22, 51)
  CHECK(t.factors.at("affine") == std::vector<std::int64_t>{3, 9, 27, 66, 153});
  CHECK(t.dims[0] == 6);
  // weight 1: 6 tops times 3 + 4 + 3 + 1 oscillators
  CHECK(t.dims[1] == 66);
  CHECK(t.at(2, {1, -1}) == t.dims[2]);
  CHECK_THROWS_AS(t.at(2, {2, 0}), std::out_of_range);
  CHECK_THROWS_AS(t.at(5, {0, 0}), std::out_of_range);
  CHECK(t.to_json()["dims"][1] == 66);
  CHECK(t.to_text().find("66") != std::string::npos);
}

TEST_CASE("generating set witness") {
  Engine v = build_vacuum_voa(module_spec_from_json(module_json()), 3);
  CHECK(all_pass(generating_set_witness(v)));
}

TEST_CASE("vertex algebra axiom spot checks") {
  Engine v = build_vacuum_voa(module_spec_from_json(module_json()), 3);
  CHECK(all_pass(voa_axiom_checks(v, 0)));
}
