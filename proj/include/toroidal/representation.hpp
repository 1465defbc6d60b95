#pragma once

#include <map>
#include <string>
#include <vector>

#include "toroidal/vertex.hpp"

namespace toroidal {

struct ToroidalParams {
  Rational mu;
  Rational nu;
  Rational rho;
  Rational rank;
  [[nodiscard]] CocycleParams cocycle() const { return {mu, nu, rho}; }
};

/// mu = (1 - c1)/c, nu = (c1/N - c2/N^2)/c, rho = 1/(2c), rank as in Engine::rank.
/// Throws InputError for c = 0, c = -h, c1 = -N.
ToroidalParams params(const Rational& c, const Rational& c1, const Rational& c2, int n,
                      const SimpleLieAlgebraSpec& alg);
ToroidalParams params(const ModuleSpec& spec);

/// {N, alg, c, c1, c2, c3, Vdot, W, depth, window, epsilon?}. `alg` is a builtin
/// name ("sl2"), {"builtin": name}, an inline structure-constants object, or a
/// file path resolved against base_dir. Validated.
ModuleSpec module_spec_from_json(const Json& j, const std::string& base_dir = ".");
ModuleSpec load_module_spec(const std::string& path);
Json module_spec_to_json(const ModuleSpec& spec);

/// The vacuum VOA V with the parameters of `spec` (tops trivial, c3 = 0).
Engine build_vacuum_voa(const ModuleSpec& spec, int cap = -1);
/// The module M with the tops and c3 of `spec`.
Engine build_module_M(const ModuleSpec& spec, int cap = -1);

struct TopActionReport {
  std::int64_t checked = 0;
  std::int64_t mismatches = 0;
  std::vector<std::string> samples;
  [[nodiscard]] bool pass() const { return checked > 0 && mismatches == 0; }
};

/// Degree-0 modes of g (x) t^m, t^m k_0, t^m k_s, t^m d_s on every top vector
/// v (x) e^{r.a} (x) w with m, r in [-range, range]^N, against the closed
/// action on T = Vdot (x) C[Lat+] (x) W.
TopActionReport top_action_check(Engine& module, int range = 1);

struct CharacterTable {
  int depth = 0;
  int window = 0;
  /// Per-factor dimensions at weights 0..depth, top included (lattice: per exponent gamma).
  std::map<std::string, std::vector<std::int64_t>> factors;
  /// dims[d] is the dimension at weight d for each gamma in the window (all equal).
  std::vector<std::int64_t> dims;
  [[nodiscard]] std::int64_t at(int d, const std::vector<int>& gamma) const;
  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string to_text() const;
};
/// Graded dimensions of the engine's space from the oscillator generating functions.
CharacterTable character(const Engine& engine, int depth, int window);

struct WitnessStep {
  std::string name;
  bool pass = false;
  bool inconclusive = false;
  std::string detail;
};
/// Reproduces the generating-set steps on the vacuum engine (depth >= 2).
std::vector<WitnessStep> generating_set_witness(Engine& vacuum);

/// Spot checks on the vacuum engine: Y(1, z) = Id, v_(-1) 1 = v for the
/// assigned vectors, wt(u_(n) v) = wt u + wt v - n - 1 on every product
/// computed here, and Y(L(-1) v, z) = d/dz Y(v, z) on the generator vectors
/// (modes |j| <= 1 on the states of weight <= depth in [-window, window]^N).
std::vector<WitnessStep> voa_axiom_checks(Engine& vacuum, int window = 1);

}  // namespace toroidal
