#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toroidal/vertex.hpp"

namespace toroidal {

/// coef * F(z2) z1^(-n-1) delta^(n)(z2/z1) on the right side of [A(z1), B(z2)],
/// with F replaced by its derivative when `derivative` is set.
struct RhsTerm {
  Rational coef;
  FieldRef field;
  int n = 0;
  bool derivative = false;
};

/// One commutation relation with fixed parameters. For a field identity
/// (`identity` set) the checked statement is dA(z) = sum of the right side
/// terms, mode by mode; b is unused.
struct RelationInstance {
  std::string relation;
  Json params;
  FieldRef a;
  FieldRef b;
  std::vector<RhsTerm> rhs;
  bool identity = false;
};

struct RelationReport {
  std::string relation;
  Json params;
  int j = 0;
  int k = 0;
  std::int64_t residual_terms = 0;
  std::int64_t states_tested = 0;
  bool saturated = false;
  bool pass = false;
  std::string sample;  // first nonzero residual, for diagnostics

  [[nodiscard]] Json to_json() const;
};

/// Relation ids in catalogue order.
const std::vector<std::string>& relation_ids();
/// One-line statement of each relation in field notation.
std::string relation_statement(const std::string& id);

/// All instances of one relation with m, r in [-range, range]^N and every
/// basis/direction choice.
std::vector<RelationInstance> relation_instances(const std::string& id, const SimpleLieAlgebraSpec& alg, int n,
                                                 const CocycleParams& p, const Rational& rank, int range = 1);

/// The instance with a deliberately wrong extra term 1 * K0(m_a + m_b) (the
/// identity field when neither side carries an exponent) at the delta order
/// that keeps the relation homogeneous. None when no such order exists (K0 with K0).
std::optional<RelationInstance> negative_control(const RelationInstance& inst);

/// Residual of one instance for every (j, k) in [-mode_range, mode_range]^2
/// (j only, k = 0, for identities) on the admissible states of the engine.
std::vector<RelationReport> check_instance(Engine& engine, const RelationInstance& inst, int mode_range);

struct GridResult {
  std::vector<RelationReport> reports;  // canonical order: instance order, then (j, k)
  bool stopped_early = false;
};

/// Runs instances on `workers` threads, each with its own engine. With
/// stop_on_failure the run ends at the first failing report. `on_report` is
/// called from the driver thread in canonical order.
GridResult run_grid(const ModuleSpec& spec, const std::vector<RelationInstance>& instances, int mode_range,
                    int workers, bool stop_on_failure = false,
                    const std::function<void(const RelationReport&)>& on_report = {});

struct RelationSummary {
  std::string relation;
  std::int64_t reports = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  /// Mode pairs whose outputs all lie above the weight cap.
  std::int64_t saturated = 0;
  /// Instances with no admissible state for any mode pair.
  std::int64_t inconclusive = 0;
};
std::vector<RelationSummary> summarize(const std::vector<RelationReport>& reports);

}  // namespace toroidal
