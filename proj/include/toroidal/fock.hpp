#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toroidal/lattice.hpp"
#include "toroidal/simple_lie.hpp"
#include "toroidal/sparse.hpp"

namespace toroidal {

/// generator(-n), n >= 1.
struct Part {
  int n = 1;
  int label = 0;
  /// Canonical PBW order: n descending, then label ascending.
  friend bool operator<(const Part& x, const Part& y) {
    return x.n != y.n ? x.n > y.n : x.label < y.label;
  }
  bool operator==(const Part&) const = default;
};

/// Creation monomial over a top vector. top is {module index} for affine
/// factors, the exponent gamma (length N) for the lattice factor, {} for the
/// Heisenberg factor. Parts are in canonical order.
struct Mono {
  std::vector<Part> parts;
  std::vector<int> top;
  bool operator==(const Mono&) const = default;
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const noexcept;
};

using StateId = std::uint32_t;
using FactorVec = SparseVec<StateId>;

/// Append-only interner with stable references.
class MonoTable {
 public:
  StateId intern(const Mono& m);
  [[nodiscard]] const Mono& get(StateId id) const { return store_[id]; }
  [[nodiscard]] std::size_t size() const { return store_.size(); }

 private:
  std::unordered_map<Mono, StateId, MonoHash> index_;
  std::deque<Mono> store_;
};

enum class FactorKind { Affine, Lattice, Heisenberg };

/// One tensor factor of the state space: an affine Verma-type module over a
/// finite-dimensional top, the lattice space S_H (x) C[Lat+], or a Heisenberg
/// Fock space (collapsed to C1 at level 0).
///
/// Mode application is exact and memoized; nothing is truncated here. The
/// series cache holds Y(v, z)u for output weights 0..cap.
class FockFactor {
 public:
  static FockFactor affine(std::string name, SimpleLieAlgebraSpec alg, Rational level, LieModule top);
  static FockFactor lattice(int n, EpsilonCocycle eps);
  static FockFactor heisenberg(Rational level, Rational zero_mode);

  [[nodiscard]] FactorKind kind() const { return kind_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int generator_count() const { return generators_; }
  [[nodiscard]] std::string generator_label(int label) const;
  [[nodiscard]] const Rational& level() const { return level_; }
  [[nodiscard]] bool collapsed() const { return kind_ == FactorKind::Heisenberg && level_.is_zero(); }
  [[nodiscard]] int top_dim() const;  // 1 for lattice (per gamma) and Heisenberg
  [[nodiscard]] const SimpleLieAlgebraSpec& algebra() const { return alg_; }
  [[nodiscard]] const LieModule& top_module() const { return top_; }
  [[nodiscard]] int lattice_rank() const { return lattice_rank_; }
  [[nodiscard]] const EpsilonCocycle& epsilon() const { return *eps_; }

  StateId intern(const Mono& m) { return states_.intern(m); }
  [[nodiscard]] const Mono& mono(StateId id) const { return states_.get(id); }
  /// Empty monomial over top index i (affine), gamma (lattice), or the unit.
  StateId top_state(const std::vector<int>& top);

  [[nodiscard]] int weight(StateId id) const;
  [[nodiscard]] std::vector<int> lattice_degree(StateId id) const;

  /// generator(n) applied to a basis state, straightened into canonical order.
  const FactorVec& apply_mode(int label, int n, StateId u);
  FactorVec apply_mode(int label, int n, const FactorVec& v);
  /// Affine only: x(n) for a Lie element x.
  FactorVec apply_element(const LieElement& x, int n, const FactorVec& v);
  /// Lattice only: (sum_p beta_p a_p)(n).
  FactorVec apply_a_combination(const std::vector<int>& beta, int n, const FactorVec& v);
  /// Lattice only: e^{beta . a} u with the eps sign.
  std::pair<int, StateId> apply_exponential(const std::vector<int>& beta, StateId u);

  /// Canonical monomials of exactly this weight over the given top.
  std::vector<StateId> basis(int weight, const std::vector<int>& top);
  /// Number of monomials of this weight over all top vectors (no enumeration).
  [[nodiscard]] std::int64_t graded_dimension(int weight) const;

  // ---- vertex-operator layer ----
  /// Words are VOA states of this factor (tops ignored except the lattice exponent).
  StateId intern_word(const Mono& w) { return words_.intern(w); }
  [[nodiscard]] const Mono& word(StateId id) const { return words_.get(id); }
  [[nodiscard]] int word_weight(StateId w) const;

  void set_cap(int cap);
  [[nodiscard]] int cap() const { return cap_; }
  /// Y(word, z) u split by output weight 0..cap.
  const std::vector<FactorVec>& series(StateId word, StateId u);

  void clear_caches();
  [[nodiscard]] std::size_t cache_entries() const { return modes_.size() + series_.size(); }

 private:
  FockFactor() = default;

  FactorVec compute_mode(int label, int n, StateId u);
  std::vector<FactorVec> compute_series(StateId word, StateId u);
  std::vector<FactorVec> exponential_series(const std::vector<int>& beta, StateId u);
  /// [x_a(m), x_b(l)] central part (coefficient of the identity).
  [[nodiscard]] Rational central(int a, int b, int m, int l) const;
  void enumerate(int remaining, int max_n, int min_label, std::vector<Part>& cur,
                 const std::vector<int>& top, std::vector<StateId>& out);

  FactorKind kind_ = FactorKind::Heisenberg;
  std::string name_;
  int generators_ = 0;
  Rational level_;
  Rational zero_mode_;
  SimpleLieAlgebraSpec alg_;
  LieModule top_;
  int lattice_rank_ = 0;
  std::optional<EpsilonCocycle> eps_;
  int cap_ = 0;

  MonoTable states_;
  MonoTable words_;
  std::unordered_map<std::uint64_t, FactorVec> modes_;
  std::unordered_map<std::uint64_t, std::vector<FactorVec>> series_;
};

/// Partition-type count: coefficient of q^d in prod_{n>=1} (1 - q^n)^(-k).
std::int64_t oscillator_count(int k, int d);

}  // namespace toroidal
