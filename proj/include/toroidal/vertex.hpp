#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toroidal/fock.hpp"
#include "toroidal/toroidal_algebra.hpp"

namespace toroidal {

/// Input data for a state space V_{g,c} (x) V_Lat+ (x) V_{gl_N} or one of its
/// modules M. Trivial tops and c3 = 0 give the vacuum VOA.
struct ModuleSpec {
  int n = 2;
  SimpleLieAlgebraSpec alg;
  Rational c{1};
  Rational c1{1};
  Rational c2{1};
  Rational c3{0};
  LieModule vdot;
  LieModule w;
  EpsilonCocycle eps = EpsilonCocycle::standard(2);
  int depth = 3;
  int window = 2;
};

/// Checks c != 0, c != -h, c1 != -N, module matrices, depth/window >= 0. Throws InputError.
void validate(const ModuleSpec& spec);

/// ModuleSpec with trivial tops, c3 = 0.
ModuleSpec vacuum_spec(SimpleLieAlgebraSpec alg, int n, Rational c, Rational c1, Rational c2, int depth = 3,
                       int window = 2);

enum Slot : int { kAffine = 0, kLattice = 1, kSl = 2, kHeis = 3 };
constexpr int kSlots = 4;

using FullState = std::array<StateId, kSlots>;
using FullVec = SparseVec<FullState>;
/// Per-slot word ids; a VOA state is a WordVec.
using FullWord = std::array<StateId, kSlots>;
using WordVec = SparseVec<FullWord>;

/// Which generating field of the assignment. G carries a Lie element, K0 and
/// K/D carry the t-exponent m (and direction s), L is the total Virasoro
/// field, Scalar is a multiple of the identity.
struct FieldRef {
  enum class Kind { G, K0, K, D, L, Scalar };
  Kind kind = Kind::Scalar;
  LieElement g;
  int s = 0;
  std::vector<int> m;

  [[nodiscard]] std::string label(const SimpleLieAlgebraSpec& alg) const;
  bool operator==(const FieldRef&) const = default;

  static FieldRef gfield(LieElement x, std::vector<int> m) { return {Kind::G, std::move(x), 0, std::move(m)}; }
  static FieldRef k0(std::vector<int> m) { return {Kind::K0, {}, 0, std::move(m)}; }
  static FieldRef k(int s, std::vector<int> m) { return {Kind::K, {}, s, std::move(m)}; }
  static FieldRef d(int s, std::vector<int> m) { return {Kind::D, {}, s, std::move(m)}; }
  static FieldRef virasoro() { return {Kind::L, {}, 0, {}}; }
  static FieldRef scalar() { return {Kind::Scalar, {}, 0, {}}; }
};

/// A vertex operator Y(state, z) with A(z) = sum_j A_j z^(-j-delta). The mode
/// A_j lowers the grading weight by j.
struct Field {
  std::string label;
  int delta = 0;
  std::vector<int> lat_degree;
  WordVec state;
};

using FieldId = int;

/// Thrown when a requested output lies above the weight cap.
struct SaturationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated state space with the assignment fields. Not thread-safe: use one
/// engine per worker.
class Engine {
 public:
  /// cap < 0 means spec.depth.
  explicit Engine(ModuleSpec spec, int cap = -1);

  [[nodiscard]] const ModuleSpec& spec() const { return spec_; }
  [[nodiscard]] int cap() const { return cap_; }
  FockFactor& factor(int slot) { return factors_[slot]; }
  [[nodiscard]] const FockFactor& factor(int slot) const { return factors_[slot]; }

  // ---- states ----
  /// Top index 0 in every slot, lattice exponent gamma.
  FullState base_state(const std::vector<int>& gamma);
  [[nodiscard]] int weight(const FullState& u) const;
  [[nodiscard]] std::vector<int> lattice_degree(const FullState& u) const;
  /// All basis states of total weight <= max_weight with lattice exponent in
  /// [-window, window]^N. Slots outside `active` stay at their base top.
  std::vector<FullState> states(const std::array<bool, kSlots>& active, int max_weight, int window);
  [[nodiscard]] std::string describe(const FullState& u) const;
  [[nodiscard]] std::string describe(const FullVec& v) const;

  // ---- VOA states ----
  /// Straightened creation word on the vacuum of one slot: x_1(-n_1)...x_k(-n_k) 1.
  /// For the affine slots each entry is (Lie element, n); for the lattice and
  /// Heisenberg slots the Lie element is a single generator label.
  SparseVec<StateId> slot_word(int slot, const std::vector<std::pair<LieElement, int>>& modes,
                               const std::vector<int>& beta = {});
  /// Tensor product of per-slot words; missing slots get the vacuum word.
  WordVec tensor(const std::array<SparseVec<StateId>, kSlots>& parts);
  [[nodiscard]] int word_weight(const FullWord& w) const;
  [[nodiscard]] std::vector<int> word_degree(const FullWord& w) const;
  /// Vacuum engine only (trivial tops): identify VOA states with space states.
  FullVec as_states(const WordVec& v);
  WordVec as_words(const FullVec& v);
  [[nodiscard]] bool trivial_tops() const;

  // ---- fields ----
  /// Fields are interned by label so caches are shared across relations.
  FieldId add_field(Field f);
  FieldId field(const FieldRef& ref);
  [[nodiscard]] const Field& field_info(FieldId id) const { return fields_[id]; }
  [[nodiscard]] std::size_t field_count() const { return fields_.size(); }
  /// Conformal vector omega; the pieces are exposed for the axiom checks.
  WordVec omega();
  WordVec omega_part(int slot);
  /// C_Vir value c dim/(c+h) + 2N + c1(N^2-1)/(c1+N) + [c2 != 0].
  [[nodiscard]] Rational rank() const;

  /// Image of a toroidal basis symbol: a field, the toroidal mode index, and a
  /// sign (t0^n d0 maps to -L_n). CVir maps to the scalar field with factor rank.
  struct Assigned {
    FieldRef field;
    int mode = 0;
    Rational coef{1};
  };
  [[nodiscard]] Assigned assignment(const Symbol& s) const;
  /// phi(x) applied to v for a toroidal element x.
  FullVec apply(const ToroidalElement& x, const FullVec& v);

  // ---- modes ----
  /// A_j u. Throws SaturationError if the output weight exceeds the cap.
  const FullVec& mode(FieldId f, int j, const FullState& u);
  FullVec mode(FieldId f, int j, const FullVec& v);
  FullVec mode(const FieldRef& f, int j, const FullVec& v) { return mode(field(f), j, v); }
  /// Coefficient of weight `out_weight` in Y(w, z)u.
  FullVec series_at(const FullWord& w, const FullState& u, int out_weight);
  /// u_(n) v on the vacuum engine.
  WordVec nth_product(const WordVec& u, int n, const WordVec& v);

  void clear_caches();
  [[nodiscard]] std::size_t cache_entries() const { return mode_cache_.size(); }

 private:
  struct ModeKey {
    FieldId f;
    int j;
    FullState u;
    bool operator==(const ModeKey&) const = default;
  };
  struct ModeKeyHash {
    std::size_t operator()(const ModeKey& k) const noexcept;
  };

  StateId vacuum_word(int slot) const { return vacuum_words_[slot]; }
  void convolve(const std::array<const std::vector<FactorVec>*, kSlots>& series, int slot, int remaining,
                FullState& cur, const Rational& coef, Accumulator<FullState>& acc) const;

  ModuleSpec spec_;
  int cap_;
  std::vector<FockFactor> factors_;
  std::vector<FockFactor> scratch_;  // vacuum copies of the affine slots for word straightening
  std::array<StateId, kSlots> vacuum_words_{};
  std::vector<Field> fields_;
  std::unordered_map<std::string, FieldId> field_index_;
  std::unordered_map<ModeKey, FullVec, ModeKeyHash> mode_cache_;
};

}  // namespace toroidal
