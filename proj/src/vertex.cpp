#include "toroidal/vertex.hpp"

#include <sstream>

namespace toroidal {

namespace {

std::string exponent_str(const std::vector<int>& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

std::string lie_str(const SimpleLieAlgebraSpec& alg, const LieElement& x) {
  std::string s;
  for (const auto& [i, c] : x) {
    if (!s.empty()) s += "+";
    if (c != Rational(1)) s += c.str() + "*";
    s += alg.basis_labels.at(i);
  }
  return s.empty() ? "0" : s;
}

constexpr std::size_t kModeCacheLimit = 1500000;

}  // namespace

void validate(const ModuleSpec& spec) {
  if (spec.n < 1) throw InputError("N must be at least 1");
  if (spec.alg.dim < 1) throw InputError("the finite-dimensional algebra is empty");
  if (spec.c.is_zero()) throw InputError("forbidden parameter: c = 0");
  if (spec.c == Rational(-spec.alg.dual_coxeter)) throw InputError("forbidden parameter: c = -h (critical level)");
  if (spec.c1 == Rational(-spec.n)) throw InputError("forbidden parameter: c1 = -N (critical level)");
  if (spec.depth < 0 || spec.window < 0) throw InputError("depth and window must be non-negative");
  if (spec.eps.rank() != spec.n) throw InputError("epsilon cocycle rank does not match N");
  std::string why;
  if (!check_module(spec.alg, spec.vdot, &why)) throw InputError("Vdot is not a module: " + why);
  if (!check_module(traceless_gl(spec.n), spec.w, &why)) throw InputError("W is not an sl_N module: " + why);
  if (spec.c2.is_zero() && !spec.c3.is_zero()) {
    throw InputError("c3 must vanish when c2 = 0 (the Heisenberg factor collapses to C1)");
  }
}

ModuleSpec vacuum_spec(SimpleLieAlgebraSpec alg, int n, Rational c, Rational c1, Rational c2, int depth,
                       int window) {
  ModuleSpec s;
  s.n = n;
  s.vdot = trivial_module(alg);
  s.alg = std::move(alg);
  s.w = trivial_module(traceless_gl(n));
  s.c = c;
  s.c1 = c1;
  s.c2 = c2;
  s.c3 = Rational(0);
  s.eps = EpsilonCocycle::standard(n);
  s.depth = depth;
  s.window = window;
  return s;
}

std::string FieldRef::label(const SimpleLieAlgebraSpec& alg) const {
  switch (kind) {
    case Kind::G:
      return "g[" + lie_str(alg, g) + "]" + exponent_str(m);
    case Kind::K0:
      return "K0" + exponent_str(m);
    case Kind::K:
      return "K" + std::to_string(s) + exponent_str(m);
    case Kind::D:
      return "D" + std::to_string(s) + exponent_str(m);
    case Kind::L:
      return "L";
    case Kind::Scalar:
      return "1";
  }
  return "?";
}

std::size_t Engine::ModeKeyHash::operator()(const ModeKey& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.f) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(k.j + 64);
  for (StateId s : k.u) h = (h ^ s) * 0x100000001b3ULL + (h >> 29);
  return h;
}

Engine::Engine(ModuleSpec spec, int cap) : spec_(std::move(spec)) {
  validate(spec_);
  cap_ = cap < 0 ? spec_.depth : cap;
  factors_.push_back(FockFactor::affine("affine", spec_.alg, spec_.c, spec_.vdot));
  factors_.push_back(FockFactor::lattice(spec_.n, spec_.eps));
  factors_.push_back(FockFactor::affine("sl", traceless_gl(spec_.n), spec_.c1, spec_.w));
  factors_.push_back(FockFactor::heisenberg(spec_.c2, spec_.c3));
  for (auto& f : factors_) f.set_cap(cap_);
  vacuum_words_[kAffine] = factors_[kAffine].intern_word(Mono{{}, {}});
  vacuum_words_[kLattice] = factors_[kLattice].intern_word(Mono{{}, std::vector<int>(spec_.n, 0)});
  vacuum_words_[kSl] = factors_[kSl].intern_word(Mono{{}, {}});
  vacuum_words_[kHeis] = factors_[kHeis].intern_word(Mono{{}, {}});
}

FullState Engine::base_state(const std::vector<int>& gamma) {
  return {factors_[kAffine].top_state({0}), factors_[kLattice].top_state(gamma), factors_[kSl].top_state({0}),
          factors_[kHeis].top_state({})};
}

int Engine::weight(const FullState& u) const {
  int w = 0;
  for (int s = 0; s < kSlots; ++s) w += factors_[s].weight(u[s]);
  return w;
}

std::vector<int> Engine::lattice_degree(const FullState& u) const { return factors_[kLattice].mono(u[kLattice]).top; }

std::vector<FullState> Engine::states(const std::array<bool, kSlots>& active, int max_weight, int window) {
  std::array<std::vector<std::pair<StateId, int>>, kSlots> per;
  const auto add_basis = [&](int slot, const std::vector<int>& top) {
    for (int w = 0; w <= max_weight; ++w) {
      for (StateId s : factors_[slot].basis(w, top)) per[slot].emplace_back(s, w);
    }
  };
  for (int slot : {kAffine, kSl}) {
    if (!active[slot]) {
      per[slot].emplace_back(factors_[slot].top_state({0}), 0);
      continue;
    }
    for (int t = 0; t < factors_[slot].top_dim(); ++t) add_basis(slot, {t});
  }
  if (!active[kHeis]) {
    per[kHeis].emplace_back(factors_[kHeis].top_state({}), 0);
  } else {
    add_basis(kHeis, {});
  }
  const int n = spec_.n;
  std::vector<int> gamma(n, active[kLattice] ? -window : 0);
  while (true) {
    if (active[kLattice]) {
      add_basis(kLattice, gamma);
    } else {
      per[kLattice].emplace_back(factors_[kLattice].top_state(gamma), 0);
      break;
    }
    int p = 0;
    while (p < n && gamma[p] == window) gamma[p++] = -window;
    if (p == n) break;
    ++gamma[p];
  }
  std::vector<FullState> out;
  for (const auto& [s0, w0] : per[0]) {
    for (const auto& [s1, w1] : per[1]) {
      if (w0 + w1 > max_weight) continue;
      for (const auto& [s2, w2] : per[2]) {
        if (w0 + w1 + w2 > max_weight) continue;
        for (const auto& [s3, w3] : per[3]) {
          if (w0 + w1 + w2 + w3 <= max_weight) out.push_back({s0, s1, s2, s3});
        }
      }
    }
  }
  return out;
}

std::string Engine::describe(const FullState& u) const {
  std::ostringstream os;
  for (int slot = 0; slot < kSlots; ++slot) {
    if (slot) os << " | ";
    const Mono& m = factors_[slot].mono(u[slot]);
    for (const auto& p : m.parts) os << factors_[slot].generator_label(p.label) << "(-" << p.n << ")";
    if (slot == kLattice) {
      os << "e^" << exponent_str(m.top);
    } else if (!m.top.empty() && factors_[slot].top_dim() > 1) {
      os << "v" << m.top[0];
    } else if (m.parts.empty()) {
      os << "1";
    }
  }
  return os.str();
}

std::string Engine::describe(const FullVec& v) const {
  std::string s;
  for (const auto& [u, c] : v) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*[" + describe(u) + "]";
  }
  return s.empty() ? "0" : s;
}

SparseVec<StateId> Engine::slot_word(int slot, const std::vector<std::pair<LieElement, int>>& modes,
                                     const std::vector<int>& beta) {
  FockFactor& f = factors_[slot];
  std::vector<int> top;
  if (slot == kLattice) {
    top = beta.empty() ? std::vector<int>(spec_.n, 0) : beta;
  } else if (slot != kHeis) {
    top = {0};
  }
  // creation modes never reach the top, so the module factor straightens them as on the vacuum
  FactorVec v{{f.top_state(top), Rational(1)}};
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
    if (it->second < 1) throw std::logic_error("slot_word expects creation modes");
    Accumulator<StateId> acc;
    for (const auto& [label, a] : it->first) acc.add(f.apply_mode(label, -it->second, v), a);
    v = acc.take();
  }
  FactorVec out;
  for (const auto& [s, c] : v) {
    Mono m = f.mono(s);
    if (slot != kLattice) m.top.clear();
    out.emplace_back(f.intern_word(m), c);
  }
  normalize(out);
  return out;
}

WordVec Engine::tensor(const std::array<SparseVec<StateId>, kSlots>& parts) {
  WordVec out{{vacuum_words_, Rational(1)}};
  for (int slot = 0; slot < kSlots; ++slot) {
    if (parts[slot].empty()) continue;
    WordVec next;
    for (const auto& [w, c] : out) {
      for (const auto& [x, d] : parts[slot]) {
        FullWord nw = w;
        nw[slot] = x;
        next.emplace_back(nw, c * d);
      }
    }
    normalize(next);
    out = std::move(next);
  }
  return out;
}

int Engine::word_weight(const FullWord& w) const {
  int s = 0;
  for (int slot = 0; slot < kSlots; ++slot) s += factors_[slot].word_weight(w[slot]);
  return s;
}

std::vector<int> Engine::word_degree(const FullWord& w) const { return factors_[kLattice].word(w[kLattice]).top; }

bool Engine::trivial_tops() const {
  return spec_.vdot.dim == 1 && spec_.w.dim == 1 && spec_.c3.is_zero() &&
         std::all_of(spec_.vdot.action.begin(), spec_.vdot.action.end(),
                     [](const Matrix& m) { return m[0][0].is_zero(); }) &&
         std::all_of(spec_.w.action.begin(), spec_.w.action.end(), [](const Matrix& m) { return m[0][0].is_zero(); });
}

FullVec Engine::as_states(const WordVec& v) {
  if (!trivial_tops()) throw std::logic_error("VOA states need the vacuum engine");
  FullVec out;
  for (const auto& [w, c] : v) {
    FullState u{};
    for (int slot = 0; slot < kSlots; ++slot) {
      Mono m = factors_[slot].word(w[slot]);
      if (slot == kAffine || slot == kSl) m.top = {0};
      u[slot] = factors_[slot].intern(m);
    }
    out.emplace_back(u, c);
  }
  normalize(out);
  return out;
}

WordVec Engine::as_words(const FullVec& v) {
  WordVec out;
  for (const auto& [u, c] : v) {
    FullWord w{};
    for (int slot = 0; slot < kSlots; ++slot) {
      Mono m = factors_[slot].mono(u[slot]);
      if (slot != kLattice) m.top.clear();
      w[slot] = factors_[slot].intern_word(m);
    }
    out.emplace_back(w, c);
  }
  normalize(out);
  return out;
}

FieldId Engine::add_field(Field f) {
  auto it = field_index_.find(f.label);
  if (it != field_index_.end()) return it->second;
  const FieldId id = static_cast<FieldId>(fields_.size());
  field_index_.emplace(f.label, id);
  fields_.push_back(std::move(f));
  return id;
}

WordVec Engine::omega_part(int slot) {
  WordVec out;
  std::array<SparseVec<StateId>, kSlots> parts;
  switch (slot) {
    case kAffine:
    case kSl: {
      const SimpleLieAlgebraSpec& alg = factors_[slot].algebra();
      if (alg.dim == 0) return out;
      const Rational level = slot == kAffine ? spec_.c : spec_.c1;
      const Rational h(slot == kAffine ? alg.dual_coxeter : spec_.n);
      const Matrix cas = casimir_tensor(orthonormal_basis(alg));
      SparseVec<StateId> acc;
      for (int a = 0; a < alg.dim; ++a) {
        for (int b = 0; b < alg.dim; ++b) {
          if (cas[a][b].is_zero()) continue;
          add_scaled(acc, slot_word(slot, {{alg.basis(a), 1}, {alg.basis(b), 1}}), cas[a][b]);
        }
      }
      parts[slot] = scaled(acc, Rational(1) / (Rational(2) * (level + h)));
      break;
    }
    case kLattice: {
      SparseVec<StateId> acc;
      for (int p = 0; p < spec_.n; ++p) {
        add_scaled(acc, slot_word(kLattice, {{{{p, Rational(1)}}, 1}, {{{spec_.n + p, Rational(1)}}, 1}}));
      }
      parts[slot] = acc;
      break;
    }
    case kHeis:
      if (spec_.c2.is_zero()) return out;
      parts[slot] = scaled(slot_word(kHeis, {{{{0, Rational(1)}}, 1}, {{{0, Rational(1)}}, 1}}),
                           Rational(1) / (Rational(2) * spec_.c2));
      break;
    default:
      throw std::out_of_range("slot");
  }
  if (parts[slot].empty()) return out;
  return tensor(parts);
}

WordVec Engine::omega() {
  WordVec out;
  for (int slot = 0; slot < kSlots; ++slot) add_scaled(out, omega_part(slot));
  return out;
}

Rational Engine::rank() const {
  const Rational n(spec_.n);
  const Rational dim(spec_.alg.dim);
  Rational r = spec_.c * dim / (spec_.c + Rational(spec_.alg.dual_coxeter)) + Rational(2) * n;
  r += spec_.c1 * (n * n - Rational(1)) / (spec_.c1 + n);
  if (!spec_.c2.is_zero()) r += Rational(1);
  return r;
}

FieldId Engine::field(const FieldRef& ref) {
  const std::string label = ref.label(spec_.alg);
  auto it = field_index_.find(label);
  if (it != field_index_.end()) return it->second;
  const int n = spec_.n;
  if (ref.kind != FieldRef::Kind::L && ref.kind != FieldRef::Kind::Scalar && static_cast<int>(ref.m.size()) != n) {
    throw InputError("field exponent arity does not match N");
  }
  if ((ref.kind == FieldRef::Kind::K || ref.kind == FieldRef::Kind::D) && (ref.s < 1 || ref.s > n)) {
    throw InputError("field direction out of range 1..N");
  }
  Field f;
  f.label = label;
  f.lat_degree = ref.m.empty() ? std::vector<int>(n, 0) : ref.m;
  std::array<SparseVec<StateId>, kSlots> parts;
  switch (ref.kind) {
    case FieldRef::Kind::G:
      f.delta = 1;
      parts[kAffine] = slot_word(kAffine, {{ref.g, 1}});
      parts[kLattice] = slot_word(kLattice, {}, ref.m);
      f.state = tensor(parts);
      break;
    case FieldRef::Kind::K0:
      f.delta = 0;
      parts[kLattice] = slot_word(kLattice, {}, ref.m);
      f.state = scaled(tensor(parts), spec_.c);
      break;
    case FieldRef::Kind::K:
      f.delta = 1;
      parts[kLattice] = slot_word(kLattice, {{{{ref.s - 1, Rational(1)}}, 1}}, ref.m);
      f.state = scaled(tensor(parts), spec_.c);
      break;
    case FieldRef::Kind::D: {
      f.delta = 1;
      parts[kLattice] = slot_word(kLattice, {{{{n + ref.s - 1, Rational(1)}}, 1}}, ref.m);
      f.state = tensor(parts);
      const SimpleLieAlgebraSpec& sl = factors_[kSl].algebra();
      for (int p = 1; p <= n; ++p) {
        const int mp = ref.m[p - 1];
        if (mp == 0) continue;
        std::array<SparseVec<StateId>, kSlots> q;
        q[kLattice] = slot_word(kLattice, {}, ref.m);
        // E_ps(-1) = psi1(E_ps)(-1) + (delta_ps / N) I(-1)
        const LieElement psi1 = sl_elementary(sl, p, ref.s);
        if (!psi1.empty()) {
          q[kSl] = slot_word(kSl, {{psi1, 1}});
          add_scaled(f.state, tensor(q), Rational(mp));
          q[kSl].clear();
        }
        if (p == ref.s && !spec_.c2.is_zero()) {
          q[kHeis] = slot_word(kHeis, {{{{0, Rational(1)}}, 1}});
          add_scaled(f.state, tensor(q), Rational(mp, n));
        }
      }
      break;
    }
    case FieldRef::Kind::L:
      f.delta = 2;
      f.state = omega();
      break;
    case FieldRef::Kind::Scalar:
      f.delta = 0;
      f.state = tensor(parts);
      break;
  }
  return add_field(std::move(f));
}

Engine::Assigned Engine::assignment(const Symbol& s) const {
  switch (s.kind) {
    case SymKind::G:
      return {FieldRef::gfield(spec_.alg.basis(s.index), s.m), s.j, Rational(1)};
    case SymKind::K:
      if (s.index == 0) return {FieldRef::k0(s.m), s.j, Rational(1)};
      return {FieldRef::k(s.index, s.m), s.j, Rational(1)};
    case SymKind::D:
      return {FieldRef::d(s.index, s.m), s.j, Rational(1)};
    case SymKind::D0:
      return {FieldRef::virasoro(), s.j, Rational(-1)};
    case SymKind::CVir:
      return {FieldRef::scalar(), 0, rank()};
  }
  throw std::logic_error("unknown symbol kind");
}

FullVec Engine::apply(const ToroidalElement& x, const FullVec& v) {
  FullVec out;
  for (const auto& [sym, c] : x) {
    const Assigned a = assignment(sym);
    add_scaled(out, mode(field(a.field), a.mode, v), c * a.coef);
  }
  return out;
}

void Engine::convolve(const std::array<const std::vector<FactorVec>*, kSlots>& series, int slot, int remaining,
                      FullState& cur, const Rational& coef, Accumulator<FullState>& acc) const {
  const std::vector<FactorVec>& s = *series[slot];
  if (slot == kSlots - 1) {
    if (remaining > cap_) return;
    for (const auto& [x, c] : s[remaining]) {
      cur[slot] = x;
      acc.add(cur, coef * c);
    }
    return;
  }
  for (int w = 0; w <= std::min(remaining, cap_); ++w) {
    for (const auto& [x, c] : s[w]) {
      cur[slot] = x;
      convolve(series, slot + 1, remaining - w, cur, coef * c, acc);
    }
  }
}

FullVec Engine::series_at(const FullWord& w, const FullState& u, int out_weight) {
  if (out_weight < 0) return {};
  if (out_weight > cap_) throw SaturationError("output weight " + std::to_string(out_weight) + " above cap");
  std::array<const std::vector<FactorVec>*, kSlots> series{};
  for (int slot = 0; slot < kSlots; ++slot) series[slot] = &factors_[slot].series(w[slot], u[slot]);
  Accumulator<FullState> acc;
  FullState cur{};
  convolve(series, 0, out_weight, cur, Rational(1), acc);
  return acc.take();
}

const FullVec& Engine::mode(FieldId f, int j, const FullState& u) {
  ModeKey key{f, j, u};
  auto it = mode_cache_.find(key);
  if (it != mode_cache_.end()) return it->second;
  if (mode_cache_.size() > kModeCacheLimit) mode_cache_.clear();
  const int out_weight = weight(u) - j;
  FullVec out;
  if (out_weight >= 0) {
    Accumulator<FullState> acc;
    for (const auto& [w, c] : fields_[f].state) acc.add(series_at(w, u, out_weight), c);
    out = acc.take();
  }
  return mode_cache_.emplace(key, std::move(out)).first->second;
}

FullVec Engine::mode(FieldId f, int j, const FullVec& v) {
  Accumulator<FullState> acc;
  for (const auto& [u, c] : v) acc.add(mode(f, j, u), c);
  return acc.take();
}

WordVec Engine::nth_product(const WordVec& u, int n, const WordVec& v) {
  FullVec out;
  const FullVec vs = as_states(v);
  for (const auto& [wu, cu] : u) {
    for (const auto& [sv, cv] : vs) {
      const int w = word_weight(wu) + weight(sv) - n - 1;
      add_scaled(out, series_at(wu, sv, w), cu * cv);
    }
  }
  return as_words(out);
}

void Engine::clear_caches() {
  mode_cache_.clear();
  for (auto& f : factors_) f.clear_caches();
}

}  // namespace toroidal
