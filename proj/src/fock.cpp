#include "toroidal/fock.hpp"

#include <stdexcept>

namespace toroidal {

std::size_t MonoHash::operator()(const Mono& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& p : m.parts) mix(static_cast<std::size_t>(p.n) * 1315423911u + static_cast<std::size_t>(p.label));
  mix(0xabcdefu);
  for (int t : m.top) mix(static_cast<std::size_t>(t + 1000003));
  return h;
}

StateId MonoTable::intern(const Mono& m) {
  auto it = index_.find(m);
  if (it != index_.end()) return it->second;
  const auto id = static_cast<StateId>(store_.size());
  store_.push_back(m);
  index_.emplace(m, id);
  return id;
}

namespace {

std::uint64_t mode_key(int label, int n, StateId u) {
  return (static_cast<std::uint64_t>(u) << 32) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(n + 0x8000)) << 16) |
         static_cast<std::uint64_t>(static_cast<std::uint16_t>(label));
}

}  // namespace

FockFactor FockFactor::affine(std::string name, SimpleLieAlgebraSpec alg, Rational level, LieModule top) {
  FockFactor f;
  f.kind_ = FactorKind::Affine;
  f.name_ = std::move(name);
  f.generators_ = alg.dim;
  f.level_ = level;
  f.alg_ = std::move(alg);
  f.top_ = std::move(top);
  if (static_cast<int>(f.top_.action.size()) != f.alg_.dim) throw InputError("top module does not match algebra");
  return f;
}

FockFactor FockFactor::lattice(int n, EpsilonCocycle eps) {
  FockFactor f;
  f.kind_ = FactorKind::Lattice;
  f.name_ = "lattice";
  f.generators_ = 2 * n;
  f.level_ = Rational(1);
  f.lattice_rank_ = n;
  f.eps_ = std::move(eps);
  return f;
}

FockFactor FockFactor::heisenberg(Rational level, Rational zero_mode) {
  FockFactor f;
  f.kind_ = FactorKind::Heisenberg;
  f.name_ = "heisenberg";
  f.generators_ = level.is_zero() ? 0 : 1;
  f.level_ = level;
  f.zero_mode_ = zero_mode;
  return f;
}

std::string FockFactor::generator_label(int label) const {
  switch (kind_) {
    case FactorKind::Affine:
      return alg_.basis_labels.at(label);
    case FactorKind::Lattice:
      return (label < lattice_rank_ ? "a" : "b") + std::to_string(label % lattice_rank_ + 1);
    case FactorKind::Heisenberg:
      return "I";
  }
  return "?";
}

int FockFactor::top_dim() const { return kind_ == FactorKind::Affine ? top_.dim : 1; }

StateId FockFactor::top_state(const std::vector<int>& top) {
  switch (kind_) {
    case FactorKind::Affine:
      if (top.size() != 1 || top[0] < 0 || top[0] >= top_.dim) throw std::out_of_range("top index");
      break;
    case FactorKind::Lattice:
      if (static_cast<int>(top.size()) != lattice_rank_) throw std::out_of_range("lattice exponent arity");
      break;
    case FactorKind::Heisenberg:
      if (!top.empty()) throw std::out_of_range("heisenberg top is one-dimensional");
      break;
  }
  return intern(Mono{{}, top});
}

int FockFactor::weight(StateId id) const {
  int w = 0;
  for (const auto& p : mono(id).parts) w += p.n;
  return w;
}

int FockFactor::word_weight(StateId id) const {
  int w = 0;
  for (const auto& p : word(id).parts) w += p.n;
  return w;
}

std::vector<int> FockFactor::lattice_degree(StateId id) const {
  if (kind_ == FactorKind::Lattice) return mono(id).top;
  return {};
}

Rational FockFactor::central(int a, int b, int m, int l) const {
  if (m + l != 0 || m == 0) return Rational(0);
  switch (kind_) {
    case FactorKind::Affine:
      return Rational(m) * alg_.form_matrix[a][b] * level_;
    case FactorKind::Lattice: {
      const int n = lattice_rank_;
      const bool pair = (a < n) != (b < n) && a % n == b % n;
      return pair ? Rational(m) : Rational(0);
    }
    case FactorKind::Heisenberg:
      return Rational(m) * level_;
  }
  return Rational(0);
}

const FactorVec& FockFactor::apply_mode(int label, int n, StateId u) {
  const std::uint64_t key = mode_key(label, n, u);
  auto it = modes_.find(key);
  if (it != modes_.end()) return it->second;
  FactorVec v = compute_mode(label, n, u);
  return modes_.emplace(key, std::move(v)).first->second;
}

FactorVec FockFactor::apply_mode(int label, int n, const FactorVec& v) {
  Accumulator<StateId> acc;
  for (const auto& [s, c] : v) acc.add(apply_mode(label, n, s), c);
  return acc.take();
}

FactorVec FockFactor::apply_element(const LieElement& x, int n, const FactorVec& v) {
  if (kind_ != FactorKind::Affine) throw std::logic_error("apply_element on a non-affine factor");
  Accumulator<StateId> acc;
  for (const auto& [label, a] : x) {
    for (const auto& [s, c] : v) acc.add(apply_mode(label, n, s), a * c);
  }
  return acc.take();
}

FactorVec FockFactor::apply_a_combination(const std::vector<int>& beta, int n, const FactorVec& v) {
  if (kind_ != FactorKind::Lattice) throw std::logic_error("apply_a_combination on a non-lattice factor");
  Accumulator<StateId> acc;
  for (int p = 0; p < lattice_rank_; ++p) {
    if (beta[p] == 0) continue;
    for (const auto& [s, c] : v) acc.add(apply_mode(p, n, s), c * Rational(beta[p]));
  }
  return acc.take();
}

std::pair<int, StateId> FockFactor::apply_exponential(const std::vector<int>& beta, StateId u) {
  if (kind_ != FactorKind::Lattice) throw std::logic_error("apply_exponential on a non-lattice factor");
  Mono m = mono(u);
  const int sign = (*eps_)(LatticeVector::plus(beta), LatticeVector::plus(m.top));
  for (int p = 0; p < lattice_rank_; ++p) m.top[p] += beta[p];
  return {sign, intern(m)};
}

FactorVec FockFactor::compute_mode(int label, int n, StateId u) {
  const Mono m = mono(u);
  if (collapsed()) {
    if (n != 0) return {};
    return zero_mode_.is_zero() ? FactorVec{} : FactorVec{{u, zero_mode_}};
  }
  if (m.parts.empty()) {
    if (n > 0) return {};
    if (n < 0) return {{intern(Mono{{Part{-n, label}}, m.top}), Rational(1)}};
    switch (kind_) {
      case FactorKind::Affine: {
        Accumulator<StateId> acc;
        const int t = m.top[0];
        for (int w = 0; w < top_.dim; ++w) {
          const Rational& c = top_.action[label][w][t];
          if (!c.is_zero()) acc.add(intern(Mono{{}, {w}}), c);
        }
        return acc.take();
      }
      case FactorKind::Lattice:
        // a_p(0) e^gamma = (a_p, gamma) e^gamma = 0 on Lat+; b_p(0) e^gamma = gamma_p e^gamma.
        if (label < lattice_rank_ || m.top[label - lattice_rank_] == 0) return {};
        return {{u, Rational(m.top[label - lattice_rank_])}};
      case FactorKind::Heisenberg:
        return zero_mode_.is_zero() ? FactorVec{} : FactorVec{{u, zero_mode_}};
    }
  }
  const Part first = m.parts.front();
  if (n < 0) {
    const Part p{-n, label};
    if (!(first < p)) {
      Mono out = m;
      out.parts.insert(out.parts.begin(), p);
      return {{intern(out), Rational(1)}};
    }
    if (kind_ != FactorKind::Affine) {
      Mono out = m;
      auto pos = out.parts.begin();
      while (pos != out.parts.end() && *pos < p) ++pos;
      out.parts.insert(pos, p);
      return {{intern(out), Rational(1)}};
    }
  }
  Mono rest_m{std::vector<Part>(m.parts.begin() + 1, m.parts.end()), m.top};
  const StateId rest = intern(rest_m);
  Accumulator<StateId> acc;
  // x(n) y(-k) R = y(-k) x(n) R + [x(n), y(-k)] R
  const FactorVec inner = apply_mode(label, n, rest);
  for (const auto& [s, c] : inner) acc.add(apply_mode(first.label, -first.n, s), c);
  if (kind_ == FactorKind::Affine) {
    for (const auto& [k, c] : alg_.structure_constants[label][first.label]) {
      acc.add(apply_mode(k, n - first.n, rest), c);
    }
  }
  const Rational z = central(label, first.label, n, -first.n);
  if (!z.is_zero()) acc.add(rest, z);
  return acc.take();
}

void FockFactor::enumerate(int remaining, int max_n, int min_label, std::vector<Part>& cur,
                           const std::vector<int>& top, std::vector<StateId>& out) {
  if (remaining == 0) {
    out.push_back(intern(Mono{cur, top}));
    return;
  }
  for (int n = std::min(max_n, remaining); n >= 1; --n) {
    for (int label = (n == max_n ? min_label : 0); label < generators_; ++label) {
      cur.push_back(Part{n, label});
      enumerate(remaining - n, n, label, cur, top, out);
      cur.pop_back();
    }
  }
}

std::vector<StateId> FockFactor::basis(int weight, const std::vector<int>& top) {
  std::vector<StateId> out;
  if (weight < 0) return out;
  top_state(top);  // validates
  std::vector<Part> cur;
  enumerate(weight, weight, 0, cur, top, out);
  return out;
}

std::int64_t oscillator_count(int k, int d) {
  if (d < 0) return 0;
  std::vector<std::int64_t> c(d + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= d; ++n) {
    for (int rep = 0; rep < k; ++rep) {
      for (int i = n; i <= d; ++i) c[i] += c[i - n];
    }
  }
  return c[d];
}

std::int64_t FockFactor::graded_dimension(int weight) const {
  return static_cast<std::int64_t>(top_dim()) * oscillator_count(generators_, weight);
}

void FockFactor::set_cap(int cap) {
  if (cap != cap_) series_.clear();
  cap_ = cap;
}

void FockFactor::clear_caches() {
  modes_.clear();
  series_.clear();
}

const std::vector<FactorVec>& FockFactor::series(StateId word, StateId u) {
  const std::uint64_t key = (static_cast<std::uint64_t>(word) << 32) | u;
  auto it = series_.find(key);
  if (it != series_.end()) return it->second;
  std::vector<FactorVec> s = compute_series(word, u);
  return series_.emplace(key, std::move(s)).first->second;
}

std::vector<FactorVec> FockFactor::exponential_series(const std::vector<int>& beta, StateId u) {
  const int wu = weight(u);
  std::vector<FactorVec> out(cap_ + 1);
  // E^-(z) u = sum_q S^-_q u z^-q with q S^-_q = -sum_n beta(n) S^-_{q-n}
  std::vector<FactorVec> minus(wu + 1);
  minus[0] = {{u, Rational(1)}};
  for (int q = 1; q <= wu; ++q) {
    Accumulator<StateId> acc;
    for (int n = 1; n <= q; ++n) acc.add(apply_a_combination(beta, n, minus[q - n]));
    minus[q] = scaled(acc.take(), Rational(-1, q));
  }
  std::vector<Accumulator<StateId>> acc(cap_ + 1);
  for (int q = 0; q <= wu; ++q) {
    if (minus[q].empty()) continue;
    const int pmax = cap_ - wu + q;
    if (pmax < 0) continue;
    FactorVec shifted;
    for (const auto& [s, c] : minus[q]) {
      auto [sign, t] = apply_exponential(beta, s);
      shifted.emplace_back(t, c * Rational(sign));
    }
    normalize(shifted);
    // E^+(z) = sum_p S^+_p z^p with p S^+_p = sum_n beta(-n) S^+_{p-n}
    std::vector<FactorVec> plus(pmax + 1);
    plus[0] = std::move(shifted);
    for (int p = 1; p <= pmax; ++p) {
      Accumulator<StateId> a;
      for (int n = 1; n <= p; ++n) a.add(apply_a_combination(beta, -n, plus[p - n]));
      plus[p] = scaled(a.take(), Rational(1, p));
    }
    for (int p = 0; p <= pmax; ++p) {
      const int w = wu + p - q;
      if (w >= 0 && w <= cap_) acc[w].add(plus[p]);
    }
  }
  for (int w = 0; w <= cap_; ++w) out[w] = acc[w].take();
  return out;
}

std::vector<FactorVec> FockFactor::compute_series(StateId word_id, StateId u) {
  const Mono w = word(word_id);
  const int wu = weight(u);
  if (w.parts.empty()) {
    if (kind_ == FactorKind::Lattice) return exponential_series(w.top, u);
    std::vector<FactorVec> out(cap_ + 1);
    if (wu <= cap_) out[wu] = {{u, Rational(1)}};
    return out;
  }
  const Part x = w.parts.front();
  const StateId rest = intern_word(Mono{std::vector<Part>(w.parts.begin() + 1, w.parts.end()), w.top});
  std::vector<Accumulator<StateId>> acc(cap_ + 1);
  // Y(x(-n) w, z) = :d^(n-1)x(z) Y(w, z): with x(l), l < 0, on the left.
  {
    const std::vector<FactorVec>& sw = series(rest, u);
    for (int out_w = 0; out_w <= cap_; ++out_w) {
      for (int l = -out_w; l <= -1; ++l) {
        const FactorVec& src = sw[out_w + l];
        if (src.empty()) continue;
        const Rational coef = binomial(-l - 1, x.n - 1);
        if (coef.is_zero()) continue;
        acc[out_w].add(apply_mode(x.label, l, src), coef);
      }
    }
  }
  const Rational sign = (x.n % 2 == 1) ? Rational(1) : Rational(-1);
  for (int l = 0; l <= wu; ++l) {
    const FactorVec xl = apply_mode(x.label, l, u);
    if (xl.empty()) continue;
    const Rational coef = sign * binomial(l + x.n - 1, x.n - 1);
    for (const auto& [s, c] : xl) {
      const std::vector<FactorVec>& ss = series(rest, s);
      for (int out_w = 0; out_w <= cap_; ++out_w) {
        if (!ss[out_w].empty()) acc[out_w].add(ss[out_w], coef * c);
      }
    }
  }
  std::vector<FactorVec> out(cap_ + 1);
  for (int i = 0; i <= cap_; ++i) out[i] = acc[i].take();
  return out;
}

}  // namespace toroidal
