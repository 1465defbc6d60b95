#include "toroidal/toroidal_algebra.hpp"

#include <string>

namespace toroidal {

namespace {

using Hat = std::vector<int>;  // full exponent (t0, t1, ..., tN)

Hat add(const Hat& a, const Hat& b) {
  Hat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Symbol k_at(int i, const Hat& h) { return Symbol::k(i, h[0], Hat(h.begin() + 1, h.end())); }

// sum_p h_p K(p, at)
void add_k_sum(Accumulator<Symbol>& acc, const Hat& h, const Hat& at, const Rational& c) {
  if (c.is_zero()) return;
  for (std::size_t p = 0; p < h.size(); ++p) {
    if (h[p] != 0) acc.add(k_at(static_cast<int>(p), at), c * Rational(h[p]));
  }
}

bool is_derivation(SymKind k) { return k == SymKind::D || k == SymKind::D0; }

}  // namespace

ToroidalAlgebra::ToroidalAlgebra(SimpleLieAlgebraSpec lie, int n) : lie_(std::move(lie)), n_(n) {
  if (n < 1) throw InputError("N must be at least 1");
}

void ToroidalAlgebra::validate(const Symbol& s) const {
  switch (s.kind) {
    case SymKind::G:
      if (s.index < 0 || s.index >= lie_.dim) throw InputError("Lie basis index out of range");
      break;
    case SymKind::K:
      if (s.index < 0 || s.index > n_) throw InputError("k index out of range 0..N");
      break;
    case SymKind::D:
      if (s.index < 1 || s.index > n_) throw InputError("d index out of range 1..N");
      break;
    case SymKind::D0:
    case SymKind::CVir:
      if (!s.m.empty()) throw InputError("d0 and Cvir carry no t-exponent");
      return;
  }
  if (static_cast<int>(s.m.size()) != n_) {
    throw InputError("exponent arity " + std::to_string(s.m.size()) + " does not match N = " + std::to_string(n_));
  }
}

std::vector<int> ToroidalAlgebra::grade(const Symbol& s) const {
  Hat h(n_ + 1, 0);
  switch (s.kind) {
    case SymKind::G:
    case SymKind::K:
    case SymKind::D:
      h[0] = s.j;
      for (int p = 0; p < n_; ++p) h[p + 1] = s.m[p];
      break;
    case SymKind::D0:
      h[0] = s.j;
      break;
    case SymKind::CVir:
      break;
  }
  return h;
}

ToroidalElement ToroidalAlgebra::canonicalize(const ToroidalElement& x) const {
  Accumulator<Symbol> acc;
  for (const auto& [s, c] : x) {
    if (s.kind != SymKind::K) {
      acc.add(s, c);
      continue;
    }
    const Hat h = grade(s);
    int first = -1;
    for (int p = 0; p <= n_; ++p) {
      if (h[p] != 0) {
        first = p;
        break;
      }
    }
    if (first < 0 || s.index != first) {
      acc.add(s, c);
      continue;
    }
    const Rational scale = -c / Rational(h[first]);
    for (int p = 0; p <= n_; ++p) {
      if (p != first && h[p] != 0) acc.add(k_at(p, h), scale * Rational(h[p]));
    }
  }
  return acc.take();
}

ToroidalElement ToroidalAlgebra::raw_bracket(const Symbol& a, const Symbol& b, const CocycleParams& prm) const {
  Accumulator<Symbol> acc;
  if (a.kind == SymKind::CVir || b.kind == SymKind::CVir) return {};
  const Hat ha = grade(a);
  const Hat hb = grade(b);
  const Hat sum = add(ha, hb);

  if (a.kind == SymKind::G && b.kind == SymKind::G) {
    for (const auto& [k, c] : lie_.structure_constants[a.index][b.index]) {
      acc.add(Symbol::g(k, sum[0], Hat(sum.begin() + 1, sum.end())), c);
    }
    add_k_sum(acc, ha, sum, lie_.form_matrix[a.index][b.index]);
    return acc.take();
  }
  if (a.kind == SymKind::K && !is_derivation(b.kind)) return {};
  if (b.kind == SymKind::K && !is_derivation(a.kind)) return {};

  if (is_derivation(a.kind) && (b.kind == SymKind::G || b.kind == SymKind::K)) {
    const int dir = a.kind == SymKind::D0 ? 0 : a.index;
    if (b.kind == SymKind::G) {
      acc.add(Symbol::g(b.index, sum[0], Hat(sum.begin() + 1, sum.end())), Rational(hb[dir]));
    } else {
      acc.add(k_at(b.index, sum), Rational(hb[dir]));
      if (dir == b.index) add_k_sum(acc, ha, sum, Rational(1));
    }
    return acc.take();
  }
  if (is_derivation(b.kind) && (a.kind == SymKind::G || a.kind == SymKind::K)) {
    return scaled(raw_bracket(b, a, prm), Rational(-1));
  }

  if (a.kind == SymKind::D && b.kind == SymKind::D) {
    const int i = a.index;
    const int j = b.index;
    acc.add(Symbol::d(j, sum[0], Hat(sum.begin() + 1, sum.end())), Rational(hb[i]));
    acc.add(Symbol::d(i, sum[0], Hat(sum.begin() + 1, sum.end())), Rational(-ha[j]));
    const Rational tau = prm.mu * Rational(ha[j]) * Rational(hb[i]) + prm.nu * Rational(ha[i]) * Rational(hb[j]);
    add_k_sum(acc, hb, sum, tau);
    return acc.take();
  }
  if (a.kind == SymKind::D0 && b.kind == SymKind::D) {
    const int n = a.j;
    acc.add(Symbol::d(b.index, sum[0], Hat(sum.begin() + 1, sum.end())), Rational(hb[0]));
    acc.add(k_at(0, sum), -prm.rho * Rational(hb[b.index]) * Rational(n) * Rational(n + 1));
    return acc.take();
  }
  if (a.kind == SymKind::D && b.kind == SymKind::D0) return scaled(raw_bracket(b, a, prm), Rational(-1));
  if (a.kind == SymKind::D0 && b.kind == SymKind::D0) {
    const std::int64_t n = a.j;
    const std::int64_t m = b.j;
    acc.add(Symbol::d0(static_cast<int>(n + m)), Rational(m - n));
    if (n + m == 0) acc.add(Symbol::cvir(), Rational(n * n * n - n, 12));
    return acc.take();
  }
  return {};
}

ToroidalElement ToroidalAlgebra::bracket(const Symbol& a, const Symbol& b, const CocycleParams& p) const {
  return bracket(element(a), element(b), p);
}

ToroidalElement ToroidalAlgebra::bracket(const ToroidalElement& x, const ToroidalElement& y,
                                         const CocycleParams& p) const {
  const ToroidalElement cx = canonicalize(x);
  const ToroidalElement cy = canonicalize(y);
  Accumulator<Symbol> acc;
  for (const auto& [a, ca] : cx) {
    validate(a);
    for (const auto& [b, cb] : cy) {
      validate(b);
      acc.add(raw_bracket(a, b, p), ca * cb);
    }
  }
  return canonicalize(acc.take());
}

ToroidalElement ToroidalAlgebra::jacobi_residual(const ToroidalElement& x, const ToroidalElement& y,
                                                 const ToroidalElement& z, const CocycleParams& p) const {
  ToroidalElement out = bracket(bracket(x, y, p), z, p);
  add_scaled(out, bracket(bracket(y, z, p), x, p));
  add_scaled(out, bracket(bracket(z, x, p), y, p));
  return out;
}

}  // namespace toroidal

namespace toroidal {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

Symbol random_symbol(std::mt19937_64& rng, const ToroidalAlgebra& alg, int range, bool with_vir) {
  std::uniform_int_distribution<int> expo(-range, range);
  std::uniform_int_distribution<int> kind(0, with_vir ? 4 : 2);
  const int n = alg.n();
  auto exps = [&] {
    std::vector<int> m(n);
    for (auto& x : m) x = expo(rng);
    return m;
  };
  switch (kind(rng)) {
    case 0:
      return Symbol::g(std::uniform_int_distribution<int>(0, alg.lie().dim - 1)(rng), expo(rng), exps());
    case 1: {
      Symbol s = Symbol::k(0, expo(rng), exps());
      // pick an index that survives canonicalization
      const std::vector<int> h = alg.grade(s);
      int first = -1;
      for (int p = 0; p <= n; ++p) {
        if (h[p] != 0) {
          first = p;
          break;
        }
      }
      std::vector<int> allowed;
      for (int p = 0; p <= n; ++p) {
        if (p != first) allowed.push_back(p);
      }
      s.index = allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
      return s;
    }
    case 2:
      return Symbol::d(std::uniform_int_distribution<int>(1, n)(rng), expo(rng), exps());
    case 3:
      return Symbol::d0(expo(rng));
    default:
      return Symbol::cvir();
  }
}

}  // namespace toroidal
