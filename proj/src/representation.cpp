#include "toroidal/representation.hpp"

#include <filesystem>
#include <sstream>

namespace toroidal {

namespace {

std::vector<std::vector<int>> cube(int n, int range) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, -range);
  while (true) {
    out.push_back(v);
    int p = 0;
    while (p < n && v[p] == range) v[p++] = -range;
    if (p == n) break;
    ++v[p];
  }
  return out;
}

std::vector<int> vadd(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Json module_json(const LieModule& m, const SimpleLieAlgebraSpec& alg) {
  Json mats = Json::object();
  for (int i = 0; i < alg.dim; ++i) {
    Json rows = Json::array();
    for (const auto& row : m.action[i]) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(rational_to_json(x));
      rows.push_back(r);
    }
    mats[alg.basis_labels[i]] = rows;
  }
  return {{"name", m.name}, {"dim", m.dim}, {"matrices", mats}};
}

// body(detail) -> pass; a saturated computation is inconclusive
template <class Body>
WitnessStep run_step(const std::string& name, const Body& body) {
  WitnessStep step;
  step.name = name;
  try {
    step.pass = body(step.detail);
  } catch (const SaturationError& err) {
    step.pass = false;
    step.inconclusive = true;
    step.detail = err.what();
  }
  return step;
}

}  // namespace

ToroidalParams params(const Rational& c, const Rational& c1, const Rational& c2, int n,
                      const SimpleLieAlgebraSpec& alg) {
  if (n < 1) throw InputError("N must be at least 1");
  if (c.is_zero()) throw InputError("forbidden parameter: c = 0");
  if (c == Rational(-alg.dual_coxeter)) throw InputError("forbidden parameter: c = -h (critical level)");
  if (c1 == Rational(-n)) throw InputError("forbidden parameter: c1 = -N (critical level)");
  const Rational nn(n);
  ToroidalParams p;
  p.mu = (Rational(1) - c1) / c;
  p.nu = (c1 / nn - c2 / (nn * nn)) / c;
  p.rho = Rational(1) / (Rational(2) * c);
  p.rank = c * Rational(alg.dim) / (c + Rational(alg.dual_coxeter)) + Rational(2) * nn +
           c1 * (nn * nn - Rational(1)) / (c1 + nn) + (c2.is_zero() ? Rational(0) : Rational(1));
  return p;
}

ToroidalParams params(const ModuleSpec& spec) { return params(spec.c, spec.c1, spec.c2, spec.n, spec.alg); }

ModuleSpec module_spec_from_json(const Json& j, const std::string& base_dir) {
  try {
    ModuleSpec s;
    s.n = j.at("N").get<int>();
    if (s.n < 1) throw InputError("N must be at least 1");
    const Json& alg = j.at("alg");
    if (alg.is_string()) {
      const std::string name = alg.get<std::string>();
      if (name.rfind("sl", 0) == 0 && name.find('.') == std::string::npos) {
        s.alg = builtin_algebra(name);
      } else {
        s.alg = lie_algebra_from_json(load_json_file((std::filesystem::path(base_dir) / name).string()));
      }
    } else {
      s.alg = lie_algebra_from_json(alg);
    }
    if (!alg.is_string() || alg.get<std::string>().find('.') != std::string::npos) {
      const LieInvariantReport rep = check_invariants(s.alg);
      if (!rep.ok()) throw InputError("Lie algebra '" + s.alg.name + "' fails " + rep.failures.front());
    }
    s.c = rational_from_json(j.at("c"));
    s.c1 = rational_from_json(j.at("c1"));
    s.c2 = rational_from_json(j.at("c2"));
    s.c3 = j.contains("c3") ? rational_from_json(j.at("c3")) : Rational(0);
    const auto mod = [](const Json& x) { return x.is_string() ? Json{{"builtin", x.get<std::string>()}} : x; };
    s.vdot = module_from_json(s.alg, j.contains("Vdot") ? mod(j.at("Vdot")) : Json{{"builtin", "trivial"}});
    s.w = module_from_json(traceless_gl(s.n), j.contains("W") ? mod(j.at("W")) : Json{{"builtin", "trivial"}});
    s.depth = j.value("depth", 3);
    s.window = j.value("window", 2);
    s.eps = j.contains("epsilon") ? EpsilonCocycle::from_json(s.n, j.at("epsilon")) : EpsilonCocycle::standard(s.n);
    validate(s);
    return s;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed module spec: ") + e.what());
  }
}

ModuleSpec load_module_spec(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path().string();
  return module_spec_from_json(load_json_file(path), dir.empty() ? "." : dir);
}

Json module_spec_to_json(const ModuleSpec& s) {
  std::vector<std::string> order;
  for (int p = 1; p <= s.n; ++p) order.push_back("a" + std::to_string(p));
  for (int p = 1; p <= s.n; ++p) order.push_back("b" + std::to_string(p));
  Json signs = Json::array();
  const auto& m = s.eps.sign_matrix();
  for (int u = 0; u < 2 * s.n; ++u) {
    for (int v = 0; v < 2 * s.n; ++v) {
      if (m[u][v] != 0) signs.push_back({order[u], order[v], -1});
    }
  }
  return {{"N", s.n},
          {"alg", lie_algebra_to_json(s.alg)},
          {"c", rational_to_json(s.c)},
          {"c1", rational_to_json(s.c1)},
          {"c2", rational_to_json(s.c2)},
          {"c3", rational_to_json(s.c3)},
          {"Vdot", module_json(s.vdot, s.alg)},
          {"W", module_json(s.w, traceless_gl(s.n))},
          {"depth", s.depth},
          {"window", s.window},
          {"epsilon", {{"order", order}, {"signs", signs}}}};
}

Engine build_vacuum_voa(const ModuleSpec& spec, int cap) {
  ModuleSpec v = spec;
  v.vdot = trivial_module(spec.alg);
  v.w = trivial_module(traceless_gl(spec.n));
  v.c3 = Rational(0);
  return Engine(std::move(v), cap);
}

Engine build_module_M(const ModuleSpec& spec, int cap) { return Engine(spec, cap); }

TopActionReport top_action_check(Engine& e, int range) {
  TopActionReport rep;
  const ModuleSpec& s = e.spec();
  const int n = s.n;
  const SimpleLieAlgebraSpec sl = traceless_gl(n);
  FockFactor& aff = e.factor(kAffine);
  FockFactor& lat = e.factor(kLattice);
  FockFactor& slf = e.factor(kSl);
  const StateId heis_top = e.factor(kHeis).top_state({});
  const auto top = [&](int v, const std::vector<int>& gamma, int w) {
    return FullState{aff.top_state({v}), lat.top_state(gamma), slf.top_state({w}), heis_top};
  };
  const auto compare = [&](const std::string& what, const FullVec& got, const FullVec& want) {
    ++rep.checked;
    if (got != want) {
      ++rep.mismatches;
      if (rep.samples.size() < 5) rep.samples.push_back(what + ": got " + e.describe(got) + ", expected " + e.describe(want));
    }
  };
  const auto grid = cube(n, range);
  for (int v = 0; v < s.vdot.dim; ++v) {
    for (int w = 0; w < s.w.dim; ++w) {
      for (const auto& r : grid) {
        const FullVec u{{top(v, r, w), Rational(1)}};
        for (const auto& m : grid) {
          const std::vector<int> mr = vadd(m, r);
          const int sign = s.eps(LatticeVector::plus(m), LatticeVector::plus(r));
          const std::string at = "m=" + Json(m).dump() + " r=" + Json(r).dump() + " v" + std::to_string(v) +
                                 " w" + std::to_string(w);
          // g (x) t^m -> (g v) (x) e^{(m+r).a} (x) w
          for (int g = 0; g < s.alg.dim; ++g) {
            FullVec want;
            for (int x = 0; x < s.vdot.dim; ++x) {
              const Rational& c = s.vdot.action[g][x][v];
              if (!c.is_zero()) want.emplace_back(top(x, mr, w), c * Rational(sign));
            }
            normalize(want);
            compare("g " + s.alg.basis_labels[g] + " " + at, e.apply(element(Symbol::g(g, 0, m)), u), want);
          }
          // t^m k_0 -> c shift
          compare("k0 " + at, e.apply(element(Symbol::k(0, 0, m)), u), FullVec{{top(v, mr, w), s.c * Rational(sign)}});
          for (int q = 1; q <= n; ++q) {
            // t^m k_s -> 0
            compare("k" + std::to_string(q) + " " + at, e.apply(element(Symbol::k(q, 0, m)), u), {});
            // t^m d_s -> r_s shift + sum_p m_p v (x) e^{(m+r).a} (x) E_ps w
            FullVec want;
            if (r[q - 1] != 0) want.emplace_back(top(v, mr, w), Rational(r[q - 1] * sign));
            for (int p = 1; p <= n; ++p) {
              if (m[p - 1] == 0) continue;
              const Matrix act = module_matrix(s.w, sl_elementary(sl, p, q));
              for (int x = 0; x < s.w.dim; ++x) {
                Rational c = act.empty() ? Rational(0) : act[x][w];
                if (p == q && x == w) c += s.c3 / Rational(n);
                if (!c.is_zero()) want.emplace_back(top(v, mr, x), c * Rational(m[p - 1] * sign));
              }
            }
            normalize(want);
            compare("d" + std::to_string(q) + " " + at, e.apply(element(Symbol::d(q, 0, m)), u), want);
          }
        }
      }
    }
  }
  return rep;
}

std::int64_t CharacterTable::at(int d, const std::vector<int>& gamma) const {
  if (d < 0 || d > depth) throw std::out_of_range("weight outside the table");
  for (int x : gamma) {
    if (x < -window || x > window) throw std::out_of_range("lattice degree outside the window");
  }
  return dims[d];
}

Json CharacterTable::to_json() const {
  Json f = Json::object();
  for (const auto& [name, v] : factors) f[name] = v;
  return {{"depth", depth}, {"window", window}, {"dims", dims}, {"factors", f}};
}

std::string CharacterTable::to_text() const {
  std::ostringstream os;
  os << "weight";
  for (const auto& [name, v] : factors) os << "  " << name;
  os << "  total\n";
  for (int d = 0; d <= depth; ++d) {
    os << d;
    for (const auto& [name, v] : factors) os << "  " << v[d];
    os << "  " << dims[d] << "\n";
  }
  os << "(same for every lattice degree in [-" << window << ", " << window << "]^N)\n";
  return os.str();
}

CharacterTable character(const Engine& e, int depth, int window) {
  if (depth < 0 || window < 0) throw std::out_of_range("negative depth or window");
  CharacterTable t;
  t.depth = depth;
  t.window = window;
  const char* names[kSlots] = {"affine", "lattice", "sl", "heisenberg"};
  for (int slot = 0; slot < kSlots; ++slot) {
    std::vector<std::int64_t> v(depth + 1);
    for (int d = 0; d <= depth; ++d) v[d] = e.factor(slot).graded_dimension(d);
    t.factors[names[slot]] = v;
  }
  t.dims.assign(depth + 1, 0);
  const auto& a = t.factors["affine"];
  const auto& l = t.factors["lattice"];
  const auto& s = t.factors["sl"];
  const auto& h = t.factors["heisenberg"];
  for (int d0 = 0; d0 <= depth; ++d0) {
    for (int d1 = 0; d0 + d1 <= depth; ++d1) {
      for (int d2 = 0; d0 + d1 + d2 <= depth; ++d2) {
        for (int d3 = 0; d0 + d1 + d2 + d3 <= depth; ++d3) {
          t.dims[d0 + d1 + d2 + d3] += a[d0] * l[d1] * s[d2] * h[d3];
        }
      }
    }
  }
  return t;
}

std::vector<WitnessStep> generating_set_witness(Engine& e) {
  std::vector<WitnessStep> out;
  const int n = e.spec().n;
  const SimpleLieAlgebraSpec& alg = e.spec().alg;
  const SimpleLieAlgebraSpec sl = traceless_gl(n);
  const auto unit = [n](int k, int sign) {
    std::vector<int> v(n, 0);
    v[k - 1] = sign;
    return v;
  };
  const auto run = [&](const std::string& name, const auto& body) { out.push_back(run_step(name, body)); };
  // E_kj(-1) in the gl_N factor: psi1(E_kj)(-1) + (delta_kj / N) I(-1)
  const auto glN_word = [&](int k, int j, const std::vector<int>& beta) {
    std::array<SparseVec<StateId>, kSlots> parts;
    parts[kLattice] = e.slot_word(kLattice, {}, beta);
    WordVec v;
    const LieElement psi1 = sl_elementary(sl, k, j);
    if (!psi1.empty()) {
      parts[kSl] = e.slot_word(kSl, {{psi1, 1}});
      add_scaled(v, e.tensor(parts));
      parts[kSl].clear();
    }
    if (k == j && !e.spec().c2.is_zero()) {
      parts[kHeis] = e.slot_word(kHeis, {{{{0, Rational(1)}}, 1}});
      add_scaled(v, e.tensor(parts), Rational(1, n));
    }
    return v;
  };
  const auto lattice_exp = [&](const std::vector<int>& beta) {
    std::array<SparseVec<StateId>, kSlots> parts;
    parts[kLattice] = e.slot_word(kLattice, {}, beta);
    return e.tensor(parts);
  };

  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n; ++j) {
      run("(E" + std::to_string(k) + std::to_string(j) + "(-1)e^a" + std::to_string(k) + ")_(-1) e^-a" +
              std::to_string(k) + " = E" + std::to_string(k) + std::to_string(j) + "(-1)",
          [&](std::string& detail) {
            const WordVec got = e.nth_product(glN_word(k, j, unit(k, 1)), -1, lattice_exp(unit(k, -1)));
            const WordVec want = glN_word(k, j, std::vector<int>(n, 0));
            detail = e.describe(e.as_states(got));
            return !want.empty() && got == want;
          });
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n; ++j) {
      run("D_" + std::to_string(j) + " vector at m = e_" + std::to_string(k) + " minus E" + std::to_string(k) +
              std::to_string(j) + "(-1)_(-1) e^a" + std::to_string(k) + " = b" + std::to_string(j) + "(-1)e^a" +
              std::to_string(k),
          [&](std::string& detail) {
            const std::vector<int> m = unit(k, 1);
            WordVec got = e.field_info(e.field(FieldRef::d(j, m))).state;
            const WordVec e_kj = glN_word(k, j, std::vector<int>(n, 0));
            add_scaled(got, e.nth_product(e_kj, -1, lattice_exp(m)), Rational(-1));
            std::array<SparseVec<StateId>, kSlots> parts;
            parts[kLattice] = e.slot_word(kLattice, {{{{n + j - 1, Rational(1)}}, 1}}, m);
            detail = e.describe(e.as_states(got));
            return got == e.tensor(parts);
          });
    }
  }
  const WordVec vac = e.tensor({});
  for (int g = 0; g < alg.dim; ++g) {
    for (int depth = 1; depth <= e.cap(); ++depth) {
      run(alg.basis_labels[g] + "(-1)_(-" + std::to_string(depth) + ") 1 = " + alg.basis_labels[g] + "(-" +
              std::to_string(depth) + ") 1",
          [&](std::string& detail) {
            std::array<SparseVec<StateId>, kSlots> one;
            one[kAffine] = e.slot_word(kAffine, {{alg.basis(g), 1}});
            std::array<SparseVec<StateId>, kSlots> want;
            want[kAffine] = e.slot_word(kAffine, {{alg.basis(g), depth}});
            const WordVec got = e.nth_product(e.tensor(one), -depth, vac);
            detail = e.describe(e.as_states(got));
            return got == e.tensor(want);
          });
    }
  }
  // a two-step chain: x(-1)_(-1) (y(-1)_(-2) 1) = x(-1) y(-2) 1
  if (alg.dim >= 2 && e.cap() >= 3) {
    run("chain " + alg.basis_labels[0] + "(-1)_(-1) " + alg.basis_labels[1] + "(-1)_(-2) 1", [&](std::string& detail) {
      std::array<SparseVec<StateId>, kSlots> x, y, want;
      x[kAffine] = e.slot_word(kAffine, {{alg.basis(0), 1}});
      y[kAffine] = e.slot_word(kAffine, {{alg.basis(1), 1}});
      want[kAffine] = e.slot_word(kAffine, {{alg.basis(0), 1}, {alg.basis(1), 2}});
      const WordVec got = e.nth_product(e.tensor(x), -1, e.nth_product(e.tensor(y), -2, vac));
      detail = e.describe(e.as_states(got));
      return got == e.tensor(want);
    });
  }
  return out;
}

std::vector<WitnessStep> voa_axiom_checks(Engine& e, int window) {
  std::vector<WitnessStep> out;
  const ModuleSpec& s = e.spec();
  const int cap = e.cap();
  const auto run = [&](const std::string& name, const auto& body) { out.push_back(run_step(name, body)); };
  std::vector<FieldRef> gens;
  for (const auto& m : cube(s.n, 1)) {
    for (int g = 0; g < s.alg.dim; ++g) gens.push_back(FieldRef::gfield(s.alg.basis(g), m));
    gens.push_back(FieldRef::k0(m));
    for (int q = 1; q <= s.n; ++q) {
      gens.push_back(FieldRef::k(q, m));
      gens.push_back(FieldRef::d(q, m));
    }
  }
  gens.push_back(FieldRef::virasoro());
  const std::array<bool, kSlots> all{true, true, true, true};
  const std::vector<FullState> states = e.states(all, cap, window);
  const WordVec vac = e.tensor({});

  run("Y(1, z) = Id on " + std::to_string(states.size()) + " states", [&](std::string& detail) {
    const FieldId one = e.field(FieldRef::scalar());
    for (const FullState& u : states) {
      if (e.mode(one, 0, u) != FullVec{{u, Rational(1)}}) {
        detail = "fails on " + e.describe(u);
        return false;
      }
    }
    return true;
  });

  std::int64_t products = 0;
  std::int64_t bad_weight = 0;
  const auto product = [&](const WordVec& u, int n, const WordVec& v) {
    const WordVec r = e.nth_product(u, n, v);
    ++products;
    const int expected = e.word_weight(u.front().first) + e.word_weight(v.front().first) - n - 1;
    for (const auto& [w, c] : r) {
      if (e.word_weight(w) != expected) ++bad_weight;
    }
    return r;
  };

  run("v_(-1) 1 = v for " + std::to_string(gens.size()) + " assigned vectors", [&](std::string& detail) {
    for (const auto& ref : gens) {
      const WordVec& v = e.field_info(e.field(ref)).state;
      if (product(v, -1, vac) != v) {
        detail = "fails for " + ref.label(s.alg);
        return false;
      }
    }
    return true;
  });

  run("wt(u_(n) v) = wt u + wt v - n - 1", [&](std::string& detail) {
    for (const auto& a : gens) {
      const Field& fa = e.field_info(e.field(a));
      for (const auto& b : gens) {
        const Field& fb = e.field_info(e.field(b));
        for (int n = -2; n <= 2; ++n) {
          if (fa.delta + fb.delta - n - 1 <= cap) product(fa.state, n, fb.state);
        }
      }
    }
    detail = std::to_string(products) + " products, " + std::to_string(bad_weight) + " misplaced terms";
    return products > 0 && bad_weight == 0;
  });

  run("Y(L(-1) v, z) = d/dz Y(v, z) on generator vectors", [&](std::string& detail) {
    const FieldId l = e.field(FieldRef::virasoro());
    std::int64_t checked = 0;
    for (const auto& ref : gens) {
      const FieldId f = e.field(ref);
      const Field info = e.field_info(f);
      if (info.delta + 1 > cap) continue;
      const WordVec dv = e.as_words(e.mode(l, -1, e.as_states(info.state)));
      const FieldId df = e.add_field({"L(-1)" + info.label, info.delta + 1, info.lat_degree, dv});
      for (const FullState& u : states) {
        for (int j = -1; j <= 1; ++j) {
          if (e.weight(u) - j > cap) continue;
          ++checked;
          FullVec r = e.mode(df, j, u);
          add_scaled(r, e.mode(f, j, u), Rational(j + info.delta));
          if (!r.empty()) {
            detail = "fails for " + info.label + " j=" + std::to_string(j) + " on " + e.describe(u);
            return false;
          }
        }
      }
    }
    detail = std::to_string(checked) + " mode checks";
    return checked > 0;
  });
  return out;
}

}  // namespace toroidal
