#include "toroidal/relations.hpp"

#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>

namespace toroidal {

namespace {

using Vec = std::vector<int>;

Vec vadd(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<Vec> exponent_grid(int n, int range) {
  std::vector<Vec> out;
  Vec v(n, -range);
  while (true) {
    out.push_back(v);
    int p = 0;
    while (p < n && v[p] == range) v[p++] = -range;
    if (p == n) break;
    ++v[p];
  }
  return out;
}

Rational R(int x) { return Rational(x); }

FieldRef k_field(int i, const Vec& m) { return i == 0 ? FieldRef::k0(m) : FieldRef::k(i, m); }

// sum_p m_p K_p(at) at delta order 0
void add_k_sum(std::vector<RhsTerm>& rhs, const Vec& m, const Vec& at, const Rational& coef) {
  if (coef.is_zero()) return;
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (m[p] != 0) rhs.push_back({coef * R(m[p]), FieldRef::k(static_cast<int>(p) + 1, at), 0});
  }
}

Json vec_json(const Vec& v) { return Json(v); }

std::array<bool, kSlots> active_slots(Engine& e, const std::vector<FieldId>& ids) {
  std::array<bool, kSlots> active{};
  for (FieldId id : ids) {
    for (const auto& [w, c] : e.field_info(id).state) {
      for (int s = 0; s < kSlots; ++s) {
        if (e.factor(s).word_weight(w[s]) > 0) active[s] = true;
      }
      for (int x : e.word_degree(w)) {
        if (x != 0) active[kLattice] = true;
      }
    }
  }
  return active;
}

bool in_window(const Vec& g, int window) {
  for (int x : g) {
    if (x < -window || x > window) return false;
  }
  return true;
}

}  // namespace

Json RelationReport::to_json() const {
  Json j = {{"relation", relation}, {"params", params},         {"j", this->j},
            {"k", k},               {"residual_terms", residual_terms}, {"states_tested", states_tested},
            {"saturated", saturated}, {"pass", pass}};
  if (!sample.empty()) j["sample"] = sample;
  return j;
}

const std::vector<std::string>& relation_ids() {
  static const std::vector<std::string> ids = {"k0_deriv", "g_g",  "g_k",  "k_k",  "d_g",  "l_g", "d_k0",
                                               "d_k",      "l_k0", "l_k",  "d_d",  "l_d",  "l_l"};
  return ids;
}

std::string relation_statement(const std::string& id) {
  static const std::map<std::string, std::string> text = {
      {"k0_deriv", "dK0(m,z) = sum_p m_p K_p(m,z)"},
      {"g_g", "[g1(m,z1), g2(r,z2)] = [g1,g2](m+r,z2) d + (g1,g2) (sum_p m_p K_p(m+r,z2) d + K0(m+r,z2) d')"},
      {"g_k", "[g(m,z1), K_i(r,z2)] = 0"},
      {"k_k", "[K_i(m,z1), K_q(r,z2)] = 0"},
      {"d_g", "[D_s(m,z1), g(r,z2)] = r_s g(m+r,z2) d"},
      {"l_g", "[L(z1), g(m,z2)] = dg(m,z2) d + g(m,z2) d'"},
      {"d_k0", "[D_s(m,z1), K0(r,z2)] = r_s K0(m+r,z2) d"},
      {"d_k", "[D_s(m,z1), K_q(r,z2)] = (r_s K_q + delta_sq sum_p m_p K_p)(m+r,z2) d + delta_sq K0(m+r,z2) d'"},
      {"l_k0", "[L(z1), K0(m,z2)] = dK0(m,z2) d"},
      {"l_k", "[L(z1), K_s(m,z2)] = dK_s(m,z2) d + K_s(m,z2) d'"},
      {"d_d", "[D_s(m,z1), D_q(r,z2)] = (r_s D_q - m_q D_s - tau sum_p m_p K_p)(m+r,z2) d - tau K0(m+r,z2) d', "
              "tau = mu r_s m_q + nu r_q m_s"},
      {"l_d", "[L(z1), D_s(m,z2)] = dD_s(m,z2) d + D_s(m,z2) d' + rho m_s K0(m,z2) d''"},
      {"l_l", "[L(z1), L(z2)] = dL(z2) d + 2 L(z2) d' + (C/12) d'''"},
  };
  auto it = text.find(id);
  return it == text.end() ? std::string() : it->second;
}

std::vector<RelationInstance> relation_instances(const std::string& id, const SimpleLieAlgebraSpec& alg, int n,
                                                 const CocycleParams& p, const Rational& rank, int range) {
  std::vector<RelationInstance> out;
  const auto grid = exponent_grid(n, range);
  const auto label = [&](int g) { return alg.basis_labels[g]; };
  if (id == "k0_deriv") {
    for (const auto& m : grid) {
      RelationInstance r{id, {{"m", vec_json(m)}}, FieldRef::k0(m), {}, {}, true};
      add_k_sum(r.rhs, m, m, R(1));
      out.push_back(std::move(r));
    }
  } else if (id == "g_g") {
    for (int g1 = 0; g1 < alg.dim; ++g1) {
      for (int g2 = 0; g2 < alg.dim; ++g2) {
        const LieElement br = alg.structure_constants[g1][g2];
        const Rational form = alg.form_matrix[g1][g2];
        for (const auto& m : grid) {
          for (const auto& r : grid) {
            const Vec mr = vadd(m, r);
            RelationInstance inst{id,
                                  {{"g1", label(g1)}, {"g2", label(g2)}, {"m", vec_json(m)}, {"r", vec_json(r)}},
                                  FieldRef::gfield(alg.basis(g1), m),
                                  FieldRef::gfield(alg.basis(g2), r),
                                  {}};
            if (!br.empty()) inst.rhs.push_back({R(1), FieldRef::gfield(br, mr), 0});
            add_k_sum(inst.rhs, m, mr, form);
            if (!form.is_zero()) inst.rhs.push_back({form, FieldRef::k0(mr), 1});
            out.push_back(std::move(inst));
          }
        }
      }
    }
  } else if (id == "g_k") {
    for (int g = 0; g < alg.dim; ++g) {
      for (int i = 0; i <= n; ++i) {
        for (const auto& m : grid) {
          for (const auto& r : grid) {
            out.push_back({id,
                           {{"g", label(g)}, {"i", i}, {"m", vec_json(m)}, {"r", vec_json(r)}},
                           FieldRef::gfield(alg.basis(g), m),
                           k_field(i, r),
                           {}});
          }
        }
      }
    }
  } else if (id == "k_k") {
    for (int i = 0; i <= n; ++i) {
      for (int q = 0; q <= n; ++q) {
        for (const auto& m : grid) {
          for (const auto& r : grid) {
            out.push_back({id, {{"i", i}, {"q", q}, {"m", vec_json(m)}, {"r", vec_json(r)}}, k_field(i, m),
                           k_field(q, r), {}});
          }
        }
      }
    }
  } else if (id == "d_g") {
    for (int s = 1; s <= n; ++s) {
      for (int g = 0; g < alg.dim; ++g) {
        for (const auto& m : grid) {
          for (const auto& r : grid) {
            RelationInstance inst{id,
                                  {{"s", s}, {"g", label(g)}, {"m", vec_json(m)}, {"r", vec_json(r)}},
                                  FieldRef::d(s, m),
                                  FieldRef::gfield(alg.basis(g), r),
                                  {}};
            if (r[s - 1] != 0) inst.rhs.push_back({R(r[s - 1]), FieldRef::gfield(alg.basis(g), vadd(m, r)), 0});
            out.push_back(std::move(inst));
          }
        }
      }
    }
  } else if (id == "l_g") {
    for (int g = 0; g < alg.dim; ++g) {
      for (const auto& m : grid) {
        const FieldRef f = FieldRef::gfield(alg.basis(g), m);
        out.push_back({id, {{"g", label(g)}, {"m", vec_json(m)}}, FieldRef::virasoro(), f,
                       {{R(1), f, 0, true}, {R(1), f, 1}}});
      }
    }
  } else if (id == "d_k0") {
    for (int s = 1; s <= n; ++s) {
      for (const auto& m : grid) {
        for (const auto& r : grid) {
          RelationInstance inst{
              id, {{"s", s}, {"m", vec_json(m)}, {"r", vec_json(r)}}, FieldRef::d(s, m), FieldRef::k0(r), {}};
          if (r[s - 1] != 0) inst.rhs.push_back({R(r[s - 1]), FieldRef::k0(vadd(m, r)), 0});
          out.push_back(std::move(inst));
        }
      }
    }
  } else if (id == "d_k") {
    for (int s = 1; s <= n; ++s) {
      for (int q = 1; q <= n; ++q) {
        for (const auto& m : grid) {
          for (const auto& r : grid) {
            const Vec mr = vadd(m, r);
            RelationInstance inst{id,
                                  {{"s", s}, {"q", q}, {"m", vec_json(m)}, {"r", vec_json(r)}},
                                  FieldRef::d(s, m),
                                  FieldRef::k(q, r),
                                  {}};
            if (r[s - 1] != 0) inst.rhs.push_back({R(r[s - 1]), FieldRef::k(q, mr), 0});
            if (s == q) {
              add_k_sum(inst.rhs, m, mr, R(1));
              inst.rhs.push_back({R(1), FieldRef::k0(mr), 1});
            }
            out.push_back(std::move(inst));
          }
        }
      }
    }
  } else if (id == "l_k0") {
    for (const auto& m : grid) {
      out.push_back({id, {{"m", vec_json(m)}}, FieldRef::virasoro(), FieldRef::k0(m),
                     {{R(1), FieldRef::k0(m), 0, true}}});
    }
  } else if (id == "l_k") {
    for (int s = 1; s <= n; ++s) {
      for (const auto& m : grid) {
        const FieldRef f = FieldRef::k(s, m);
        out.push_back({id, {{"s", s}, {"m", vec_json(m)}}, FieldRef::virasoro(), f,
                       {{R(1), f, 0, true}, {R(1), f, 1}}});
      }
    }
  } else if (id == "d_d") {
    for (int s = 1; s <= n; ++s) {
      for (int q = 1; q <= n; ++q) {
        for (const auto& m : grid) {
          for (const auto& r : grid) {
            const Vec mr = vadd(m, r);
            const Rational tau = p.mu * R(r[s - 1]) * R(m[q - 1]) + p.nu * R(r[q - 1]) * R(m[s - 1]);
            RelationInstance inst{id,
                                  {{"s", s}, {"q", q}, {"m", vec_json(m)}, {"r", vec_json(r)}},
                                  FieldRef::d(s, m),
                                  FieldRef::d(q, r),
                                  {}};
            if (r[s - 1] != 0) inst.rhs.push_back({R(r[s - 1]), FieldRef::d(q, mr), 0});
            if (m[q - 1] != 0) inst.rhs.push_back({R(-m[q - 1]), FieldRef::d(s, mr), 0});
            add_k_sum(inst.rhs, m, mr, -tau);
            if (!tau.is_zero()) inst.rhs.push_back({-tau, FieldRef::k0(mr), 1});
            out.push_back(std::move(inst));
          }
        }
      }
    }
  } else if (id == "l_d") {
    for (int s = 1; s <= n; ++s) {
      for (const auto& m : grid) {
        const FieldRef f = FieldRef::d(s, m);
        RelationInstance inst{id, {{"s", s}, {"m", vec_json(m)}}, FieldRef::virasoro(), f,
                              {{R(1), f, 0, true}, {R(1), f, 1}}};
        const Rational rho_term = p.rho * R(m[s - 1]);
        if (!rho_term.is_zero()) inst.rhs.push_back({rho_term, FieldRef::k0(m), 2});
        out.push_back(std::move(inst));
      }
    }
  } else if (id == "l_l") {
    const FieldRef l = FieldRef::virasoro();
    out.push_back({id, Json::object(), l, l, {{R(1), l, 0, true}, {R(2), l, 1}, {rank / R(12), FieldRef::scalar(), 3}}});
  } else {
    throw InputError("unknown relation id '" + id + "'");
  }
  return out;
}

std::optional<RelationInstance> negative_control(const RelationInstance& inst) {
  RelationInstance out = inst;
  if (inst.identity) {
    out.rhs.push_back({Rational(1), FieldRef::k0(inst.a.m), 0});
    return out;
  }
  const auto weight = [](const FieldRef& f) {
    switch (f.kind) {
      case FieldRef::Kind::K0:
      case FieldRef::Kind::Scalar:
        return 0;
      case FieldRef::Kind::L:
        return 2;
      default:
        return 1;
    }
  };
  // the extra term must have the homogeneous weight: n = wt A + wt B - wt F - 1
  const int n = weight(inst.a) + weight(inst.b) - 1;
  if (n < 0) return std::nullopt;
  Vec m = inst.a.m;
  if (m.empty()) m = inst.b.m;
  if (!inst.b.m.empty() && !inst.a.m.empty()) m = vadd(inst.a.m, inst.b.m);
  out.rhs.push_back({Rational(1), m.empty() ? FieldRef::scalar() : FieldRef::k0(m), n});
  return out;
}

std::vector<RelationReport> check_instance(Engine& e, const RelationInstance& inst, int mode_range) {
  std::vector<RelationReport> out;
  const int depth = e.spec().depth;
  const int window = e.spec().window;
  const FieldId a = e.field(inst.a);
  const FieldId b = inst.identity ? a : e.field(inst.b);
  struct Term {
    Rational coef;
    FieldId f;
    int n;
    bool derivative;
  };
  std::vector<Term> rhs;
  std::vector<FieldId> ids{a, b};
  for (const auto& t : inst.rhs) {
    rhs.push_back({t.coef, e.field(t.field), t.n, t.derivative});
    ids.push_back(rhs.back().f);
  }
  const Field& fa = e.field_info(a);
  const Field& fb = e.field_info(b);
  const auto active = active_slots(e, ids);
  const std::vector<FullState> states = e.states(active, depth, window);
  const int da = fa.delta;
  const int db = inst.identity ? 0 : fb.delta;
  const Vec zero(e.spec().n, 0);
  const Vec beta_a = fa.lat_degree;
  const Vec beta_b = inst.identity ? zero : fb.lat_degree;

  const int k_lo = inst.identity ? 0 : -mode_range;
  const int k_hi = inst.identity ? 0 : mode_range;
  for (int j = -mode_range; j <= mode_range; ++j) {
    for (int k = k_lo; k <= k_hi; ++k) {
      RelationReport rep;
      rep.relation = inst.relation;
      rep.params = inst.params;
      rep.j = j;
      rep.k = k;
      for (const FullState& u : states) {
        const int w = e.weight(u);
        const int fin = w - j - k;
        if (fin > depth || w - j > depth || w - k > depth) continue;
        const Vec g = e.lattice_degree(u);
        if (!in_window(vadd(g, beta_a), window) || !in_window(vadd(g, beta_b), window) ||
            !in_window(vadd(vadd(g, beta_a), beta_b), window)) {
          continue;
        }
        ++rep.states_tested;
        FullVec residual;
        if (inst.identity) {
          // (dA)_j = -(j + delta) A_j
          residual = scaled(e.mode(a, j, u), Rational(-(j + da)));
          for (const auto& t : rhs) {
            const Field& f = e.field_info(t.f);
            Rational c = t.coef;
            if (t.derivative) c *= Rational(-(j + f.delta));
            add_scaled(residual, e.mode(t.f, j, u), -c);
          }
        } else {
          const FullVec bu = e.mode(b, k, u);
          residual = e.mode(a, j, bu);
          const FullVec au = e.mode(a, j, u);
          add_scaled(residual, e.mode(b, k, au), Rational(-1));
          for (const auto& t : rhs) {
            const Field& f = e.field_info(t.f);
            const int df = f.delta + (t.derivative ? 1 : 0);
            const int l = j + k + da + db - df - 1 - t.n;
            Rational c = t.coef * factorial(t.n) * binomial(j + da - 1, t.n);
            if (t.derivative) c *= Rational(-(l + f.delta));
            if (c.is_zero()) continue;
            add_scaled(residual, e.mode(t.f, l, u), -c);
          }
        }
        if (!residual.empty()) {
          rep.residual_terms += static_cast<std::int64_t>(residual.size());
          if (rep.sample.empty()) rep.sample = "on [" + e.describe(u) + "]: " + e.describe(residual);
        }
      }
      rep.saturated = rep.states_tested == 0;
      rep.pass = !rep.saturated && rep.residual_terms == 0;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

GridResult run_grid(const ModuleSpec& spec, const std::vector<RelationInstance>& instances, int mode_range,
                    int workers, bool stop_on_failure, const std::function<void(const RelationReport&)>& on_report) {
  GridResult result;
  const std::size_t total = instances.size();
  std::vector<std::vector<RelationReport>> slots(total);
  std::vector<char> done(total, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable cv;
  std::exception_ptr error;

  const auto work = [&] {
    try {
      Engine engine(spec);
      while (!stop.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= total) break;
        auto reports = check_instance(engine, instances[i], mode_range);
        {
          std::lock_guard<std::mutex> lock(mu);
          slots[i] = std::move(reports);
          done[i] = 1;
        }
        cv.notify_all();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
      stop.store(true);
      cv.notify_all();
    }
  };

  const int n_workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(total, 1))));
  std::vector<std::thread> pool;
  for (int w = 0; w < n_workers; ++w) pool.emplace_back(work);

  for (std::size_t i = 0; i < total; ++i) {
    std::vector<RelationReport> reports;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return done[i] || error || stop.load(); });
      if (!done[i]) break;
      reports = std::move(slots[i]);
    }
    bool failed = false;
    for (auto& r : reports) {
      if (on_report) on_report(r);
      failed = failed || (!r.pass && !r.saturated);
      result.reports.push_back(std::move(r));
    }
    if (failed && stop_on_failure) {
      stop.store(true);
      result.stopped_early = i + 1 < total;
      break;
    }
  }
  stop.store(true);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return result;
}

std::vector<RelationSummary> summarize(const std::vector<RelationReport>& reports) {
  std::vector<RelationSummary> out;
  std::map<std::string, std::size_t> index;
  std::map<std::pair<std::string, std::string>, bool> tested;  // per instance
  for (const auto& r : reports) {
    auto it = index.find(r.relation);
    if (it == index.end()) {
      it = index.emplace(r.relation, out.size()).first;
      out.push_back({r.relation});
    }
    auto& s = out[it->second];
    ++s.reports;
    bool& any = tested[{r.relation, r.params.dump()}];
    any = any || !r.saturated;
    if (r.saturated) {
      ++s.saturated;
    } else if (r.pass) {
      ++s.passed;
    } else {
      ++s.failed;
    }
  }
  for (const auto& [key, any] : tested) {
    if (!any) ++out[index[key.first]].inconclusive;
  }
  return out;
}

}  // namespace toroidal
