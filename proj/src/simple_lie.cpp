#include "toroidal/simple_lie.hpp"

#include <stdexcept>

namespace toroidal {

int SimpleLieAlgebraSpec::index_of(const std::string& label) const {
  for (int i = 0; i < dim; ++i) {
    if (basis_labels[i] == label) return i;
  }
  throw InputError("unknown basis label '" + label + "' for " + name);
}

LieElement SimpleLieAlgebraSpec::basis(int i) const {
  if (i < 0 || i >= dim) throw std::out_of_range("basis index out of range");
  return {{i, Rational(1)}};
}

namespace {

Matrix zero_matrix(int r, int c) { return Matrix(r, std::vector<Rational>(c)); }

struct SlLayout {
  int n;
  int offdiag_index(int p, int q) const {  // 0-based p != q
    int idx = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        if (a == p && b == q) return idx;
        ++idx;
      }
    }
    return -1;
  }
  int h_index(int k) const { return n * (n - 1) + k; }  // H_{k+1}, k = 0..n-2

  Matrix to_matrix(int i) const {
    Matrix m = zero_matrix(n, n);
    if (i < n * (n - 1)) {
      int idx = 0;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          if (idx++ == i) m[a][b] = 1;
        }
      }
    } else {
      const int k = i - n * (n - 1);
      m[k][k] = 1;
      m[k + 1][k + 1] = -1;
    }
    return m;
  }

  LieElement from_matrix(const Matrix& m) const {
    Accumulator<int> acc;
    Rational trace(0);
    for (int a = 0; a < n; ++a) {
      trace += m[a][a];
      for (int b = 0; b < n; ++b) {
        if (a != b) acc.add(offdiag_index(a, b), m[a][b]);
      }
    }
    if (!trace.is_zero()) throw std::logic_error("matrix is not traceless");
    Rational partial(0);
    for (int k = 0; k + 1 < n; ++k) {
      partial += m[k][k];
      acc.add(h_index(k), partial);
    }
    return acc.take();
  }
};

Rational trace_of_product(const Matrix& a, const Matrix& b) {
  Rational t(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) t += a[i][k] * b[k][i];
  }
  return t;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  Matrix ab = matmul(a, b);
  Matrix ba = matmul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i) {
    for (std::size_t j = 0; j < ab[i].size(); ++j) ab[i][j] -= ba[i][j];
  }
  return ab;
}

SimpleLieAlgebraSpec make_sl(int n) {
  SimpleLieAlgebraSpec alg;
  alg.name = "sl" + std::to_string(n);
  alg.sl_rank = n;
  alg.dual_coxeter = n;
  alg.dim = n * n - 1;
  const SlLayout lay{n};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) alg.basis_labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  for (int k = 1; k < n; ++k) alg.basis_labels.push_back("H" + std::to_string(k));
  if (n == 2) alg.basis_labels = {"e", "f", "h"};

  std::vector<Matrix> mats;
  for (int i = 0; i < alg.dim; ++i) mats.push_back(lay.to_matrix(i));
  alg.structure_constants.assign(alg.dim, std::vector<LieElement>(alg.dim));
  alg.form_matrix = zero_matrix(alg.dim, alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    for (int j = 0; j < alg.dim; ++j) {
      alg.structure_constants[i][j] = lay.from_matrix(commutator(mats[i], mats[j]));
      alg.form_matrix[i][j] = trace_of_product(mats[i], mats[j]);
    }
  }
  for (int k = 0; k + 1 < n; ++k) alg.theta.emplace_back(lay.h_index(k), Rational(1));
  return alg;
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t r = a.size();
  const std::size_t inner = b.size();
  const std::size_t c = inner == 0 ? 0 : b[0].size();
  Matrix out = zero_matrix(static_cast<int>(r), static_cast<int>(c));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

SimpleLieAlgebraSpec builtin_sl(int n) {
  if (n < 2) throw InputError("invalid rank for sl_n: " + std::to_string(n));
  return make_sl(n);
}

SimpleLieAlgebraSpec traceless_gl(int n) {
  if (n >= 2) return make_sl(n);
  if (n != 1) throw InputError("invalid N: " + std::to_string(n));
  SimpleLieAlgebraSpec alg;
  alg.name = "sl1";
  alg.sl_rank = 1;
  alg.dual_coxeter = 1;
  return alg;
}

SimpleLieAlgebraSpec builtin_algebra(const std::string& name) {
  if (name.size() > 2 && name.rfind("sl", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(2));
    } catch (const std::exception&) {
      throw InputError("unknown builtin algebra '" + name + "'");
    }
    return builtin_sl(n);
  }
  throw InputError("unknown builtin algebra '" + name + "'");
}

LieElement sl_elementary(const SimpleLieAlgebraSpec& alg, int p, int q) {
  const int n = alg.sl_rank;
  if (n < 1) throw std::logic_error("sl_elementary needs a builtin sl_n");
  if (p < 1 || p > n || q < 1 || q > n) throw std::out_of_range("elementary matrix index");
  if (n == 1) return {};
  const SlLayout lay{n};
  if (p != q) return {{lay.offdiag_index(p - 1, q - 1), Rational(1)}};
  Matrix m = zero_matrix(n, n);
  for (int a = 0; a < n; ++a) m[a][a] = Rational(-1, n);
  m[p - 1][p - 1] += Rational(1);
  return lay.from_matrix(m);
}

LieElement bracket_fin(const SimpleLieAlgebraSpec& alg, const LieElement& x, const LieElement& y) {
  Accumulator<int> acc;
  for (const auto& [i, a] : x) {
    if (i < 0 || i >= alg.dim) throw std::out_of_range("malformed Lie element: index out of range");
    for (const auto& [j, b] : y) {
      if (j < 0 || j >= alg.dim) throw std::out_of_range("malformed Lie element: index out of range");
      acc.add(alg.structure_constants[i][j], a * b);
    }
  }
  return acc.take();
}

Rational invariant_form(const SimpleLieAlgebraSpec& alg, const LieElement& x, const LieElement& y) {
  Rational out(0);
  for (const auto& [i, a] : x) {
    if (i < 0 || i >= alg.dim) throw std::out_of_range("malformed Lie element: index out of range");
    for (const auto& [j, b] : y) {
      if (j < 0 || j >= alg.dim) throw std::out_of_range("malformed Lie element: index out of range");
      out += a * b * alg.form_matrix[i][j];
    }
  }
  return out;
}

std::vector<std::vector<QuadNumber>> orthonormal_basis(const SimpleLieAlgebraSpec& alg) {
  const int d = alg.dim;
  auto form = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational s(0);
    for (int i = 0; i < d; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (!v[j].is_zero()) s += u[i] * v[j] * alg.form_matrix[i][j];
      }
    }
    return s;
  };
  std::vector<std::vector<Rational>> pending;
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> e(d);
    e[i] = 1;
    pending.push_back(e);
  }
  std::vector<std::vector<QuadNumber>> out;
  while (!pending.empty()) {
    std::size_t pick = pending.size();
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (!form(pending[i], pending[i]).is_zero()) {
        pick = i;
        break;
      }
    }
    if (pick == pending.size()) {
      // Every remaining vector is isotropic: u + v is not when (u, v) != 0.
      for (std::size_t i = 0; i < pending.size() && pick == pending.size(); ++i) {
        for (std::size_t j = i + 1; j < pending.size(); ++j) {
          if (!form(pending[i], pending[j]).is_zero()) {
            for (int k = 0; k < d; ++k) pending[i][k] += pending[j][k];
            pick = i;
            break;
          }
        }
      }
    }
    if (pick == pending.size()) throw std::domain_error("degenerate invariant form");
    const std::vector<Rational> u = pending[pick];
    pending.erase(pending.begin() + static_cast<long>(pick));
    const Rational norm = form(u, u);
    for (auto& w : pending) {
      const Rational coef = form(w, u) / norm;
      if (coef.is_zero()) continue;
      for (int k = 0; k < d; ++k) w[k] -= coef * u[k];
    }
    const QuadNumber scale = QuadNumber::sqrt(norm).inverse();
    std::vector<QuadNumber> x(d);
    for (int k = 0; k < d; ++k) x[k] = QuadNumber(u[k]) * scale;
    out.push_back(std::move(x));
  }
  return out;
}

Matrix casimir_tensor(const std::vector<std::vector<QuadNumber>>& onb) {
  const std::size_t d = onb.empty() ? 0 : onb.front().size();
  Matrix out = zero_matrix(static_cast<int>(d), static_cast<int>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      QuadNumber s;
      for (const auto& x : onb) {
        if (!x[a].is_zero() && !x[b].is_zero()) s += x[a] * x[b];
      }
      out[a][b] = s.to_rational();
    }
  }
  return out;
}

namespace {

bool nondegenerate(Matrix m) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return true;
}

}  // namespace

LieInvariantReport check_invariants(const SimpleLieAlgebraSpec& alg) {
  LieInvariantReport rep;
  const int d = alg.dim;
  auto label = [&](int i) { return alg.basis_labels[i]; };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      LieElement sum = alg.structure_constants[i][j];
      add_scaled(sum, alg.structure_constants[j][i]);
      if (!sum.empty()) {
        rep.antisymmetric = false;
        rep.failures.push_back("antisymmetry fails at (" + label(i) + "," + label(j) + ")");
      }
      if (alg.form_matrix[i][j] != alg.form_matrix[j][i]) {
        rep.form_symmetric = false;
        rep.failures.push_back("form not symmetric at (" + label(i) + "," + label(j) + ")");
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const LieElement xi = alg.basis(i), xj = alg.basis(j), xk = alg.basis(k);
        LieElement jac = bracket_fin(alg, bracket_fin(alg, xi, xj), xk);
        add_scaled(jac, bracket_fin(alg, bracket_fin(alg, xj, xk), xi));
        add_scaled(jac, bracket_fin(alg, bracket_fin(alg, xk, xi), xj));
        if (!jac.empty()) {
          rep.jacobi = false;
          rep.failures.push_back("Jacobi fails at (" + label(i) + "," + label(j) + "," + label(k) + ")");
        }
        const Rational lhs = invariant_form(alg, bracket_fin(alg, xi, xj), xk);
        const Rational rhs = invariant_form(alg, xi, bracket_fin(alg, xj, xk));
        if (lhs != rhs) {
          rep.form_invariant = false;
          rep.failures.push_back("form not invariant at (" + label(i) + "," + label(j) + "," + label(k) + ")");
        }
      }
    }
  }
  if (!nondegenerate(alg.form_matrix)) {
    rep.form_nondegenerate = false;
    rep.failures.push_back("form is degenerate");
  }
  if (d > 0 && invariant_form(alg, alg.theta, alg.theta) != Rational(2)) {
    rep.theta_normalized = false;
    rep.failures.push_back("(theta, theta) = " + invariant_form(alg, alg.theta, alg.theta).str());
  }
  return rep;
}

namespace {

int index_from_json(const SimpleLieAlgebraSpec& alg, const Json& j) {
  if (j.is_number_integer()) {
    const int i = j.get<int>();
    if (i < 0 || i >= alg.dim) throw InputError("basis index out of range: " + j.dump());
    return i;
  }
  if (j.is_string()) return alg.index_of(j.get<std::string>());
  throw InputError("expected a basis index or label, got " + j.dump());
}

LieElement element_from_json(const SimpleLieAlgebraSpec& alg, const Json& j) {
  Accumulator<int> acc;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) throw InputError("expected [index, coefficient], got " + entry.dump());
    acc.add(index_from_json(alg, entry[0]), rational_from_json(entry[1]));
  }
  return acc.take();
}

Json element_to_json(const LieElement& x) {
  Json out = Json::array();
  for (const auto& [i, c] : x) out.push_back(Json::array({i, rational_to_json(c)}));
  return out;
}

}  // namespace

SimpleLieAlgebraSpec lie_algebra_from_json(const Json& j) {
  if (j.contains("builtin")) return builtin_algebra(j.at("builtin").get<std::string>());
  SimpleLieAlgebraSpec alg;
  try {
    alg.name = j.value("name", std::string("custom"));
    for (const auto& l : j.at("basis")) alg.basis_labels.push_back(l.get<std::string>());
    alg.dim = static_cast<int>(alg.basis_labels.size());
    alg.structure_constants.assign(alg.dim, std::vector<LieElement>(alg.dim));
    std::vector<std::vector<bool>> seen(alg.dim, std::vector<bool>(alg.dim, false));
    for (const auto& b : j.at("brackets")) {
      const int x = index_from_json(alg, b.at(0));
      const int y = index_from_json(alg, b.at(1));
      const LieElement v = element_from_json(alg, b.at(2));
      if (seen[x][y] && alg.structure_constants[x][y] != v) {
        throw InputError("conflicting bracket entries for (" + alg.basis_labels[x] + "," + alg.basis_labels[y] + ")");
      }
      alg.structure_constants[x][y] = v;
      seen[x][y] = true;
      if (!seen[y][x]) {
        alg.structure_constants[y][x] = scaled(v, Rational(-1));
        seen[y][x] = true;
      }
    }
    alg.form_matrix = zero_matrix(alg.dim, alg.dim);
    for (const auto& f : j.at("form")) {
      const int x = index_from_json(alg, f.at(0));
      const int y = index_from_json(alg, f.at(1));
      const Rational c = rational_from_json(f.at(2));
      alg.form_matrix[x][y] = c;
      alg.form_matrix[y][x] = c;
    }
    alg.dual_coxeter = j.at("h_dual").get<int>();
    alg.theta = element_from_json(alg, j.at("theta"));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed Lie algebra file: ") + e.what());
  }
  return alg;
}

Json lie_algebra_to_json(const SimpleLieAlgebraSpec& alg) {
  Json j;
  j["name"] = alg.name;
  j["basis"] = alg.basis_labels;
  Json br = Json::array();
  for (int x = 0; x < alg.dim; ++x) {
    for (int y = x + 1; y < alg.dim; ++y) {
      if (!alg.structure_constants[x][y].empty()) {
        br.push_back(Json::array({x, y, element_to_json(alg.structure_constants[x][y])}));
      }
    }
  }
  j["brackets"] = br;
  Json form = Json::array();
  for (int x = 0; x < alg.dim; ++x) {
    for (int y = x; y < alg.dim; ++y) {
      if (!alg.form_matrix[x][y].is_zero()) form.push_back(Json::array({x, y, rational_to_json(alg.form_matrix[x][y])}));
    }
  }
  j["form"] = form;
  j["h_dual"] = alg.dual_coxeter;
  j["theta"] = element_to_json(alg.theta);
  return j;
}

LieModule trivial_module(const SimpleLieAlgebraSpec& alg) {
  return LieModule{"trivial", 1, std::vector<Matrix>(alg.dim, zero_matrix(1, 1))};
}

LieModule adjoint_module(const SimpleLieAlgebraSpec& alg) {
  LieModule mod{"adjoint", alg.dim, {}};
  for (int i = 0; i < alg.dim; ++i) {
    Matrix m = zero_matrix(alg.dim, alg.dim);
    for (int j = 0; j < alg.dim; ++j) {
      for (const auto& [k, c] : alg.structure_constants[i][j]) m[k][j] = c;
    }
    mod.action.push_back(std::move(m));
  }
  return mod;
}

LieModule natural_module(const SimpleLieAlgebraSpec& alg) {
  if (alg.sl_rank < 2) throw InputError("natural module needs a builtin sl_n");
  const SlLayout lay{alg.sl_rank};
  LieModule mod{"natural", alg.sl_rank, {}};
  for (int i = 0; i < alg.dim; ++i) mod.action.push_back(lay.to_matrix(i));
  return mod;
}

LieModule module_from_json(const SimpleLieAlgebraSpec& alg, const Json& j) {
  LieModule mod;
  try {
    if (j.is_string() || j.contains("builtin")) {
      const std::string kind = j.is_string() ? j.get<std::string>() : j.at("builtin").get<std::string>();
      if (kind == "trivial") mod = trivial_module(alg);
      else if (kind == "adjoint") mod = adjoint_module(alg);
      else if (kind == "natural") mod = natural_module(alg);
      else throw InputError("unknown builtin module '" + kind + "'");
    } else {
      mod.name = j.value("name", std::string("custom"));
      mod.dim = j.at("dim").get<int>();
      const Json& mats = j.at("matrices");
      for (int i = 0; i < alg.dim; ++i) {
        const Json& rows = mats.at(alg.basis_labels[i]);
        Matrix m = zero_matrix(mod.dim, mod.dim);
        if (static_cast<int>(rows.size()) != mod.dim) throw InputError("matrix for " + alg.basis_labels[i] + " has wrong size");
        for (int r = 0; r < mod.dim; ++r) {
          if (static_cast<int>(rows[r].size()) != mod.dim) throw InputError("matrix for " + alg.basis_labels[i] + " has wrong size");
          for (int c = 0; c < mod.dim; ++c) m[r][c] = rational_from_json(rows[r][c]);
        }
        mod.action.push_back(std::move(m));
      }
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed module: ") + e.what());
  }
  std::string why;
  if (!check_module(alg, mod, &why)) throw InputError("module '" + mod.name + "' is not a representation: " + why);
  return mod;
}

Matrix module_matrix(const LieModule& mod, const LieElement& x) {
  Matrix out = zero_matrix(mod.dim, mod.dim);
  for (const auto& [i, c] : x) {
    for (int r = 0; r < mod.dim; ++r) {
      for (int s = 0; s < mod.dim; ++s) out[r][s] += c * mod.action[i][r][s];
    }
  }
  return out;
}

bool check_module(const SimpleLieAlgebraSpec& alg, const LieModule& mod, std::string* why) {
  if (static_cast<int>(mod.action.size()) != alg.dim) {
    if (why) *why = "wrong number of matrices";
    return false;
  }
  for (int i = 0; i < alg.dim; ++i) {
    for (int j = 0; j < alg.dim; ++j) {
      const Matrix lhs = commutator(mod.action[i], mod.action[j]);
      const Matrix rhs = module_matrix(mod, alg.structure_constants[i][j]);
      if (lhs != rhs) {
        if (why) *why = "bracket of " + alg.basis_labels[i] + " and " + alg.basis_labels[j];
        return false;
      }
    }
  }
  return true;
}

}  // namespace toroidal
