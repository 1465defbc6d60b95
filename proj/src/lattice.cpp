#include "toroidal/lattice.hpp"

namespace toroidal {

std::vector<int> LatticeVector::coords() const {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

LatticeVector operator+(const LatticeVector& x, const LatticeVector& y) {
  LatticeVector out = x;
  for (std::size_t p = 0; p < out.a.size(); ++p) {
    out.a[p] += y.a[p];
    out.b[p] += y.b[p];
  }
  return out;
}

int form(const LatticeVector& x, const LatticeVector& y) {
  int s = 0;
  for (std::size_t p = 0; p < x.a.size(); ++p) s += x.a[p] * y.b[p] + x.b[p] * y.a[p];
  return s;
}

namespace {

int gram(int n, int u, int v) {
  // a's are 0..n-1, b's n..2n-1
  return (u < n) != (v < n) && (u % n) == (v % n) ? 1 : 0;
}

}  // namespace

EpsilonCocycle EpsilonCocycle::standard(int n) {
  std::vector<std::vector<int>> s(2 * n, std::vector<int>(2 * n, 0));
  for (int u = 0; u < 2 * n; ++u) {
    for (int v = 0; v < u; ++v) s[u][v] = gram(n, u, v) % 2;
  }
  return {n, s};
}

int lattice_basis_index(int n, const std::string& label) {
  if (label.size() < 2 || (label[0] != 'a' && label[0] != 'b')) return -1;
  int p = 0;
  try {
    p = std::stoi(label.substr(1));
  } catch (const std::exception&) {
    return -1;
  }
  if (p < 1 || p > n) return -1;
  return (label[0] == 'a' ? 0 : n) + p - 1;
}

EpsilonCocycle EpsilonCocycle::from_json(int n, const Json& j) {
  std::vector<int> order;
  try {
    for (const auto& l : j.at("order")) {
      const int idx = lattice_basis_index(n, l.get<std::string>());
      if (idx < 0) throw InputError("unknown lattice basis label " + l.dump());
      order.push_back(idx);
    }
    if (static_cast<int>(order.size()) != 2 * n) throw InputError("order must list all 2N basis vectors");
    std::vector<std::vector<int>> s(2 * n, std::vector<int>(2 * n, 0));
    for (const auto& e : j.at("signs")) {
      const auto lookup = [&](const Json& x) {
        if (x.is_number_integer()) {
          const int pos = x.get<int>();
          if (pos < 0 || pos >= 2 * n) throw InputError("sign entry position out of range");
          return order[pos];
        }
        const int idx = lattice_basis_index(n, x.get<std::string>());
        if (idx < 0) throw InputError("unknown lattice basis label " + x.dump());
        return idx;
      };
      const int u = lookup(e.at(0));
      const int v = lookup(e.at(1));
      const int sign = e.at(2).get<int>();
      if (sign != 1 && sign != -1) throw InputError("signs must be +1 or -1");
      s[u][v] = sign == -1 ? 1 : 0;
    }
    for (int u = 0; u < 2 * n; ++u) {
      for (int v = 0; v < 2 * n; ++v) {
        if (u != v && (s[u][v] + s[v][u]) % 2 != gram(n, u, v) % 2) {
          throw InputError("sign matrix violates eps(x,y)eps(y,x) = (-1)^(x,y)");
        }
        if (u < n && v < n && s[u][v] != 0) {
          throw InputError("sign matrix must be trivial on the a-sublattice");
        }
      }
    }
    return {n, s};
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed epsilon file: ") + e.what());
  }
}

int EpsilonCocycle::operator()(const LatticeVector& x, const LatticeVector& y) const {
  const std::vector<int> cx = x.coords();
  const std::vector<int> cy = y.coords();
  long parity = 0;
  for (int u = 0; u < 2 * n_; ++u) {
    if (cx[u] == 0) continue;
    for (int v = 0; v < 2 * n_; ++v) {
      if (s_[u][v] != 0) parity += static_cast<long>(cx[u]) * cy[v];
    }
  }
  return (parity % 2 == 0) ? 1 : -1;
}

SignedExponential twisted_multiply(const EpsilonCocycle& eps, const LatticeVector& x, const LatticeVector& y) {
  return {eps(x, y), x + y};
}

}  // namespace toroidal
