#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toroidal/json_util.hpp"

namespace toroidal {

/// sum_p a_coords[p] a_p + b_coords[p] b_p in the hyperbolic lattice of rank 2N.
struct LatticeVector {
  std::vector<int> a;
  std::vector<int> b;

  static LatticeVector zero(int n) { return {std::vector<int>(n, 0), std::vector<int>(n, 0)}; }
  static LatticeVector plus(std::vector<int> a_coords) {
    const auto n = a_coords.size();
    return {std::move(a_coords), std::vector<int>(n, 0)};
  }
  [[nodiscard]] int rank() const { return static_cast<int>(a.size()); }
  /// Coordinates in the order a_1..a_N, b_1..b_N.
  [[nodiscard]] std::vector<int> coords() const;
  friend LatticeVector operator+(const LatticeVector& x, const LatticeVector& y);
  bool operator==(const LatticeVector&) const = default;
};

/// (a_p, b_q) = delta_pq, a's and b's isotropic.
int form(const LatticeVector& x, const LatticeVector& y);

/// Bimultiplicative sign: eps(x, y) = (-1)^(x^T S y) over the basis a_1..a_N, b_1..b_N.
class EpsilonCocycle {
 public:
  /// u > v in the basis order gets (-1)^((u,v)); everything else +1.
  static EpsilonCocycle standard(int n);
  /// {"order": [labels], "signs": [[u, v, +-1], ...]}; unlisted pairs are +1.
  /// Validated: eps(x,y)eps(y,x) = (-1)^((x,y)), and eps = 1 on the a-sublattice.
  static EpsilonCocycle from_json(int n, const Json& j);

  [[nodiscard]] int operator()(const LatticeVector& x, const LatticeVector& y) const;
  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] const std::vector<std::vector<int>>& sign_matrix() const { return s_; }

 private:
  EpsilonCocycle(int n, std::vector<std::vector<int>> s) : n_(n), s_(std::move(s)) {}
  int n_;
  std::vector<std::vector<int>> s_;  // 2N x 2N over {0,1}
};

/// e^x e^y = eps(x, y) e^(x+y).
struct SignedExponential {
  int sign;
  LatticeVector exponent;
};
SignedExponential twisted_multiply(const EpsilonCocycle& eps, const LatticeVector& x, const LatticeVector& y);

/// Basis label "a1".."aN", "b1".."bN" to coordinate index 0..2N-1; -1 if unknown.
int lattice_basis_index(int n, const std::string& label);

}  // namespace toroidal
