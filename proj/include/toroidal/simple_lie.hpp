#pragma once

#include <string>
#include <vector>

#include "toroidal/json_util.hpp"
#include "toroidal/quadratic.hpp"
#include "toroidal/rational.hpp"
#include "toroidal/sparse.hpp"

namespace toroidal {

/// Sparse coordinates in a Lie algebra basis: index -> coefficient.
using LieElement = SparseVec<int>;
using Matrix = std::vector<std::vector<Rational>>;

struct SimpleLieAlgebraSpec {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::vector<LieElement>> structure_constants;  // [i][j] = [x_i, x_j]
  Matrix form_matrix;                                         // (x_i, x_j)
  int dual_coxeter = 0;
  LieElement theta;  // longest root, identified with its coroot through the form

  /// Throws InputError for an unknown label.
  [[nodiscard]] int index_of(const std::string& label) const;
  [[nodiscard]] LieElement basis(int i) const;
  /// sl_n builtins only: n (0 otherwise).
  int sl_rank = 0;
};

/// sl_n in the basis E_pq (p != q, lexicographic) then H_k = E_kk - E_{k+1,k+1};
/// trace form. For n = 2 the labels are e, f, h. Throws InputError for n < 2.
SimpleLieAlgebraSpec builtin_sl(int n);

/// Traceless part of gl_n: builtin_sl(n) for n >= 2, the zero algebra for n = 1.
SimpleLieAlgebraSpec traceless_gl(int n);

/// Builtin by name: "sl2", "sl3", ... Throws InputError otherwise.
SimpleLieAlgebraSpec builtin_algebra(const std::string& name);

/// psi_1(E_pq) for builtin sl_n: E_pq for p != q, the traceless part of E_pp otherwise.
LieElement sl_elementary(const SimpleLieAlgebraSpec& alg, int p, int q);

LieElement bracket_fin(const SimpleLieAlgebraSpec& alg, const LieElement& x, const LieElement& y);
Rational invariant_form(const SimpleLieAlgebraSpec& alg, const LieElement& x, const LieElement& y);

/// Gram-Schmidt with pivoting over the quadratic closure of Q. Each vector is
/// a list of dim coordinates. Throws std::domain_error for a degenerate form.
std::vector<std::vector<QuadNumber>> orthonormal_basis(const SimpleLieAlgebraSpec& alg);

/// sum_i x_i (x) x_i over an orthonormal basis, as a rational dim x dim matrix.
/// With a non-degenerate form this is the inverse Gram matrix.
Matrix casimir_tensor(const std::vector<std::vector<QuadNumber>>& onb);

struct LieInvariantReport {
  bool antisymmetric = true;
  bool jacobi = true;
  bool form_symmetric = true;
  bool form_invariant = true;
  bool form_nondegenerate = true;
  bool theta_normalized = true;
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Exhaustive check over basis pairs and triples.
LieInvariantReport check_invariants(const SimpleLieAlgebraSpec& alg);

SimpleLieAlgebraSpec lie_algebra_from_json(const Json& j);
Json lie_algebra_to_json(const SimpleLieAlgebraSpec& alg);

/// Finite-dimensional representation: one matrix per basis element.
struct LieModule {
  std::string name;
  int dim = 0;
  std::vector<Matrix> action;
};

LieModule trivial_module(const SimpleLieAlgebraSpec& alg);
LieModule adjoint_module(const SimpleLieAlgebraSpec& alg);
/// Defining representation of builtin sl_n.
LieModule natural_module(const SimpleLieAlgebraSpec& alg);
/// {"builtin": "trivial"|"adjoint"|"natural"} or {"name", "dim", "matrices": {label: rows}}.
LieModule module_from_json(const SimpleLieAlgebraSpec& alg, const Json& j);

/// Sum_i x_i * rho(basis i) applied as a matrix.
Matrix module_matrix(const LieModule& mod, const LieElement& x);
/// [rho(x_i), rho(x_j)] == rho([x_i, x_j]) for all basis pairs.
bool check_module(const SimpleLieAlgebraSpec& alg, const LieModule& mod, std::string* why = nullptr);

Matrix matmul(const Matrix& a, const Matrix& b);

}  // namespace toroidal
