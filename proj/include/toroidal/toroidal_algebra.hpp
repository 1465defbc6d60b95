#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <vector>

#include "toroidal/simple_lie.hpp"
#include "toroidal/sparse.hpp"

namespace toroidal {

enum class SymKind : std::uint8_t { G, K, D, D0, CVir };

/// Basis symbol of g_tau + Vir.
///   G:  g_index (x) t0^j t^m
///   K:  t0^j t^m k_index,  index in 0..N
///   D:  t0^j t^m d_index,  index in 1..N
///   D0: t0^j d0           (m empty)
///   CVir
struct Symbol {
  SymKind kind = SymKind::CVir;
  int index = 0;
  int j = 0;
  std::vector<int> m;

  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;

  static Symbol g(int g_index, int j, std::vector<int> m) { return {SymKind::G, g_index, j, std::move(m)}; }
  static Symbol k(int i, int j, std::vector<int> m) { return {SymKind::K, i, j, std::move(m)}; }
  static Symbol d(int s, int j, std::vector<int> m) { return {SymKind::D, s, j, std::move(m)}; }
  static Symbol d0(int n) { return {SymKind::D0, 0, n, {}}; }
  static Symbol cvir() { return {SymKind::CVir, 0, 0, {}}; }
};

using ToroidalElement = SparseVec<Symbol>;

struct CocycleParams {
  Rational mu;
  Rational nu;
  Rational rho;
};

inline ToroidalElement element(const Symbol& s, const Rational& c = Rational(1)) {
  if (c.is_zero()) return {};
  return {{s, c}};
}

class ToroidalAlgebra {
 public:
  ToroidalAlgebra(SimpleLieAlgebraSpec lie, int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const SimpleLieAlgebraSpec& lie() const { return lie_; }

  /// Rewrites K(p*, m^) with p* the first nonzero entry of m^ = (j, m) through
  /// sum_p m^_p K(p, m^) = 0. Idempotent.
  [[nodiscard]] ToroidalElement canonicalize(const ToroidalElement& x) const;

  /// Bilinear bracket; inputs are canonicalized first, output is canonical.
  [[nodiscard]] ToroidalElement bracket(const ToroidalElement& x, const ToroidalElement& y,
                                        const CocycleParams& p) const;
  [[nodiscard]] ToroidalElement bracket(const Symbol& a, const Symbol& b, const CocycleParams& p) const;

  /// (j, m) for G/K/D, (n, 0) for D0, 0 for CVir.
  [[nodiscard]] std::vector<int> grade(const Symbol& s) const;

  /// [[x,y],z] + [[y,z],x] + [[z,x],y].
  [[nodiscard]] ToroidalElement jacobi_residual(const ToroidalElement& x, const ToroidalElement& y,
                                                const ToroidalElement& z, const CocycleParams& p) const;

  /// Structural validation: exponent arity, index ranges. Throws InputError.
  void validate(const Symbol& s) const;

 private:
  [[nodiscard]] ToroidalElement raw_bracket(const Symbol& a, const Symbol& b, const CocycleParams& p) const;

  SimpleLieAlgebraSpec lie_;
  int n_;
};

/// Uniform random basis symbol with exponents in [-range, range], canonicalized
/// representative chosen among non-eliminated K indices.
Symbol random_symbol(std::mt19937_64& rng, const ToroidalAlgebra& alg, int range, bool with_vir = true);
/// Rational with numerator in [-9, 9] and denominator in [1, 9].
Rational random_rational(std::mt19937_64& rng);

}  // namespace toroidal
