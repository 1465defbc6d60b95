#include <catch_amalgamated.hpp>

#include "toroidal/simple_lie.hpp"

using namespace toroidal;

namespace {

LieElement el(std::initializer_list<std::pair<int, Rational>> xs) {
  LieElement v(xs.begin(), xs.end());
  normalize(v);
  return v;
}

}  // namespace

TEST_CASE("builtin sl2 data") {
  const auto sl2 = builtin_sl(2);
  CHECK(sl2.dim == 3);
  CHECK(sl2.dual_coxeter == 2);
  const int e = sl2.index_of("e"), f = sl2.index_of("f"), h = sl2.index_of("h");
  CHECK(bracket_fin(sl2, sl2.basis(e), sl2.basis(f)) == sl2.basis(h));
  CHECK(bracket_fin(sl2, sl2.basis(h), sl2.basis(e)) == el({{e, Rational(2)}}));
  CHECK(bracket_fin(sl2, sl2.basis(h), el({{e, 1}, {f, 1}})) == el({{e, 2}, {f, -2}}));
  const LieElement x = el({{e, 3}, {h, Rational(1, 2)}});
  CHECK(bracket_fin(sl2, x, x).empty());
  CHECK(invariant_form(sl2, sl2.basis(e), sl2.basis(f)) == Rational(1));
  CHECK(invariant_form(sl2, sl2.basis(e), sl2.basis(e)) == Rational(0));
  CHECK(invariant_form(sl2, sl2.theta, sl2.theta) == Rational(2));
  CHECK_THROWS_AS(builtin_sl(1), InputError);
  CHECK_THROWS_AS(bracket_fin(sl2, el({{7, 1}}), x), std::out_of_range);
}

TEST_CASE("invariant checker passes on sl2, sl3, sl4") {
  for (int n : {2, 3, 4}) {
    const auto alg = builtin_sl(n);
    CHECK(alg.dim == n * n - 1);
    const auto rep = check_invariants(alg);
    INFO(n);
    CHECK(rep.ok());
  }
}

TEST_CASE("invariant checker catches a broken structure constant") {
  auto alg = builtin_sl(2);
  alg.structure_constants[0][1] = scaled(alg.structure_constants[0][1], Rational(2));
  const auto rep = check_invariants(alg);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.antisymmetric);
}

TEST_CASE("orthonormal basis and Casimir tensor") {
  for (int n : {2, 3}) {
    const auto alg = builtin_sl(n);
    const auto onb = orthonormal_basis(alg);
    REQUIRE(static_cast<int>(onb.size()) == alg.dim);
    for (std::size_t i = 0; i < onb.size(); ++i) {
      for (std::size_t j = 0; j < onb.size(); ++j) {
        QuadNumber s;
        for (int a = 0; a < alg.dim; ++a) {
          for (int b = 0; b < alg.dim; ++b) {
            if (!alg.form_matrix[a][b].is_zero()) s += onb[i][a] * onb[j][b] * QuadNumber(alg.form_matrix[a][b]);
          }
        }
        CHECK(s == QuadNumber(Rational(i == j ? 1 : 0)));
      }
    }
    // completeness: sum_i (x_i, y) x_i = y, i.e. C * Gram = 1
    const Matrix cas = casimir_tensor(onb);
    const Matrix prod = matmul(cas, alg.form_matrix);
    for (int a = 0; a < alg.dim; ++a) {
      for (int b = 0; b < alg.dim; ++b) CHECK(prod[a][b] == Rational(a == b ? 1 : 0));
    }
  }
}

TEST_CASE("degenerate form is rejected") {
  auto alg = builtin_sl(2);
  for (auto& row : alg.form_matrix) row.assign(row.size(), Rational(0));
  CHECK_THROWS_AS(orthonormal_basis(alg), std::domain_error);
}

TEST_CASE("sl elementary matrices") {
  const auto sl3 = builtin_sl(3);
  LieElement trace;
  for (int p = 1; p <= 3; ++p) add_scaled(trace, sl_elementary(sl3, p, p));
  CHECK(trace.empty());
  CHECK(sl_elementary(sl3, 1, 2) == sl3.basis(sl3.index_of("E12")));
  // [E12, E21] = E11 - E22
  LieElement diff = sl_elementary(sl3, 1, 1);
  add_scaled(diff, sl_elementary(sl3, 2, 2), Rational(-1));
  CHECK(bracket_fin(sl3, sl_elementary(sl3, 1, 2), sl_elementary(sl3, 2, 1)) == diff);
}

TEST_CASE("modules") {
  const auto sl2 = builtin_sl(2);
  CHECK(check_module(sl2, trivial_module(sl2)));
  CHECK(check_module(sl2, adjoint_module(sl2)));
  CHECK(check_module(sl2, natural_module(sl2)));
  const auto sl3 = builtin_sl(3);
  CHECK(check_module(sl3, natural_module(sl3)));
  CHECK(check_module(sl3, adjoint_module(sl3)));
  auto bad = natural_module(sl2);
  bad.action[0][0][1] = Rational(2);
  CHECK_FALSE(check_module(sl2, bad));
}

TEST_CASE("json round trip of structure constants") {
  const auto sl3 = builtin_sl(3);
  const auto back = lie_algebra_from_json(lie_algebra_to_json(sl3));
  CHECK(back.dim == sl3.dim);
  CHECK(back.structure_constants == sl3.structure_constants);
  CHECK(back.form_matrix == sl3.form_matrix);
  CHECK(back.theta == sl3.theta);
  CHECK(check_invariants(back).ok());
  Json natural = {{"name", "nat"}, {"dim", 2},
                  {"matrices", {{"e", {{0, 1}, {0, 0}}}, {"f", {{0, 0}, {1, 0}}}, {"h", {{1, 0}, {0, -1}}}}}};
  const auto sl2 = builtin_sl(2);
  CHECK(module_from_json(sl2, natural).dim == 2);
  natural["matrices"]["h"] = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(module_from_json(sl2, natural), InputError);
}
