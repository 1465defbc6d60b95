#include <catch_amalgamated.hpp>

#include <random>

#include "toroidal/lattice.hpp"

using namespace toroidal;

namespace {

LatticeVector unit(int n, int idx) {
  LatticeVector v = LatticeVector::zero(n);
  if (idx < n) {
    v.a[idx] = 1;
  } else {
    v.b[idx - n] = 1;
  }
  return v;
}

LatticeVector random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  LatticeVector v = LatticeVector::zero(n);
  for (int p = 0; p < n; ++p) {
    v.a[p] = d(rng);
    v.b[p] = d(rng);
  }
  return v;
}

bool cocycle_conditions(const EpsilonCocycle& eps, const LatticeVector& x, const LatticeVector& y,
                        const LatticeVector& z) {
  const int n = x.rank();
  const auto zero = LatticeVector::zero(n);
  const bool unit_ok = eps(x, zero) == 1 && eps(zero, x) == 1;
  const bool assoc = eps(x, y) * eps(x + y, z) == eps(y, z) * eps(x, y + z);
  const bool skew = eps(x, y) * eps(y, x) == (form(x, y) % 2 == 0 ? 1 : -1);
  return unit_ok && assoc && skew;
}

}  // namespace

TEST_CASE("hyperbolic form") {
  const int n = 2;
  CHECK(form(unit(n, 0), unit(n, 2)) == 1);
  CHECK(form(unit(n, 0), unit(n, 1)) == 0);
  CHECK(form(unit(n, 2), unit(n, 3)) == 0);
  CHECK(form(unit(n, 0), unit(n, 3)) == 0);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_vector(rng, 3);
    CHECK(form(x, x) % 2 == 0);
  }
}

TEST_CASE("default cocycle values") {
  const auto eps = EpsilonCocycle::standard(2);
  const auto a1 = unit(2, 0), a2 = unit(2, 1), b1 = unit(2, 2);
  CHECK(eps(a1, LatticeVector::zero(2)) == 1);
  CHECK(eps(a1, b1) * eps(b1, a1) == -1);
  CHECK(eps(a1, a2) == 1);
  const auto prod = twisted_multiply(eps, a1, a2);
  CHECK(prod.sign == 1);
  CHECK(prod.exponent == LatticeVector::plus({1, 1}));
  const auto id = twisted_multiply(eps, LatticeVector::zero(2), b1);
  CHECK(id.sign == 1);
  CHECK(id.exponent == b1);
}

TEST_CASE("cocycle identities exhaustive on basis triples and random triples") {
  std::mt19937_64 rng(314);
  for (int n = 1; n <= 3; ++n) {
    const auto eps = EpsilonCocycle::standard(n);
    std::vector<LatticeVector> basis;
    basis.push_back(LatticeVector::zero(n));
    for (int i = 0; i < 2 * n; ++i) basis.push_back(unit(n, i));
    for (const auto& x : basis) {
      for (const auto& y : basis) {
        for (const auto& z : basis) CHECK(cocycle_conditions(eps, x, y, z));
      }
    }
    for (int t = 0; t < 500; ++t) {
      CHECK(cocycle_conditions(eps, random_vector(rng, n), random_vector(rng, n), random_vector(rng, n)));
    }
  }
}

TEST_CASE("twisted product is associative") {
  std::mt19937_64 rng(8);
  const auto eps = EpsilonCocycle::standard(2);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_vector(rng, 2), y = random_vector(rng, 2), z = random_vector(rng, 2);
    const auto xy = twisted_multiply(eps, x, y);
    const auto left = twisted_multiply(eps, xy.exponent, z);
    const auto yz = twisted_multiply(eps, y, z);
    const auto right = twisted_multiply(eps, x, yz.exponent);
    CHECK(xy.sign * left.sign == yz.sign * right.sign);
    CHECK(left.exponent == right.exponent);
  }
}

TEST_CASE("sign matrix override") {
  // the opposite convention: a_p b_p gets the sign instead of b_p a_p
  const Json ok = {{"order", {"a1", "a2", "b1", "b2"}}, {"signs", {{"a1", "b1", -1}, {"a2", "b2", -1}}}};
  const auto eps = EpsilonCocycle::from_json(2, ok);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    CHECK(cocycle_conditions(eps, random_vector(rng, 2), random_vector(rng, 2), random_vector(rng, 2)));
  }
  CHECK(eps(unit(2, 0), unit(2, 2)) == -1);
  CHECK(eps(unit(2, 2), unit(2, 0)) == 1);

  const Json skew_broken = {{"order", {"a1", "a2", "b1", "b2"}}, {"signs", {{"a1", "b1", -1}}}};
  CHECK_THROWS_AS(EpsilonCocycle::from_json(2, skew_broken), InputError);
  const Json plus_twisted = {{"order", {"a1", "a2", "b1", "b2"}},
                             {"signs", {{"a1", "b1", -1}, {"a2", "b2", -1}, {"a1", "a2", -1}, {"a2", "a1", -1}}}};
  CHECK_THROWS_AS(EpsilonCocycle::from_json(2, plus_twisted), InputError);
  CHECK_THROWS_AS(EpsilonCocycle::from_json(2, Json{{"order", {"a1", "c2"}}}), InputError);
  CHECK(lattice_basis_index(2, "b2") == 3);
  CHECK(lattice_basis_index(2, "a3") == -1);
}
