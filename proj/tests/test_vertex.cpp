#include <catch_amalgamated.hpp>

#include "toroidal/vertex.hpp"

using namespace toroidal;

namespace {

ModuleSpec default_spec(int depth = 3) {
  return vacuum_spec(builtin_sl(2), 2, Rational(1), Rational(3), Rational(2), depth, 1);
}

FullVec single(const FullState& u, const Rational& c = Rational(1)) { return {{u, c}}; }

}  // namespace

TEST_CASE("spec validation") {
  auto s = default_spec();
  CHECK_NOTHROW(validate(s));
  s.c = Rational(-2);
  CHECK_THROWS_AS(validate(s), InputError);
  s = default_spec();
  s.c1 = Rational(-2);
  CHECK_THROWS_AS(validate(s), InputError);
  s = default_spec();
  s.c2 = Rational(0);
  s.c3 = Rational(1);
  CHECK_THROWS_AS(validate(s), InputError);
  s = default_spec();
  s.eps = EpsilonCocycle::standard(3);
  CHECK_THROWS_AS(validate(s), InputError);
}

TEST_CASE("rank and assignment") {
  Engine e(default_spec());
  // 3/(1+2) + 4 + 3*3/5 + 1
  CHECK(e.rank() == Rational(39, 5));
  const auto cv = e.assignment(Symbol::cvir());
  CHECK(cv.field.kind == FieldRef::Kind::Scalar);
  CHECK(cv.coef == Rational(39, 5));
  const auto d0 = e.assignment(Symbol::d0(3));
  CHECK(d0.field.kind == FieldRef::Kind::L);
  CHECK(d0.mode == 3);
  CHECK(d0.coef == Rational(-1));
  Engine z(vacuum_spec(builtin_sl(2), 2, Rational(2), Rational(1), Rational(0)));
  // 6/4 + 4 + 1
  CHECK(z.rank() == Rational(13, 2));
  CHECK(z.factor(kHeis).collapsed());
}

TEST_CASE("L(0) measures weight") {
  Engine e(default_spec());
  const FieldId l = e.field(FieldRef::virasoro());
  const auto states = e.states({true, true, true, true}, 3, 1);
  REQUIRE(states.size() > 100);
  for (const auto& u : states) CHECK(e.mode(l, 0, u) == scaled(single(u), Rational(e.weight(u))));
}

TEST_CASE("Virasoro brackets on the vacuum") {
  Engine e(vacuum_spec(builtin_sl(2), 2, Rational(2), Rational(1), Rational(1), 3, 1));
  const FieldId l = e.field(FieldRef::virasoro());
  const FullVec vac = single(e.base_state({0, 0}));
  // L(2) L(-2) vac = (rank / 2) vac with rank = 15/2
  CHECK(e.mode(l, 2, e.mode(l, -2, vac)) == FullVec{{e.base_state({0, 0}), Rational(15, 4)}});
  CHECK(e.mode(l, -1, vac).empty());
  // [L(1), L(-2)] = 3 L(-1) on e^{a1}
  const FullVec x = single(e.base_state({1, 0}));
  FullVec lhs = e.mode(l, 1, e.mode(l, -2, x));
  add_scaled(lhs, e.mode(l, -2, e.mode(l, 1, x)), Rational(-1));
  CHECK(lhs == scaled(e.mode(l, -1, x), Rational(3)));
}

TEST_CASE("K0 and G modes on lattice tops") {
  Engine e(default_spec());
  const FullVec u = single(e.base_state({0, 1}));
  const FullVec k0 = e.mode(FieldRef::k0({1, -1}), 0, u);
  CHECK(k0 == single(e.base_state({1, 0}), Rational(1)));
  const LieElement h = e.spec().alg.basis(e.spec().alg.index_of("h"));
  CHECK(e.mode(FieldRef::gfield(h, {1, 0}), 0, u).empty());
  // g(-1) e^m with m = 0 at mode -1 is h(-1) on the vacuum
  const FullVec gh = e.mode(FieldRef::gfield(h, {0, 0}), -1, single(e.base_state({0, 0})));
  REQUIRE(gh.size() == 1);
  CHECK(e.weight(gh[0].first) == 1);
}

TEST_CASE("saturation above the cap") {
  Engine e(default_spec(2));
  const FieldId l = e.field(FieldRef::virasoro());
  const auto states = e.states({true, true, true, true}, 2, 0);
  const FullState top = states.back();
  REQUIRE(e.weight(top) == 2);
  CHECK_THROWS_AS(e.mode(l, -1, top), SaturationError);
  CHECK(e.mode(l, 3, top).empty());
}

TEST_CASE("n-th products on the vacuum engine") {
  Engine e(default_spec());
  const auto& alg = e.spec().alg;
  std::array<SparseVec<StateId>, kSlots> ep, fp;
  ep[kAffine] = e.slot_word(kAffine, {{alg.basis(alg.index_of("e")), 1}});
  fp[kAffine] = e.slot_word(kAffine, {{alg.basis(alg.index_of("f")), 1}});
  const WordVec ew = e.tensor(ep), fw = e.tensor(fp), vac = e.tensor({});
  // e(-1)_(1) f(-1) = c vac, e(-1)_(0) f(-1) = h(-1)
  CHECK(e.nth_product(ew, 1, fw) == scaled(vac, e.spec().c));
  std::array<SparseVec<StateId>, kSlots> hp;
  hp[kAffine] = e.slot_word(kAffine, {{alg.basis(alg.index_of("h")), 1}});
  CHECK(e.nth_product(ew, 0, fw) == e.tensor(hp));
  CHECK(e.nth_product(ew, -1, vac) == ew);
  CHECK(e.as_words(e.as_states(ew)) == ew);
  CHECK(e.word_weight(ew.front().first) == 1);
}

TEST_CASE("field labels are interned") {
  Engine e(default_spec());
  const auto before = e.field_count();
  const FieldId a = e.field(FieldRef::d(1, {1, 0}));
  const FieldId b = e.field(FieldRef::d(1, {1, 0}));
  CHECK(a == b);
  CHECK(e.field_count() == before + 1);
  CHECK_THROWS_AS(e.field(FieldRef::k(3, {0, 0})), InputError);
  CHECK_THROWS_AS(e.field(FieldRef::k0({0})), InputError);
}
