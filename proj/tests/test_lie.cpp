#include <gtest/gtest.h>

#include <random>

#include "heaplie/lie.hpp"
#include "heaplie/search.hpp"
#include "oracles.hpp"

using namespace heaplie;

namespace {

LieTernary ternary(const std::vector<int>& orders, const std::function<Elem(Elem, Elem, Elem)>& f) {
  const auto g = AbelianGroup::cyclic_product(orders);
  const std::size_t n = g.order();
  std::vector<Elem> br(n * n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) br[(a * n + b) * n + c] = f(a, b, c);
  return LieTernary::make(heap_from_group(g), br);
}

// The Lie algebra [e1, e2] = e2 over F_p as a Lie affebra with origin 0.
LieAffebra two_dim_algebra(int p) {
  const auto s = affine_from_vector_action(p, 2);
  const auto& g = s.heap.group();
  std::vector<Elem> br(s.size() * s.size());
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y) {
      const auto u = g.digits(x), v = g.digits(y);
      br[x * s.size() + y] = g.encode(std::vector<int>{0, ((u[0] * v[1] - u[1] * v[0]) % p + p) % p});
    }
  return LieAffebra::make(s, 0, br);
}

}  // namespace

TEST(LieTruss, AdditionFailsNilpotency) {
  const auto l = ternary({2}, [](Elem a, Elem b, Elem) { return (a + b) % 2; });
  const auto rep = validate_lie_truss(l);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].axiom, "aa");
  EXPECT_EQ(rep.violations[0].witness, (std::vector<Elem>{1, 0}));
}

TEST(LieTruss, KnownBracketsOnTwoPoints) {
  const auto mid = ternary({2}, [](Elem, Elem b, Elem) { return b; });
  const auto sum = ternary({2}, [](Elem a, Elem b, Elem c) { return (a + b + c) % 2; });
  for (const auto* l : {&mid, &sum}) {
    EXPECT_TRUE(validate_lie_truss(*l).ok());
    EXPECT_TRUE(validate_strong_jacobi(*l).ok());
  }
}

TEST(LieTruss, ValidatorsAgreeWithOracleOnPerturbations) {
  std::mt19937 rng(5);
  for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}}) {
    SearchSpec spec;
    spec.group = AbelianGroup::cyclic_product(orders);
    spec.up_to_iso = true;
    const auto brackets = enumerate_lie_brackets(spec).structures;
    const oracle::Cyclic og{orders};
    const std::size_t n = og.n();
    for (int trial = 0; trial < 60; ++trial) {
      auto l = brackets[rng() % brackets.size()];
      if (trial % 3 != 0) l.bracket[rng() % l.bracket.size()] = static_cast<Elem>(rng() % n);
      EXPECT_EQ(validate_lie_truss(l).ok(), oracle::is_lie_truss(og, l.bracket));
      EXPECT_EQ(validate_strong_jacobi(l).ok(), oracle::strong_jacobi(og, l.bracket));
      auto serial = SweepOptions::all();
      serial.execution = Execution::serial;
      EXPECT_EQ(validate_lie_truss(l, serial), validate_lie_truss(l, SweepOptions::all()));
      EXPECT_EQ(validate_strong_jacobi(l, serial), validate_strong_jacobi(l, SweepOptions::all()));
    }
  }
}

TEST(LieTruss, StrongSweepRefusesLargeCarriers) {
  const auto l = ternary({33}, [](Elem, Elem b, Elem) { return b; });
  EXPECT_THROW(validate_strong_jacobi(l), Error);
}

TEST(LieTruss, BracketFromNoncommutativeTruss) {
  const auto t = upper_triangular_f2();
  const auto l = bracket_from_truss(t);
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b)
      for (Elem c = 0; c < 8; ++c)
        EXPECT_EQ(l(a, b, c), t.heap.op(t.multiply(a, c), t.multiply(c, a), b));
  EXPECT_TRUE(validate_lie_truss(l).ok());
  EXPECT_TRUE(validate_strong_jacobi(l).ok());
  EXPECT_TRUE(oracle::strong_jacobi(oracle::Cyclic{{2, 2, 2}}, l.bracket));
}

TEST(LieTruss, DerivationBracketOnZ4Sum) {
  const auto g = AbelianGroup::cyclic_product({4});
  std::vector<Elem> mul(16);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) mul[a * 4 + b] = (a + b) % 4;
  const auto t = TrussStructure::make(heap_from_group(g), mul);
  std::vector<ElementMap> ds;
  for (Elem k = 0; k < 4; ++k) {
    ElementMap d(4);
    for (Elem x = 0; x < 4; ++x) d[x] = k * x % 4;
    ds.push_back(d);
  }
  const auto der = derivations_lie_truss(t, ds);
  EXPECT_EQ(der.lie.size(), 4u);
  EXPECT_TRUE(validate_lie_truss(der.lie).ok());
  EXPECT_TRUE(validate_strong_jacobi(der.lie).ok());
  // The set is not closed once a map is dropped.
  ds.pop_back();
  EXPECT_THROW(derivations_lie_truss(t, ds), Error);
}

TEST(LieAffebra, AlgebraRoundTripThroughTernary) {
  for (int p : {3, 5}) {
    const auto alg = two_dim_algebra(p);
    ASSERT_TRUE(validate_lie_affebra(alg).ok());
    const auto tern = affebra_to_ternary(alg);
    EXPECT_TRUE(validate_lie_truss(tern).ok());
    EXPECT_EQ(ternary_to_affebra(tern, 0).bracket, alg.bracket);
    for (Elem o = 1; o < tern.size(); ++o) EXPECT_TRUE(validate_lie_affebra(ternary_to_affebra(tern, o)).ok());
  }
}

TEST(LieAffebra, LinearizedBracketIsLinear) {
  const auto alg = two_dim_algebra(3);
  const VectorSpaceView V{alg.affine, 0};
  for (Elem c = 0; c < 9; ++c)
    for (Elem u = 0; u < 9; ++u)
      for (Elem v = 0; v < 9; ++v)
        EXPECT_EQ(linearized_bracket(alg, V.add(u, v), c),
                  V.add(linearized_bracket(alg, u, c), linearized_bracket(alg, v, c)));
}

TEST(LieAffebra, SymmetricBracketFailsAntisymmetry) {
  auto alg = two_dim_algebra(3);
  const auto& g = alg.affine.heap.group();
  for (Elem x = 0; x < 9; ++x)
    for (Elem y = 0; y < 9; ++y) alg.bracket[x * 9 + y] = g.add(x, y);
  const auto rep = validate_lie_affebra(alg);
  ASSERT_FALSE(rep.ok());
}

TEST(LieAffebra, CharacteristicTwoSentinel) {
  const auto line = affine_from_vector_action(2, 1);
  const auto constant = LieAffebra::make(line, 0, {1, 1, 1, 1});
  EXPECT_TRUE(validate_lie_affebra(constant).ok());
  try {
    affebra_to_ternary(constant);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::hypothesis);
  }
  const auto forced = affebra_to_ternary(constant, true);
  const auto rep = validate_lie_truss(forced);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations[0].axiom, "aa");
}

TEST(LieRing, RetractsOfEnumeratedBrackets) {
  for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
    SearchSpec spec;
    spec.group = AbelianGroup::cyclic_product(orders);
    spec.up_to_iso = orders.size() > 1;
    const oracle::Cyclic og{orders};
    for (const auto& l : enumerate_lie_brackets(spec).structures)
      for (Elem o = 0; o < l.size(); ++o) {
        const auto r = retract_lie_ring(l, o);
        EXPECT_EQ(r.group.zero(), o);
        EXPECT_TRUE(validate_lie_ring(r).ok());
        EXPECT_TRUE(oracle::retract_is_lie_ring(og, l.bracket, o));
      }
  }
}

TEST(LieRing, BrokenRingReportsAlternation) {
  const auto g = AbelianGroup::cyclic_product({3});
  LieRingView r{g, std::vector<Elem>(9, 0), std::nullopt};
  r.bracket[1 * 3 + 1] = 2;
  const auto rep = validate_lie_ring(r, SweepOptions::all());
  EXPECT_TRUE(rep.has("lr.alt"));
}

TEST(Strengthen, TrivialBracketIsFixed) {
  const auto mid = ternary({2, 2}, [](Elem, Elem b, Elem) { return b; });
  for (Elem o = 0; o < 4; ++o) EXPECT_EQ(strengthen_bracket(mid, o).bracket, mid.bracket);
}

TEST(Strengthen, IdempotentAndStrong) {
  SearchSpec spec;
  spec.group = AbelianGroup::cyclic_product({2, 2});
  spec.up_to_iso = true;
  const auto weak = search_weak_not_strong(spec);
  ASSERT_FALSE(weak.empty());
  for (std::size_t i = 0; i < weak.size(); i += 17)
    for (Elem o = 0; o < 4; ++o) {
      const auto s = strengthen_bracket(weak[i].bracket, o);
      EXPECT_TRUE(validate_lie_truss(s).ok());
      EXPECT_TRUE(validate_strong_jacobi(s).ok());
      EXPECT_EQ(strengthen_bracket(s, o).bracket, s.bracket);
    }
}

TEST(Strengthen, LinearAffebraBracketsAreUnchanged) {
  // When {a, o} = o the ternary bracket b + {a, c} is already strong at o.
  const auto tern = affebra_to_ternary(two_dim_algebra(3));
  EXPECT_EQ(strengthen_bracket(tern, 0).bracket, tern.bracket);
}

TEST(LieTruss, CommutatorExamples) {
  // (a, b, c) encodes [[a, b], [0, c]]: E11 = 4, E12 = 2.
  const auto ut = bracket_from_truss(upper_triangular_f2());
  EXPECT_EQ(ut(4, 0, 2), 2u);
  SearchSpec spec;
  spec.group = AbelianGroup::cyclic_product({4});
  for (const auto& t : enumerate_trusses(spec).structures) {
    bool commutative = true;
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b) commutative = commutative && t.multiply(a, b) == t.multiply(b, a);
    if (!commutative) continue;
    const auto l = bracket_from_truss(t);
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b)
        for (Elem c = 0; c < 4; ++c) EXPECT_EQ(l(a, b, c), b);
  }
}

TEST(LieTruss, DerivationsOfTheTwoElementRing) {
  const auto g = AbelianGroup::cyclic_product({2});
  const auto t = truss_from_ring(g, {0, 0, 0, 1});
  const auto ds = enumerate_derivations(t);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0], (ElementMap{0, 1}));
  const auto der = derivations_lie_truss(t, ds);
  EXPECT_EQ(der.lie.size(), 1u);
  EXPECT_TRUE(validate_lie_truss(der.lie).ok());
}
