#include <gtest/gtest.h>

#include <numeric>

#include "heaplie/search.hpp"
#include "oracles.hpp"

using namespace heaplie;

namespace {

SearchSpec spec_for(const std::vector<int>& orders, SearchKind kind = SearchKind::truss, bool iso = false) {
  SearchSpec s;
  s.group = AbelianGroup::cyclic_product(orders);
  s.kind = kind;
  s.up_to_iso = iso;
  return s;
}

template <class S, class F>
std::vector<oracle::Table> tables(const std::vector<S>& xs, F field) {
  std::vector<oracle::Table> out;
  for (const auto& x : xs) out.push_back(field(x));
  std::sort(out.begin(), out.end());
  return out;
}

const auto mul_of = [](const TrussStructure& t) { return t.mul; };
const auto bracket_of = [](const LieTernary& l) { return l.bracket; };

TrussStructure on_z2(std::vector<Elem> mul) {
  return TrussStructure::make(heap_from_group(AbelianGroup::cyclic_product({2})), std::move(mul));
}

}  // namespace

TEST(Enumerate, TrussesMatchBruteForce) {
  for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
    const oracle::Cyclic og{orders};
    const auto brute = oracle::all_trusses(og);
    const auto mine = enumerate_trusses(spec_for(orders));
    EXPECT_EQ(tables(mine.structures, mul_of), brute) << og.n();
    EXPECT_EQ(mine.total, brute.size());
    EXPECT_EQ(enumerate_trusses(spec_for(orders, SearchKind::truss, true)).classes, oracle::orbit_count(og, brute, 2));

    std::vector<oracle::Table> rings;
    for (const auto& t : brute)
      if (oracle::is_ring(og, t)) rings.push_back(t);
    const auto mine_rings = enumerate_rings(spec_for(orders, SearchKind::ring));
    EXPECT_EQ(tables(mine_rings.structures, mul_of), rings);
    EXPECT_EQ(enumerate_rings(spec_for(orders, SearchKind::ring, true)).classes, oracle::orbit_count(og, rings, 2));
  }
}

TEST(Enumerate, KnownCounts) {
  struct Row {
    std::vector<int> orders;
    std::size_t trusses, truss_classes, rings, ring_classes;
  };
  for (const auto& r : std::vector<Row>{{{2}, 8, 5, 2, 2}, {{3}, 14, 5, 3, 2}, {{4}, 26, 7, 4, 3}, {{2, 2}, 280, 23, 28, 8}}) {
    const auto t = enumerate_trusses(spec_for(r.orders, SearchKind::truss, true));
    EXPECT_EQ(t.total, r.trusses);
    EXPECT_EQ(t.classes, r.truss_classes);
    EXPECT_EQ(t.structures.size(), r.truss_classes);
    const auto g = enumerate_rings(spec_for(r.orders, SearchKind::ring, true));
    EXPECT_EQ(g.total, r.rings);
    EXPECT_EQ(g.classes, r.ring_classes);
  }
}

TEST(Enumerate, PropagationStrategyAgrees) {
  for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {5}, {6}}) {
    const auto g = AbelianGroup::cyclic_product(orders);
    EXPECT_EQ(truss_tables_by_propagation(g, false), tables(enumerate_trusses(spec_for(orders)).structures, mul_of));
    EXPECT_EQ(truss_tables_by_propagation(g, true),
              tables(enumerate_rings(spec_for(orders, SearchKind::ring)).structures, mul_of));
  }
}

TEST(Enumerate, EveryTrussGivesAStrongLieBracket) {
  for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}})
    for (const auto& t : enumerate_trusses(spec_for(orders)).structures) {
      const auto l = bracket_from_truss(t);
      EXPECT_TRUE(validate_lie_truss(l).ok());
      EXPECT_TRUE(validate_strong_jacobi(l).ok());
    }
}

TEST(Enumerate, LimitTruncatesListingOnly) {
  auto s = spec_for({2, 2});
  s.limit = 10;
  const auto e = enumerate_trusses(s);
  EXPECT_EQ(e.structures.size(), 10u);
  EXPECT_EQ(e.total, 280u);
  EXPECT_TRUE(e.truncated);
  const auto full = enumerate_trusses(spec_for({2, 2}));
  EXPECT_TRUE(std::equal(e.structures.begin(), e.structures.end(), full.structures.begin()));
}

TEST(Enumerate, WorkerCountDoesNotChangeOutput) {
  for (auto kind : {SearchKind::truss, SearchKind::ring, SearchKind::lie_truss})
    for (bool iso : {false, true}) {
      auto one = spec_for({2, 2}, kind, iso), four = one;
      four.workers = 4;
      if (kind == SearchKind::lie_truss) {
        const auto a = enumerate_lie_brackets(one), b = enumerate_lie_brackets(four);
        EXPECT_EQ(a.structures, b.structures);
        EXPECT_EQ(a.classes, b.classes);
      } else {
        const auto a = kind == SearchKind::ring ? enumerate_rings(one) : enumerate_trusses(one);
        const auto b = kind == SearchKind::ring ? enumerate_rings(four) : enumerate_trusses(four);
        EXPECT_EQ(a.structures, b.structures);
        EXPECT_EQ(a.classes, b.classes);
      }
    }
}

TEST(Enumerate, PresentationOrderDoesNotChangeCounts) {
  for (auto [x, y] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{{{2, 3}, {3, 2}}, {{2, 4}, {4, 2}}}) {
    const auto a = enumerate_trusses(spec_for(x, SearchKind::truss, true));
    const auto b = enumerate_trusses(spec_for(y, SearchKind::truss, true));
    EXPECT_EQ(a.total, b.total);
    EXPECT_EQ(a.classes, b.classes);
    const auto c = enumerate_rings(spec_for(x, SearchKind::ring, true));
    const auto d = enumerate_rings(spec_for(y, SearchKind::ring, true));
    EXPECT_EQ(c.classes, d.classes);
  }
}

TEST(Enumerate, BudgetsAndLimits) {
  auto expect_kind = [](auto&& f, ErrorKind k) {
    try {
      f();
      ADD_FAILURE() << "no error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), k) << e.what();
    }
  };
  expect_kind([] { enumerate_trusses(spec_for({2, 2, 2})); }, ErrorKind::budget);
  expect_kind([] { enumerate_lie_brackets(spec_for({3, 3}, SearchKind::lie_truss)); }, ErrorKind::budget);
  expect_kind([] { enumerate_trusses(spec_for({10})); }, ErrorKind::budget);
}

TEST(Canonical, SmallExamples) {
  const auto AND = on_z2({0, 0, 0, 1}), OR = on_z2({0, 1, 1, 1});
  EXPECT_EQ(canonical_form(AND), canonical_form(OR));
  const auto left = on_z2({0, 0, 1, 1}), right = on_z2({0, 1, 0, 1});
  EXPECT_NE(canonical_form(left), canonical_form(right));
  for (const auto& t : enumerate_trusses(spec_for({2, 2})).structures) {
    const auto form = canonical_form(t);
    const auto rep = TrussStructure::make(t.heap, std::vector<Elem>(form.begin(), form.end()));
    EXPECT_EQ(canonical_form(rep), form);
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  const auto g = AbelianGroup::cyclic_product({2, 2});
  const auto autos = heap_automorphisms(g);
  EXPECT_EQ(autos.size(), 24u);
  EXPECT_EQ(autos.size(), oracle::heap_automorphisms(oracle::Cyclic{{2, 2}}).size());
  for (const auto& t : enumerate_trusses(spec_for({2, 2})).structures) {
    const auto form = canonical_form(t);
    for (const auto& f : autos) {
      std::vector<Elem> moved(16);
      for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) moved[f[a] * 4 + f[b]] = f[t.multiply(a, b)];
      EXPECT_EQ(canonical_form(TrussStructure::make(t.heap, moved)), form);
    }
  }
}

TEST(Lie, BracketsMatchBruteForce) {
  EXPECT_EQ(oracle::lie_brackets_two_points(), oracle::lie_brackets_cyclic(2));
  for (int m : {2, 3, 4}) {
    const auto mine = enumerate_lie_brackets(spec_for({m}, SearchKind::lie_truss));
    const auto brute = oracle::lie_brackets_cyclic(m);
    EXPECT_EQ(tables(mine.structures, bracket_of), brute) << m;
    EXPECT_EQ(enumerate_lie_brackets(spec_for({m}, SearchKind::lie_truss, true)).classes,
              oracle::orbit_count(oracle::Cyclic{{m}}, brute, 3));
  }
  EXPECT_EQ(enumerate_lie_brackets(spec_for({2}, SearchKind::lie_truss)).total, 4u);
}

TEST(Lie, KleinFourBracketsAreLieTrusses) {
  const oracle::Cyclic og{{2, 2}};
  const auto e = enumerate_lie_brackets(spec_for({2, 2}, SearchKind::lie_truss, true));
  EXPECT_EQ(e.total, 10720u);
  EXPECT_EQ(e.classes, 533u);
  for (const auto& l : e.structures) EXPECT_TRUE(oracle::is_lie_truss(og, l.bracket));
}

TEST(WeakNotStrong, NoneOnCyclicGroupsUpToFour) {
  for (int m : {2, 3, 4}) EXPECT_TRUE(search_weak_not_strong(spec_for({m}, SearchKind::lie_truss)).empty()) << m;
}

TEST(WeakNotStrong, KleinFourCounterexamples) {
  const oracle::Cyclic og{{2, 2}};
  const auto labelled = search_weak_not_strong(spec_for({2, 2}, SearchKind::lie_truss));
  EXPECT_EQ(labelled.size(), 6120u);
  const auto classes = search_weak_not_strong(spec_for({2, 2}, SearchKind::lie_truss, true));
  EXPECT_EQ(classes.size(), 276u);
  for (const auto& w : classes) {
    EXPECT_TRUE(oracle::is_lie_truss(og, w.bracket.bracket));
    EXPECT_FALSE(oracle::strong_jacobi(og, w.bracket.bracket));
    ASSERT_EQ(w.witness.witness.size(), 5u);
    EXPECT_NE(w.witness.lhs, w.witness.rhs);
    for (Elem o = 0; o < 4; ++o)
      EXPECT_TRUE(oracle::strong_jacobi(og, strengthen_bracket(w.bracket, o).bracket));
  }
}

TEST(Derivations, MatchBruteForce) {
  std::vector<TrussStructure> trusses;
  for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
    const auto all = enumerate_trusses(spec_for(orders)).structures;
    trusses.insert(trusses.end(), all.begin(), all.end());
  }
  for (auto orders : std::vector<std::vector<int>>{{5}, {6}, {2, 3}})
    for (const auto& t : enumerate_rings(spec_for(orders, SearchKind::ring)).structures) trusses.push_back(t);
  for (const auto& t : trusses) {
    const oracle::Cyclic og{t.heap.group().orders()};
    const auto brute = oracle::all_derivations(og, t.mul);
    const auto mine = enumerate_derivations(t);
    EXPECT_EQ(std::vector<oracle::Table>(mine.begin(), mine.end()), brute);
    ElementMap id(t.size());
    std::iota(id.begin(), id.end(), Elem{0});
    EXPECT_TRUE(std::find(mine.begin(), mine.end(), id) != mine.end());
  }
}

TEST(Derivations, SumOnZ4) {
  const auto g = AbelianGroup::cyclic_product({4});
  std::vector<Elem> mul(16);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) mul[a * 4 + b] = (a + b) % 4;
  const auto ds = enumerate_derivations(TrussStructure::make(heap_from_group(g), mul));
  ASSERT_EQ(ds.size(), 4u);
  for (Elem k = 0; k < 4; ++k)
    for (Elem x = 0; x < 4; ++x) EXPECT_EQ(ds[k][x], k * x % 4);
}
