#include <doctest.h>

#include "cubmono/error.hpp"
#include "cubmono/finite_group.hpp"
#include "cubmono/lattice.hpp"

using namespace cubmono;

namespace {

CohClass cls(std::initializer_list<int> v) {
  CohClass c{};
  int i = 0;
  for (int x : v) c[i++] = x;
  return c;
}

// Slot permutation on e1..e4 as a 7x7 permutation matrix.
LatticeMap slot_perm(std::array<int, 4> p) {
  std::array<CohClass, kRank> cols{};
  for (int i = 0; i < kRank; ++i) cols[i] = basis(i);
  for (int i = 0; i < 4; ++i) cols[1 + i] = basis(1 + p[i]);
  return LatticeMap::from_columns(cols);
}

const FiniteGroup<LatticeMap>& weyl() {
  static const auto w = [] {
    const auto g = weyl_generators();
    return FiniteGroup<LatticeMap>::closure({g.begin(), g.end()}, 60000);
  }();
  return w;
}

}  // namespace

TEST_CASE("intersection pairing") {
  CHECK(pairing(basis(0), basis(0)) == 1);
  for (int i = 1; i < kRank; ++i)
    for (int j = 1; j < kRank; ++j) CHECK(pairing(basis(i), basis(j)) == (i == j ? -1 : 0));
  // line through p1, p2 against the conic through p2..p6
  const auto l12 = cls({1, -1, -1, 0, 0, 0, 0});
  const auto c1 = cls({2, 0, -1, -1, -1, -1, -1});
  CHECK(pairing(l12, c1) == 1);
  CHECK(pairing(kCanonical, kCanonical) == 3);
  CHECK(pairing(l12, kCanonical) == -1);
  CHECK(pairing(l12, l12) == -1);
}

TEST_CASE("simple reflections") {
  const auto gens = weyl_generators();
  // s_{e1-e2} swaps slots 1 and 2
  CHECK(gens[0] == slot_perm({1, 0, 2, 3}));
  // s_{e0-e1-e2-e3}(e0) = 2e0 - e1 - e2 - e3
  CHECK(gens[5].apply(basis(0)) == cls({2, -1, -1, -1, 0, 0, 0}));
  for (const auto& s : gens) {
    CHECK(s * s == LatticeMap::identity());
    CHECK(s.is_valid());
    CHECK(order(s) == 2);
    const auto tc = trace_character(s);
    CHECK(tc.trace == 5);
    CHECK(tc.chi_v6 == 4);
  }
  for (const auto& r : simple_roots()) {
    CHECK(pairing(r, r) == -2);
    CHECK(pairing(r, kCanonical) == 0);
  }
}

TEST_CASE("identity invariants") {
  const auto id = LatticeMap::identity();
  const auto tc = trace_character(id);
  CHECK(tc.trace == 7);
  CHECK(tc.chi_v6 == 6);
  CHECK(order(id) == 1);
  const auto cp = id.char_poly();
  CHECK(cp == std::array<std::int64_t, 8>{-1, 7, -21, 35, -35, 21, -7, 1});
}

TEST_CASE("inverse through the form") {
  const auto gens = weyl_generators();
  const auto m = gens[0] * gens[5] * gens[2];
  CHECK(m * inverse(m) == LatticeMap::identity());
  CHECK(inverse(m) * m == LatticeMap::identity());
}

TEST_CASE("form violations are detected") {
  auto m = LatticeMap::identity();
  m(0, 0) = 2;
  CHECK_FALSE(m.preserves_form());
  const auto swap01 = [] {
    std::array<CohClass, kRank> cols{};
    for (int i = 0; i < kRank; ++i) cols[i] = basis(i);
    std::swap(cols[0], cols[1]);
    return LatticeMap::from_columns(cols);
  }();
  CHECK_FALSE(swap01.is_valid());
}

TEST_CASE("closure of small generating sets") {
  CHECK(FiniteGroup<LatticeMap>::closure({LatticeMap::identity()}).order() == 1);
  const auto s4 = FiniteGroup<LatticeMap>::closure({slot_perm({1, 0, 2, 3}), slot_perm({1, 2, 3, 0})});
  CHECK(s4.order() == 24);
  CHECK_THROWS_AS(FiniteGroup<LatticeMap>::closure({slot_perm({1, 0, 2, 3}), slot_perm({1, 2, 3, 0})}, 10), Error);
}

TEST_CASE("W(E6)" * doctest::timeout(60)) {
  const auto& w = weyl();
  CHECK(w.order() == 51840);
  for (const auto& x : w.elements()) REQUIRE(x.is_valid());
  const std::map<int, std::size_t> expected = {{1, 1},    {2, 891},  {3, 800},  {4, 5940},  {5, 5184},
                                               {6, 12960}, {8, 6480}, {9, 5760}, {10, 5184}, {12, 8640}};
  CHECK(census(w) == expected);
}

TEST_CASE("conjugacy classes and centralizers in W(E6)" * doctest::timeout(60)) {
  const auto& w = weyl();
  CHECK(conjugacy_class_size(LatticeMap::identity(), w) == 1);
  CHECK(centralizer(LatticeMap::identity(), w).order() == w.order());
  const auto gens = weyl_generators();
  for (const auto& x : {gens[0], gens[1] * gens[3], gens[0] * gens[5] * gens[2]}) {
    const auto n = conjugacy_class_size(x, w);
    CHECK(51840 % n == 0);
    const auto c = centralizer(x, w);
    CHECK(c.order() * n == 51840);
    CHECK(c.contains(x));
  }
  // reflections form a single class of 36
  CHECK(conjugacy_class_size(gens[0], w) == 36);
}

TEST_CASE("subgroup utilities") {
  const auto s4 = FiniteGroup<LatticeMap>::closure({slot_perm({1, 0, 2, 3}), slot_perm({1, 2, 3, 0})});
  const auto a4 = FiniteGroup<LatticeMap>::closure({slot_perm({1, 2, 0, 3}), slot_perm({0, 2, 3, 1})});
  const auto z2 = FiniteGroup<LatticeMap>::closure({slot_perm({1, 0, 2, 3})});
  const auto trivial = FiniteGroup<LatticeMap>::closure({LatticeMap::identity()});
  CHECK(a4.order() == 12);
  CHECK(is_normal(a4, s4));
  CHECK(is_normal(s4, s4));
  CHECK_FALSE(is_normal(z2, s4));
  CHECK(intersect(s4, s4).order() == 24);
  CHECK(intersect(s4, trivial).order() == 1);
  CHECK(intersect(a4, z2).order() == 1);
  CHECK(is_subset(a4, s4));
  CHECK_FALSE(is_subset(s4, a4));
  CHECK_THROWS_AS(is_normal(s4, a4), Error);
  CHECK(center(s4).size() == 1);
  CHECK_FALSE(is_abelian(s4));
  CHECK(is_abelian(z2));
  CHECK(same_elements(FiniteGroup<LatticeMap>::closure({slot_perm({1, 2, 3, 0}), slot_perm({1, 0, 2, 3})}), s4));
}
