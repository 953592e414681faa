#include <doctest.h>

#include <set>

#include "cubmono/error.hpp"
#include "cubmono/group_engine.hpp"

using namespace cubmono;

namespace {

using H = HeisenbergElt;
using S = SL2Z3Elt;
using E = SemidirectElt;

LatticeMap slot_perm(std::array<int, 6> p) {
  std::array<CohClass, kRank> cols{};
  cols[0] = basis(0);
  for (int i = 0; i < 6; ++i) cols[1 + i] = basis(1 + p[i]);
  return LatticeMap::from_columns(cols);
}

// Brute-force census of an explicitly listed group.
template <class T>
std::map<int, std::size_t> brute_census(const std::vector<T>& elems) {
  std::map<int, std::size_t> out;
  for (const auto& x : elems) {
    int k = 1;
    for (T y = x; !(y == T::identity()); y = y * x) ++k;
    ++out[k];
  }
  return out;
}

}  // namespace

TEST_CASE("Heisenberg group mod 3") {
  const auto h = FiniteGroup<H>::closure({H::make(1, 0, 0), H::make(0, 1, 0)});
  CHECK(h.order() == 27);
  const auto z = center(h);
  CHECK(z.size() == 3);
  for (const auto& x : h.elements()) CHECK(x * inverse(x) == H::identity());
  const auto a = H::make(1, 0, 0), b = H::make(0, 1, 0);
  CHECK(a * b * inverse(a) * inverse(b) == H::make(0, 0, 1));
}

TEST_CASE("SL2(Z/3)") {
  const auto all = S::all();
  CHECK(all.size() == 24);
  for (const auto& m : all) CHECK(m.det() == 1);
  CHECK(brute_census(all) == std::map<int, std::size_t>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
  const auto g = FiniteGroup<S>::closure({S::make(1, 0, 1, 1), S::make(1, 2, 0, 1)});
  CHECK(g.order() == 24);
  CHECK(census(g) == brute_census(all));
  const auto ev = identify_order24(g);
  CHECK(ev.kind == Order24Kind::SL2Z3);
  CHECK(ev.has_order4);
  CHECK(ev.has_order6);
  CHECK_FALSE(ev.sylow3_normal);
  CHECK_FALSE(is_normal(FiniteGroup<S>::closure({S::make(1, 0, 1, 1)}), g));
}

TEST_CASE("order-24 test doubles") {
  // S4 on slots 1..4
  const auto s4 = FiniteGroup<LatticeMap>::closure({slot_perm({1, 0, 2, 3, 4, 5}), slot_perm({1, 2, 3, 0, 4, 5})});
  std::map<int, std::size_t> s4_census{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  CHECK(census(s4) == s4_census);
  const auto ev = identify_order24(s4);
  CHECK(ev.kind == Order24Kind::S4);
  CHECK_FALSE(ev.has_order6);
  // A4 on slots 1..4 times the swap of slots 5, 6
  const auto a4z2 = FiniteGroup<LatticeMap>::closure(
      {slot_perm({1, 2, 0, 3, 4, 5}), slot_perm({0, 2, 3, 1, 4, 5}), slot_perm({0, 1, 2, 3, 5, 4})});
  CHECK(identify_order24(a4z2).kind == Order24Kind::A4xZ2);
  // only order 24 is accepted
  const auto small = FiniteGroup<LatticeMap>::closure({slot_perm({1, 0, 2, 3, 4, 5})});
  CHECK_THROWS_AS(identify_order24(small), Error);
}

TEST_CASE("phi action") {
  for (const auto& m : S::all()) {
    CHECK(phi_action(m, H::make(0, 0, 1)) == H::make(0, 0, 1));
    CHECK(phi_action(m, H::identity()) == H::identity());
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) CHECK(phi_action(S::identity(), H::make(a, b, c)) == H::make(a, b, c));
  // (a, b) part is the linear action; c picks up 2(a'b' - ab)
  CHECK(phi_action(S::make(1, 0, 1, 1), H::make(1, 0, 0)) == H::make(1, 1, 2));
  CHECK(phi_action_literal(S::make(1, 0, 1, 1), H::make(1, 0, 0)) == H::make(1, 1, 0));
  CHECK(count_automorphism_failures(phi_action) == 0);
  CHECK(count_action_failures(phi_action) == 0);
  CHECK(count_automorphism_failures(phi_action_literal) > 0);
}

TEST_CASE("semidirect model") {
  const auto elems = semidirect_elements();
  CHECK(elems.size() == 648);
  std::set<std::string> distinct;
  for (const auto& e : elems) distinct.insert(to_string(e));
  CHECK(distinct.size() == 648);

  const auto model = semidirect_model();
  CHECK(model.order() == 648);
  const auto z = center(model);
  CHECK(z.size() == 3);
  for (const auto& x : z) {
    CHECK(x.g == S::identity());
    CHECK(x.h.a == 0);
    CHECK(x.h.b == 0);
  }
  const E x{H::make(1, 1, 1), S::identity()};
  CHECK(element_order(x) == 3);
  CHECK(associativity_failures() == 0);
  for (const auto& e : elems) CHECK(e * inverse(e) == E::identity());
}

TEST_CASE("isomorphism checks on the model") {
  const auto model = semidirect_model();
  const auto gens = model.generators();
  const auto r = verify_isomorphism(model, gens);
  CHECK(r.edges_checked == 648 * gens.size());
  // swapping two generator images breaks the relations
  auto bad = gens;
  std::swap(bad[0], bad[1]);
  CHECK_FALSE(is_isomorphism(model, bad));
  try {
    verify_isomorphism(model, bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIsomorphic);
  }
  const auto s4 = FiniteGroup<LatticeMap>::closure({slot_perm({1, 0, 2, 3, 4, 5}), slot_perm({1, 2, 3, 0, 4, 5})});
  try {
    verify_isomorphism(s4, {E::identity(), E::identity()});
    FAIL("expected WrongOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongOrder);
  }
  const auto found = search_generator_images(model);
  REQUIRE(found.has_value());
  CHECK(is_isomorphism(model, {found->begin(), found->end()}));
}

TEST_CASE("relation variants") {
  RelationVariant v;
  CHECK(v.is_identity());
  CHECK(v.describe() == "as computed");
  v.swap_g = true;
  v.inv_h2 = true;
  CHECK(v.describe() == "swap G1/G2, invert H2");
  const auto gens = weyl_generators();
  const GeneratorSet s{gens[0], gens[1], gens[2], gens[3], gens[4]};
  const auto t = v.apply(s);
  CHECK(t.g1 == s.g2);
  CHECK(t.g2 == s.g1);
  CHECK(t.h2 == inverse(s.h2));
  CHECK(t.h1 == s.h1);
}
