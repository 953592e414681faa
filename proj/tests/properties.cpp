// Property suites: form preservation, the permutation-to-lattice homomorphism,
// the phi action, constant loops and step-halving stability.

#include <doctest.h>

#include <optional>
#include <unordered_set>

#include "cubmono/finite_group.hpp"
#include "cubmono/fixtures.hpp"
#include "cubmono/group_engine.hpp"
#include "cubmono/heisenberg_action.hpp"
#include "cubmono/monodromy.hpp"

using namespace cubmono;
using C = std::complex<double>;

namespace {

// LinePerm with the interface FiniteGroup expects; product is composition.
struct Perm {
  LinePerm p;
  static Perm identity() { return {LinePerm::identity()}; }
  friend Perm operator*(const Perm& a, const Perm& b) { return {compose(a.p, b.p)}; }
  friend bool operator==(const Perm&, const Perm&) = default;
};

}  // namespace

template <>
struct std::hash<Perm> {
  std::size_t operator()(const Perm& x) const noexcept {
    std::size_t h = 0;
    for (int v : x.p.images) h = h * 31 + static_cast<std::size_t>(v);
    return h;
  }
};

namespace {

const SurfaceData<double>& base() {
  static const auto s = analyze_surface(family_lambda<double>(C(0)));
  return s;
}

std::vector<LinePerm> generator_perms() {
  const auto h = heisenberg_matrices(base());
  return {h.h1_perm, h.h2_perm, monodromy(Loop<double>::gamma_minus(), base()).lines,
          monodromy(Loop<double>::gamma_plus(), base()).lines, deck_permutation()};
}

}  // namespace

TEST_CASE("every element of W(E6) preserves the form and fixes K") {
  const auto g = weyl_generators();
  const auto w = FiniteGroup<LatticeMap>::closure({g.begin(), g.end()}, 60000);
  REQUIRE(w.order() == 51840);
  std::size_t bad = 0;
  for (const auto& x : w.elements()) bad += !x.is_valid();
  CHECK(bad == 0);
}

TEST_CASE("every element generated from the printed maps preserves the form and fixes K") {
  const auto m = load_paper_matrices();
  const auto i = FiniteGroup<LatticeMap>::closure({m.h1, m.h2, m.g1, m.g2});
  REQUIRE(i.order() == 648);
  for (const auto& x : i.elements()) REQUIRE(x.is_valid());
}

TEST_CASE("permutation to lattice map is a homomorphism on the generated line group") {
  const auto& s = base();
  std::vector<Perm> gens;
  for (const auto& p : generator_perms()) gens.push_back({p});
  const auto g = FiniteGroup<Perm>::closure(gens);
  CHECK(g.order() == 648);
  std::vector<LatticeMap> images;
  for (const auto& x : g.elements()) {
    REQUIRE(x.p.preserves(s.graph));
    images.push_back(perm_to_lattice_map(x.p, s.classes, s.sixer));
    REQUIRE(images.back().is_valid());
  }
  // every Cayley edge x -> x*g, which determines all products
  std::size_t failures = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto j = *g.index_of(g[i] * gens[k]);
      failures += !(images[j] == images[i] * images[*g.index_of(gens[k])]);
    }
  CHECK(failures == 0);
  // injective: distinct permutations give distinct maps
  std::unordered_set<LatticeMap> distinct(images.begin(), images.end());
  CHECK(distinct.size() == g.order());
}

TEST_CASE("phi is an action by automorphisms") {
  CHECK(count_automorphism_failures(phi_action) == 0);
  CHECK(count_action_failures(phi_action) == 0);
  // phi_{MN} = phi_M o phi_N over all 27 elements and all pairs
  std::size_t checks = 0, failures = 0;
  for (const auto& m : SL2Z3Elt::all())
    for (const auto& n : SL2Z3Elt::all())
      for (int t = 0; t < 27; ++t) {
        const auto h = HeisenbergElt::make(t / 9, t / 3, t);
        ++checks;
        failures += !(phi_action(m * n, h) == phi_action(m, phi_action(n, h)));
      }
  CHECK(checks == 27 * 24 * 24);
  CHECK(failures == 0);
}

TEST_CASE("constant loop gives identities") {
  const auto r = monodromy(Loop<double>::constant(), base());
  CHECK(r.roots.perm == std::vector<int>{0, 1, 2, 3});
  CHECK(r.flexes.perm == FlexPerm::identity());
  CHECK(r.lines == LinePerm::identity());
  CHECK(r.matrix == LatticeMap::identity());
}

TEST_CASE("step-halving stability") {
  for (const char* name : {"gamma-minus", "gamma-plus"}) {
    std::optional<MonodromyResult<double>> prev;
    for (int n : {25, 50, 100, 200, 400}) {
      TrackingConfig cfg;
      cfg.steps = n;
      auto r = monodromy(loop_by_name<double>(name), base(), cfg);
      if (prev) {
        CHECK(r.roots.perm == prev->roots.perm);
        CHECK(r.flexes.perm == prev->flexes.perm);
        CHECK(r.matrix == prev->matrix);
      }
      prev = std::move(r);
    }
  }
}
