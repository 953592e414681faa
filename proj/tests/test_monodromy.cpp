#include <doctest.h>

#include <cmath>

#include "cubmono/error.hpp"
#include "cubmono/monodromy.hpp"

using namespace cubmono;
using C = std::complex<double>;

namespace {

const SurfaceData<double>& base() {
  static const auto s = analyze_surface(family_lambda<double>(C(0)));
  return s;
}

int flex_with_y(const FlexTrack<double>& t, C y) {
  for (int k = 1; k < 9; ++k)
    if (std::abs(t.base[k].y() / t.base[k].z() - y) < 1e-8) return k;
  return -1;
}

int root_index(const RootTrack<double>& t, C x) {
  for (int i = 0; i < 4; ++i)
    if (std::abs(t.base[i] - x) < 1e-8) return i;
  return -1;
}

const double kA = 1.4678898250138706;
const double kB = 1.3019113530593938;
const double kC = 0.39331989319032864;
const double kS = kB * (std::sqrt(3.0) - 1) / 2;

}  // namespace

TEST_CASE("loops") {
  const auto gm = Loop<double>::gamma_minus();
  const auto gp = Loop<double>::gamma_plus();
  CHECK(std::abs(gm(0)) < 1e-15);
  CHECK(std::abs(gm(1)) < 1e-14);
  CHECK(std::abs(gm(0.5) - C(-2)) < 1e-14);
  CHECK(std::abs(gp(0.5) - C(2)) < 1e-14);
  CHECK(loop_by_name<double>("gamma-plus").kind == LoopKind::GammaPlus);
  CHECK_THROWS_AS(loop_by_name<double>("gamma"), Error);
}

TEST_CASE("root permutations") {
  const auto gm = track_roots(Loop<double>::gamma_minus());
  const int ma = root_index(gm, C(-kA)), pa = root_index(gm, C(kA)), pc = root_index(gm, C(0, kC)),
            mc = root_index(gm, C(0, -kC));
  REQUIRE(ma >= 0);
  REQUIRE(pa >= 0);
  REQUIRE(pc >= 0);
  REQUIRE(mc >= 0);
  // -a -> ic -> -ic -> -a, +a fixed
  CHECK(gm.perm[ma] == pc);
  CHECK(gm.perm[pc] == mc);
  CHECK(gm.perm[mc] == ma);
  CHECK(gm.perm[pa] == pa);

  const auto gp = track_roots(Loop<double>::gamma_plus());
  // +a -> -ic -> ic -> +a, -a fixed
  CHECK(gp.perm[pa] == mc);
  CHECK(gp.perm[mc] == pc);
  CHECK(gp.perm[pc] == pa);
  CHECK(gp.perm[ma] == ma);

  const auto c = track_roots(Loop<double>::constant());
  CHECK(c.perm == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("root tracks stay on the roots of R_lambda") {
  const auto t = track_roots(Loop<double>::gamma_minus());
  const auto loop = Loop<double>::gamma_minus();
  for (int k = 0; k <= t.steps_used; k += 7) {
    const auto r = inflection_quartic<double>(loop(double(k) / t.steps_used));
    for (auto z : t.tracks[k]) CHECK(r.relative_residual(z) < 1e-9);
  }
}

TEST_CASE("flex permutations") {
  const auto gm = track_flexes(Loop<double>::gamma_minus());
  CHECK(gm.perm.is_bijective());
  CHECK(gm.perm[0] == 0);
  // -ib -> -b(1-i)(sqrt3-1)/2, +-b fixed
  CHECK(gm.perm[flex_with_y(gm, C(0, -kB))] == flex_with_y(gm, C(-kS, kS)));
  CHECK(gm.perm[flex_with_y(gm, C(kB))] == flex_with_y(gm, C(kB)));
  CHECK(gm.perm[flex_with_y(gm, C(-kB))] == flex_with_y(gm, C(-kB)));

  const auto gp = track_flexes(Loop<double>::gamma_plus());
  // b -> -b(1+i)(sqrt3-1)/2, +-ib fixed
  CHECK(gp.perm[flex_with_y(gp, C(kB))] == flex_with_y(gp, C(-kS, -kS)));
  CHECK(gp.perm[flex_with_y(gp, C(0, kB))] == flex_with_y(gp, C(0, kB)));
  CHECK(gp.perm[flex_with_y(gp, C(0, -kB))] == flex_with_y(gp, C(0, -kB)));

  CHECK(track_flexes(Loop<double>::constant()).perm == FlexPerm::identity());
}

TEST_CASE("flex permutations are pairs of 3-cycles over the root 3-cycle") {
  for (const auto& loop : {Loop<double>::gamma_minus(), Loop<double>::gamma_plus()}) {
    const auto t = track_flexes(loop);
    CHECK(cycle_notation({t.perm.images.begin(), t.perm.images.end()}).size() == 14);  // "(a b c)(d e f)"
    for (int k = 1; k < 9; ++k) {
      const int j = t.perm[t.perm[t.perm[k]]];
      CHECK(j == k);
    }
  }
}

TEST_CASE("lifting to lines") {
  CHECK(lift_to_lines(FlexPerm::identity()) == LinePerm::identity());
  const auto r = monodromy(Loop<double>::gamma_minus(), base());
  for (int i = 0; i < 3; ++i) CHECK(r.lines[i] == i);
  CHECK(r.lines.preserves(base().graph));
  CHECK(r.lines.preserves_triples());
}

TEST_CASE("monodromy matrices") {
  const auto& s = base();
  CHECK(monodromy_matrix(Loop<double>::constant(), s) == LatticeMap::identity());
  const auto omega = perm_to_lattice_map(deck_permutation(), s.classes, s.sixer);
  for (const auto& loop : {Loop<double>::gamma_minus(), Loop<double>::gamma_plus()}) {
    const auto m = monodromy_matrix(loop, s);
    CHECK(m.is_valid());
    CHECK(order(m) == 3);
    CHECK(m * omega == omega * m);
  }
}

TEST_CASE("step-halving stability") {
  const auto& s = base();
  for (const auto& loop : {Loop<double>::gamma_minus(), Loop<double>::gamma_plus()}) {
    TrackingConfig a, b, c;
    a.steps = 50;
    b.steps = 100;
    c.steps = 200;
    const auto ra = monodromy(loop, s, a), rb = monodromy(loop, s, b), rc = monodromy(loop, s, c);
    CHECK(ra.lines == rb.lines);
    CHECK(rb.lines == rc.lines);
    CHECK(ra.roots.perm == rc.roots.perm);
  }
}

TEST_CASE("ambiguous tracking is reported") {
  TrackingConfig cfg;
  cfg.steps = 8;
  cfg.max_refine = 0;
  try {
    track_roots(Loop<double>::gamma_minus(), cfg);
    FAIL("expected an ambiguity");
  } catch (const Error& e) {
    CHECK(is_numerical_ambiguity(e.kind()));
  }
}

TEST_CASE("too few steps are rejected") {
  TrackingConfig cfg;
  cfg.steps = 4;
  CHECK_THROWS_AS(track_roots(Loop<double>::gamma_minus(), cfg), Error);
}

TEST_CASE("loops through a singular parameter are rejected") {
  const auto bad = Loop<double>::custom("through-one", [](double t) { return C(std::sin(M_PI * t)); });
  CHECK_THROWS_AS(track_roots(bad), Error);
}

TEST_CASE("cycle notation") {
  CHECK(cycle_notation({0, 1, 2}) == "()");
  CHECK(cycle_notation({1, 2, 0, 3}) == "(0 1 2)");
  CHECK(cycle_notation({1, 0, 3, 2}) == "(0 1)(2 3)");
}

TEST_CASE("extended precision tracking agrees") {
  using L = long double;
  const auto sl = analyze_surface(family_lambda<L>(std::complex<L>(0)));
  for (const char* name : {"gamma-minus", "gamma-plus"}) {
    const auto a = monodromy(loop_by_name<double>(name), base());
    const auto b = monodromy(loop_by_name<L>(name), sl);
    CHECK(a.lines == b.lines);
    CHECK(a.matrix == b.matrix);
  }
}
