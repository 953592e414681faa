#include <doctest.h>

#include <cmath>

#include "cubmono/finite_group.hpp"
#include "cubmono/heisenberg_action.hpp"

using namespace cubmono;
using C = std::complex<double>;
using M4 = ProjMap3<double>;

namespace {

const SurfaceData<double>& base() {
  static const auto s = analyze_surface(family_lambda<double>(C(0)));
  return s;
}

bool is_scalar(const M4& m, double tol = 1e-12) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i != j && std::abs(m.a[i][j]) > tol) return false;
      if (std::abs(m.a[i][i] - m.a[0][0]) > tol) return false;
    }
  return std::abs(m.a[0][0]) > tol;
}

}  // namespace

TEST_CASE("Hesse transform") {
  const auto t = hesse_transform<double>();
  CHECK(std::abs(determinant(t.a)) > 1e-6);
  const auto k = constants<double>();
  const auto fh = hesse_form<double>(k.mu);
  // the image of [0:1:0] is a flex of f_H
  Point3<double> img{};
  for (int i = 0; i < 3; ++i) img[i] = t.a.a[i][1];
  bool found = false;
  for (const auto& p : inflection_points(fh)) found |= projective_distance(p.c, img) < 1e-9;
  CHECK(found);
  const auto f = family_lambda<double>(C(0));
  CHECK(surface_map_residual(t.a_lift, f, fh) < 1e-10);
  CHECK(surface_map_residual(M4::identity(), f, fh) > 1e-3);
  CHECK(std::abs(t.scale.real() - 19.3923) < 1e-4);
}

TEST_CASE("lifted translations") {
  const auto l = heisenberg_lifts<double>();
  CHECK(is_scalar(l.x * l.x * l.x));
  CHECK(is_scalar(l.y * l.y * l.y));
  const auto fh = hesse_form<double>(constants<double>().mu);
  CHECK(surface_map_residual(l.x, fh, fh) < 1e-12);
  CHECK(surface_map_residual(l.y, fh, fh) < 1e-12);
}

TEST_CASE("induced permutations") {
  const auto& s = base();
  CHECK(induced_line_perm(M4::identity(), s.lines, s.lines) == LinePerm::identity());
  const auto h = heisenberg_matrices(s);
  for (const auto* p : {&h.h1_perm, &h.h2_perm}) {
    CHECK(p->is_bijective());
    CHECK(p->preserves(s.graph));
    CHECK(p->preserves_triples());
    CHECK(compose(*p, compose(*p, *p)) == LinePerm::identity());
  }
  const auto comm = compose(compose(h.h1_perm, h.h2_perm), compose(inverse(h.h1_perm), inverse(h.h2_perm)));
  CHECK((comm == deck_permutation() || comm == inverse(deck_permutation())));
}

TEST_CASE("Heisenberg matrices") {
  const auto& s = base();
  const auto h = heisenberg_matrices(s);
  const auto omega = perm_to_lattice_map(deck_permutation(), s.classes, s.sixer);
  for (const auto& m : {h.h1, h.h2}) {
    CHECK(m.is_valid());
    CHECK(m * m * m == LatticeMap::identity());
    CHECK(m * omega == omega * m);
  }
  const auto g = FiniteGroup<LatticeMap>::closure({h.h1, h.h2});
  CHECK(g.order() == 27);
  const auto z = center(g);
  CHECK(z.size() == 3);
  const auto comm = h.h1 * h.h2 * inverse(h.h1) * inverse(h.h2);
  CHECK((comm == omega || comm == omega * omega));
}

TEST_CASE("extended precision Heisenberg matrices agree") {
  const auto sl = analyze_surface(family_lambda<long double>(std::complex<long double>(0)));
  const auto a = heisenberg_matrices(base());
  const auto b = heisenberg_matrices(sl);
  CHECK(a.h1 == b.h1);
  CHECK(a.h2 == b.h2);
}
