#include <doctest.h>

#include <cmath>

#include "cubmono/error.hpp"
#include "cubmono/plane_curves.hpp"

using namespace cubmono;
using C = std::complex<double>;
using F3 = CubicForm<double>;

namespace {

struct Term {
  int i, j;
  double c;
};

F3 cubic(std::initializer_list<Term> terms) {
  F3 f;
  for (const auto& t : terms) f.at(t.i, t.j) += t.c;
  return f;
}

template <int D>
bool same(const Form<double, D>& a, const Form<double, D>& b, double tol = 1e-12) {
  for (int t = 0; t < Form<double, D>::kSize; ++t)
    if (std::abs(a.coeffs[t] - b.coeffs[t]) > tol) return false;
  return true;
}

QuadraticForm<double> quad(std::initializer_list<Term> terms) {
  QuadraticForm<double> q;
  for (const auto& t : terms) q.at(t.i, t.j) += t.c;
  return q;
}

bool has_point(const std::vector<ProjPoint2<double>>& pts, const Point3<double>& p, double tol) {
  for (const auto& q : pts)
    if (projective_distance(q.c, p) < tol) return true;
  return false;
}

const double kMu = std::sqrt(3.0) + 1;

}  // namespace

TEST_CASE("family_lambda") {
  // y^2 z - x^3 + x z^2
  CHECK(same(family_lambda<double>(C(0)), cubic({{0, 2, 1}, {3, 0, -1}, {1, 0, 1}})));
  // y^2 z - x^3 + 2x^2 z + x z^2 - 2 z^3
  CHECK(same(family_lambda<double>(C(2)), cubic({{0, 2, 1}, {3, 0, -1}, {2, 0, 2}, {1, 0, 1}, {0, 0, -2}})));
  CHECK_THROWS_AS(family_lambda<double>(C(1)), Error);
  CHECK_THROWS_AS(family_lambda<double>(C(-1)), Error);
  try {
    family_lambda<double>(C(1));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularParameter);
  }
}

TEST_CASE("identify_family recognizes scalar multiples") {
  const auto m = identify_family(C(3) * family_lambda<double>(C(0.3, 0.1)));
  CHECK(m.family == CurveFamily::Lambda);
  CHECK(std::abs(m.parameter - C(0.3, 0.1)) < 1e-12);
  const auto h = identify_family(hesse_form<double>(C(kMu)));
  CHECK(h.family == CurveFamily::Hesse);
  CHECK(std::abs(h.parameter - kMu) < 1e-12);
}

TEST_CASE("gradient") {
  const auto g = gradient(family_lambda<double>(C(0)));
  CHECK(same(g[0], quad({{2, 0, -3}, {0, 0, 1}})));
  CHECK(same(g[1], quad({{0, 1, 2}})));
  CHECK(same(g[2], quad({{0, 2, 1}, {1, 0, 2}})));

  const auto gx = gradient(cubic({{3, 0, 1}}));
  CHECK(same(gx[0], quad({{2, 0, 3}})));
  CHECK(same(gx[1], quad({})));
  CHECK(same(gx[2], quad({})));

  const double l = 0.7;
  const auto gl = gradient(family_lambda<double>(C(l)));
  CHECK(same(gl[0], quad({{2, 0, -3}, {0, 0, 1}, {1, 0, 2 * l}})));
  CHECK(same(gl[1], quad({{0, 1, 2}})));
  CHECK(same(gl[2], quad({{0, 2, 1}, {2, 0, l}, {1, 0, 2}, {0, 0, -3 * l}})));
}

TEST_CASE("Hessian determinant") {
  // 8(3x(y^2 - xz) - z^3)
  CHECK(same(hessian_det_form(family_lambda<double>(C(0))), cubic({{1, 2, 24}, {2, 0, -24}, {0, 0, -8}}), 1e-9));
  CHECK(same(hessian_det_form(cubic({{3, 0, 1}, {0, 3, 1}, {0, 0, 1}})), cubic({{1, 1, 216}}), 1e-9));
  // On the Hesse curve the determinant agrees with 216(1 - mu^3)xyz, the two
  // differing by 54 mu^2 f_H.
  const auto fh = hesse_form<double>(C(kMu));
  const auto lhs = hessian_det_form(fh) + C(54 * kMu * kMu) * fh;
  CHECK(same(lhs, cubic({{1, 1, 216 * (1 - kMu * kMu * kMu)}}), 1e-9));
  // 8((3x - lz)(y^2 - xz + 3lz^2) - z(z + lx)^2), expanded by hand
  const double l = 0.4;
  const auto expected =
      cubic({{1, 2, 24}, {2, 0, -8 * l * l - 24}, {1, 0, 64 * l}, {0, 2, -8 * l}, {0, 0, -24 * l * l - 8}});
  CHECK(same(hessian_det_form(family_lambda<double>(C(l))), expected, 1e-9));
}

TEST_CASE("inflection points of the base curve") {
  const auto pts = inflection_points(family_lambda<double>(C(0)));
  REQUIRE(pts.size() == 9);
  CHECK(projective_distance(pts[0].c, Point3<double>{C(0), C(1), C(0)}) < 1e-12);
  const auto alphas = roots_of(Poly<double>({C(-1), C(0), C(-6), C(0), C(3)}), 1e-12);
  for (auto al : alphas) {
    const auto y = std::sqrt(al * al * al - al);
    CHECK(has_point(pts, {al, y, C(1)}, 1e-10));
    CHECK(has_point(pts, {al, -y, C(1)}, 1e-10));
  }
}

TEST_CASE("inflection points of the Hesse form") {
  const auto fh = hesse_form<double>(C(kMu));
  const auto pts = inflection_points(fh);
  REQUIRE(pts.size() == 9);
  CHECK(has_point(pts, {C(1), C(-1), C(0)}, 1e-10));
  CHECK(has_point(pts, {C(0), C(1), C(-1)}, 1e-10));
  for (const auto& p : pts) {
    const auto u = p.unit();
    CHECK(std::abs(fh(u)) < 1e-10);
    CHECK(std::abs(u[0] * u[1] * u[2]) < 1e-10);
  }
}

TEST_CASE("inflection points move continuously") {
  const auto p0 = inflection_points(family_lambda<double>(C(0)));
  const auto p1 = inflection_points(family_lambda<double>(C(0.05)));
  REQUIRE(p1.size() == 9);
  for (const auto& q : p1) {
    double best = 1e9;
    for (const auto& p : p0) best = std::min(best, std::abs(p.c[0] - q.c[0]) + std::abs(p.c[1] - q.c[1]));
    CHECK(best < 1e-1);
  }
}

TEST_CASE("resultant route agrees with the closed form") {
  for (C l : {C(0), C(0.3), C(0.2, -0.4)}) {
    const auto f = family_lambda<double>(l);
    const auto a = inflection_points(f);
    const auto b = inflection_points_general(f);
    REQUIRE(b.size() == 9);
    for (const auto& p : a) CHECK(has_point(b, p.c, 1e-9));
  }
}

TEST_CASE("tangent lines") {
  const auto t1 = tangent_line(hesse_form<double>(C(kMu)), ProjPoint2<double>::normalized({C(0), C(1), C(-1)}));
  CHECK(projective_distance(t1.covector, Point3<double>{C(kMu), C(1), C(1)}) < 1e-12);
  const auto t2 = tangent_line(family_lambda<double>(C(0)), ProjPoint2<double>::normalized({C(0), C(1), C(0)}));
  CHECK(projective_distance(t2.covector, Point3<double>{C(0), C(0), C(1)}) < 1e-12);
  const auto fermat = cubic({{3, 0, 1}, {0, 3, 1}, {0, 0, 1}});
  const auto t3 = tangent_line(fermat, ProjPoint2<double>::normalized({C(1), C(-1), C(0)}));
  CHECK(projective_distance(t3.covector, Point3<double>{C(1), C(1), C(0)}) < 1e-12);
}

TEST_CASE("compose_linear with the identity is the identity") {
  const auto f = family_lambda<double>(C(0.3));
  CHECK(same(compose_linear(f, Mat<double, 3>::identity()), f));
}
