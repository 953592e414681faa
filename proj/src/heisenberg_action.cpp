#include "cubmono/heisenberg_action.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cubmono/error.hpp"

namespace cubmono {

namespace {

// Deterministic sample points of P², away from any special configuration.
template <class R>
Point3<R> sample_point(int k) {
  return {Complex<R>(std::cos(R(1.3) * k + R(0.2)), std::sin(R(0.7) * k + R(0.1))),
          Complex<R>(std::sin(R(0.9) * k + R(1.0)), std::cos(R(1.1) * k)),
          Complex<R>(R(1) - R(0.05) * k, R(0.3) + R(0.02) * k)};
}

template <class R>
Mat<R, 4> inverse_or_throw(const Mat<R, 4>& m) {
  auto inv = inverse(m);
  if (!inv) throw Error(ErrorKind::InvalidInput, "projective map is singular");
  return *inv;
}

}  // namespace

template <class R>
R surface_map_residual(const ProjMap3<R>& m, const CubicForm<R>& src, const CubicForm<R>& tgt, int samples) {
  R worst = 0;
  for (int k = 0; k < samples; ++k) {
    const Point3<R> p = sample_point<R>(k);
    Vec<R, 4> v{p[0], p[1], p[2], principal_cbrt(src(p))};
    const R n = norm(v);
    for (auto& c : v) c /= n;
    const Vec<R, 4> img = m * v;
    const R in = norm(img);
    const Complex<R> r = img[3] * img[3] * img[3] - tgt(img[0], img[1], img[2]);
    worst = std::max(worst, std::abs(r) / (in * in * in * std::max(R(1), tgt.norm())));
  }
  return worst;
}

template <class R>
HesseTransform<R> hesse_transform(R tol) {
  const auto k = constants<R>();
  const R s3 = std::sqrt(R(3));
  const R a = k.a.real();
  const R q = std::pow((3 + 2 * s3) / 4, R(0.25));
  const Complex<R> i(0, 1);

  HesseTransform<R> t;
  t.a.a = {{{Complex<R>(1), Complex<R>(0), Complex<R>(-a)},
            {Complex<R>(-(s3 + 1) / 2), -i * q, Complex<R>(-a * (s3 - 1) / 2)},
            {Complex<R>(-(s3 + 1) / 2), i * q, Complex<R>(-a * (s3 - 1) / 2)}}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t.a_lift.a[r][c] = t.a.a[r][c];
  t.a_lift.a[3][3] = -k.eta;

  if (std::abs(determinant(t.a)) < tol) throw Error(ErrorKind::TransformResidual, "A is singular");

  const CubicForm<R> f = family_lambda<R>(Complex<R>(0));
  const CubicForm<R> fh = hesse_form<R>(k.mu);
  const Point3<R> p0 = sample_point<R>(0);
  t.scale = fh(t.a * p0) / f(p0);
  for (int s = 0; s < 10; ++s) {
    const Point3<R> p = sample_point<R>(s);
    const R n = norm(p);
    const Complex<R> r = fh(t.a * p) - t.scale * f(p);
    if (std::abs(r) > tol * n * n * n * std::abs(t.scale))
      throw Error(ErrorKind::TransformResidual, "A does not carry f to the Hesse form");
  }
  if (surface_map_residual(t.a_lift, f, fh) > tol)
    throw Error(ErrorKind::TransformResidual, "A' does not carry the surface to its Hesse model");
  return t;
}

template <class R>
HeisenbergLifts<R> heisenberg_lifts() {
  const Complex<R> w = constants<R>().omega;
  HeisenbergLifts<R> h;
  h.x.a[0][0] = Complex<R>(1);
  h.x.a[1][1] = w;
  h.x.a[2][2] = w * w;
  h.x.a[3][3] = Complex<R>(1);
  h.y.a[0][1] = Complex<R>(1);
  h.y.a[1][2] = Complex<R>(1);
  h.y.a[2][0] = Complex<R>(1);
  h.y.a[3][3] = Complex<R>(1);
  return h;
}

template <class R>
R line_distance(const Covector4<R>& g1, const Covector4<R>& g2, const Line3<R>& l) {
  const auto u = orthonormal_span(g1, g2);
  const auto v = orthonormal_span(l.h1, l.h2);
  R s = 0;
  for (const auto& ui : u) {
    Covector4<R> r = ui;
    for (const auto& vj : v) {
      const auto c = hdot(vj, ui);
      for (int k = 0; k < 4; ++k) r[k] -= c * vj[k];
    }
    s += norm(r) * norm(r);
  }
  return std::sqrt(s);
}

template <class R>
LinePerm induced_line_perm(const ProjMap3<R>& m, const std::vector<Line3<R>>& source,
                           const std::vector<Line3<R>>& target, R tol_match) {
  if (source.size() != kLines || target.size() != kLines)
    throw Error(ErrorKind::InvalidInput, "expected 27 source and 27 target lines");
  const Mat<R, 4> mi = inverse_or_throw(m);
  LinePerm p;
  for (int i = 0; i < kLines; ++i) {
    const Covector4<R> g1 = row_times(source[i].h1, mi);
    const Covector4<R> g2 = row_times(source[i].h2, mi);
    R best = std::numeric_limits<R>::max(), second = best;
    int arg = -1;
    for (int j = 0; j < kLines; ++j) {
      const R d = line_distance(g1, g2, target[j]);
      if (d < best) {
        second = best;
        best = d;
        arg = j;
      } else if (d < second) {
        second = d;
      }
    }
    if (!(best < tol_match) || !(second > 1000 * tol_match))
      throw Error(ErrorKind::NoUniqueMatch, "image of line " + std::to_string(i) + " has no certified match");
    p.images[i] = arg;
  }
  if (!p.is_bijective()) throw Error(ErrorKind::NoUniqueMatch, "matching is not a bijection");
  return p;
}

template <class R>
HeisenbergData<R> heisenberg_matrices(const SurfaceData<R>& base, const Tolerances& tol) {
  HeisenbergData<R> out;
  out.transform = hesse_transform<R>();
  const auto lifts = heisenberg_lifts<R>();
  const auto& ap = out.transform.a_lift;
  const Mat<R, 4> api = inverse_or_throw(ap);
  const R tm = R(tol.match);
  out.h1_perm = induced_line_perm(api * lifts.x * ap, base.lines, base.lines, tm);
  out.h2_perm = induced_line_perm(api * lifts.y * ap, base.lines, base.lines, tm);
  out.h1 = perm_to_lattice_map(out.h1_perm, base.classes, base.sixer);
  out.h2 = perm_to_lattice_map(out.h2_perm, base.classes, base.sixer);
  return out;
}

#define CUBMONO_INSTANTIATE(R)                                                                              \
  template R surface_map_residual<R>(const ProjMap3<R>&, const CubicForm<R>&, const CubicForm<R>&, int);   \
  template HesseTransform<R> hesse_transform<R>(R);                                                        \
  template HeisenbergLifts<R> heisenberg_lifts<R>();                                                       \
  template R line_distance<R>(const Covector4<R>&, const Covector4<R>&, const Line3<R>&);                  \
  template LinePerm induced_line_perm<R>(const ProjMap3<R>&, const std::vector<Line3<R>>&,                 \
                                         const std::vector<Line3<R>>&, R);                                 \
  template HeisenbergData<R> heisenberg_matrices<R>(const SurfaceData<R>&, const Tolerances&);

CUBMONO_INSTANTIATE(double)
CUBMONO_INSTANTIATE(long double)

#undef CUBMONO_INSTANTIATE

}  // namespace cubmono
