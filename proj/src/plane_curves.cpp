#include "cubmono/plane_curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cubmono/error.hpp"

namespace cubmono {

template <class R>
ProjPoint2<R> ProjPoint2<R>::normalized(const Point3<R>& p, R rel_zero) {
  const R n = norm(p);
  if (n == 0) throw Error(ErrorKind::InvalidInput, "the zero vector is not a projective point");
  ProjPoint2 out;
  Complex<R> s;
  if (std::abs(p[2]) > rel_zero * n)
    s = p[2];
  else if (std::abs(p[1]) > rel_zero * n)
    s = p[1];
  else
    s = p[0];
  for (int i = 0; i < 3; ++i) out.c[i] = p[i] / s;
  return out;
}

template <class R>
Point3<R> ProjPoint2<R>::unit() const {
  const R n = norm(c);
  Point3<R> u = c;
  for (auto& v : u) v /= n;
  return u;
}

template <class R>
CubicForm<R> family_lambda(Complex<R> lambda, R tol) {
  if (std::abs(lambda - R(1)) < tol || std::abs(lambda + R(1)) < tol)
    throw Error(ErrorKind::SingularParameter, "lambda = ±1 gives a singular cubic");
  CubicForm<R> f;
  f.at(0, 2) = 1;        // y²z
  f.at(3, 0) = -1;       // x³
  f.at(2, 0) = lambda;   // x²z
  f.at(1, 0) = 1;        // xz²
  f.at(0, 0) = -lambda;  // z³
  return f;
}

template <class R>
CubicForm<R> hesse_form(Complex<R> mu, R tol) {
  if (std::abs(mu * mu * mu - R(1)) < tol)
    throw Error(ErrorKind::SingularParameter, "mu³ = 1 gives a singular cubic");
  CubicForm<R> f;
  f.at(3, 0) = 1;
  f.at(0, 3) = 1;
  f.at(0, 0) = 1;
  f.at(1, 1) = R(-3) * mu;
  return f;
}

template <class R>
FamilyMatch<R> identify_family(const CubicForm<R>& f, R tol) {
  const R scale = f.norm();
  if (scale == 0) return {};
  auto near = [&](Complex<R> v, Complex<R> target) { return std::abs(v - target) <= tol; };

  if (const auto c = f.at(0, 2); std::abs(c) > tol * scale) {
    CubicForm<R> g = (R(1) / c) * f;
    const bool shape = near(g.at(3, 0), R(-1)) && near(g.at(1, 0), R(1)) &&
                       near(g.at(2, 1), R(0)) && near(g.at(1, 2), R(0)) && near(g.at(1, 1), R(0)) &&
                       near(g.at(0, 3), R(0)) && near(g.at(0, 1), R(0)) &&
                       near(g.at(0, 0), -g.at(2, 0));
    if (shape) return {CurveFamily::Lambda, g.at(2, 0)};
  }
  if (const auto c = f.at(3, 0); std::abs(c) > tol * scale) {
    CubicForm<R> g = (R(1) / c) * f;
    bool shape = near(g.at(0, 3), R(1)) && near(g.at(0, 0), R(1));
    for (auto [i, j] : {std::pair{2, 1}, {2, 0}, {1, 2}, {1, 0}, {0, 2}, {0, 1}})
      shape = shape && near(g.at(i, j), R(0));
    if (shape) return {CurveFamily::Hesse, -g.at(1, 1) / R(3)};
  }
  return {};
}

template <class R>
std::array<QuadraticForm<R>, 3> gradient(const CubicForm<R>& f) {
  return {f.partial(0), f.partial(1), f.partial(2)};
}

template <class R>
CubicForm<R> hessian_det_form(const CubicForm<R>& f) {
  std::array<std::array<LinearForm<R>, 3>, 3> h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = f.partial(i).partial(j);
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
         h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

template <class R>
Poly<R> inflection_quartic(Complex<R> lambda) {
  return Poly<R>({R(-1) - R(4) * lambda * lambda, R(12) * lambda, Complex<R>(-6), R(-4) * lambda,
                  Complex<R>(3)});
}

template <class R>
Complex<R> flex_y_squared(Complex<R> lambda, Complex<R> alpha) {
  return alpha * alpha * alpha - lambda * alpha * alpha - alpha + lambda;
}

template <class R>
void sort_points(std::vector<ProjPoint2<R>>& pts, R tie) {
  auto is_base = [tie](const ProjPoint2<R>& p) {
    return std::abs(p.z()) <= tie && std::abs(p.x()) <= tie && std::abs(p.y() - R(1)) <= tie;
  };
  auto key_less = [tie](R a, R b, int& verdict) {
    if (std::abs(a - b) <= tie) return false;
    verdict = a < b ? 1 : -1;
    return true;
  };
  std::stable_sort(pts.begin(), pts.end(), [&](const ProjPoint2<R>& p, const ProjPoint2<R>& q) {
    const bool bp = is_base(p), bq = is_base(q);
    if (bp != bq) return bp;
    int verdict = 0;
    if (key_less(p.y().real(), q.y().real(), verdict) || key_less(p.y().imag(), q.y().imag(), verdict) ||
        key_less(p.x().real(), q.x().real(), verdict) || key_less(p.x().imag(), q.x().imag(), verdict))
      return verdict > 0;
    return false;
  });
}

namespace {

template <class R>
void validate_flexes(const CubicForm<R>& f, std::vector<ProjPoint2<R>>& pts, const Tolerances& tol) {
  if (pts.size() != 9)
    throw Error(ErrorKind::DegenerateCurve, "expected 9 inflection points, found " + std::to_string(pts.size()));
  const CubicForm<R> h = hessian_det_form(f);
  const R fn = f.norm(), hn = h.norm();
  if (hn == 0) throw Error(ErrorKind::DegenerateCurve, "Hessian determinant vanishes identically");
  for (const auto& p : pts) {
    const auto u = p.unit();
    if (std::abs(f(u)) / fn > R(1e-8) || std::abs(h(u)) / hn > R(1e-8))
      throw Error(ErrorKind::DegenerateCurve, "inflection point fails the residual check");
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (projective_distance(pts[i].c, pts[j].c) <= R(10 * tol.match))
        throw Error(ErrorKind::DegenerateCurve, "inflection points are not isolated");
  sort_points(pts, R(1e-9));
}

// Fixed chart for the resultant route; generic enough that no flex of the
// curves we handle sits at infinity or shares an x-coordinate with another.
template <class R>
Mat<R, 3> generic_chart() {
  Mat<R, 3> m;
  m.a = {{{Complex<R>(1), Complex<R>(R(0.3), R(0.1)), Complex<R>(R(-0.2))},
          {Complex<R>(R(0.25)), Complex<R>(1), Complex<R>(R(0.35), R(-0.15))},
          {Complex<R>(R(-0.15), R(0.2)), Complex<R>(R(0.4)), Complex<R>(1)}}};
  return m;
}

template <class R>
std::array<Complex<R>, 4> y_coefficients(const CubicForm<R>& g, Complex<R> x) {
  std::array<Complex<R>, 4> out{};
  for (int j = 0; j <= 3; ++j) {
    Complex<R> acc(0);
    for (int i = 3 - j; i >= 0; --i) acc = acc * x + g.at(i, j);
    out[j] = acc;
  }
  return out;
}

template <class R>
Complex<R> sylvester_resultant(const std::array<Complex<R>, 4>& p, const std::array<Complex<R>, 4>& q) {
  Mat<R, 6> s;
  for (int r = 0; r < 3; ++r)
    for (int d = 0; d <= 3; ++d) {
      s.a[r][r + d] = p[3 - d];
      s.a[r + 3][r + d] = q[3 - d];
    }
  return determinant(s);
}

}  // namespace

template <class R>
CubicForm<R> compose_linear(const CubicForm<R>& f, const Mat<R, 3>& m) {
  std::array<LinearForm<R>, 3> lin;
  for (int r = 0; r < 3; ++r) {
    lin[r].at(1, 0) = m.a[r][0];
    lin[r].at(0, 1) = m.a[r][1];
    lin[r].at(0, 0) = m.a[r][2];
  }
  CubicForm<R> out;
  for (int i = 3; i >= 0; --i)
    for (int j = 3 - i; j >= 0; --j) {
      const auto c = f.at(i, j);
      if (c == Complex<R>(0)) continue;
      std::array<int, 3> factors{};
      int t = 0;
      for (int s = 0; s < i; ++s) factors[t++] = 0;
      for (int s = 0; s < j; ++s) factors[t++] = 1;
      while (t < 3) factors[t++] = 2;
      out += c * (lin[factors[0]] * lin[factors[1]] * lin[factors[2]]);
    }
  return out;
}

template <class R>
std::vector<ProjPoint2<R>> inflection_points_general(const CubicForm<R>& f, const Tolerances& tol) {
  const Mat<R, 3> chart = generic_chart<R>();
  const CubicForm<R> g = compose_linear(f, chart);
  const CubicForm<R> hg = hessian_det_form(g);
  if (std::abs(g.at(0, 3)) <= R(1e-12) * g.norm() || std::abs(hg.at(0, 3)) <= R(1e-12) * hg.norm())
    throw Error(ErrorKind::DegenerateCurve, "chart is not generic for this curve");

  // The eliminant has degree ≤ 9; recover its coefficients from 16 samples on
  // the unit circle.
  constexpr int kSamples = 16;
  constexpr R two_pi = 2 * std::numbers::pi_v<R>;
  std::array<Complex<R>, kSamples> values;
  for (int m = 0; m < kSamples; ++m) {
    const Complex<R> x = std::polar(R(1), two_pi * R(m) / R(kSamples));
    values[m] = sylvester_resultant(y_coefficients(g, x), y_coefficients(hg, x));
  }
  std::vector<Complex<R>> coeffs(kSamples);
  for (int d = 0; d < kSamples; ++d) {
    Complex<R> acc(0);
    for (int m = 0; m < kSamples; ++m) acc += values[m] * std::polar(R(1), -two_pi * R(m * d) / R(kSamples));
    coeffs[d] = acc / R(kSamples);
  }
  R top = 0;
  for (int d = 0; d <= 9; ++d) top = std::max(top, std::abs(coeffs[d]));
  for (int d = 10; d < kSamples; ++d)
    if (std::abs(coeffs[d]) > R(1e-8) * top)
      throw Error(ErrorKind::DegenerateCurve, "eliminant has degree above 9");
  coeffs.resize(10);
  const Poly<R> eliminant(coeffs);
  const auto xs = simultaneous_roots(eliminant.trimmed(R(tol.lead)), R(tol.root));

  const auto dg = gradient(g);
  const std::array<QuadraticForm<R>, 3> dh{hg.partial(0), hg.partial(1), hg.partial(2)};
  std::vector<ProjPoint2<R>> pts;
  for (const auto& x0 : xs) {
    const auto yc = y_coefficients(g, x0);
    const auto ys = simultaneous_roots(Poly<R>({yc[0], yc[1], yc[2], yc[3]}), R(1e-6));
    Complex<R> y0 = ys.front();
    for (const auto& y : ys)
      if (std::abs(hg(x0, y, Complex<R>(1))) < std::abs(hg(x0, y0, Complex<R>(1)))) y0 = y;

    // Newton on (g, hg) in the affine chart z = 1.
    Complex<R> x = x0, y = y0;
    const Complex<R> one(1);
    for (int it = 0; it < 8; ++it) {
      const Complex<R> F = g(x, y, one), G = hg(x, y, one);
      const Complex<R> fx = dg[0](x, y, one), fy = dg[1](x, y, one);
      const Complex<R> gx = dh[0](x, y, one), gy = dh[1](x, y, one);
      const Complex<R> det = fx * gy - fy * gx;
      if (det == Complex<R>(0)) break;
      const Complex<R> dx = (F * gy - fy * G) / det, dy = (fx * G - F * gx) / det;
      x -= dx;
      y -= dy;
      if (std::abs(dx) + std::abs(dy) <= R(1e-15) * (1 + std::abs(x) + std::abs(y))) break;
    }
    pts.push_back(ProjPoint2<R>::normalized(chart * Point3<R>{x, y, one}));
  }
  validate_flexes(f, pts, tol);
  return pts;
}

template <class R>
std::vector<ProjPoint2<R>> inflection_points(const CubicForm<R>& f, const Tolerances& tol) {
  const auto match = identify_family(f);
  std::vector<ProjPoint2<R>> pts;
  switch (match.family) {
    case CurveFamily::Lambda: {
      const Complex<R> lambda = match.parameter;
      pts.push_back(ProjPoint2<R>{{Complex<R>(0), Complex<R>(1), Complex<R>(0)}});
      for (const auto& alpha : roots_of(inflection_quartic(lambda), R(tol.root))) {
        const Complex<R> y = std::sqrt(flex_y_squared(lambda, alpha));
        pts.push_back(ProjPoint2<R>::normalized({alpha, y, Complex<R>(1)}));
        pts.push_back(ProjPoint2<R>::normalized({alpha, -y, Complex<R>(1)}));
      }
      break;
    }
    case CurveFamily::Hesse: {
      const Complex<R> w = constants<R>().omega;
      Complex<R> wk(1);
      for (int k = 0; k < 3; ++k, wk *= w) {
        pts.push_back(ProjPoint2<R>::normalized({Complex<R>(1), -wk, Complex<R>(0)}));
        pts.push_back(ProjPoint2<R>::normalized({-wk, Complex<R>(0), Complex<R>(1)}));
        pts.push_back(ProjPoint2<R>::normalized({Complex<R>(0), Complex<R>(1), -wk}));
      }
      break;
    }
    case CurveFamily::General:
      return inflection_points_general(f, tol);
  }
  validate_flexes(f, pts, tol);
  return pts;
}

template <class R>
PlaneLine<R> tangent_line(const CubicForm<R>& f, const ProjPoint2<R>& p, R tol) {
  const auto u = p.unit();
  const auto g = gradient(f);
  Point3<R> cov{g[0](u), g[1](u), g[2](u)};
  const R n = norm(cov);
  if (n < tol * f.norm()) throw Error(ErrorKind::SingularPoint, "gradient vanishes at the point");
  for (auto& v : cov) v /= n;
  for (const auto& v : cov) {
    if (std::abs(v) > R(1e-12)) {
      const Complex<R> phase = std::conj(v) / std::abs(v);
      for (auto& w : cov) w *= phase;
      break;
    }
  }
  return PlaneLine<R>{cov};
}

#define CUBMONO_INSTANTIATE(R)                                                                      \
  template struct ProjPoint2<R>;                                                                    \
  template CubicForm<R> family_lambda<R>(Complex<R>, R);                                            \
  template CubicForm<R> hesse_form<R>(Complex<R>, R);                                               \
  template FamilyMatch<R> identify_family<R>(const CubicForm<R>&, R);                               \
  template std::array<QuadraticForm<R>, 3> gradient<R>(const CubicForm<R>&);                        \
  template CubicForm<R> hessian_det_form<R>(const CubicForm<R>&);                                   \
  template Poly<R> inflection_quartic<R>(Complex<R>);                                               \
  template Complex<R> flex_y_squared<R>(Complex<R>, Complex<R>);                                    \
  template std::vector<ProjPoint2<R>> inflection_points<R>(const CubicForm<R>&, const Tolerances&); \
  template std::vector<ProjPoint2<R>> inflection_points_general<R>(const CubicForm<R>&,             \
                                                                   const Tolerances&);              \
  template void sort_points<R>(std::vector<ProjPoint2<R>>&, R);                                     \
  template PlaneLine<R> tangent_line<R>(const CubicForm<R>&, const ProjPoint2<R>&, R);              \
  template CubicForm<R> compose_linear<R>(const CubicForm<R>&, const Mat<R, 3>&);

CUBMONO_INSTANTIATE(double)
CUBMONO_INSTANTIATE(long double)

#undef CUBMONO_INSTANTIATE

}  // namespace cubmono
