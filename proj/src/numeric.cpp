#include "cubmono/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cubmono/error.hpp"

namespace cubmono {

template <class R>
Poly<R>::Poly(std::vector<Complex<R>> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty()) coeffs_.push_back(Complex<R>(0));
}

template <class R>
Complex<R> Poly<R>::operator()(Complex<R> z) const {
  Complex<R> acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

template <class R>
void Poly<R>::eval_with_derivative(Complex<R> z, Complex<R>& value, Complex<R>& deriv) const {
  value = Complex<R>(0);
  deriv = Complex<R>(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
}

template <class R>
R Poly<R>::norm() const {
  R m = 0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

template <class R>
R Poly<R>::relative_residual(Complex<R> z) const {
  const R n = norm();
  return n > 0 ? std::abs((*this)(z)) / n : std::abs((*this)(z));
}

template <class R>
Poly<R> Poly<R>::trimmed(R lead_rel) const {
  const R cutoff = lead_rel * norm();
  std::vector<Complex<R>> c = coeffs_;
  while (c.size() > 1 && std::abs(c.back()) <= cutoff) c.pop_back();
  return Poly(std::move(c));
}

template <class R>
Poly<R> Poly<R>::scaled(Complex<R> s) const {
  std::vector<Complex<R>> c = coeffs_;
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

namespace {

template <class R>
bool finite(Complex<R> z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Newton steps that are kept only while they reduce the residual.
template <class R>
Complex<R> refine(const Poly<R>& p, Complex<R> z, int steps) {
  R best = std::abs(p(z));
  for (int i = 0; i < steps && best > 0; ++i) {
    Complex<R> v, d;
    p.eval_with_derivative(z, v, d);
    if (d == Complex<R>(0)) break;
    const Complex<R> next = z - v / d;
    const R r = std::abs(p(next));
    if (!finite(next) || !(r < best)) break;
    z = next;
    best = r;
  }
  return z;
}

template <class R>
std::vector<Complex<R>> aberth(const Poly<R>& input, R tol) {
  Poly<R> p = input.trimmed(R(Tolerances{}.lead));
  if (p.degree() < 1) throw Error(ErrorKind::InvalidInput, "polynomial of degree 0 has no roots");
  for (const auto& c : p.coeffs())
    if (!finite(c)) throw Error(ErrorKind::InvalidInput, "non-finite coefficient");

  // Exact zero roots are split off so repeated roots at the origin stay exact.
  std::vector<Complex<R>> roots;
  std::vector<Complex<R>> c = p.coeffs();
  std::size_t zeros = 0;
  while (zeros + 1 < c.size() && c[zeros] == Complex<R>(0)) ++zeros;
  roots.assign(zeros, Complex<R>(0));
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  const Poly<R> q(c);
  const int n = q.degree();
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  R bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / c[n]));
  const R radius = 1 + bound;
  const R eps = std::numeric_limits<R>::epsilon();
  constexpr R two_pi = 2 * std::numbers::pi_v<R>;

  std::vector<Complex<R>> z(n);
  for (int k = 0; k < n; ++k) {
    const R angle = two_pi * R(k) / R(n) + R(0.4);
    z[k] = std::polar(radius * (1 + R(0.05) * R(k) / R(n)), angle);
  }

  constexpr int kMaxIter = 500;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    bool settled = true;
    for (int k = 0; k < n; ++k) {
      Complex<R> v, d;
      q.eval_with_derivative(z[k], v, d);
      if (v == Complex<R>(0)) continue;
      Complex<R> w;
      if (d == Complex<R>(0)) {
        w = Complex<R>(radius * R(1e-3), radius * R(7e-4));
      } else {
        const Complex<R> ratio = v / d;
        Complex<R> sum(0);
        for (int j = 0; j < n; ++j) {
          if (j == k) continue;
          Complex<R> diff = z[k] - z[j];
          if (diff == Complex<R>(0)) diff = Complex<R>(eps, eps);
          sum += R(1) / diff;
        }
        w = ratio / (R(1) - ratio * sum);
      }
      if (!finite(w)) throw Error(ErrorKind::NonConvergence, "Aberth correction overflowed");
      z[k] -= w;
      const bool tiny_step = std::abs(w) <= 8 * eps * std::max(R(1), std::abs(z[k]));
      const bool tiny_residual = q.relative_residual(z[k]) <= tol * R(1e-3);
      if (!tiny_step && !tiny_residual) settled = false;
    }
    if (settled) break;
  }

  for (auto& root : z) {
    root = refine(q, root, 3);
    if (!(q.relative_residual(root) < tol) || !finite(root))
      throw Error(ErrorKind::NonConvergence, "root residual above tolerance after iteration cap");
    roots.push_back(root);
  }
  return roots;
}

}  // namespace

template <class R>
std::vector<Complex<R>> simultaneous_roots(const Poly<R>& p, R tol) {
  auto roots = aberth(p, tol);
  R scale = 1;
  for (const auto& z : roots) scale = std::max(scale, std::abs(z));
  sort_canonical(roots, R(1e-9) * scale);
  return roots;
}

template <class R>
std::vector<Complex<R>> roots_of(const Poly<R>& p, R tol) {
  const int deg = p.trimmed(R(Tolerances{}.lead)).degree();
  if (deg < 1 || deg > 4)
    throw Error(ErrorKind::InvalidInput, "roots_of expects degree 1..4, got " + std::to_string(deg));
  return simultaneous_roots(p, tol);
}

template <class R>
Complex<R> newton_polish(const Poly<R>& p, Complex<R> z0, R tol) {
  const R start = std::abs(p(z0));
  Complex<R> z = z0;
  constexpr int kMaxIter = 100;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    if (p.relative_residual(z) < tol) return refine(p, z, 3);
    Complex<R> v, d;
    p.eval_with_derivative(z, v, d);
    if (d == Complex<R>(0)) break;
    const Complex<R> next = z - v / d;
    if (!finite(next)) break;
    z = next;
  }
  if (p.relative_residual(z) < tol) return z;
  if (finite(z) && std::abs(p(z)) <= R(1e-2) * start) return z;
  throw Error(ErrorKind::NonConvergence, "Newton iteration did not converge");
}

template <class R>
Complex<R> principal_cbrt(Complex<R> z) {
  if (z == Complex<R>(0)) return z;
  R im = z.imag();
  if (std::abs(im) <= R(1e-12) * std::abs(z)) im = R(0);
  return std::pow(Complex<R>(z.real(), im), R(1) / R(3));
}

template <class R>
void sort_canonical(std::vector<Complex<R>>& zs, R tie) {
  std::stable_sort(zs.begin(), zs.end(), [tie](const Complex<R>& u, const Complex<R>& v) {
    if (std::abs(u.real() - v.real()) > tie) return u.real() < v.real();
    return u.imag() < v.imag();
  });
}

template <class R>
Constants<R> constants() {
  const R s3 = std::sqrt(R(3));
  const R a = std::sqrt((3 + 2 * s3) / 3);
  const R b = std::sqrt(a * 2 * s3 / 3);
  const R mu = s3 + 1;
  const R eta = -std::cbrt(mu * mu * mu - 1);
  return Constants<R>{Complex<R>(a), Complex<R>(b), Complex<R>(mu), Complex<R>(eta),
                      Complex<R>(R(-0.5), s3 / 2)};
}

#define CUBMONO_INSTANTIATE(R)                                                           \
  template class Poly<R>;                                                                \
  template std::vector<Complex<R>> roots_of<R>(const Poly<R>&, R);                       \
  template std::vector<Complex<R>> simultaneous_roots<R>(const Poly<R>&, R);             \
  template Complex<R> newton_polish<R>(const Poly<R>&, Complex<R>, R);                   \
  template Complex<R> principal_cbrt<R>(Complex<R>);                                     \
  template void sort_canonical<R>(std::vector<Complex<R>>&, R);                          \
  template Constants<R> constants<R>();

CUBMONO_INSTANTIATE(double)
CUBMONO_INSTANTIATE(long double)

#undef CUBMONO_INSTANTIATE

}  // namespace cubmono
