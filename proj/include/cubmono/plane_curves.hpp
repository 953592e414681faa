#pragma once

#include <array>
#include <vector>

#include "cubmono/numeric.hpp"
#include "cubmono/small_matrix.hpp"

namespace cubmono {

template <class R>
using Point3 = Vec<R, 3>;

/// Homogeneous form of degree D in x, y, z.
///
/// Coefficients are stored by monomial x^i y^j z^k ordered by descending i,
/// then descending j; for D = 3 this is
/// x³, x²y, x²z, xy², xyz, xz², y³, y²z, yz², z³.
template <class R, int D>
struct Form {
  static_assert(D >= 0);
  static constexpr int kSize = (D + 1) * (D + 2) / 2;

  std::array<Complex<R>, kSize> coeffs{};

  static constexpr int index(int i, int j) { return (D - i) * (D - i + 1) / 2 + (D - i - j); }

  Complex<R>& at(int i, int j) { return coeffs[index(i, j)]; }
  const Complex<R>& at(int i, int j) const { return coeffs[index(i, j)]; }

  Complex<R> operator()(Complex<R> x, Complex<R> y, Complex<R> z) const {
    Complex<R> acc(0);
    for (int i = D; i >= 0; --i)
      for (int j = D - i; j >= 0; --j) {
        const auto c = at(i, j);
        if (c == Complex<R>(0)) continue;
        acc += c * ipow(x, i) * ipow(y, j) * ipow(z, D - i - j);
      }
    return acc;
  }
  Complex<R> operator()(const Point3<R>& p) const { return (*this)(p[0], p[1], p[2]); }

  /// Largest coefficient modulus.
  R norm() const {
    R m = 0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
  }

  /// Formal partial derivative in variable 0 (x), 1 (y) or 2 (z).
  Form<R, (D > 0 ? D - 1 : 0)> partial(int var) const {
    Form<R, (D > 0 ? D - 1 : 0)> out;
    if constexpr (D > 0) {
      for (int i = D; i >= 0; --i)
        for (int j = D - i; j >= 0; --j) {
          const int k = D - i - j;
          const auto c = at(i, j);
          if (var == 0 && i > 0) out.at(i - 1, j) += c * R(i);
          if (var == 1 && j > 0) out.at(i, j - 1) += c * R(j);
          if (var == 2 && k > 0) out.at(i, j) += c * R(k);
        }
    }
    return out;
  }

  Form& operator+=(const Form& o) {
    for (int t = 0; t < kSize; ++t) coeffs[t] += o.coeffs[t];
    return *this;
  }
  Form& operator-=(const Form& o) {
    for (int t = 0; t < kSize; ++t) coeffs[t] -= o.coeffs[t];
    return *this;
  }
  Form& operator*=(Complex<R> s) {
    for (auto& c : coeffs) c *= s;
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Complex<R> s, Form a) { return a *= s; }

 private:
  static Complex<R> ipow(Complex<R> v, int e) {
    Complex<R> r(1);
    for (int t = 0; t < e; ++t) r *= v;
    return r;
  }
};

template <class R, int D1, int D2>
Form<R, D1 + D2> operator*(const Form<R, D1>& p, const Form<R, D2>& q) {
  Form<R, D1 + D2> out;
  for (int i1 = D1; i1 >= 0; --i1)
    for (int j1 = D1 - i1; j1 >= 0; --j1) {
      const auto c1 = p.at(i1, j1);
      if (c1 == Complex<R>(0)) continue;
      for (int i2 = D2; i2 >= 0; --i2)
        for (int j2 = D2 - i2; j2 >= 0; --j2) out.at(i1 + i2, j1 + j2) += c1 * q.at(i2, j2);
    }
  return out;
}

template <class R>
using LinearForm = Form<R, 1>;
template <class R>
using QuadraticForm = Form<R, 2>;
template <class R>
using CubicForm = Form<R, 3>;

/// Point of P² normalized so that the last nonzero coordinate (z, then y,
/// then x) equals 1.
template <class R>
struct ProjPoint2 {
  Point3<R> c{};

  static ProjPoint2 normalized(const Point3<R>& p, R rel_zero = R(1e-9));
  const Complex<R>& x() const { return c[0]; }
  const Complex<R>& y() const { return c[1]; }
  const Complex<R>& z() const { return c[2]; }
  /// Unit-norm representative.
  Point3<R> unit() const;
};

/// Line u·x + v·y + w·z = 0 with unit-norm covector whose first nonzero entry
/// is real positive.
template <class R>
struct PlaneLine {
  Point3<R> covector{};
};

enum class CurveFamily { Lambda, Hesse, General };

template <class R>
struct FamilyMatch {
  CurveFamily family = CurveFamily::General;
  Complex<R> parameter{};  // λ or μ
};

/// y²z − (x − z)(x + z)(x − λz). Throws SingularParameter when λ is within
/// `tol` of ±1.
template <class R>
CubicForm<R> family_lambda(Complex<R> lambda, R tol = R(1e-6));

/// x³ + y³ + z³ − 3μxyz. Throws SingularParameter when μ³ is within `tol` of 1.
template <class R>
CubicForm<R> hesse_form(Complex<R> mu, R tol = R(1e-6));

/// Recognizes (scalar multiples of) the two closed-form families.
template <class R>
FamilyMatch<R> identify_family(const CubicForm<R>& f, R tol = R(1e-12));

template <class R>
std::array<QuadraticForm<R>, 3> gradient(const CubicForm<R>& f);

/// det of the matrix of second partials, as a cubic form.
template <class R>
CubicForm<R> hessian_det_form(const CubicForm<R>& f);

/// The quartic 3x⁴ − 4λx³ − 6x² + 12λx − 1 − 4λ² whose roots are the
/// x-coordinates of the affine flexes of the λ-family.
template <class R>
Poly<R> inflection_quartic(Complex<R> lambda);

/// α³ − λα² − α + λ, the square of the y-coordinate over α.
template <class R>
Complex<R> flex_y_squared(Complex<R> lambda, Complex<R> alpha);

/// The nine inflection points in canonical order: [0:1:0] first when
/// present, the rest sorted by (Re y, Im y, Re x, Im x).
///
/// The λ-family and Hesse family use their closed-form reductions; any other
/// cubic goes through inflection_points_general. Throws DegenerateCurve if
/// nine separated points satisfying f = det Hess f = 0 are not found.
template <class R>
std::vector<ProjPoint2<R>> inflection_points(const CubicForm<R>& f, const Tolerances& tol = {});

/// Resultant route: eliminate y between f and its Hessian determinant in a
/// generic chart, solve the degree-9 eliminant, back-substitute and polish.
template <class R>
std::vector<ProjPoint2<R>> inflection_points_general(const CubicForm<R>& f, const Tolerances& tol = {});

template <class R>
void sort_points(std::vector<ProjPoint2<R>>& pts, R tie);

/// Covector ∇f(P), normalized. Throws SingularPoint when |∇f(P)| is below `tol`
/// relative to ‖f‖·|P|².
template <class R>
PlaneLine<R> tangent_line(const CubicForm<R>& f, const ProjPoint2<R>& p, R tol = R(1e-10));

/// f(M·X) as a form in X.
template <class R>
CubicForm<R> compose_linear(const CubicForm<R>& f, const Mat<R, 3>& m);

}  // namespace cubmono
