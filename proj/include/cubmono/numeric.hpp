#pragma once

// Complex scalar kernel: polynomial root finding, Newton polishing, and the
// algebraic constants of the base curve and its Hesse normal form.
//
// Everything is templated on the real type so the pipeline can run in double
// or in long double (extended precision). Both are explicitly instantiated in
// numeric.cpp.

#include <complex>
#include <vector>

namespace cubmono {

template <class R>
using Complex = std::complex<R>;

enum class Precision { Double, Extended };

struct Tolerances {
  double root = 1e-10;       // relative polynomial residual
  double match = 1e-6;       // identification of points / roots
  double incidence = 1e-8;   // |det| threshold for line incidence
  double lead = 1e-14;       // relative cutoff for vanishing leading coefficients
};

/// Univariate polynomial with complex coefficients in ascending degree order.
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Complex<R>> ascending);

  const std::vector<Complex<R>>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex<R> leading() const { return coeffs_.back(); }

  Complex<R> operator()(Complex<R> z) const;
  /// Value and first derivative by a single Horner pass.
  void eval_with_derivative(Complex<R> z, Complex<R>& value, Complex<R>& deriv) const;

  /// Largest coefficient modulus.
  R norm() const;
  /// |p(z)| / norm().
  R relative_residual(Complex<R> z) const;

  /// Drops trailing coefficients below `lead_rel * norm()`.
  Poly trimmed(R lead_rel) const;
  Poly scaled(Complex<R> c) const;

 private:
  std::vector<Complex<R>> coeffs_;
};

/// All roots of a polynomial of degree 1..4 with multiplicity.
///
/// Uses Aberth iteration from fixed, non-symmetric starting points followed by
/// Newton polishing. Output is sorted by (real, imaginary) part, so the result
/// is a deterministic function of the coefficients. Throws NonConvergence if
/// some root fails |p(z)|/‖p‖ < tol, InvalidInput for degree 0 or > 4.
template <class R>
std::vector<Complex<R>> roots_of(const Poly<R>& p, R tol);

/// Same iteration without the degree cap. Used by the resultant-based
/// inflection solver, which eliminates down to degree 9.
template <class R>
std::vector<Complex<R>> simultaneous_roots(const Poly<R>& p, R tol);

/// Newton iteration from z0. Returns once |p(z)|/‖p‖ < tol (plus a couple of
/// clean-up steps) or, failing that, when |p(z)| ≤ 1e-2·|p(z0)|.
template <class R>
Complex<R> newton_polish(const Poly<R>& p, Complex<R> z0, R tol);

/// Principal cube root with the imaginary part snapped to +0 when it is
/// numerically zero, so that negative reals map to |z|^(1/3)·e^{iπ/3} stably.
template <class R>
Complex<R> principal_cbrt(Complex<R> z);

/// Sorts by real part, then imaginary part; real parts within `tie` of each
/// other count as equal.
template <class R>
void sort_canonical(std::vector<Complex<R>>& zs, R tie);

template <class R>
struct Constants {
  Complex<R> a;      // sqrt((3 + 2√3)/3)
  Complex<R> b;      // sqrt(a · 2√3/3)
  Complex<R> mu;     // √3 + 1
  Complex<R> eta;    // real cube root of 1 − mu³ (negative)
  Complex<R> omega;  // e^{2πi/3}
};

template <class R>
Constants<R> constants();

}  // namespace cubmono
