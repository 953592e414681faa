#pragma once

// The transform A taking the base curve f = y²z − x³ + xz² to Hesse normal
// form, its lift A′ to P³, the lifted translations X′, Y′, and the line
// permutations and lattice maps H₁, H₂ they induce on V(w³ − f).

#include <vector>

#include "cubmono/lattice.hpp"
#include "cubmono/plane_curves.hpp"
#include "cubmono/small_matrix.hpp"
#include "cubmono/surface_lines.hpp"

namespace cubmono {

/// Projective automorphism of P³ acting on column vectors (x, y, z, w).
template <class R>
using ProjMap3 = Mat<R, 4>;

template <class R>
struct HesseTransform {
  Mat<R, 3> a;
  ProjMap3<R> a_lift;   // diag(A, −η)
  Complex<R> scale;     // f_H(A·P) = scale · f(P)
};

/// Builds A from the constants. Throws TransformResidual unless A maps V(f)
/// onto V(f_H) and A′ maps V(w³ − f) onto V(w³ − f_H), both checked on 10
/// sample points.
template <class R>
HesseTransform<R> hesse_transform(R tol = R(1e-8));

template <class R>
struct HeisenbergLifts {
  ProjMap3<R> x;  // diag(1, ω, ω², 1)
  ProjMap3<R> y;  // (x, y, z, w) ↦ (y, z, x, w)
};

template <class R>
HeisenbergLifts<R> heisenberg_lifts();

/// Largest relative value of w³ − tgt(x, y, z) at M·p over sample points p of
/// V(w³ − src).
template <class R>
R surface_map_residual(const ProjMap3<R>& m, const CubicForm<R>& src, const CubicForm<R>& tgt, int samples = 10);

/// Distance between the covector spans of two lines; 0 iff they are equal.
template <class R>
R line_distance(const Covector4<R>& g1, const Covector4<R>& g2, const Line3<R>& l);

/// Pushes each source line through M (covectors h ↦ h·M⁻¹) and matches it to
/// the unique target line with span distance below tol_match, requiring the
/// runner-up to be above 1000·tol_match. Throws NoUniqueMatch.
template <class R>
LinePerm induced_line_perm(const ProjMap3<R>& m, const std::vector<Line3<R>>& source,
                           const std::vector<Line3<R>>& target, R tol_match = R(1e-6));

template <class R>
struct HeisenbergData {
  HesseTransform<R> transform;
  LinePerm h1_perm, h2_perm;
  LatticeMap h1, h2;
};

/// H₁, H₂ from A′⁻¹X′A′ and A′⁻¹Y′A′ acting on the lines of the base surface,
/// which must be V(w³ − f) for f = y²z − x³ + xz².
template <class R>
HeisenbergData<R> heisenberg_matrices(const SurfaceData<R>& base, const Tolerances& tol = {});

}  // namespace cubmono
