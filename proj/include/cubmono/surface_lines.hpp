#pragma once

// The 27 lines on V(w³ − f) ⊂ P³, three over each flex of f, with their
// incidence graph, a sixer, cohomology classes and the deck permutation.

#include <array>
#include <compare>
#include <vector>

#include "cubmono/lattice.hpp"
#include "cubmono/numeric.hpp"
#include "cubmono/plane_curves.hpp"
#include "cubmono/small_matrix.hpp"

namespace cubmono {

constexpr int kLines = 27;

/// Line over flex `flex` whose first hyperplane is w + ωⁿ·(…).
struct LineLabel {
  int flex = 0;
  int n = 0;
  int index() const { return 3 * flex + n; }
  static LineLabel from_index(int i) { return {i / 3, i % 3}; }
  friend auto operator<=>(const LineLabel&, const LineLabel&) = default;
};

/// Covector on (x, y, z, w).
template <class R>
using Covector4 = Vec<R, 4>;

template <class R>
struct Line3 {
  Covector4<R> h1{};
  Covector4<R> h2{};
  LineLabel label;
};

/// The three lines over the flex P, labeled n = 0, 1, 2. h2 is the tangent
/// line at P; h1 = w + ωⁿκ·L with L a linear form vanishing at P and κ³ equal
/// to minus the value of f at the point of the tangent line where L = 1.
/// Throws NotAFlex if the lines fail the sampled residual test.
template <class R>
std::array<Line3<R>, 3> lines_over_flex(const CubicForm<R>& f, const ProjPoint2<R>& p, int flex_index,
                                        R tol = R(1e-8));

/// All 27 lines, ordered by (flex index, n).
template <class R>
std::vector<Line3<R>> all_lines(const CubicForm<R>& f, const std::vector<ProjPoint2<R>>& flexes);

/// Orthonormal basis (rows, conjugated) of the span of the two hyperplanes.
template <class R>
std::array<Covector4<R>, 2> orthonormal_span(const Covector4<R>& h1, const Covector4<R>& h2);

/// |det| of the stacked orthonormalized covectors: the product of the sines
/// of the principal angles. Zero exactly when the lines meet.
template <class R>
R incidence_measure(const Line3<R>& l, const Line3<R>& m);

/// Lines are assumed distinct. True below tol_inc, false above 100·tol_inc,
/// AmbiguousIncidence in between.
template <class R>
bool incident(const Line3<R>& l, const Line3<R>& m, R tol_inc = R(1e-8));

struct IncidenceGraph {
  std::array<std::array<bool, kLines>, kLines> adj{};

  bool operator()(int i, int j) const { return adj[i][j]; }
  int degree(int i) const;
  int edge_count() const;
};

template <class R>
IncidenceGraph incidence_graph(const std::vector<Line3<R>>& lines, R tol_inc = R(1e-8));

/// Symmetric, loopless, k-regular, adjacent pairs share λ neighbours and
/// non-adjacent pairs share μ.
bool is_strongly_regular(const IncidenceGraph& g, int k, int lambda, int mu);

/// Whether the three lines over each flex meet pairwise.
bool triples_concurrent(const IncidenceGraph& g);

using Sixer = std::array<int, 6>;
using LineClasses = std::array<CohClass, kLines>;

/// Lexicographically first independent 6-set. Throws NoSixer.
Sixer find_sixer(const IncidenceGraph& g);

/// Sixer member k gets e_{k+1}; a line meeting members i, j gets e₀−eᵢ−eⱼ;
/// one meeting all but i gets 2e₀+eᵢ−Σe. Throws BadIncidencePattern.
LineClasses classify_lines(const IncidenceGraph& g, const Sixer& sixer);

/// Whether pairing(class i, class j) = 1 exactly for incident pairs and 0
/// otherwise. Returns the number of agreeing unordered pairs.
int pairing_agreement(const IncidenceGraph& g, const LineClasses& classes);

struct LinePerm {
  std::array<int, kLines> images{};

  static LinePerm identity();
  int operator[](int i) const { return images[i]; }

  bool is_bijective() const;
  /// adjacency(σi, σj) = adjacency(i, j) for all pairs.
  bool preserves(const IncidenceGraph& g) const;
  /// Maps each flex triple onto a flex triple.
  bool preserves_triples() const;

  friend bool operator==(const LinePerm&, const LinePerm&) = default;
};

/// (σ∘τ)(i) = σ(τ(i)).
LinePerm compose(const LinePerm& sigma, const LinePerm& tau);
LinePerm inverse(const LinePerm& p);

/// (flex, n) ↦ (flex, n+1 mod 3).
LinePerm deck_permutation();

/// Column i ≥ 1 is the class of the image of sixer line i; column 0 is
/// (Σ columns − K)/3. Throws NonIntegralImage or FormViolation.
LatticeMap perm_to_lattice_map(const LinePerm& perm, const LineClasses& classes, const Sixer& sixer);

template <class R>
struct SurfaceData {
  CubicForm<R> f;
  std::vector<ProjPoint2<R>> flexes;
  std::vector<Line3<R>> lines;
  IncidenceGraph graph;
  Sixer sixer{};
  LineClasses classes{};
};

/// Flexes, lines, incidence, sixer and classes for V(w³ − f).
template <class R>
SurfaceData<R> analyze_surface(const CubicForm<R>& f, const Tolerances& tol = {});

}  // namespace cubmono
