#pragma once

// Continuation of the roots of R_λ and of the nine flexes of f_λ along loops
// in C ∖ {±1} based at λ = 0, and the induced line permutations and lattice
// maps.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "cubmono/lattice.hpp"
#include "cubmono/numeric.hpp"
#include "cubmono/plane_curves.hpp"
#include "cubmono/surface_lines.hpp"

namespace cubmono {

enum class LoopKind { GammaMinus, GammaPlus, Constant, Custom };

template <class R>
struct Loop {
  LoopKind kind = LoopKind::Constant;
  std::string name = "constant";
  std::function<Complex<R>(R)> samples;

  Complex<R> operator()(R t) const { return samples(t); }

  /// t ↦ −1 + e^{2πit}
  static Loop gamma_minus();
  /// t ↦ 1 − e^{2πit}
  static Loop gamma_plus();
  static Loop constant();
  static Loop custom(std::string name, std::function<Complex<R>(R)> fn);
};

/// Parses "gamma-minus", "gamma-plus" or "constant". Throws InvalidInput.
template <class R>
Loop<R> loop_by_name(const std::string& name);

struct TrackingConfig {
  int steps = 100;
  double eps_match = 1e-6;
  int max_refine = 6;
  double tol_root = 1e-10;
};

/// Result of continuing the four roots of R_λ.
template <class R>
struct RootTrack {
  std::vector<Complex<R>> base;             // roots of R₀, canonical order
  std::vector<int> perm;                    // base i ends at base perm[i]
  int steps_used = 0;
  std::vector<std::vector<Complex<R>>> tracks;  // tracks[k][i] at t = k/steps_used
};

/// Throws AmbiguousMatching once max_refine doublings of the step count fail
/// the acceptance rule (nearest < ½·second nearest, predictor agreement).
template <class R>
RootTrack<R> track_roots(const Loop<R>& loop, const TrackingConfig& cfg = {});

struct FlexPerm {
  std::array<int, 9> images{};

  static FlexPerm identity();
  int operator[](int i) const { return images[i]; }
  bool is_bijective() const;
  friend bool operator==(const FlexPerm&, const FlexPerm&) = default;
};

template <class R>
struct FlexTrack {
  std::vector<ProjPoint2<R>> base;  // inflection_points(f₀); index 0 is [0:1:0]
  FlexPerm perm;
  int steps_used = 0;
  /// tracks[k][i] = (x, y) of affine flex i+1 at t = k/steps_used.
  std::vector<std::vector<std::array<Complex<R>, 2>>> tracks;
};

/// Continues the eight affine flexes jointly in (x, y), keeps [0:1:0] fixed,
/// and checks the x-projection against track_roots (InconsistentProjection).
template <class R>
FlexTrack<R> track_flexes(const Loop<R>& loop, const TrackingConfig& cfg = {});

/// (flex P, n) ↦ (fp(P), n).
LinePerm lift_to_lines(const FlexPerm& fp);

template <class R>
struct MonodromyResult {
  RootTrack<R> roots;
  FlexTrack<R> flexes;
  LinePerm lines;
  LatticeMap matrix;
};

/// Tracks the loop and converts the line permutation into a lattice map in
/// the basis of `base`, which must describe V(w³ − f₀) with flexes in
/// canonical order.
template <class R>
MonodromyResult<R> monodromy(const Loop<R>& loop, const SurfaceData<R>& base, const TrackingConfig& cfg = {});

template <class R>
LatticeMap monodromy_matrix(const Loop<R>& loop, const SurfaceData<R>& base, const TrackingConfig& cfg = {});

/// Cycle notation on 0-based indices, fixed points omitted; "()" for the
/// identity.
std::string cycle_notation(const std::vector<int>& perm);

}  // namespace cubmono
