#include "cubmono/monodromy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "cubmono/error.hpp"

namespace cubmono {

template <class R>
Loop<R> Loop<R>::gamma_minus() {
  return {LoopKind::GammaMinus, "gamma-minus", [](R t) {
            return Complex<R>(-1) + std::polar(R(1), 2 * std::numbers::pi_v<R> * t);
          }};
}

template <class R>
Loop<R> Loop<R>::gamma_plus() {
  return {LoopKind::GammaPlus, "gamma-plus", [](R t) {
            return Complex<R>(1) - std::polar(R(1), 2 * std::numbers::pi_v<R> * t);
          }};
}

template <class R>
Loop<R> Loop<R>::constant() {
  return {LoopKind::Constant, "constant", [](R) { return Complex<R>(0); }};
}

template <class R>
Loop<R> Loop<R>::custom(std::string name, std::function<Complex<R>(R)> fn) {
  return {LoopKind::Custom, std::move(name), std::move(fn)};
}

template <class R>
Loop<R> loop_by_name(const std::string& name) {
  if (name == "gamma-minus") return Loop<R>::gamma_minus();
  if (name == "gamma-plus") return Loop<R>::gamma_plus();
  if (name == "constant") return Loop<R>::constant();
  throw Error(ErrorKind::InvalidInput, "unknown loop '" + name + "'");
}

FlexPerm FlexPerm::identity() {
  FlexPerm p;
  for (int i = 0; i < 9; ++i) p.images[i] = i;
  return p;
}

bool FlexPerm::is_bijective() const {
  std::array<bool, 9> hit{};
  for (int v : images) {
    if (v < 0 || v >= 9 || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

namespace {

template <class R>
Complex<R> checked_parameter(const Loop<R>& loop, R t, double eps) {
  const Complex<R> lam = loop(t);
  if (!std::isfinite(lam.real()) || !std::isfinite(lam.imag()))
    throw Error(ErrorKind::InvalidInput, "loop produced a non-finite parameter");
  if (std::abs(lam - R(1)) <= R(10 * eps) || std::abs(lam + R(1)) <= R(10 * eps))
    throw Error(ErrorKind::InvalidInput, "loop passes through a singular parameter");
  return lam;
}

template <class R>
void check_endpoints(const Loop<R>& loop, double eps) {
  if (std::abs(loop(R(0))) > R(eps) || std::abs(loop(R(1))) > R(eps))
    throw Error(ErrorKind::InvalidInput, "loop is not based at 0");
}

// For each query, the index of the nearest candidate, provided it is closer
// than half the second nearest and the assignment is injective.
template <class P, class Dist>
std::optional<std::vector<int>> certified_match(const std::vector<P>& query, const std::vector<P>& cand, Dist dist) {
  std::vector<int> out(query.size());
  std::vector<bool> used(cand.size(), false);
  for (std::size_t i = 0; i < query.size(); ++i) {
    double best = std::numeric_limits<double>::max(), second = best;
    int arg = -1;
    for (std::size_t j = 0; j < cand.size(); ++j) {
      const double d = static_cast<double>(dist(query[i], cand[j]));
      if (d < best) {
        second = best;
        best = d;
        arg = static_cast<int>(j);
      } else if (d < second) {
        second = d;
      }
    }
    if (arg < 0 || !(best < 0.5 * second) || used[arg]) return std::nullopt;
    used[arg] = true;
    out[i] = arg;
  }
  return out;
}

template <class R>
R scalar_dist(const Complex<R>& a, const Complex<R>& b) {
  return std::abs(a - b);
}

template <class R>
R pair_dist(const std::array<Complex<R>, 2>& a, const std::array<Complex<R>, 2>& b) {
  return std::sqrt(std::norm(a[0] - b[0]) + std::norm(a[1] - b[1]));
}

template <class R>
std::optional<RootTrack<R>> attempt_roots(const Loop<R>& loop, const TrackingConfig& cfg, int n,
                                          const std::vector<Complex<R>>& base) {
  const R tol = R(cfg.tol_root);
  RootTrack<R> out;
  out.base = base;
  out.steps_used = n;
  out.tracks.push_back(base);
  std::vector<Complex<R>> cur = base;
  for (int k = 1; k <= n; ++k) {
    const Complex<R> lam = checked_parameter(loop, R(k) / R(n), cfg.eps_match);
    const Poly<R> p = inflection_quartic(lam);
    const auto full = roots_of(p, tol);
    const auto m = certified_match(cur, full, scalar_dist<R>);
    if (!m) return std::nullopt;
    std::vector<Complex<R>> next(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      // Newton predictor from the previous value must land on the matched root.
      try {
        const Complex<R> pred = newton_polish(p, cur[i], tol);
        int nearest = 0;
        for (std::size_t j = 1; j < full.size(); ++j)
          if (std::abs(pred - full[j]) < std::abs(pred - full[nearest])) nearest = static_cast<int>(j);
        if (nearest != (*m)[i]) return std::nullopt;
      } catch (const Error&) {
        // Predictor rejected; the full solve stands.
      }
      next[i] = full[(*m)[i]];
    }
    cur = std::move(next);
    out.tracks.push_back(cur);
  }
  const auto back = certified_match(cur, base, scalar_dist<R>);
  if (!back) return std::nullopt;
  for (std::size_t i = 0; i < cur.size(); ++i)
    if (std::abs(cur[i] - base[(*back)[i]]) > R(cfg.eps_match)) return std::nullopt;
  out.perm = *back;
  return out;
}

template <class R>
std::vector<std::array<Complex<R>, 2>> flex_candidates(Complex<R> lam, R tol) {
  std::vector<std::array<Complex<R>, 2>> out;
  for (const auto& alpha : roots_of(inflection_quartic(lam), tol)) {
    const Complex<R> y = std::sqrt(flex_y_squared(lam, alpha));
    out.push_back({alpha, y});
    out.push_back({alpha, -y});
  }
  return out;
}

template <class R>
std::optional<FlexTrack<R>> attempt_flexes(const Loop<R>& loop, const TrackingConfig& cfg, int n,
                                           const std::vector<std::array<Complex<R>, 2>>& base) {
  const R tol = R(cfg.tol_root);
  FlexTrack<R> out;
  out.steps_used = n;
  out.tracks.push_back(base);
  auto cur = base;
  for (int k = 1; k <= n; ++k) {
    const Complex<R> lam = checked_parameter(loop, R(k) / R(n), cfg.eps_match);
    const auto cand = flex_candidates(lam, tol);
    const auto m = certified_match(cur, cand, pair_dist<R>);
    if (!m) return std::nullopt;
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = cand[(*m)[i]];
    out.tracks.push_back(cur);
  }
  const auto back = certified_match(cur, base, pair_dist<R>);
  if (!back) return std::nullopt;
  out.perm.images[0] = 0;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (pair_dist(cur[i], base[(*back)[i]]) > R(cfg.eps_match)) return std::nullopt;
    out.perm.images[i + 1] = (*back)[i] + 1;
  }
  return out;
}

}  // namespace

template <class R>
RootTrack<R> track_roots(const Loop<R>& loop, const TrackingConfig& cfg) {
  if (cfg.steps < 8) throw Error(ErrorKind::InvalidInput, "at least 8 steps are required");
  check_endpoints(loop, cfg.eps_match);
  const auto base = roots_of(inflection_quartic(Complex<R>(0)), R(cfg.tol_root));
  int n = cfg.steps;
  for (int r = 0; r <= cfg.max_refine; ++r, n *= 2)
    if (auto t = attempt_roots(loop, cfg, n, base)) return *t;
  throw Error(ErrorKind::AmbiguousMatching, "root matching failed after " + std::to_string(cfg.max_refine) +
                                                " refinements of the step count");
}

template <class R>
FlexTrack<R> track_flexes(const Loop<R>& loop, const TrackingConfig& cfg) {
  if (cfg.steps < 8) throw Error(ErrorKind::InvalidInput, "at least 8 steps are required");
  check_endpoints(loop, cfg.eps_match);
  const auto pts = inflection_points(family_lambda(Complex<R>(0)));
  if (std::abs(pts[0].z()) > R(cfg.eps_match) || std::abs(pts[0].x()) > R(cfg.eps_match))
    throw Error(ErrorKind::DegenerateCurve, "first flex of the base curve is not [0:1:0]");
  std::vector<std::array<Complex<R>, 2>> base;
  for (std::size_t i = 1; i < pts.size(); ++i) base.push_back({pts[i].x(), pts[i].y()});

  std::optional<FlexTrack<R>> found;
  int n = cfg.steps;
  for (int r = 0; r <= cfg.max_refine && !found; ++r, n *= 2) found = attempt_flexes(loop, cfg, n, base);
  if (!found)
    throw Error(ErrorKind::AmbiguousMatching, "flex matching failed after " + std::to_string(cfg.max_refine) +
                                                  " refinements of the step count");
  found->base = pts;

  // The x-coordinates must move exactly as the roots of R_λ do.
  const auto roots = track_roots(loop, cfg);
  auto root_of = [&](const Complex<R>& x) {
    int best = 0;
    for (std::size_t j = 1; j < roots.base.size(); ++j)
      if (std::abs(x - roots.base[j]) < std::abs(x - roots.base[best])) best = static_cast<int>(j);
    return best;
  };
  for (std::size_t i = 0; i < base.size(); ++i) {
    const int from = root_of(base[i][0]);
    const int to = root_of(base[found->perm[static_cast<int>(i) + 1] - 1][0]);
    if (roots.perm[from] != to)
      throw Error(ErrorKind::InconsistentProjection, "flex permutation disagrees with the root permutation");
  }
  return *found;
}

LinePerm lift_to_lines(const FlexPerm& fp) {
  LinePerm p;
  for (int i = 0; i < kLines; ++i) {
    const auto l = LineLabel::from_index(i);
    p.images[i] = LineLabel{fp[l.flex], l.n}.index();
  }
  return p;
}

template <class R>
MonodromyResult<R> monodromy(const Loop<R>& loop, const SurfaceData<R>& base, const TrackingConfig& cfg) {
  MonodromyResult<R> out;
  out.roots = track_roots(loop, cfg);
  out.flexes = track_flexes(loop, cfg);
  for (std::size_t i = 0; i < base.flexes.size(); ++i)
    if (projective_distance(base.flexes[i].c, out.flexes.base[i].c) > R(cfg.eps_match))
      throw Error(ErrorKind::InvalidInput, "surface data does not describe the base curve");
  out.lines = lift_to_lines(out.flexes.perm);
  if (!out.lines.preserves(base.graph))
    throw Error(ErrorKind::BadIncidencePattern, "lifted permutation does not preserve incidence");
  out.matrix = perm_to_lattice_map(out.lines, base.classes, base.sixer);
  return out;
}

template <class R>
LatticeMap monodromy_matrix(const Loop<R>& loop, const SurfaceData<R>& base, const TrackingConfig& cfg) {
  return monodromy(loop, base, cfg).matrix;
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::ostringstream os;
  std::vector<bool> seen(perm.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      if (j != i) os << ' ';
      os << j;
      seen[j] = true;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

#define CUBMONO_INSTANTIATE(R)                                                                            \
  template struct Loop<R>;                                                                               \
  template Loop<R> loop_by_name<R>(const std::string&);                                                  \
  template RootTrack<R> track_roots<R>(const Loop<R>&, const TrackingConfig&);                           \
  template FlexTrack<R> track_flexes<R>(const Loop<R>&, const TrackingConfig&);                          \
  template MonodromyResult<R> monodromy<R>(const Loop<R>&, const SurfaceData<R>&, const TrackingConfig&); \
  template LatticeMap monodromy_matrix<R>(const Loop<R>&, const SurfaceData<R>&, const TrackingConfig&);

CUBMONO_INSTANTIATE(double)
CUBMONO_INSTANTIATE(long double)

#undef CUBMONO_INSTANTIATE

}  // namespace cubmono
