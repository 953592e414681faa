#include "cubmono/surface_lines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cubmono/error.hpp"

namespace cubmono {

namespace {

template <class R>
Covector4<R> lift(const Point3<R>& c) {
  return {c[0], c[1], c[2], Complex<R>(0)};
}

template <class R>
Complex<R> bilinear(const Point3<R>& h, const Point3<R>& p) {
  return h[0] * p[0] + h[1] * p[1] + h[2] * p[2];
}

template <class R>
Point3<R> cross(const Point3<R>& u, const Point3<R>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// Two orthonormal points spanning the line {h1 = h2 = 0}.
template <class R>
std::array<Covector4<R>, 2> line_points(const Line3<R>& l) {
  const auto u = orthonormal_span(l.h1, l.h2);
  std::array<Covector4<R>, 4> cand;
  for (int k = 0; k < 4; ++k) {
    Covector4<R> v{};
    v[k] = Complex<R>(1);
    for (const auto& ui : u)
      for (int j = 0; j < 4; ++j) v[j] -= ui[k] * std::conj(ui[j]);
    cand[k] = v;
  }
  std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return norm(a) > norm(b); });
  auto p = orthonormal_span(cand[0], cand[1]);
  return p;
}

}  // namespace

template <class R>
std::array<Covector4<R>, 2> orthonormal_span(const Covector4<R>& h1, const Covector4<R>& h2) {
  Covector4<R> u1 = h1, u2 = h2;
  const R n1 = norm(u1);
  for (auto& v : u1) v /= n1;
  const auto c = hdot(u1, u2);
  for (int j = 0; j < 4; ++j) u2[j] -= c * u1[j];
  const R n2 = norm(u2);
  for (auto& v : u2) v /= n2;
  return {u1, u2};
}

template <class R>
std::array<Line3<R>, 3> lines_over_flex(const CubicForm<R>& f, const ProjPoint2<R>& p, int flex_index, R tol) {
  const Point3<R> t = tangent_line(f, p).covector;
  const Point3<R> u = p.unit();
  const Complex<R> zero(0), one(1);

  // Candidate linear forms vanishing at P; reject one proportional to t.
  std::vector<Point3<R>> candidates;
  if (p.z() != zero) candidates.push_back({one, zero, -p.x() / p.z()});
  if (p.y() != zero) candidates.push_back({one, -p.x() / p.y(), zero});
  candidates.push_back({zero, one, zero});
  candidates.push_back({zero, p.z(), -p.y()});
  candidates.push_back({p.z(), zero, -p.x()});
  Point3<R> lf{};
  bool found = false;
  for (const auto& c : candidates) {
    if (norm(c) == 0 || std::abs(bilinear(c, u)) > R(1e-9) * norm(c)) continue;
    if (projective_distance(c, t) < R(1e-6)) continue;
    lf = c;
    found = true;
    break;
  }
  if (!found) throw Error(ErrorKind::NotAFlex, "no linear form separates the flex from its tangent");

  Point3<R> conj_u;
  for (int i = 0; i < 3; ++i) conj_u[i] = std::conj(u[i]);
  Point3<R> q = cross(t, conj_u);
  const Complex<R> lq = bilinear(lf, q);
  for (auto& v : q) v /= lq;
  const Complex<R> kappa = principal_cbrt(-f(q));

  const Complex<R> omega = constants<R>().omega;
  std::array<Line3<R>, 3> out;
  Complex<R> wn(1);
  for (int n = 0; n < 3; ++n, wn *= omega) {
    Line3<R>& l = out[n];
    for (int i = 0; i < 3; ++i) l.h1[i] = wn * kappa * lf[i];
    l.h1[3] = one;
    l.h2 = lift(t);
    l.label = {flex_index, n};

    const auto pts = line_points(l);
    const R fn = f.norm();
    constexpr R two_pi = 2 * std::numbers::pi_v<R>;
    for (int s = 0; s < 5; ++s) {
      const R theta = two_pi * R(s) / R(10) + R(0.3);
      const Complex<R> phase = std::polar(R(1), R(1.7) * R(s));
      Covector4<R> x;
      for (int j = 0; j < 4; ++j) x[j] = std::cos(theta) * pts[0][j] + std::sin(theta) * phase * pts[1][j];
      const Complex<R> r = x[3] * x[3] * x[3] - f(x[0], x[1], x[2]);
      if (std::abs(r) > tol * std::max(R(1), fn))
        throw Error(ErrorKind::NotAFlex, "line over flex " + std::to_string(flex_index) +
                                             " does not lie on the surface");
    }
  }
  return out;
}

template <class R>
std::vector<Line3<R>> all_lines(const CubicForm<R>& f, const std::vector<ProjPoint2<R>>& flexes) {
  std::vector<Line3<R>> lines;
  lines.reserve(kLines);
  for (std::size_t k = 0; k < flexes.size(); ++k)
    for (const auto& l : lines_over_flex(f, flexes[k], static_cast<int>(k))) lines.push_back(l);
  return lines;
}

template <class R>
R incidence_measure(const Line3<R>& l, const Line3<R>& m) {
  const auto a = orthonormal_span(l.h1, l.h2);
  const auto b = orthonormal_span(m.h1, m.h2);
  Mat<R, 4> s;
  for (int j = 0; j < 4; ++j) {
    s.a[0][j] = a[0][j];
    s.a[1][j] = a[1][j];
    s.a[2][j] = b[0][j];
    s.a[3][j] = b[1][j];
  }
  return std::abs(determinant(s));
}

template <class R>
bool incident(const Line3<R>& l, const Line3<R>& m, R tol_inc) {
  const R d = incidence_measure(l, m);
  if (d < tol_inc) return true;
  if (d > 100 * tol_inc) return false;
  throw Error(ErrorKind::AmbiguousIncidence, "incidence measure " + std::to_string(static_cast<double>(d)) +
                                                 " falls in the undecided band");
}

int IncidenceGraph::degree(int i) const {
  return static_cast<int>(std::count(adj[i].begin(), adj[i].end(), true));
}

int IncidenceGraph::edge_count() const {
  int e = 0;
  for (int i = 0; i < kLines; ++i) e += degree(i);
  return e / 2;
}

template <class R>
IncidenceGraph incidence_graph(const std::vector<Line3<R>>& lines, R tol_inc) {
  if (lines.size() != kLines) throw Error(ErrorKind::InvalidInput, "expected 27 lines");
  IncidenceGraph g;
  for (int i = 0; i < kLines; ++i)
    for (int j = i + 1; j < kLines; ++j) g.adj[i][j] = g.adj[j][i] = incident(lines[i], lines[j], tol_inc);
  return g;
}

bool is_strongly_regular(const IncidenceGraph& g, int k, int lambda, int mu) {
  for (int i = 0; i < kLines; ++i) {
    if (g(i, i) || g.degree(i) != k) return false;
    for (int j = i + 1; j < kLines; ++j) {
      if (g(i, j) != g(j, i)) return false;
      int common = 0;
      for (int t = 0; t < kLines; ++t) common += g(i, t) && g(j, t);
      if (common != (g(i, j) ? lambda : mu)) return false;
    }
  }
  return true;
}

bool triples_concurrent(const IncidenceGraph& g) {
  for (int p = 0; p < kLines / 3; ++p)
    if (!g(3 * p, 3 * p + 1) || !g(3 * p, 3 * p + 2) || !g(3 * p + 1, 3 * p + 2)) return false;
  return true;
}

namespace {

bool extend_sixer(const IncidenceGraph& g, int start, std::vector<int>& cur) {
  if (cur.size() == 6) return true;
  for (int v = start; v < kLines; ++v) {
    if (std::any_of(cur.begin(), cur.end(), [&](int u) { return g(u, v); })) continue;
    cur.push_back(v);
    if (extend_sixer(g, v + 1, cur)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

Sixer find_sixer(const IncidenceGraph& g) {
  std::vector<int> cur;
  if (!extend_sixer(g, 0, cur)) throw Error(ErrorKind::NoSixer, "no six pairwise disjoint lines");
  Sixer s;
  std::copy(cur.begin(), cur.end(), s.begin());
  return s;
}

LineClasses classify_lines(const IncidenceGraph& g, const Sixer& sixer) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (g(sixer[i], sixer[j])) throw Error(ErrorKind::BadIncidencePattern, "sixer lines meet");
  CohClass sum_e{};
  for (int i = 1; i < kRank; ++i) sum_e[i] = 1;
  LineClasses classes{};
  for (int v = 0; v < kLines; ++v) {
    const auto pos = std::find(sixer.begin(), sixer.end(), v);
    if (pos != sixer.end()) {
      classes[v] = basis(static_cast<int>(pos - sixer.begin()) + 1);
      continue;
    }
    std::vector<int> met, missed;
    for (int i = 0; i < 6; ++i) (g(v, sixer[i]) ? met : missed).push_back(i + 1);
    if (met.size() == 2)
      classes[v] = basis(0) - basis(met[0]) - basis(met[1]);
    else if (met.size() == 5)
      classes[v] = 2 * basis(0) + basis(missed[0]) - sum_e;
    else
      throw Error(ErrorKind::BadIncidencePattern,
                  "line " + std::to_string(v) + " meets " + std::to_string(met.size()) + " sixer lines");
  }
  return classes;
}

int pairing_agreement(const IncidenceGraph& g, const LineClasses& classes) {
  int agree = 0;
  for (int i = 0; i < kLines; ++i)
    for (int j = i + 1; j < kLines; ++j) agree += pairing(classes[i], classes[j]) == (g(i, j) ? 1 : 0);
  return agree;
}

LinePerm LinePerm::identity() {
  LinePerm p;
  for (int i = 0; i < kLines; ++i) p.images[i] = i;
  return p;
}

bool LinePerm::is_bijective() const {
  std::array<bool, kLines> hit{};
  for (int v : images) {
    if (v < 0 || v >= kLines || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool LinePerm::preserves(const IncidenceGraph& g) const {
  for (int i = 0; i < kLines; ++i)
    for (int j = 0; j < kLines; ++j)
      if (g(images[i], images[j]) != g(i, j)) return false;
  return true;
}

bool LinePerm::preserves_triples() const {
  for (int p = 0; p < kLines / 3; ++p) {
    const int target = images[3 * p] / 3;
    if (images[3 * p + 1] / 3 != target || images[3 * p + 2] / 3 != target) return false;
  }
  return true;
}

LinePerm compose(const LinePerm& sigma, const LinePerm& tau) {
  LinePerm out;
  for (int i = 0; i < kLines; ++i) out.images[i] = sigma[tau[i]];
  return out;
}

LinePerm inverse(const LinePerm& p) {
  LinePerm out;
  for (int i = 0; i < kLines; ++i) out.images[p[i]] = i;
  return out;
}

LinePerm deck_permutation() {
  LinePerm p;
  for (int i = 0; i < kLines; ++i) {
    const auto l = LineLabel::from_index(i);
    p.images[i] = LineLabel{l.flex, (l.n + 1) % 3}.index();
  }
  return p;
}

LatticeMap perm_to_lattice_map(const LinePerm& perm, const LineClasses& classes, const Sixer& sixer) {
  std::array<CohClass, kRank> cols{};
  CohClass sum{};
  for (int i = 0; i < 6; ++i) {
    cols[i + 1] = classes[perm[sixer[i]]];
    sum = sum + cols[i + 1];
  }
  const CohClass num = sum - kCanonical;
  for (int r = 0; r < kRank; ++r) {
    if (num[r] % 3 != 0) throw Error(ErrorKind::NonIntegralImage, "image of e0 is not integral");
    cols[0][r] = num[r] / 3;
  }
  const LatticeMap m = LatticeMap::from_columns(cols);
  if (!m.preserves_form()) throw Error(ErrorKind::FormViolation, "induced map does not preserve the form");
  return m;
}

template <class R>
SurfaceData<R> analyze_surface(const CubicForm<R>& f, const Tolerances& tol) {
  SurfaceData<R> s;
  s.f = f;
  s.flexes = inflection_points(f, tol);
  s.lines = all_lines(f, s.flexes);
  s.graph = incidence_graph(s.lines, R(tol.incidence));
  s.sixer = find_sixer(s.graph);
  s.classes = classify_lines(s.graph, s.sixer);
  return s;
}

#define CUBMONO_INSTANTIATE(R)                                                                           \
  template std::array<Covector4<R>, 2> orthonormal_span<R>(const Covector4<R>&, const Covector4<R>&);   \
  template std::array<Line3<R>, 3> lines_over_flex<R>(const CubicForm<R>&, const ProjPoint2<R>&, int, R); \
  template std::vector<Line3<R>> all_lines<R>(const CubicForm<R>&, const std::vector<ProjPoint2<R>>&);  \
  template R incidence_measure<R>(const Line3<R>&, const Line3<R>&);                                   \
  template bool incident<R>(const Line3<R>&, const Line3<R>&, R);                                      \
  template IncidenceGraph incidence_graph<R>(const std::vector<Line3<R>>&, R);                         \
  template SurfaceData<R> analyze_surface<R>(const CubicForm<R>&, const Tolerances&);

CUBMONO_INSTANTIATE(double)
CUBMONO_INSTANTIATE(long double)

#undef CUBMONO_INSTANTIATE

}  // namespace cubmono
