#include "cubmono/serialize.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace cubmono {

using nlohmann::json;

namespace {

template <class R>
json complex_json(const Complex<R>& z) {
  return json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())});
}

template <class R>
json covector_json(const Covector4<R>& h) {
  json out = json::array();
  for (const auto& z : h) out.push_back(complex_json(z));
  return out;
}

template <class R>
std::string complex_text(const Complex<R>& z, int prec = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.*f%+.*fi", prec, static_cast<double>(z.real()), prec,
                static_cast<double>(z.imag()));
  return buf;
}

std::string class_text(const CohClass& c) {
  std::string out = "(";
  for (int i = 0; i < kRank; ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

std::string flex_perm_cycles(const FlexPerm& p) { return cycle_notation({p.images.begin(), p.images.end()}); }

}  // namespace

json matrix_json(const LatticeMap& m) {
  json rows = json::array();
  for (int r = 0; r < kRank; ++r) {
    json row = json::array();
    for (int c = 0; c < kRank; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const LatticeMap& m, const std::string& indent) {
  std::ostringstream os;
  for (int r = 0; r < kRank; ++r) {
    os << indent;
    for (int c = 0; c < kRank; ++c) os << std::setw(4) << m(r, c);
    os << '\n';
  }
  return os.str();
}

template <class R>
json line_json(const Line3<R>& l) {
  return {{"label", {{"flex", l.label.flex}, {"n", l.label.n}}}, {"h1", covector_json(l.h1)}, {"h2", covector_json(l.h2)}};
}

template <class R>
json surface_json(const SurfaceData<R>& s, Complex<R> lambda) {
  json lines = json::array(), incidence = json::array(), degrees = json::array(), classes = json::array();
  for (const auto& l : s.lines) lines.push_back(line_json(l));
  for (int i = 0; i < kLines; ++i) {
    json row = json::array();
    for (int j = 0; j < kLines; ++j) row.push_back(s.graph(i, j) ? 1 : 0);
    incidence.push_back(row);
    degrees.push_back(s.graph.degree(i));
    classes.push_back(s.classes[i]);
  }
  json flexes = json::array();
  for (const auto& p : s.flexes) flexes.push_back({complex_json(p.x()), complex_json(p.y()), complex_json(p.z())});
  return {{"lambda", complex_json(lambda)}, {"flexes", flexes},     {"lines", lines},
          {"incidence", incidence},         {"degrees", degrees},   {"sixer", s.sixer},
          {"classes", classes}};
}

template <class R>
std::string surface_text(const SurfaceData<R>& s, Complex<R> lambda) {
  std::ostringstream os;
  os << "lambda = " << complex_text(lambda) << "\n\n";
  os << "flexes\n";
  for (std::size_t k = 0; k < s.flexes.size(); ++k) {
    const auto& p = s.flexes[k];
    os << "  P" << k << "  [" << complex_text(p.x()) << " : " << complex_text(p.y()) << " : " << complex_text(p.z())
       << "]\n";
  }
  os << "\nlines (index  flex  w^n  degree  class)\n";
  static const char* const kOmega[] = {"1", "w", "w^2"};
  for (int i = 0; i < kLines; ++i) {
    const auto lab = s.lines[i].label;
    os << "  " << std::setw(2) << i << "  P" << lab.flex << "  " << std::left << std::setw(4) << kOmega[lab.n]
       << std::right << std::setw(3) << s.graph.degree(i) << "   " << class_text(s.classes[i]) << '\n';
  }
  os << "\nsixer:";
  for (int v : s.sixer) os << ' ' << v;
  os << "\nincidences: " << s.graph.edge_count() << '\n';
  return os.str();
}

json relation_json(const RelationResult& r) {
  json j = {{"relation", r.relation}, {"status", r.holds ? "pass" : "fail"}};
  if (!r.holds && !r.witness.empty()) j["witness"] = r.witness;
  return j;
}

json relations_json(const std::vector<RelationResult>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(relation_json(r));
  return out;
}

json census_json(const std::map<int, std::size_t>& c) {
  json out = json::object();
  for (const auto& [k, v] : c) out[std::to_string(k)] = v;
  return out;
}

template <class R>
json monodromy_json(const MonodromyResult<R>& r) {
  json roots = json::array();
  for (const auto& z : r.roots.base) roots.push_back(complex_json(z));
  json flexes = json::array();
  for (const auto& p : r.flexes.base) flexes.push_back({complex_json(p.x()), complex_json(p.y()), complex_json(p.z())});
  return {{"steps", r.roots.steps_used},
          {"flexSteps", r.flexes.steps_used},
          {"baseRoots", roots},
          {"baseFlexes", flexes},
          {"rootPermutation", {{"images", r.roots.perm}, {"cycles", cycle_notation(r.roots.perm)}}},
          {"flexPermutation", {{"images", r.flexes.perm.images}, {"cycles", flex_perm_cycles(r.flexes.perm)}}},
          {"linePermutation",
           {{"images", r.lines.images}, {"cycles", cycle_notation({r.lines.images.begin(), r.lines.images.end()})}}},
          {"matrix", matrix_json(r.matrix)},
          {"trace", r.matrix.trace()},
          {"order", order(r.matrix)}};
}

template <class R>
std::string monodromy_text(const MonodromyResult<R>& r) {
  std::ostringstream os;
  os << "steps " << r.roots.steps_used << " (roots), " << r.flexes.steps_used << " (flexes)\n";
  os << "base roots:";
  for (std::size_t i = 0; i < r.roots.base.size(); ++i) os << "  " << i << ':' << complex_text(r.roots.base[i], 5);
  os << "\nroots  " << cycle_notation(r.roots.perm) << '\n';
  os << "flexes " << flex_perm_cycles(r.flexes.perm) << '\n';
  os << "lines  " << cycle_notation({r.lines.images.begin(), r.lines.images.end()}) << '\n';
  os << "matrix (trace " << r.matrix.trace() << ", order " << order(r.matrix) << ")\n" << matrix_text(r.matrix, "  ");
  return os.str();
}

template <class R>
std::string tracks_csv(const MonodromyResult<R>& r, TrackSeries series) {
  std::ostringstream os;
  os << std::setprecision(17) << "step,t,root-index,re,im\n";
  if (series == TrackSeries::X) {
    const int n = r.roots.steps_used;
    for (int k = 0; k < static_cast<int>(r.roots.tracks.size()); ++k)
      for (std::size_t i = 0; i < r.roots.tracks[k].size(); ++i) {
        const auto& z = r.roots.tracks[k][i];
        os << k << ',' << static_cast<double>(k) / n << ',' << i << ',' << static_cast<double>(z.real()) << ','
           << static_cast<double>(z.imag()) << '\n';
      }
  } else {
    const int n = r.flexes.steps_used;
    for (int k = 0; k < static_cast<int>(r.flexes.tracks.size()); ++k)
      for (std::size_t i = 0; i < r.flexes.tracks[k].size(); ++i) {
        const auto& z = r.flexes.tracks[k][i][1];
        os << k << ',' << static_cast<double>(k) / n << ',' << i + 1 << ',' << static_cast<double>(z.real()) << ','
           << static_cast<double>(z.imag()) << '\n';
      }
  }
  return os.str();
}

#define CUBMONO_INSTANTIATE(R)                                                    \
  template json line_json<R>(const Line3<R>&);                                    \
  template json surface_json<R>(const SurfaceData<R>&, Complex<R>);               \
  template std::string surface_text<R>(const SurfaceData<R>&, Complex<R>);        \
  template json monodromy_json<R>(const MonodromyResult<R>&);                     \
  template std::string monodromy_text<R>(const MonodromyResult<R>&);              \
  template std::string tracks_csv<R>(const MonodromyResult<R>&, TrackSeries);

CUBMONO_INSTANTIATE(double)
CUBMONO_INSTANTIATE(long double)

#undef CUBMONO_INSTANTIATE

}  // namespace cubmono
