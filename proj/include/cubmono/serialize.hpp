#pragma once

// JSON, text and CSV renderings of lines, lattice maps, groups, relation
// reports and monodromy results.

#include <json.hpp>
#include <string>
#include <vector>

#include "cubmono/finite_group.hpp"
#include "cubmono/group_engine.hpp"
#include "cubmono/lattice.hpp"
#include "cubmono/monodromy.hpp"
#include "cubmono/surface_lines.hpp"

namespace cubmono {

/// Row-major 7×7 integer array.
nlohmann::json matrix_json(const LatticeMap& m);
std::string matrix_text(const LatticeMap& m, const std::string& indent = "");

/// {"label":{"flex":k,"n":n},"h1":[[re,im]×4],"h2":[[re,im]×4]}
template <class R>
nlohmann::json line_json(const Line3<R>& l);

/// {"lambda", "lines", "incidence" (27×27 0/1), "degrees", "sixer", "classes"}.
template <class R>
nlohmann::json surface_json(const SurfaceData<R>& s, Complex<R> lambda);

/// Human-readable table of lines, sixer, classes and incidence summary.
template <class R>
std::string surface_text(const SurfaceData<R>& s, Complex<R> lambda);

/// {relation, status, witness?}
nlohmann::json relation_json(const RelationResult& r);
nlohmann::json relations_json(const std::vector<RelationResult>& rs);

/// Element-order census with string keys.
nlohmann::json census_json(const std::map<int, std::size_t>& c);

/// {order, census}
template <class T>
nlohmann::json group_summary(const FiniteGroup<T>& g) {
  return {{"order", g.order()}, {"census", census_json(census(g))}};
}

template <class R>
nlohmann::json monodromy_json(const MonodromyResult<R>& r);

template <class R>
std::string monodromy_text(const MonodromyResult<R>& r);

enum class TrackSeries { X, Y };

/// Columns step,t,root-index,re,im. Series X dumps the root tracks, series Y
/// the y-coordinates of the tracked affine flexes.
template <class R>
std::string tracks_csv(const MonodromyResult<R>& r, TrackSeries series);

}  // namespace cubmono
