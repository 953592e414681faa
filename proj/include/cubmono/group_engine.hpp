#pragma once

// Abstract models of H₃(Z/3), SL₂(Z/3) and their semidirect product, the
// conjugation relations between the generators H₁, H₂, G₁, G₂ and Ω, the
// order-24 identification, and isomorphism checks along generator words.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubmono/error.hpp"
#include "cubmono/finite_group.hpp"
#include "cubmono/lattice.hpp"

namespace cubmono {

constexpr int mod3(int v) { return ((v % 3) + 3) % 3; }

/// Unipotent (1 a c; 0 1 b; 0 0 1) mod 3.
struct HeisenbergElt {
  int a = 0, b = 0, c = 0;

  static HeisenbergElt identity() { return {}; }
  static HeisenbergElt make(int a, int b, int c) { return {mod3(a), mod3(b), mod3(c)}; }

  friend HeisenbergElt operator*(const HeisenbergElt& x, const HeisenbergElt& y) {
    return make(x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b);
  }
  friend bool operator==(const HeisenbergElt&, const HeisenbergElt&) = default;
};

HeisenbergElt inverse(const HeisenbergElt& x);

/// 2×2 matrix over Z/3 with determinant 1, row-major.
struct SL2Z3Elt {
  std::array<int, 4> m{1, 0, 0, 1};

  static SL2Z3Elt identity() { return {}; }
  static SL2Z3Elt make(int p, int q, int r, int s) { return {{mod3(p), mod3(q), mod3(r), mod3(s)}}; }
  /// All 24 elements in lexicographic order of entries.
  static std::vector<SL2Z3Elt> all();

  int det() const { return mod3(m[0] * m[3] - m[1] * m[2]); }
  std::array<int, 2> apply(int a, int b) const { return {mod3(m[0] * a + m[1] * b), mod3(m[2] * a + m[3] * b)}; }

  friend SL2Z3Elt operator*(const SL2Z3Elt& x, const SL2Z3Elt& y) {
    return make(x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
                x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]);
  }
  friend bool operator==(const SL2Z3Elt&, const SL2Z3Elt&) = default;
};

SL2Z3Elt inverse(const SL2Z3Elt& x);

/// (a, b) ↦ M(a, b), with c shifted by 2(a′b′ − ab) so the map is an
/// automorphism of H₃(Z/3).
HeisenbergElt phi_action(const SL2Z3Elt& m, const HeisenbergElt& h);

/// (a, b) ↦ M(a, b) with c left unchanged. Not an automorphism in general;
/// kept to document that.
HeisenbergElt phi_action_literal(const SL2Z3Elt& m, const HeisenbergElt& h);

/// Number of (M, h, k) with φ_M(hk) ≠ φ_M(h)φ_M(k).
int count_automorphism_failures(const std::function<HeisenbergElt(const SL2Z3Elt&, const HeisenbergElt&)>& phi);

/// Number of (M, N, h) with φ_{MN}(h) ≠ φ_M(φ_N(h)).
int count_action_failures(const std::function<HeisenbergElt(const SL2Z3Elt&, const HeisenbergElt&)>& phi);

/// (h₁, g₁)(h₂, g₂) = (h₁·φ_{g₁}(h₂), g₁g₂).
struct SemidirectElt {
  HeisenbergElt h;
  SL2Z3Elt g;

  static SemidirectElt identity() { return {}; }
  friend SemidirectElt operator*(const SemidirectElt& x, const SemidirectElt& y) {
    return {x.h * phi_action(x.g, y.h), x.g * y.g};
  }
  friend bool operator==(const SemidirectElt&, const SemidirectElt&) = default;
};

SemidirectElt inverse(const SemidirectElt& x);
std::string to_string(const SemidirectElt& x);

/// All 27·24 elements.
std::vector<SemidirectElt> semidirect_elements();

/// The model group, generated by ((1,0,0),I), ((0,1,0),I), (0,(1 0;1 1)) and
/// (0,(1 2;0 1)).
FiniteGroup<SemidirectElt> semidirect_model();

/// Number of failures of (xy)z = x(yz) over `trials` seeded random triples.
int associativity_failures(int trials = 1000, std::uint32_t seed = 20240611u);

struct GeneratorSet {
  LatticeMap h1, h2, g1, g2, omega;
};

struct RelationResult {
  std::string relation;
  bool holds = false;
  std::string witness;  // first differing entry when the relation fails
};

/// G₁H₁G₁⁻¹ = ΩH₁H₂, G₂H₁G₂⁻¹ = H₁, G₁H₂G₁⁻¹ = H₂, G₂H₂G₂⁻¹ = Ω⁻¹H₁⁻¹H₂,
/// checked by exact integer equality.
std::vector<RelationResult> conjugation_relations(const GeneratorSet& s);
bool all_hold(const std::vector<RelationResult>& r);

/// Relabelling of pipeline generators: optional swaps of H₁↔H₂ and G₁↔G₂,
/// then optional inversion of each of the five maps.
struct RelationVariant {
  bool swap_h = false, swap_g = false;
  bool inv_h1 = false, inv_h2 = false, inv_g1 = false, inv_g2 = false, inv_omega = false;

  GeneratorSet apply(const GeneratorSet& s) const;
  std::string describe() const;
  bool is_identity() const;
};

/// First variant (identity first, then by increasing number of changes) under
/// which all four relations hold.
std::optional<RelationVariant> find_relation_variant(const GeneratorSet& s);

/// Images of H₁, H₂, G₁, G₂ in the model: ((1,0,0),I), ((0,1,0),I),
/// (0,(1 0;1 1)), (0,(1 2;0 1)).
std::array<SemidirectElt, 4> standard_generator_images();

/// The same with central parts c = 1 on H₁ and H₂.
std::array<SemidirectElt, 4> literal_generator_images();

enum class Order24Kind { SL2Z3, S4, A4xZ2, Other };
std::string to_string(Order24Kind k);

template <class T>
struct Order24Evidence {
  bool abelian = false;
  bool has_order4 = false;
  bool has_order6 = false;
  bool sylow3_normal = false;
  Order24Kind kind = Order24Kind::Other;
};

/// Classifies by abelianness, presence of elements of order 4 and 6, and
/// normality of a 3-Sylow. Throws WrongOrder unless |G| = 24.
template <class T>
Order24Evidence<T> identify_order24(const FiniteGroup<T>& g) {
  if (g.order() != 24) throw Error(ErrorKind::WrongOrder, "expected a group of order 24");
  Order24Evidence<T> ev;
  ev.abelian = is_abelian(g);
  std::optional<T> three;
  for (const auto& x : g.elements()) {
    const int o = element_order(x);
    ev.has_order4 |= o == 4;
    ev.has_order6 |= o == 6;
    if (o == 3 && !three) three = x;
  }
  if (three) ev.sylow3_normal = is_normal(FiniteGroup<T>::closure({*three}), g);
  if (ev.abelian || !three || ev.sylow3_normal)
    ev.kind = Order24Kind::Other;
  else if (ev.has_order4 && ev.has_order6)
    ev.kind = Order24Kind::SL2Z3;
  else if (ev.has_order4)
    ev.kind = Order24Kind::S4;
  else if (ev.has_order6)
    ev.kind = Order24Kind::A4xZ2;
  return ev;
}

template <class T>
struct IsomorphismResult {
  std::vector<SemidirectElt> images;  // ψ of each element, by index
  std::size_t edges_checked = 0;
};

/// Extends generator i ↦ images[i] along BFS words and checks every Cayley
/// edge x → x·gₖ and injectivity. Throws WrongOrder unless |G| = 648, and
/// NotIsomorphic with a failing word otherwise.
template <class T>
IsomorphismResult<T> verify_isomorphism(const FiniteGroup<T>& g, const std::vector<SemidirectElt>& images) {
  if (g.order() != 648) throw Error(ErrorKind::WrongOrder, "expected a group of order 648");
  if (images.size() != g.generators().size())
    throw Error(ErrorKind::InvalidInput, "one image per generator is required");
  IsomorphismResult<T> out;
  out.images.assign(g.order(), SemidirectElt::identity());
  for (std::size_t i = 1; i < g.order(); ++i) out.images[i] = out.images[g.parent(i)] * images[g.via(i)];

  auto word_text = [&](std::size_t i, std::size_t k) {
    std::string w;
    for (auto s : g.word(i)) w += "g" + std::to_string(s) + " ";
    return w + "g" + std::to_string(k);
  };
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      const auto j = g.index_of(g[i] * g.generators()[k]);
      ++out.edges_checked;
      if (!j || !(out.images[*j] == out.images[i] * images[k]))
        throw Error(ErrorKind::NotIsomorphic, "relation fails along word " + word_text(i, k));
    }
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (out.images[i] == out.images[j])
        throw Error(ErrorKind::NotIsomorphic, "map is not injective on word " + word_text(j, 0));
  return out;
}

/// Whether verify_isomorphism succeeds.
template <class T>
bool is_isomorphism(const FiniteGroup<T>& g, const std::vector<SemidirectElt>& images) {
  try {
    verify_isomorphism(g, images);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotIsomorphic) return false;
    throw;
  }
}

/// Searches images ((1,0,c₁),I), ((0,1,c₂),I), (h₃,(1 0;1 1)), (h₄,(1 2;0 1))
/// for the generators of `g` (in order H₁, H₂, G₁, G₂).
template <class T>
std::optional<std::array<SemidirectElt, 4>> search_generator_images(const FiniteGroup<T>& g) {
  const auto base = standard_generator_images();
  for (int c1 = 0; c1 < 3; ++c1)
    for (int c2 = 0; c2 < 3; ++c2)
      for (int t3 = 0; t3 < 27; ++t3)
        for (int t4 = 0; t4 < 27; ++t4) {
          auto im = base;
          im[0].h.c = c1;
          im[1].h.c = c2;
          im[2].h = HeisenbergElt::make(t3 / 9, t3 / 3, t3);
          im[3].h = HeisenbergElt::make(t4 / 9, t4 / 3, t4);
          if (is_isomorphism(g, {im.begin(), im.end()})) return im;
        }
  return std::nullopt;
}

}  // namespace cubmono

template <>
struct std::hash<cubmono::HeisenbergElt> {
  std::size_t operator()(const cubmono::HeisenbergElt& x) const noexcept {
    return static_cast<std::size_t>(x.a * 9 + x.b * 3 + x.c);
  }
};

template <>
struct std::hash<cubmono::SL2Z3Elt> {
  std::size_t operator()(const cubmono::SL2Z3Elt& x) const noexcept {
    return static_cast<std::size_t>(((x.m[0] * 3 + x.m[1]) * 3 + x.m[2]) * 3 + x.m[3]);
  }
};

template <>
struct std::hash<cubmono::SemidirectElt> {
  std::size_t operator()(const cubmono::SemidirectElt& x) const noexcept {
    return std::hash<cubmono::HeisenbergElt>{}(x.h) * 81 + std::hash<cubmono::SL2Z3Elt>{}(x.g);
  }
};
