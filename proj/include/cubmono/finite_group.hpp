#pragma once

// Finite groups given by generators, enumerated by breadth-first closure.
//
// T must provide T::identity(), operator*, operator== and std::hash<T>, and an
// ADL-visible inverse(const T&).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubmono/error.hpp"

namespace cubmono {

template <class T>
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1000;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  /// Right-multiplication BFS from the identity. Element order is discovery
  /// order, so the result is a deterministic function of the generator list.
  static FiniteGroup closure(std::vector<T> gens, std::size_t cap = kDefaultCap) {
    FiniteGroup g;
    g.gens_ = std::move(gens);
    g.insert(T::identity(), kNone, kNone);
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
      for (std::size_t k = 0; k < g.gens_.size(); ++k) {
        T y = g.elements_[head] * g.gens_[k];
        if (g.index_.count(y)) continue;
        if (g.elements_.size() >= cap)
          throw Error(ErrorKind::CapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
        g.insert(std::move(y), head, k);
      }
    }
    return g;
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<T>& elements() const { return elements_; }
  const std::vector<T>& generators() const { return gens_; }
  const T& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const T& x) const { return index_.count(x) != 0; }
  std::optional<std::size_t> index_of(const T& x) const {
    const auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// BFS tree: element i = element parent(i) · generator via(i).
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t via(std::size_t i) const { return via_[i]; }

  /// Generator indices w with element i = g_{w₀} g_{w₁} ⋯.
  std::vector<std::size_t> word(std::size_t i) const {
    std::vector<std::size_t> w;
    for (; parent_[i] != kNone; i = parent_[i]) w.push_back(via_[i]);
    std::reverse(w.begin(), w.end());
    return w;
  }

 private:
  void insert(T x, std::size_t parent, std::size_t via) {
    index_.emplace(x, elements_.size());
    elements_.push_back(std::move(x));
    parent_.push_back(parent);
    via_.push_back(via);
  }

  std::vector<T> gens_;
  std::vector<T> elements_;
  std::unordered_map<T, std::size_t> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> via_;
};

/// Smallest k ≥ 1 with xᵏ = 1, or 0 if none up to `cap`.
template <class T>
int element_order(const T& x, int cap = 1000) {
  const T id = T::identity();
  T p = x;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * x;
  }
  return 0;
}

/// Element order → number of elements of that order.
template <class T>
std::map<int, std::size_t> census(const FiniteGroup<T>& g) {
  std::map<int, std::size_t> out;
  for (const auto& x : g.elements()) ++out[element_order(x)];
  return out;
}

template <class T>
bool commute(const T& a, const T& b) {
  return a * b == b * a;
}

template <class T>
bool is_abelian(const FiniteGroup<T>& g) {
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!commute(gs[i], gs[j])) return false;
  return true;
}

/// The subgroup generated by `elems`, which must already be closed. Picks
/// generators greedily in list order. Throws NotASubgroup if the set is not
/// closed.
template <class T>
FiniteGroup<T> subgroup_from_elements(const std::vector<T>& elems, std::size_t cap = 100000) {
  std::vector<T> gens;
  FiniteGroup<T> h = FiniteGroup<T>::closure({}, cap);
  for (const auto& x : elems) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = FiniteGroup<T>::closure(gens, cap);
    if (h.order() > elems.size()) throw Error(ErrorKind::NotASubgroup, "element set is not closed");
  }
  if (h.order() != elems.size() && !elems.empty())
    throw Error(ErrorKind::NotASubgroup, "element set is not closed");
  return h;
}

/// Size of the conjugacy class of x, by orbit BFS under conjugation by the
/// generators. Throws NotAMember if x ∉ G.
template <class T>
std::size_t conjugacy_class_size(const T& x, const FiniteGroup<T>& g) {
  if (!g.contains(x)) throw Error(ErrorKind::NotAMember, "element is not in the group");
  std::vector<T> gens_inv;
  for (const auto& s : g.generators()) gens_inv.push_back(inverse(s));
  std::vector<T> orbit{x};
  std::unordered_map<T, bool> seen{{x, true}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      T y = g.generators()[k] * orbit[head] * gens_inv[k];
      if (seen.emplace(y, true).second) orbit.push_back(std::move(y));
    }
  }
  return orbit.size();
}

/// C_G(x). Asserts |G| = |class(x)|·|C_G(x)|.
template <class T>
FiniteGroup<T> centralizer(const T& x, const FiniteGroup<T>& g) {
  if (!g.contains(x)) throw Error(ErrorKind::NotAMember, "element is not in the group");
  std::vector<T> elems;
  for (const auto& y : g.elements())
    if (commute(x, y)) elems.push_back(y);
  auto c = subgroup_from_elements(elems, g.order() + 1);
  if (c.order() * conjugacy_class_size(x, g) != g.order())
    throw Error(ErrorKind::WrongOrder, "orbit-stabilizer count does not match the group order");
  return c;
}

template <class T>
std::vector<T> center(const FiniteGroup<T>& g) {
  std::vector<T> out;
  for (const auto& y : g.elements())
    if (std::all_of(g.generators().begin(), g.generators().end(), [&](const T& s) { return commute(s, y); }))
      out.push_back(y);
  return out;
}

template <class T>
FiniteGroup<T> intersect(const FiniteGroup<T>& a, const FiniteGroup<T>& b) {
  std::vector<T> common;
  for (const auto& x : a.elements())
    if (b.contains(x)) common.push_back(x);
  return subgroup_from_elements(common, a.order() + 1);
}

template <class T>
bool is_subset(const FiniteGroup<T>& h, const FiniteGroup<T>& g) {
  return std::all_of(h.elements().begin(), h.elements().end(), [&](const T& x) { return g.contains(x); });
}

/// Whether gHg⁻¹ = H for every generator g of G. Throws NotASubgroup unless
/// H ⊆ G.
template <class T>
bool is_normal(const FiniteGroup<T>& h, const FiniteGroup<T>& g) {
  if (!is_subset(h, g)) throw Error(ErrorKind::NotASubgroup, "H is not contained in G");
  for (const auto& s : g.generators()) {
    const T si = inverse(s);
    for (const auto& x : h.generators())
      if (!h.contains(s * x * si)) return false;
  }
  return true;
}

/// Same element set (order-insensitive).
template <class T>
bool same_elements(const FiniteGroup<T>& a, const FiniteGroup<T>& b) {
  return a.order() == b.order() && is_subset(a, b);
}

}  // namespace cubmono
