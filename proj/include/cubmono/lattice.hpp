#pragma once

// The lattice Z^{1,6} = H²(X; Z) of a cubic surface in the basis
// e₀, e₁, …, e₆, its intersection form J = diag(1, −1, …, −1), and the
// reflections generating W(E₆) inside the stabilizer of K.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace cubmono {

constexpr int kRank = 7;

using CohClass = std::array<int, kRank>;

/// K = −3e₀ + e₁ + ⋯ + e₆.
constexpr CohClass kCanonical{-3, 1, 1, 1, 1, 1, 1};

/// aᵀ J b.
int pairing(const CohClass& a, const CohClass& b);

/// Unit vector e_i.
CohClass basis(int i);

CohClass operator+(const CohClass& a, const CohClass& b);
CohClass operator-(const CohClass& a, const CohClass& b);
CohClass operator*(int s, const CohClass& a);

/// 7×7 integer matrix, row-major. Columns are the images of e₀, …, e₆.
struct LatticeMap {
  std::array<int, kRank * kRank> m{};

  static LatticeMap identity();
  static LatticeMap from_columns(const std::array<CohClass, kRank>& cols);

  int& operator()(int r, int c) { return m[r * kRank + c]; }
  int operator()(int r, int c) const { return m[r * kRank + c]; }

  CohClass column(int c) const;
  CohClass apply(const CohClass& v) const;
  LatticeMap transpose() const;
  int trace() const;

  bool preserves_form() const;
  bool fixes_canonical() const;
  bool is_valid() const { return preserves_form() && fixes_canonical(); }

  /// Coefficients of det(tI − M), ascending; index 7 is the leading 1.
  std::array<std::int64_t, kRank + 1> char_poly() const;

  friend LatticeMap operator*(const LatticeMap& a, const LatticeMap& b);
  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;
  friend auto operator<=>(const LatticeMap&, const LatticeMap&) = default;
};

/// J Mᵀ J, which is M⁻¹ whenever M preserves the form.
LatticeMap inverse(const LatticeMap& m);

/// Smallest k ≥ 1 with Mᵏ = 1, or 0 if none up to `cap`.
int order(const LatticeMap& m, int cap = 1000);

/// s_α(x) = x + (x, α)·α for a root with (α, α) = −2.
LatticeMap reflection(const CohClass& root);

/// e₁−e₂, e₂−e₃, e₃−e₄, e₄−e₅, e₅−e₆, e₀−e₁−e₂−e₃.
std::array<CohClass, 6> simple_roots();
std::array<LatticeMap, 6> weyl_generators();

struct TraceCharacter {
  int trace = 0;
  int chi_v6 = 0;  // trace on the 6-dimensional summand orthogonal to K
};

TraceCharacter trace_character(const LatticeMap& m);

}  // namespace cubmono

template <>
struct std::hash<cubmono::LatticeMap> {
  std::size_t operator()(const cubmono::LatticeMap& a) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : a.m) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
