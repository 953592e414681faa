#include "cubmono/lattice.hpp"

namespace cubmono {

namespace {

constexpr int sign(int i) { return i == 0 ? 1 : -1; }

}  // namespace

int pairing(const CohClass& a, const CohClass& b) {
  int s = 0;
  for (int i = 0; i < kRank; ++i) s += sign(i) * a[i] * b[i];
  return s;
}

CohClass basis(int i) {
  CohClass e{};
  e[i] = 1;
  return e;
}

CohClass operator+(const CohClass& a, const CohClass& b) {
  CohClass r;
  for (int i = 0; i < kRank; ++i) r[i] = a[i] + b[i];
  return r;
}

CohClass operator-(const CohClass& a, const CohClass& b) {
  CohClass r;
  for (int i = 0; i < kRank; ++i) r[i] = a[i] - b[i];
  return r;
}

CohClass operator*(int s, const CohClass& a) {
  CohClass r;
  for (int i = 0; i < kRank; ++i) r[i] = s * a[i];
  return r;
}

LatticeMap LatticeMap::identity() {
  LatticeMap id;
  for (int i = 0; i < kRank; ++i) id(i, i) = 1;
  return id;
}

LatticeMap LatticeMap::from_columns(const std::array<CohClass, kRank>& cols) {
  LatticeMap out;
  for (int c = 0; c < kRank; ++c)
    for (int r = 0; r < kRank; ++r) out(r, c) = cols[c][r];
  return out;
}

CohClass LatticeMap::column(int c) const {
  CohClass v;
  for (int r = 0; r < kRank; ++r) v[r] = (*this)(r, c);
  return v;
}

CohClass LatticeMap::apply(const CohClass& v) const {
  CohClass out{};
  for (int r = 0; r < kRank; ++r)
    for (int c = 0; c < kRank; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

LatticeMap LatticeMap::transpose() const {
  LatticeMap t;
  for (int r = 0; r < kRank; ++r)
    for (int c = 0; c < kRank; ++c) t(c, r) = (*this)(r, c);
  return t;
}

int LatticeMap::trace() const {
  int t = 0;
  for (int i = 0; i < kRank; ++i) t += (*this)(i, i);
  return t;
}

bool LatticeMap::preserves_form() const {
  for (int i = 0; i < kRank; ++i)
    for (int j = i; j < kRank; ++j)
      if (pairing(column(i), column(j)) != (i == j ? sign(i) : 0)) return false;
  return true;
}

bool LatticeMap::fixes_canonical() const { return apply(kCanonical) == kCanonical; }

std::array<std::int64_t, kRank + 1> LatticeMap::char_poly() const {
  // Faddeev–LeVerrier; every division is exact over Z.
  using Row = std::array<std::int64_t, kRank>;
  std::array<Row, kRank> a{}, mk{}, am{};
  for (int r = 0; r < kRank; ++r)
    for (int c = 0; c < kRank; ++c) a[r][c] = (*this)(r, c);
  std::array<std::int64_t, kRank + 1> coeff{};
  coeff[kRank] = 1;
  for (int k = 1; k <= kRank; ++k) {
    for (int r = 0; r < kRank; ++r)
      for (int c = 0; c < kRank; ++c) {
        std::int64_t s = 0;
        for (int t = 0; t < kRank; ++t) s += a[r][t] * mk[t][c];
        am[r][c] = s;
      }
    for (int i = 0; i < kRank; ++i) am[i][i] += coeff[kRank - k + 1];
    mk = am;
    std::int64_t tr = 0;
    for (int r = 0; r < kRank; ++r)
      for (int t = 0; t < kRank; ++t) tr += a[r][t] * mk[t][r];
    coeff[kRank - k] = -tr / k;
  }
  return coeff;
}

LatticeMap operator*(const LatticeMap& a, const LatticeMap& b) {
  LatticeMap out;
  for (int r = 0; r < kRank; ++r)
    for (int t = 0; t < kRank; ++t) {
      const int v = a(r, t);
      if (v == 0) continue;
      for (int c = 0; c < kRank; ++c) out(r, c) += v * b(t, c);
    }
  return out;
}

LatticeMap inverse(const LatticeMap& m) {
  LatticeMap out;
  for (int r = 0; r < kRank; ++r)
    for (int c = 0; c < kRank; ++c) out(r, c) = sign(r) * m(c, r) * sign(c);
  return out;
}

int order(const LatticeMap& m, int cap) {
  const LatticeMap id = LatticeMap::identity();
  LatticeMap p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return 0;
}

LatticeMap reflection(const CohClass& root) {
  std::array<CohClass, kRank> cols;
  for (int i = 0; i < kRank; ++i) {
    const CohClass e = basis(i);
    cols[i] = e + pairing(e, root) * root;
  }
  return LatticeMap::from_columns(cols);
}

std::array<CohClass, 6> simple_roots() {
  std::array<CohClass, 6> roots;
  for (int i = 1; i <= 5; ++i) roots[i - 1] = basis(i) - basis(i + 1);
  roots[5] = basis(0) - basis(1) - basis(2) - basis(3);
  return roots;
}

std::array<LatticeMap, 6> weyl_generators() {
  std::array<LatticeMap, 6> gens;
  const auto roots = simple_roots();
  for (int i = 0; i < 6; ++i) gens[i] = reflection(roots[i]);
  return gens;
}

TraceCharacter trace_character(const LatticeMap& m) {
  const int t = m.trace();
  return {t, t - 1};
}

}  // namespace cubmono
