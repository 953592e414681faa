#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>

namespace cubmono {

template <class R, std::size_t N>
using Vec = std::array<std::complex<R>, N>;

/// Dense N×N complex matrix, row-major.
template <class R, std::size_t N>
struct Mat {
  std::array<std::array<std::complex<R>, N>, N> a{};

  static Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m.a[i][i] = std::complex<R>(1);
    return m;
  }

  std::complex<R>& operator()(std::size_t r, std::size_t c) { return a[r][c]; }
  const std::complex<R>& operator()(std::size_t r, std::size_t c) const { return a[r][c]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const auto xik = x.a[i][k];
        if (xik == std::complex<R>(0)) continue;
        for (std::size_t j = 0; j < N; ++j) out.a[i][j] += xik * y.a[k][j];
      }
    return out;
  }

  /// Matrix times column vector.
  friend Vec<R, N> operator*(const Mat& m, const Vec<R, N>& v) {
    Vec<R, N> out{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out[i] += m.a[i][j] * v[j];
    return out;
  }
};

/// Row vector times matrix (covector pullback).
template <class R, std::size_t N>
Vec<R, N> row_times(const Vec<R, N>& v, const Mat<R, N>& m) {
  Vec<R, N> out{};
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t i = 0; i < N; ++i) out[j] += v[i] * m.a[i][j];
  return out;
}

template <class R, std::size_t N>
std::complex<R> determinant(Mat<R, N> m) {
  std::complex<R> det(1);
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(m.a[r][col]) > std::abs(m.a[pivot][col])) pivot = r;
    if (m.a[pivot][col] == std::complex<R>(0)) return std::complex<R>(0);
    if (pivot != col) {
      std::swap(m.a[pivot], m.a[col]);
      det = -det;
    }
    det *= m.a[col][col];
    for (std::size_t r = col + 1; r < N; ++r) {
      const auto factor = m.a[r][col] / m.a[col][col];
      for (std::size_t c = col; c < N; ++c) m.a[r][c] -= factor * m.a[col][c];
    }
  }
  return det;
}

/// Gauss–Jordan inverse; nullopt when a pivot vanishes exactly.
template <class R, std::size_t N>
std::optional<Mat<R, N>> inverse(Mat<R, N> m) {
  Mat<R, N> inv = Mat<R, N>::identity();
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(m.a[r][col]) > std::abs(m.a[pivot][col])) pivot = r;
    if (m.a[pivot][col] == std::complex<R>(0)) return std::nullopt;
    std::swap(m.a[pivot], m.a[col]);
    std::swap(inv.a[pivot], inv.a[col]);
    const auto p = m.a[col][col];
    for (std::size_t c = 0; c < N; ++c) {
      m.a[col][c] /= p;
      inv.a[col][c] /= p;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col) continue;
      const auto factor = m.a[r][col];
      if (factor == std::complex<R>(0)) continue;
      for (std::size_t c = 0; c < N; ++c) {
        m.a[r][c] -= factor * m.a[col][c];
        inv.a[r][c] -= factor * inv.a[col][c];
      }
    }
  }
  return inv;
}

template <class R, std::size_t N>
R norm(const Vec<R, N>& v) {
  R s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

/// Hermitian inner product <u, v> = Σ conj(u_i) v_i.
template <class R, std::size_t N>
std::complex<R> hdot(const Vec<R, N>& u, const Vec<R, N>& v) {
  std::complex<R> s(0);
  for (std::size_t i = 0; i < N; ++i) s += std::conj(u[i]) * v[i];
  return s;
}

/// Sine of the angle between the complex lines spanned by u and v
/// (0 when they represent the same projective point).
template <class R, std::size_t N>
R projective_distance(const Vec<R, N>& u, const Vec<R, N>& v) {
  const R nu = norm(u), nv = norm(v);
  if (nu == 0 || nv == 0) return R(1);
  // Residual of projecting v̂ onto û; accurate for nearly equal points.
  Vec<R, N> uh = u, vh = v;
  for (auto& x : uh) x /= nu;
  for (auto& x : vh) x /= nv;
  const auto c = hdot(uh, vh);
  Vec<R, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = vh[i] - c * uh[i];
  return norm(r);
}

}  // namespace cubmono
