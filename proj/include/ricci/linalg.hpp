#pragma once

#include "ricci/scalar.hpp"

#include <array>
#include <vector>

namespace ricci {

template <class T>
using Vec4 = std::array<T, 4>;

template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;

template <class T>
Mat4<T> zero_mat() {
  Mat4<T> m{};
  for (auto& row : m)
    for (auto& x : row) x = T(0);
  return m;
}

template <class T>
Mat4<T> identity_mat() {
  Mat4<T> m = zero_mat<T>();
  for (int i = 0; i < 4; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
Mat4<T> matmul(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> c = zero_mat<T>();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (a[i][k] == T(0)) continue;
      for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

template <class T>
Vec4<T> matvec(const Mat4<T>& a, const Vec4<T>& v) {
  Vec4<T> r{T(0), T(0), T(0), T(0)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += a[i][j] * v[j];
  return r;
}

template <class T>
Mat4<T> transpose(const Mat4<T>& a) {
  Mat4<T> c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[j][i];
  return c;
}

template <class T>
Mat4<T> mat_add(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

template <class T>
Mat4<T> mat_scale(const T& k, const Mat4<T>& a) {
  Mat4<T> c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = k * a[i][j];
  return c;
}

template <class T>
T trace(const Mat4<T>& a) {
  return a[0][0] + a[1][1] + a[2][2] + a[3][3];
}

template <class T>
bool mat_is_zero(const Mat4<T>& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!(x == T(0))) return false;
  return true;
}

template <class T>
double mat_max_abs(const Mat4<T>& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (const auto& x : row) m = std::max(m, std::abs(to_double(x)));
  return m;
}

// Exact kernel basis of a 4x4 matrix over an exact field (Gauss-Jordan).
inline std::vector<Vec4<Rat>> kernel_basis(const Mat4<Rat>& m) {
  // Row-reduce a copy.
  std::array<std::array<Rat, 4>, 4> a = m;
  int pivot_col_of_row[4] = {-1, -1, -1, -1};
  int row = 0;
  for (int col = 0; col < 4 && row < 4; ++col) {
    int piv = -1;
    for (int r = row; r < 4; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    Rat inv = Rat(1) / a[row][col];
    for (int j = 0; j < 4; ++j) a[row][j] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < 4; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col_of_row[row] = col;
    ++row;
  }
  bool is_pivot[4] = {false, false, false, false};
  for (int r = 0; r < row; ++r) is_pivot[pivot_col_of_row[r]] = true;
  std::vector<Vec4<Rat>> basis;
  for (int free_col = 0; free_col < 4; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec4<Rat> v{Rat(0), Rat(0), Rat(0), Rat(0)};
    v[free_col] = 1;
    for (int r = 0; r < row; ++r) v[pivot_col_of_row[r]] = -a[r][free_col];
    basis.push_back(v);
  }
  return basis;
}

// Inertia (n_plus, n_minus, n_zero) of a small symmetric rational matrix,
// via Descartes' rule on its characteristic polynomial (exact: a symmetric
// matrix has only real eigenvalues, so the sign-change count is sharp).
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
};

inline Inertia inertia_symmetric(const std::vector<std::vector<Rat>>& g) {
  const int n = static_cast<int>(g.size());
  // Characteristic polynomial via Faddeev-LeVerrier: p(x) = x^n + c1 x^{n-1} + ... + cn.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> c(n + 1, Rat(0));
  c[0] = 1;
  std::vector<std::vector<Rat>> acc(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) acc[i][i] = 1;  // M_1 multiplier: A * I
  for (int k = 1; k <= n; ++k) {
    // m = g * acc
    std::vector<std::vector<Rat>> prod(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) prod[i][j] += g[i][l] * acc[l][j];
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += prod[i][i];
    c[k] = -tr / k;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc[i][j] = prod[i][j] + (i == j ? c[k] : Rat(0));
  }
  Inertia out;
  while (out.zero < n && c[n - out.zero] == 0) ++out.zero;
  // p(x)/x^zero has nonzero constant term; count sign changes for +roots.
  std::vector<int> signs;
  for (int k = 0; k <= n - out.zero; ++k)
    if (c[k] != 0) signs.push_back(c[k].sign());
  for (size_t i = 0; i + 1 < signs.size(); ++i)
    if (signs[i] != signs[i + 1]) ++out.pos;
  out.neg = n - out.zero - out.pos;
  return out;
}

}  // namespace ricci
