#pragma once

// Frames and the spinor dictionary for neutral signature (+,+,-,-).
//
// Null tetrad:        ds^2 = 2 e^1 e^2 + 2 e^3 e^4,   g = [[0,1],[1,0]] (+) [[0,1],[1,0]]
// Orthonormal tetrad: ds^2 = (E^1)^2 + (E^2)^2 - (E^3)^2 - (E^4)^2
// Relation (vectors): sqrt2 E1 = e1 + e2, sqrt2 E2 = e3 + e4,
//                     sqrt2 E3 = e1 - e2, sqrt2 E4 = e3 - e4.
//
// Spinor conventions: eps_{12} = eps^{12} = +1, psi^A = eps^{AB} psi_B,
// psi_A = psi^B eps_{BA}; same for dotted indices.
// Dictionary (g^{A Bd}) = sqrt2 [[e4, e2], [e1, -e3]], i.e.
// g_a^{A Bd} = sqrt2 * SPIN_DICT[a][A][Bd].

#include "ricci/errors.hpp"
#include "ricci/linalg.hpp"
#include "ricci/scalar.hpp"

#include <array>

namespace ricci {

enum class Tetrad { Null, Orthonormal };

enum class CausalType { Spacelike, Timelike, Null };

template <class T>
Mat4<T> metric(Tetrad t) {
  Mat4<T> g = zero_mat<T>();
  if (t == Tetrad::Null) {
    g[0][1] = g[1][0] = T(1);
    g[2][3] = g[3][2] = T(1);
  } else {
    g[0][0] = g[1][1] = T(1);
    g[2][2] = g[3][3] = T(-1);
  }
  return g;
}

// Both metrics are involutive: g^{-1} = g componentwise.
template <class T>
Mat4<T> metric_inverse(Tetrad t) {
  return metric<T>(t);
}

namespace detail {
// Columns are the null-frame components of the orthonormal vectors E_a
// (up to the common 1/sqrt2 handled by the outer factor 1/2).
inline constexpr int kNullOfOrth[4][4] = {
    // e-index i: component of sqrt2*E_j in e_i
    {1, 0, 1, 0},
    {1, 0, -1, 0},
    {0, 1, 0, 1},
    {0, 1, 0, -1},
};
// Columns are the orthonormal components of sqrt2 * e_j.
inline constexpr int kOrthOfNull[4][4] = {
    {1, 1, 0, 0},
    {0, 0, 1, 1},
    {1, -1, 0, 0},
    {0, 0, 1, -1},
};
}  // namespace detail

// Covariant rank-2 component conversion between the two frames; exact for
// rational inputs because the sqrt2 factors pair up.
template <class T>
Mat4<T> convert_components(const Mat4<T>& c, Tetrad from, Tetrad to) {
  if (from == to) return c;
  const auto& b = (from == Tetrad::Null) ? detail::kNullOfOrth : detail::kOrthOfNull;
  Mat4<T> out = zero_mat<T>();
  const T half = T(1) / T(2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      T s(0);
      for (int p = 0; p < 4; ++p) {
        if (b[p][i] == 0) continue;
        for (int q = 0; q < 4; ++q) {
          if (b[q][j] == 0) continue;
          s += T(b[p][i]) * T(b[q][j]) * c[p][q];
        }
      }
      out[i][j] = half * s;
    }
  return out;
}

template <class T>
T metric_norm(const Vec4<T>& v, Tetrad t) {
  const Mat4<T> g = metric<T>(t);
  T s(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += g[i][j] * v[i] * v[j];
  return s;
}

template <class T>
CausalType causal_type(const Vec4<T>& v, Tetrad t, double tol = 1e-9) {
  bool zero = true;
  double scale = 0.0;
  for (const auto& x : v) {
    if (!(x == T(0))) zero = false;
    scale = std::max(scale, std::abs(to_double(x)));
  }
  if (zero) throw ClassifyError(ErrorKind::ZeroVector, "causal_type of zero vector");
  const T n = metric_norm(v, t);
  const int s = sign_of(n, tol * scale * scale);
  if (s > 0) return CausalType::Spacelike;
  if (s < 0) return CausalType::Timelike;
  return CausalType::Null;
}

// --- spinor dictionary -----------------------------------------------------

// g_a^{A Bd} = sqrt2 * SPIN_DICT[a][A][Bd]
inline constexpr int SPIN_DICT[4][2][2] = {
    {{0, 0}, {1, 0}},   // a=1: slot (A,Bd)=(2,1d)
    {{0, 1}, {0, 0}},   // a=2: slot (1,2d)
    {{0, 0}, {0, -1}},  // a=3: slot (2,2d)
    {{1, 0}, {0, 0}},   // a=4: slot (1,1d)
};

// g^a_{A Bd} = sqrt2 * SPIN_DICT_LOW[a][A][Bd]  (frame index raised with the
// null metric, spinor indices lowered with eps).
inline constexpr int SPIN_DICT_LOW[4][2][2] = {
    {{0, 0}, {-1, 0}},  // a=1
    {{0, -1}, {0, 0}},  // a=2
    {{0, 0}, {0, 1}},   // a=3
    {{-1, 0}, {0, 0}},  // a=4
};

// k^A l_A with eps^{12} = +1: k^1 = k_2, k^2 = -k_1.
template <class T>
T dyad_pairing(const std::array<T, 2>& k, const std::array<T, 2>& l) {
  return k[1] * l[0] - k[0] * l[1];
}

template <class T>
struct DyadTetrad {
  // Covector components in the ambient null tetrad: et[i][a] = e~^{i+1}_a.
  std::array<Vec4<T>, 4> et;
};

// Null tetrad generated by a normalized dyad pair:
//   sqrt2 e~1_a =  k_A l_Bd g_a^{A Bd},  sqrt2 e~2_a =  l_A k_Bd g_a^{A Bd},
//  -sqrt2 e~3_a =  k_A k_Bd g_a^{A Bd},  sqrt2 e~4_a =  l_A l_Bd g_a^{A Bd}.
template <class T>
DyadTetrad<T> dyad_vectors(const std::array<T, 2>& k, const std::array<T, 2>& l,
                           const std::array<T, 2>& kd, const std::array<T, 2>& ld) {
  if (!(dyad_pairing(k, l) == T(1)))
    throw ClassifyError(ErrorKind::UnnormalizedDyad, "undotted dyad: k^A l_A != 1");
  if (!(dyad_pairing(kd, ld) == T(1)))
    throw ClassifyError(ErrorKind::UnnormalizedDyad, "dotted dyad: k^A l_A != 1");
  auto contract = [](const std::array<T, 2>& p, const std::array<T, 2>& q) {
    Vec4<T> out{T(0), T(0), T(0), T(0)};
    for (int a = 0; a < 4; ++a)
      for (int A = 0; A < 2; ++A)
        for (int B = 0; B < 2; ++B)
          if (SPIN_DICT[a][A][B] != 0) out[a] += p[A] * q[B] * T(SPIN_DICT[a][A][B]);
    return out;
  };
  DyadTetrad<T> out;
  out.et[0] = contract(k, ld);
  out.et[1] = contract(l, kd);
  out.et[2] = contract(k, kd);
  for (auto& x : out.et[2]) x = -x;
  out.et[3] = contract(l, ld);
  return out;
}

}  // namespace ricci
