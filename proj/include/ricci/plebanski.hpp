#pragma once

// Spinor image of the traceless Ricci tensor, the two Plebanski spinors, and
// their Petrov-Penrose types via the associated binary quartics.
//
// All spinor work is done in the null tetrad. The dictionary carries sqrt2
// factors that always appear squared here, so every map below is exact over
// the rationals.

#include "ricci/frame.hpp"
#include "ricci/linalg.hpp"
#include "ricci/quartic.hpp"

#include <array>

namespace ricci {

// C_{AB Cd Dd}: undotted pair (A,B), dotted pair (Cd,Dd).
template <class T>
using SpinorImage = std::array<std::array<std::array<std::array<T, 2>, 2>, 2>, 2>;

// Totally symmetric 4-index spinor stored by its 5 independent components:
// v[k] = component with k indices equal to 2.
template <class T>
struct SymmetricQuarticSpinor {
  std::array<T, 5> v{};
  bool operator==(const SymmetricQuarticSpinor&) const = default;
};

// C_{AB Cd Dd} = 1/4 C_ab g^a_{A Cd} g^b_{B Dd}; the two sqrt2's give 1/2.
template <class T>
SpinorImage<T> spinor_image(const Mat4<T>& c_null) {
  SpinorImage<T> img;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B)
      for (int Cd = 0; Cd < 2; ++Cd)
        for (int Dd = 0; Dd < 2; ++Dd) {
          T s(0);
          for (int a = 0; a < 4; ++a) {
            const int sa = SPIN_DICT_LOW[a][A][Cd];
            if (sa == 0) continue;
            for (int b = 0; b < 4; ++b) {
              const int sb = SPIN_DICT_LOW[b][B][Dd];
              if (sb == 0) continue;
              s += c_null[a][b] * T(sa * sb);
            }
          }
          img[A][B][Cd][Dd] = s / T(2);
        }
  return img;
}

// Inverse map: C_ab = g_a^{A Cd} g_b^{B Dd} C_{AB Cd Dd}.
template <class T>
Mat4<T> reconstruct(const SpinorImage<T>& img) {
  Mat4<T> c = zero_mat<T>();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      T s(0);
      for (int A = 0; A < 2; ++A)
        for (int B = 0; B < 2; ++B)
          for (int Cd = 0; Cd < 2; ++Cd)
            for (int Dd = 0; Dd < 2; ++Dd) {
              const int sa = SPIN_DICT[a][A][Cd];
              const int sb = SPIN_DICT[b][B][Dd];
              if (sa == 0 || sb == 0) continue;
              s += T(sa * sb) * img[A][B][Cd][Dd];
            }
      c[a][b] = T(2) * s;
    }
  return c;
}

namespace detail {
// eps^{AB} with eps^{12} = +1 (0-based antisymmetric table).
inline constexpr int EPS_UP[2][2] = {{0, 1}, {-1, 0}};

template <class T>
T sym4_component(const std::array<std::array<std::array<std::array<T, 2>, 2>, 2>, 2>& t, int a,
                 int b, int c, int d) {
  // average over the 24 permutations of (a,b,c,d)
  static constexpr int perm[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
      {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
      {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
      {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  const int idx[4] = {a, b, c, d};
  T tot(0);
  for (const auto& p : perm) tot += t[idx[p[0]]][idx[p[1]]][idx[p[2]]][idx[p[3]]];
  return tot / T(24);
}
}  // namespace detail

// The two Plebanski spinors:
//   V_{ABCD}    = 4 C_{(AB}^{Md Nd} C_{CD) Md Nd}
//   V_{Ad Bd Cd Dd} = 4 C^{MN}_{(Ad Bd} C_{MN Cd Dd)}
template <class T>
std::pair<SymmetricQuarticSpinor<T>, SymmetricQuarticSpinor<T>> plebanski_pair(
    const SpinorImage<T>& img) {
  using detail::EPS_UP;
  // Raise the dotted pair: C_{AB}^{Md Nd} = eps^{Md Cd} eps^{Nd Dd} C_{AB Cd Dd}.
  SpinorImage<T> updot{};
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B)
      for (int M = 0; M < 2; ++M)
        for (int N = 0; N < 2; ++N) {
          T s(0);
          for (int Cd = 0; Cd < 2; ++Cd)
            for (int Dd = 0; Dd < 2; ++Dd) {
              const int e = EPS_UP[M][Cd] * EPS_UP[N][Dd];
              if (e != 0) s += T(e) * img[A][B][Cd][Dd];
            }
          updot[A][B][M][N] = s;
        }
  // Raise the undotted pair: C^{MN}_{Cd Dd} = eps^{MA} eps^{NB} C_{AB Cd Dd}.
  SpinorImage<T> upund{};
  for (int M = 0; M < 2; ++M)
    for (int N = 0; N < 2; ++N)
      for (int Cd = 0; Cd < 2; ++Cd)
        for (int Dd = 0; Dd < 2; ++Dd) {
          T s(0);
          for (int A = 0; A < 2; ++A)
            for (int B = 0; B < 2; ++B) {
              const int e = EPS_UP[M][A] * EPS_UP[N][B];
              if (e != 0) s += T(e) * img[A][B][Cd][Dd];
            }
          upund[M][N][Cd][Dd] = s;
        }
  SpinorImage<T> vt{}, vdt{};
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B)
      for (int C = 0; C < 2; ++C)
        for (int D = 0; D < 2; ++D) {
          T s(0), sd(0);
          for (int M = 0; M < 2; ++M)
            for (int N = 0; N < 2; ++N) {
              s += updot[A][B][M][N] * img[C][D][M][N];
              sd += img[M][N][A][B] * upund[M][N][C][D];
            }
          vt[A][B][C][D] = T(4) * s;
          vdt[A][B][C][D] = T(4) * sd;
        }
  SymmetricQuarticSpinor<T> v, vd;
  for (int k = 0; k <= 4; ++k) {
    const int i[4] = {k > 3 ? 1 : 0, k > 2 ? 1 : 0, k > 1 ? 1 : 0, k > 0 ? 1 : 0};
    v.v[k] = detail::sym4_component(vt, i[0], i[1], i[2], i[3]);
    vd.v[k] = detail::sym4_component(vdt, i[0], i[1], i[2], i[3]);
  }
  return {v, vd};
}

// Binary quartic V(z) = V0 z^4 + 4 V1 z^3 + 6 V2 z^2 + 4 V3 z + V4.
template <class T>
BinaryForm<T> binary_quartic(const SymmetricQuarticSpinor<T>& s) {
  return {s.v[0], T(4) * s.v[1], T(6) * s.v[2], T(4) * s.v[3], s.v[4]};
}

enum class PPType { I_r, I_rc, I_c, II_r, II_rc, D_r, D_c, III_r, N_r, Zero };

inline const char* pp_type_name(PPType t) {
  switch (t) {
    case PPType::I_r: return "[I]_r";
    case PPType::I_rc: return "[I]_rc";
    case PPType::I_c: return "[I]_c";
    case PPType::II_r: return "[II]_r";
    case PPType::II_rc: return "[II]_rc";
    case PPType::D_r: return "[D]_r";
    case PPType::D_c: return "[D]_c";
    case PPType::III_r: return "[III]_r";
    case PPType::N_r: return "[N]_r";
    case PPType::Zero: return "[-]";
  }
  return "?";
}

inline PPType pp_from_pattern(RootPattern p) {
  switch (p) {
    case RootPattern::R1R2R3R4: return PPType::I_r;
    case RootPattern::R1R2ZZb: return PPType::I_rc;
    case RootPattern::Z1Zb1Z2Zb2: return PPType::I_c;
    case RootPattern::R1R2R3x2: return PPType::II_r;
    case RootPattern::Rx2ZZb: return PPType::II_rc;
    case RootPattern::R1x2R2x2: return PPType::D_r;
    case RootPattern::Zx2Zbx2: return PPType::D_c;
    case RootPattern::R1R2x3: return PPType::III_r;
    case RootPattern::Rx4: return PPType::N_r;
    default: throw ClassifyError(ErrorKind::InconsistentPattern, "complex pattern has no PP type");
  }
}

// scale_floor (float mode): magnitude of the tensor the spinor was derived
// from; the form is quadratic in it, so an all-noise form is recognized as the
// zero form against scale_floor^2 rather than against its own noise level.
template <class T>
PPType pp_type(const SymmetricQuarticSpinor<T>& s, double tol = 1e-9, double scale_floor = 0.0) {
  BinaryForm<T> a = binary_quartic(s);
  double scale = 0.0;
  if constexpr (std::is_same_v<T, double>) {
    for (const auto& x : a) scale = std::max(scale, std::abs(x));
    scale = std::max(scale, scale_floor * scale_floor);
  }
  if (form_is_zero(a, tol * scale)) return PPType::Zero;
  return pp_from_pattern(classify_binary_form(a, tol));
}

// Dyad substitution (z, w) -> (alpha z + beta w, gamma z + gamma w) acting on
// the quartic spinor through its binary form; used for Moebius-invariance
// checks of pp_type.
template <class T>
SymmetricQuarticSpinor<T> substitute(const SymmetricQuarticSpinor<T>& s, int alpha, int beta,
                                     int gamma, int delta) {
  BinaryForm<T> b = form_substitute(binary_quartic(s), alpha, beta, gamma, delta);
  SymmetricQuarticSpinor<T> out;
  out.v = {b[0], b[1] / T(4), b[2] / T(6), b[3] / T(4), b[4]};
  return out;
}

}  // namespace ricci
