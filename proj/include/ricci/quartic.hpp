#pragma once

// Root-pattern classification of depressed quartics
//   W(x) = x^4 + c2 x^2 - c3 x + c4
// over the reals (9 patterns) and over C (5 patterns), by exact sign tests on
// the invariants I, J, K, L, N, P, Delta. For floating-point coefficients the
// sign tests use thresholds scaled by the natural root magnitude.

#include "ricci/scalar.hpp"

#include <array>
#include <cmath>
#include <string>

namespace ricci {

template <class T>
struct DepressedQuartic {
  T c2{}, c3{}, c4{};
};

template <class T>
struct QuarticInvariants {
  T I{}, J{}, K{}, L{}, N{}, P{}, Delta{};
};

enum class RootPattern {
  // real-coefficient patterns
  R1R2R3R4,    // four distinct real roots
  R1R2ZZb,     // two real + one conjugate pair
  Z1Zb1Z2Zb2,  // two distinct conjugate pairs
  R1R2R3x2,    // one double + two simple real
  Rx2ZZb,      // one double real + conjugate pair
  R1x2R2x2,    // two distinct double real
  Zx2Zbx2,     // doubled conjugate pair
  R1R2x3,      // triple + simple real
  Rx4,         // quadruple real root
  // complex-coefficient patterns
  Z1Z2Z3Z4,
  Z1Z2Z3x2,
  Z1x2Z2x2,
  Z1Z2x3,
  Zx4,
};

inline bool is_real_pattern(RootPattern p) {
  return p <= RootPattern::Rx4;
}

inline const char* pattern_name(RootPattern p) {
  switch (p) {
    case RootPattern::R1R2R3R4: return "R1R2R3R4";
    case RootPattern::R1R2ZZb: return "R1R2ZZ~";
    case RootPattern::Z1Zb1Z2Zb2: return "Z1Z1~Z2Z2~";
    case RootPattern::R1R2R3x2: return "R1R2R3^2";
    case RootPattern::Rx2ZZb: return "R^2ZZ~";
    case RootPattern::R1x2R2x2: return "R1^2R2^2";
    case RootPattern::Zx2Zbx2: return "Z^2Z~^2";
    case RootPattern::R1R2x3: return "R1R2^3";
    case RootPattern::Rx4: return "R^4";
    case RootPattern::Z1Z2Z3Z4: return "Z1Z2Z3Z4";
    case RootPattern::Z1Z2Z3x2: return "Z1Z2Z3^2";
    case RootPattern::Z1x2Z2x2: return "Z1^2Z2^2";
    case RootPattern::Z1Z2x3: return "Z1Z2^3";
    case RootPattern::Zx4: return "Z^4";
  }
  return "?";
}

template <class T>
QuarticInvariants<T> invariants(const DepressedQuartic<T>& q) {
  QuarticInvariants<T> v;
  const T &c2 = q.c2, &c3 = q.c3, &c4 = q.c4;
  v.J = -(T(1) / T(8)) * (T(1) / T(2) * c3 * c3 - T(4) / T(3) * c2 * c4 + T(1) / T(27) * c2 * c2 * c2);
  v.I = c4 + c2 * c2 / T(12);
  v.K = c3 / T(4);
  v.L = c2 / T(6);
  v.N = c2 * c2 / T(4) - c4;
  v.P = T(-9) * c3 * c3 - T(2) * c2 * (c2 * c2 - T(4) * c4);
  v.Delta = T(256) * (v.I * v.I * v.I - T(27) * v.J * v.J);
  return v;
}

namespace detail {
// Scale-aware thresholds for float mode; if the roots have magnitude ~ s then
// an invariant of weight w scales like s^w.
inline double root_scale(const DepressedQuartic<double>& q) {
  double s = 0.0;
  s = std::max(s, std::pow(std::abs(q.c2), 1.0 / 2.0));
  s = std::max(s, std::pow(std::abs(q.c3), 1.0 / 3.0));
  s = std::max(s, std::pow(std::abs(q.c4), 1.0 / 4.0));
  return s;
}

template <class T>
struct SignCtx {
  double tol = 0.0;
  double scale = 0.0;
  int sgn(const T& x, int weight) const {
    if constexpr (std::is_same_v<T, Rat>) {
      (void)weight;
      return x.sign();
    } else {
      double thr = tol * std::pow(std::max(scale, 1e-150), weight);
      return sign_of(x, thr);
    }
  }
};
}  // namespace detail

// Real-coefficient decision tree. scale_floor (float mode only) is a lower
// bound on the root-magnitude scale used for the sign thresholds; callers
// whose coefficients carry roundoff from larger intermediate quantities (a
// depression shift, a characteristic polynomial of an O(s) matrix) must pass
// that larger scale, otherwise noise on exactly-vanishing coefficients is
// mistaken for signal.
template <class T>
RootPattern classify_real(const DepressedQuartic<T>& q, double tol = 1e-9,
                          double scale_floor = 0.0) {
  const auto inv = invariants(q);
  detail::SignCtx<T> s;
  if constexpr (std::is_same_v<T, double>) {
    s.tol = tol;
    s.scale = std::max(detail::root_scale(q), scale_floor);
  } else {
    (void)scale_floor;
  }
  const int sD = s.sgn(inv.Delta, 12);
  if (sD < 0) return RootPattern::R1R2ZZb;
  if (sD > 0) {
    if (s.sgn(inv.L, 2) < 0 && s.sgn(inv.N, 4) > 0) return RootPattern::R1R2R3R4;
    return RootPattern::Z1Zb1Z2Zb2;
  }
  // Delta == 0: at least one repeated root.
  const int sI = s.sgn(inv.I, 4);
  const int sJ = s.sgn(inv.J, 6);
  if (sI == 0 && sJ == 0) {
    // Triple or quadruple root. With I = J = 0, K and N vanish together.
    if (s.sgn(inv.N, 4) != 0 && s.sgn(inv.K, 3) != 0) return RootPattern::R1R2x3;
    return RootPattern::Rx4;
  }
  if (s.sgn(inv.K, 3) == 0 && s.sgn(inv.N, 4) == 0) {
    // Two double roots; J's sign separates real from conjugate doubles.
    return sJ < 0 ? RootPattern::R1x2R2x2 : RootPattern::Zx2Zbx2;
  }
  const int sP = s.sgn(inv.P, 6);
  if (sP > 0) return RootPattern::R1R2R3x2;
  if (sP < 0) return RootPattern::Rx2ZZb;
  // Not reachable for exact rational input with Delta = 0 outside the branches
  // above; in float mode treat as the boundary-nearest double-root case.
  return RootPattern::R1R2R3x2;
}

// Complex-coefficient decision tree (Gaussian-rational or complex<double>-like T).
template <class T>
RootPattern classify_complex(const DepressedQuartic<Cx<T>>& q, double tol = 1e-9) {
  const Cx<T>&c2 = q.c2, &c3 = q.c3, &c4 = q.c4;
  const Cx<T> J = Cx<T>(T(-1) / T(8)) *
                  (Cx<T>(T(1) / T(2)) * c3 * c3 - Cx<T>(T(4) / T(3)) * c2 * c4 +
                   Cx<T>(T(1) / T(27)) * c2 * c2 * c2);
  const Cx<T> I = c4 + Cx<T>(T(1) / T(12)) * c2 * c2;
  const Cx<T> L = Cx<T>(T(1) / T(6)) * c2;
  const Cx<T> P = Cx<T>(T(-9)) * c3 * c3 - Cx<T>(T(2)) * c2 * (c2 * c2 - Cx<T>(T(4)) * c4);
  const Cx<T> Delta = Cx<T>(T(256)) * (I * I * I - Cx<T>(T(27)) * J * J);
  double scale = 0.0;
  if constexpr (std::is_same_v<T, double>) {
    DepressedQuartic<double> mag{std::hypot(c2.re, c2.im), std::hypot(c3.re, c3.im),
                                 std::hypot(c4.re, c4.im)};
    scale = std::max(detail::root_scale(mag), 1e-150);
  }
  auto zero = [&](const Cx<T>& x, int weight) {
    if constexpr (std::is_same_v<T, Rat>) {
      (void)weight;
      return x.is_zero();
    } else {
      return std::hypot(x.re, x.im) <= tol * std::pow(scale, weight);
    }
  };
  if (!zero(Delta, 12)) return RootPattern::Z1Z2Z3Z4;
  if (zero(I, 4) && zero(J, 6)) {
    return zero(L, 2) ? RootPattern::Zx4 : RootPattern::Z1Z2x3;
  }
  return zero(P, 6) ? RootPattern::Z1x2Z2x2 : RootPattern::Z1Z2Z3x2;
}

// --- binary quartic forms ---------------------------------------------------
// a[0] z^4 + a[1] z^3 + a[2] z^2 + a[3] z + a[4], projectively on (z:1).

template <class T>
using BinaryForm = std::array<T, 5>;

template <class T>
bool form_is_zero(const BinaryForm<T>& a, double tol = 0.0) {
  if constexpr (std::is_same_v<T, Rat>) {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  } else {
    double m = 0.0;
    for (const auto& x : a) m = std::max(m, std::abs(x));
    return m <= tol;
  }
}

// Substitute (z, w) -> (alpha z + beta w, gamma z + delta w); multiplicity
// structure is invariant under any invertible real substitution.
template <class T>
BinaryForm<T> form_substitute(const BinaryForm<T>& a, int alpha, int beta, int gamma, int delta) {
  BinaryForm<T> out{T(0), T(0), T(0), T(0), T(0)};
  // (alpha z + beta)^k (gamma z + delta)^{4-k} expansion per original monomial.
  for (int k = 0; k <= 4; ++k) {
    const T& coef = a[4 - k];  // coefficient of z^k w^{4-k}
    if (coef == T(0)) continue;
    // poly1 = (alpha z + beta)^k, poly2 = (gamma z + delta)^{4-k}
    std::array<long long, 5> p1{1, 0, 0, 0, 0}, p2{1, 0, 0, 0, 0};
    int d1 = 0, d2 = 0;
    for (int i = 0; i < k; ++i) {
      std::array<long long, 5> np{0, 0, 0, 0, 0};
      for (int d = 0; d <= d1; ++d) {
        np[d + 1] += p1[d] * alpha;
        np[d] += p1[d] * beta;
      }
      p1 = np;
      ++d1;
    }
    for (int i = 0; i < 4 - k; ++i) {
      std::array<long long, 5> np{0, 0, 0, 0, 0};
      for (int d = 0; d <= d2; ++d) {
        np[d + 1] += p2[d] * gamma;
        np[d] += p2[d] * delta;
      }
      p2 = np;
      ++d2;
    }
    for (int d = 0; d <= d1; ++d)
      for (int e = 0; e <= d2; ++e) {
        if (p1[d] == 0 || p2[e] == 0) continue;
        out[4 - (d + e)] += coef * T(static_cast<int>(p1[d] * p2[e]));
      }
  }
  return out;
}

// Classify the projective root pattern of a real binary quartic form; a root
// at infinity (vanishing leading coefficient) is moved to a finite point by a
// rational substitution first. The zero form must be excluded by the caller.
template <class T>
RootPattern classify_binary_form(BinaryForm<T> a, double tol = 1e-9) {
  static constexpr int subs[][4] = {
      {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, -1, 1}, {1, -1, 1, 1},
      {2, 1, 1, 1}, {1, 2, 1, 1}, {3, 1, 1, 2},
  };
  if constexpr (std::is_same_v<T, Rat>) {
    for (const auto& sub : subs) {
      if (a[0] != 0) break;
      BinaryForm<T> b = form_substitute(a, sub[0], sub[1], sub[2], sub[3]);
      if (b[0] != 0) { a = b; break; }
    }
  } else {
    // Pick the substitution whose new leading coefficient (the form evaluated
    // at (alpha, gamma)) is largest relative to the form's size.
    double best = -1.0;
    int best_idx = 0;
    for (int i = 0; i < 7; ++i) {
      const auto& sub = subs[i];
      double z = sub[0], w = sub[2];
      double val = std::abs(a[0] * z * z * z * z + a[1] * z * z * z * w + a[2] * z * z * w * w +
                            a[3] * z * w * w * w + a[4] * w * w * w * w);
      double nrm = std::pow(std::hypot(z, w), 4);
      if (val / nrm > best) { best = val / nrm; best_idx = i; }
    }
    const auto& sub = subs[best_idx];
    a = form_substitute(a, sub[0], sub[1], sub[2], sub[3]);
  }
  // Normalize to monic and depress: x = z + a1/(4 a0).
  const T a0 = a[0];
  const T b1 = a[1] / a0, b2 = a[2] / a0, b3 = a[3] / a0, b4 = a[4] / a0;
  const T sh = b1 / T(4);
  DepressedQuartic<T> q;
  q.c2 = b2 - T(6) * sh * sh;
  q.c3 = -(b3 - T(2) * b2 * sh + T(8) * sh * sh * sh);
  q.c4 = b4 - b3 * sh + b2 * sh * sh - T(3) * sh * sh * sh * sh;
  double floor = 0.0;
  if constexpr (std::is_same_v<T, double>) {
    // The depression works with the monic pre-shift coefficients, so its
    // roundoff is machine epsilon relative to their scale B (including the
    // leading 1), even when c2, c3, c4 cancel to zero. A floor of B itself
    // would swamp small-but-genuine root spreads (the depression removes the
    // centroid, which dominates B), so shrink it just enough that every
    // weight-w threshold tol*floor^w still clears the eps*B^w noise: the
    // binding weight is 12 (Delta).
    const double bscale =
        std::max({1.0, std::abs(b1), std::pow(std::abs(b2), 1.0 / 2.0),
                  std::pow(std::abs(b3), 1.0 / 3.0), std::pow(std::abs(b4), 1.0 / 4.0)});
    floor = bscale * std::pow(2.3e-13 / std::min(tol, 1.0), 1.0 / 12.0);
  }
  return classify_real(q, tol, floor);
}

}  // namespace ricci
