#pragma once

// Eigenstructure of the mixed traceless Ricci matrix C^a_b: eigenvalues with
// algebraic/geometric multiplicities, causal class of each real eigenspace,
// and the minimal-polynomial exponents. Exact over the rationals whenever the
// eigendata are rational (always true for canonical fixtures); otherwise an
// explicitly flagged floating-point fallback is used.

#include "ricci/errors.hpp"
#include "ricci/frame.hpp"
#include "ricci/linalg.hpp"
#include "ricci/poly.hpp"
#include "ricci/quartic.hpp"
#include "ricci/roots_oracle.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ricci {

enum class CausalClass { S, T, N, NS, NT, NST };

inline const char* causal_class_name(CausalClass c) {
  switch (c) {
    case CausalClass::S: return "s";
    case CausalClass::T: return "t";
    case CausalClass::N: return "n";
    case CausalClass::NS: return "ns";
    case CausalClass::NT: return "nt";
    case CausalClass::NST: return "nst";
  }
  return "?";
}

inline CausalClass class_from_inertia(const Inertia& in) {
  if (in.pos > 0 && in.neg > 0) return CausalClass::NST;
  if (in.pos > 0 && in.zero > 0) return CausalClass::NS;
  if (in.neg > 0 && in.zero > 0) return CausalClass::NT;
  if (in.pos > 0) return CausalClass::S;
  if (in.neg > 0) return CausalClass::T;
  return CausalClass::N;
}

template <class T>
struct MixedMatrix {
  Mat4<T> m;
  Tetrad tetrad = Tetrad::Null;
};

// Raise one index of a symmetric covariant tensor; validates symmetry and
// tracelessness.
template <class T>
MixedMatrix<T> mixed(const Mat4<T>& c, Tetrad tetrad, double tol = 1e-9) {
  const double scale = std::max(1.0, mat_max_abs(c));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!is_zero_scalar(T(c[i][j] - c[j][i]), tol * scale))
        throw ClassifyError(ErrorKind::AsymmetryViolation, "components are not symmetric");
  MixedMatrix<T> out;
  out.tetrad = tetrad;
  if (tetrad == Tetrad::Null) {
    // g^{-1} swaps rows 1<->2 and 3<->4.
    out.m[0] = c[1];
    out.m[1] = c[0];
    out.m[2] = c[3];
    out.m[3] = c[2];
  } else {
    out.m[0] = c[0];
    out.m[1] = c[1];
    for (int j = 0; j < 4; ++j) {
      out.m[2][j] = -c[2][j];
      out.m[3][j] = -c[3][j];
    }
  }
  if (!is_zero_scalar(trace(out.m), tol * scale))
    throw ClassifyError(ErrorKind::TraceViolation, "mixed matrix has nonzero trace");
  return out;
}

// Characteristic polynomial x^4 + c2 x^2 - c3 x + c4 of the (traceless) mixed
// matrix, computed by two independent routes (Faddeev-LeVerrier and principal
// minors) which must agree.
template <class T>
DepressedQuartic<T> char_coeffs(const MixedMatrix<T>& mm, double tol = 1e-9) {
  const Mat4<T>& m = mm.m;
  // Route 1: Faddeev-LeVerrier.
  const Mat4<T> id = identity_mat<T>();
  T c1 = -trace(m);
  Mat4<T> acc = m;
  Mat4<T> m2 = matmul(m, mat_add(acc, mat_scale(c1, id)));
  T c2 = -trace(m2) / T(2);
  Mat4<T> m3 = matmul(m, mat_add(m2, mat_scale(c2, id)));
  T c3 = -trace(m3) / T(3);
  Mat4<T> m4 = matmul(m, mat_add(m3, mat_scale(c3, id)));
  T c4 = -trace(m4) / T(4);
  // Route 2: sums of principal minors.
  T s2(0), s3(0), s4(0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) s2 += m[i][i] * m[j][j] - m[i][j] * m[j][i];
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) {
        s3 += m[i][i] * (m[j][j] * m[k][k] - m[j][k] * m[k][j]) -
              m[i][j] * (m[j][i] * m[k][k] - m[j][k] * m[k][i]) +
              m[i][k] * (m[j][i] * m[k][j] - m[j][j] * m[k][i]);
      }
  {  // 4x4 determinant by cofactor expansion along the first row
    T det(0);
    for (int j = 0; j < 4; ++j) {
      T minor[3][3];
      for (int r = 1, rr = 0; r < 4; ++r, ++rr)
        for (int cidx = 0, cc = 0; cidx < 4; ++cidx) {
          if (cidx == j) continue;
          minor[rr][cc++] = m[r][cidx];
        }
      T d3 = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1]) -
             minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0]) +
             minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
      det += ((j % 2 == 0) ? T(1) : T(-1)) * m[0][j] * d3;
    }
    s4 = det;
  }
  const double sc = std::max(1.0, mat_max_abs(m));
  if (!is_zero_scalar(T(c2 - s2), tol * sc * sc) || !is_zero_scalar(T(c3 + s3), tol * sc * sc * sc) ||
      !is_zero_scalar(T(c4 - s4), tol * sc * sc * sc * sc))
    throw ClassifyError(ErrorKind::Internal, "characteristic coefficient routes disagree");
  (void)c1;
  DepressedQuartic<T> q;
  q.c2 = c2;
  q.c3 = -c3;  // char poly = x^4 + c2 x^2 + c3 x + c4; W-form uses -c3
  q.c4 = c4;
  return q;
}

struct EigenEntry {
  bool pair = false;     // conjugate eigenvalue pair
  double re = 0.0;       // real part (the eigenvalue itself if !pair)
  double im = 0.0;       // +imaginary part for pairs
  std::string value_str; // exact rendering when available
  int alg = 0;           // algebraic multiplicity (per member for pairs)
  int geo = 0;           // eigenspace dimension (complex dim per member for pairs)
  int q = 0;             // minimal-polynomial exponent of this factor
  bool has_cls = false;  // real eigenvalues carry a causal class
  CausalClass cls = CausalClass::N;
};

struct EigenReport {
  std::vector<EigenEntry> entries;
  int v = 0;      // total eigenvector count (conjugate pairs counted twice)
  bool exact = true;
  std::vector<std::string> notes;
};

namespace detail {

struct Factor {           // (x - r) or irreducible (x^2 + p x + q)
  bool quad = false;
  Rat r{}, p{}, q{};
  int mult = 0;
};

// Multiplicity structure implied by a real root pattern:
// (real multiplicities, conjugate-pair multiplicities).
inline void pattern_mults(RootPattern pat, std::vector<int>* rm, std::vector<int>* zm) {
  rm->clear();
  zm->clear();
  switch (pat) {
    case RootPattern::R1R2R3R4: *rm = {1, 1, 1, 1}; break;
    case RootPattern::R1R2ZZb: *rm = {1, 1}; *zm = {1}; break;
    case RootPattern::Z1Zb1Z2Zb2: *zm = {1, 1}; break;
    case RootPattern::R1R2R3x2: *rm = {2, 1, 1}; break;
    case RootPattern::Rx2ZZb: *rm = {2}; *zm = {1}; break;
    case RootPattern::R1x2R2x2: *rm = {2, 2}; break;
    case RootPattern::Zx2Zbx2: *zm = {2}; break;
    case RootPattern::R1R2x3: *rm = {3, 1}; break;
    case RootPattern::Rx4: *rm = {4}; break;
    default: throw ClassifyError(ErrorKind::InconsistentPattern, "complex pattern for a real matrix");
  }
}

// Try to factor W exactly over Q according to the known root pattern.
// Returns nullopt when the eigendata are irrational.
inline std::optional<std::vector<Factor>> factor_exact(const DepressedQuartic<Rat>& qq,
                                                       RootPattern pat) {
  const Poly w = {qq.c4, -qq.c3, qq.c2, Rat(0), Rat(1)};
  std::vector<Factor> fs;
  auto lin = [](const Rat& r, int m) { Factor f; f.quad = false; f.r = r; f.mult = m; return f; };
  auto quad = [](const Rat& p, const Rat& q, int m) {
    Factor f; f.quad = true; f.p = p; f.q = q; f.mult = m; return f;
  };
  auto verify = [&](const std::vector<Factor>& v) {
    Poly prod = {Rat(1)};
    for (const auto& f : v)
      for (int i = 0; i < f.mult; ++i)
        prod = poly_mul(prod, f.quad ? Poly{f.q, f.p, Rat(1)} : Poly{-f.r, Rat(1)});
    return poly_trim(prod) == poly_trim(w);
  };

  const Poly g = poly_gcd(w, poly_deriv(w));

  switch (pat) {
    case RootPattern::Rx4: {
      if (qq.c2 != 0 || qq.c3 != 0 || qq.c4 != 0)
        throw ClassifyError(ErrorKind::InconsistentPattern, "quadruple-root pattern with nonzero coefficients");
      fs = {lin(Rat(0), 4)};
      break;
    }
    case RootPattern::R1R2x3: {
      // gcd = (x - r)^2 -> r rational automatically.
      if (poly_deg(g) != 2)
        throw ClassifyError(ErrorKind::InconsistentPattern, "triple-root pattern without quadratic gcd");
      const Rat r = -g[1] / Rat(2);
      if (g[0] != r * r)
        throw ClassifyError(ErrorKind::InconsistentPattern, "gcd is not a perfect square");
      fs = {lin(r, 3), lin(Rat(-3) * r, 1)};
      break;
    }
    case RootPattern::R1x2R2x2:
    case RootPattern::Zx2Zbx2: {
      if (poly_deg(g) != 2)
        throw ClassifyError(ErrorKind::InconsistentPattern, "double-double pattern without quadratic gcd");
      const Rat p = g[1], q0 = g[0];
      const Rat disc = p * p - Rat(4) * q0;
      if (pat == RootPattern::Zx2Zbx2) {
        if (!(disc < 0)) throw ClassifyError(ErrorKind::InconsistentPattern, "expected complex double pair");
        fs = {quad(p, q0, 2)};
      } else {
        Rat sq;
        if (!rational_sqrt(disc, &sq)) return std::nullopt;  // irrational double roots
        fs = {lin((-p + sq) / Rat(2), 2), lin((-p - sq) / Rat(2), 2)};
      }
      break;
    }
    case RootPattern::R1R2R3x2:
    case RootPattern::Rx2ZZb: {
      if (poly_deg(g) != 1)
        throw ClassifyError(ErrorKind::InconsistentPattern, "single-double pattern without linear gcd");
      const Rat r = -g[0];
      Poly rest = poly_divmod(w, poly_mul(Poly{-r, Rat(1)}, Poly{-r, Rat(1)})).first;
      if (poly_deg(rest) != 2) throw ClassifyError(ErrorKind::Internal, "bad deflation");
      const Rat p = rest[1] / rest[2], q0 = rest[0] / rest[2];
      const Rat disc = p * p - Rat(4) * q0;
      if (pat == RootPattern::Rx2ZZb) {
        if (!(disc < 0)) throw ClassifyError(ErrorKind::InconsistentPattern, "expected complex simple pair");
        fs = {lin(r, 2), quad(p, q0, 1)};
      } else {
        Rat sq;
        if (!rational_sqrt(disc, &sq)) return std::nullopt;
        fs = {lin(r, 2), lin((-p + sq) / Rat(2), 1), lin((-p - sq) / Rat(2), 1)};
      }
      break;
    }
    case RootPattern::R1R2R3R4:
    case RootPattern::R1R2ZZb: {
      // Locate rational real roots from float approximations, verify exactly.
      const auto roots = quartic_roots(0.0, to_double(qq.c2), to_double(-qq.c3), to_double(qq.c4));
      std::vector<Rat> found;
      Poly rem = w;
      for (const auto& z : roots) {
        if (std::abs(z.imag()) > 1e-7 * std::max(1.0, std::abs(z))) continue;
        Rat r;
        if (rationalize_root(rem, z.real(), &r)) {
          found.push_back(r);
          rem = poly_divmod(rem, Poly{-r, Rat(1)}).first;
        }
      }
      if (pat == RootPattern::R1R2R3R4) {
        if (found.size() != 4) return std::nullopt;
        for (const Rat& r : found) fs.push_back(lin(r, 1));
      } else {
        if (found.size() != 2) return std::nullopt;
        if (poly_deg(rem) != 2) throw ClassifyError(ErrorKind::Internal, "bad deflation");
        const Rat p = rem[1] / rem[2], q0 = rem[0] / rem[2];
        if (!(p * p - Rat(4) * q0 < 0))
          throw ClassifyError(ErrorKind::InconsistentPattern, "expected complex pair after deflation");
        fs = {lin(found[0], 1), lin(found[1], 1), quad(p, q0, 1)};
      }
      break;
    }
    case RootPattern::Z1Zb1Z2Zb2: {
      // Split into two rational quadratics via the resolvent cubic:
      // x^4 + p x^2 + q x + r = (x^2 + a x + b)(x^2 - a x + c) with a^2 a
      // rational square root of z^3 + 2p z^2 + (p^2 - 4r) z - q^2.
      const Rat p = qq.c2, q0 = -qq.c3, r = qq.c4;
      if (q0 == 0) {
        // (x^2 + b)(x^2 + c), b + c = p, bc = r.
        Rat sq;
        if (!rational_sqrt(p * p - Rat(4) * r, &sq)) return std::nullopt;
        const Rat b = (p - sq) / Rat(2), c = (p + sq) / Rat(2);
        if (!(b > 0) || !(c > 0))
          throw ClassifyError(ErrorKind::InconsistentPattern, "expected two complex pairs");
        fs = {quad(Rat(0), b, 1), quad(Rat(0), c, 1)};
        break;
      }
      const Poly res = {-q0 * q0, p * p - Rat(4) * r, Rat(2) * p, Rat(1)};
      const auto zs = cubic_roots(to_double(res[2]), to_double(res[1]), to_double(res[0]));
      bool done = false;
      for (const auto& zc : zs) {
        if (std::abs(zc.imag()) > 1e-7 * std::max(1.0, std::abs(zc))) continue;
        Rat z;
        if (!rationalize_root(res, zc.real(), &z)) continue;
        Rat a;
        if (!(z > 0) || !rational_sqrt(z, &a)) continue;
        const Rat b = (p + z - q0 / a) / Rat(2);
        const Rat c = (p + z + q0 / a) / Rat(2);
        std::vector<Factor> cand = {quad(a, b, 1), quad(-a, c, 1)};
        Poly prod = poly_mul(Poly{b, a, Rat(1)}, Poly{c, -a, Rat(1)});
        if (poly_trim(prod) == poly_trim(w) && a * a - Rat(4) * b < 0 && a * a - Rat(4) * c < 0) {
          fs = cand;
          done = true;
          break;
        }
      }
      if (!done) return std::nullopt;
      break;
    }
    default:
      throw ClassifyError(ErrorKind::InconsistentPattern, "complex pattern for a real matrix");
  }
  if (!verify(fs)) throw ClassifyError(ErrorKind::Internal, "factorization does not reproduce W");
  return fs;
}

inline void sort_entries(std::vector<EigenEntry>* entries) {
  std::sort(entries->begin(), entries->end(), [](const EigenEntry& a, const EigenEntry& b) {
    if (a.pair != b.pair) return a.pair;  // pairs first
    if (a.alg != b.alg) return a.alg > b.alg;
    if (a.re != b.re) return a.re > b.re;
    return a.im > b.im;
  });
}

}  // namespace detail

// Exact path. Falls back to the float path (flagged) when eigendata are
// irrational.
EigenReport eigen_structure(const MixedMatrix<Rat>& mm, const DepressedQuartic<Rat>& w,
                            RootPattern pat, double tol = 1e-9);
EigenReport eigen_structure(const MixedMatrix<double>& mm, const DepressedQuartic<double>& w,
                            RootPattern pat, double tol = 1e-9);

}  // namespace ricci
