#pragma once

// Dense univariate polynomials over the rationals, ascending coefficient
// order: p[i] is the coefficient of x^i.

#include "ricci/scalar.hpp"

#include <vector>

namespace ricci {

using Poly = std::vector<Rat>;

inline Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_deriv(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<unsigned>(i)) * p[i]);
  return poly_trim(d);
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
  Rat v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return poly_trim(c);
}

// Division with remainder; requires b nonzero.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  a = poly_trim(a);
  Poly q(std::max<size_t>(a.size(), 1), Rat(0));
  const int db = poly_deg(b);
  while (poly_deg(a) >= db && !a.empty()) {
    const int da = poly_deg(a);
    Rat f = a[da] / b[db];
    q[da - db] = f;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    a = poly_trim(a);
  }
  return {poly_trim(q), a};
}

inline Poly poly_monic(Poly p) {
  p = poly_trim(p);
  if (p.empty()) return p;
  Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(a);
  b = poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  return poly_monic(a);
}

// Is r a perfect square of a rational? If so return the nonnegative root.
inline bool rational_sqrt(const Rat& r, Rat* out) {
  if (r < 0) return false;
  if (r == 0) {
    *out = 0;
    return true;
  }
  const BigInt num = numerator(r), den = denominator(r);
  const BigInt sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  *out = Rat(sn, sd);
  return true;
}

// Continued-fraction rationalization of a double, verified exactly against p:
// returns a rational root of p near x, if one exists with modest height.
inline bool rationalize_root(const Poly& p, double x, Rat* out) {
  if (!std::isfinite(x)) return false;
  // Convergents of the continued fraction of x.
  double v = x;
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 48; ++it) {
    if (std::abs(v) > 4e18) break;
    long long a = static_cast<long long>(std::floor(v));
    long long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 < 0 || std::abs(h2) > static_cast<long long>(1) << 60 || k2 > static_cast<long long>(1) << 60)
      break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (k1 != 0) {
      Rat cand(h1, k1);
      if (poly_eval(p, cand) == 0 && std::abs(to_double(cand) - x) < 1e-5 * std::max(1.0, std::abs(x))) {
        *out = cand;
        return true;
      }
    }
    double frac = v - std::floor(v);
    if (frac < 1e-14) break;
    v = 1.0 / frac;
  }
  return false;
}

}  // namespace ricci
