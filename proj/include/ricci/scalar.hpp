#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace ricci {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline int exact_sign(const Rat& r) { return r.sign(); }

// Parse "p/q", "p", or a plain integer literal into an exact rational.
inline std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::string to_string(const Rat& r) { return r.str(); }

// Minimal complex-over-T type (std::complex does not admit cpp_rational).
template <class T>
struct Cx {
  T re{}, im{};
  Cx() = default;
  Cx(T r) : re(std::move(r)) {}
  Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator*(const T& k, const Cx& a) { return {k * a.re, k * a.im}; }
  friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
  bool is_zero() const { return re == 0 && im == 0; }
  Cx conj() const { return {re, -im}; }
};

using CRat = Cx<Rat>;

// Sign of a scalar against a scale-aware threshold. For Rat the comparison is
// exact and the threshold is ignored.
template <class T>
inline int sign_of(const T& x, double threshold) {
  if constexpr (std::is_same_v<T, Rat>) {
    (void)threshold;
    return x.sign();
  } else {
    if (std::abs(x) <= threshold) return 0;
    return x > 0 ? 1 : -1;
  }
}

template <class T>
inline bool is_zero_scalar(const T& x, double threshold) {
  return sign_of(x, threshold) == 0;
}

}  // namespace ricci
