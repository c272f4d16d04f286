#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cusplab {

// Exact rational arithmetic for quasi-isometry constants. All quantities in
// this project are small (graph distances and ratios thereof), so int64
// components with __int128 cross products never overflow in practice.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Smallest m >= 0 with 2^m >= x. Requires x >= 1.
inline int ceil_log2(std::int64_t x) {
  if (x < 1) throw std::domain_error("ceil_log2: argument must be >= 1");
  int m = 0;
  while ((static_cast<__int128>(1) << m) < x) ++m;
  return m;
}

// Smallest m >= 0 with 2^m >= d^2, i.e. ceil(2*log2(d)) for integer d >= 1.
// Exact: no floating point anywhere near the comparison.
inline int ceil_2log2(std::int64_t d) {
  if (d < 1) throw std::domain_error("ceil_2log2: argument must be >= 1");
  const __int128 dd = static_cast<__int128>(d) * d;
  int m = 0;
  while ((static_cast<__int128>(1) << m) < dd) ++m;
  return m;
}

// ceil(2*log2(r)) for rational r >= 1: smallest m with 2^m * den^2 >= num^2.
inline int ceil_2log2(const Rational& r) {
  if (r.num < r.den) throw std::domain_error("ceil_2log2: argument must be >= 1");
  const __int128 n2 = static_cast<__int128>(r.num) * r.num;
  const __int128 d2 = static_cast<__int128>(r.den) * r.den;
  int m = 0;
  while ((static_cast<__int128>(1) << m) * d2 < n2) ++m;
  return m;
}

}  // namespace cusplab
