#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace septamer {

namespace detail {

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// Exact rational with a gcd-normalized int64 representation (den > 0).
/// Intermediates run through 128-bit arithmetic; results that do not fit
/// back into int64 throw instead of silently wrapping.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}  // NOLINT: implicit from integers is the point
  Rational(long long n, long long d) { *this = normalized(n, d); }

  static Rational normalized(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("rational: value out of 64-bit range");
    Rational r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return normalized(static_cast<__int128>(a.num) * b.den +
                          static_cast<__int128>(b.num) * a.den,
                      static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return normalized(static_cast<__int128>(a.num) * b.den -
                          static_cast<__int128>(b.num) * a.den,
                      static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return normalized(static_cast<__int128>(a.num) * b.num,
                      static_cast<__int128>(a.den) * b.den);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;  // both normalized
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string to_string() const {
    std::string s = std::to_string(num);
    if (den != 1) s += "/" + std::to_string(den);
    return s;
  }
};

}  // namespace septamer
