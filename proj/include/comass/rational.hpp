#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace comass {

namespace mp = boost::multiprecision;

/// Exact scalars used throughout; no floating point enters homological or
/// LP computations.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Integer  = mp::number<mp::gmp_int, mp::et_off>;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed user input (file parse errors, repeated vertices, ...).
struct MalformedInput : Error {
  using Error::Error;
};

/// Domain-level failure (infeasible solve, rank-deficient basis, ...).
struct DomainError : Error {
  using Error::Error;
};

inline Integer numerator(const Rational& q) { return Integer(mp::numerator(q)); }
inline Integer denominator(const Rational& q) { return Integer(mp::denominator(q)); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Nearest integer, ties (fraction exactly 1/2) toward zero.
inline Integer nearest_int(const Rational& q) {
  Integer num = numerator(q), den = denominator(q);
  // floor division
  Integer fl = num >= 0 ? num / den : -((-num + den - 1) / den);
  Rational frac = q - Rational(fl);
  if (frac > Rational(1, 2)) return fl + 1;
  if (frac < Rational(1, 2)) return fl;
  // tie: round toward zero
  return q > 0 ? fl : fl + 1;
}

/// vol(Delta^k)^2 for the unit equilateral k-simplex: (k+1) / ((k!)^2 2^k).
inline Rational simplex_volume_sq(int k) {
  if (k < 0) throw DomainError("simplex_volume: negative dimension");
  Integer fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  Integer two_k = Integer(1) << k;
  return Rational(Integer(k + 1)) / Rational(fact * fact * two_k);
}

/// vol(Delta^k) = sqrt(k+1) / (k! 2^{k/2}); numeric value for reporting.
inline double simplex_volume(int k) {
  return std::sqrt(static_cast<double>(simplex_volume_sq(k)));
}

/// Exact comparison  a * vol_k  <=  b  for nonnegative rationals a, b.
inline bool times_volume_le(const Rational& a, int k, const Rational& b) {
  if (a < 0 || b < 0) throw DomainError("times_volume_le: negative operand");
  return a * a * simplex_volume_sq(k) <= b * b;
}

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

}  // namespace comass
