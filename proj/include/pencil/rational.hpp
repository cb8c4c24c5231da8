#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pencil {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The caller violated a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exact result that must be integral (or divisible) was not.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" (decimal integers, optional sign).
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q".
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Nearest long double, safe for magnitudes far outside the double range.
long double to_long_double(const Rational& r);

/// log2 |r| (r nonzero), accurate to a few ulps.
long double log2_abs(const Rational& r);

Rational pow(const Rational& base, unsigned exp);

}  // namespace pencil
