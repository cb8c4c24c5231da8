#include "pencil/rational.hpp"

#include <cctype>
#include <cmath>

namespace pencil {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Top 64 bits of |z| as a long double, with the binary exponent split off.
long double mantissa64(const mpz_class& z, long& exponent) {
  const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  mpz_class a = abs(z);
  exponent = 0;
  if (bits > 64) {
    exponent = static_cast<long>(bits - 64);
    a >>= static_cast<mp_bitcnt_t>(exponent);
  }
  return static_cast<long double>(mpz_get_ui(a.get_mpz_t()));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  num = trim(num);
  den = trim(den);
  if (!valid_integer_text(num) || !valid_integer_text(den))
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  std::string n(num), d(den);
  if (n[0] == '+') n.erase(0, 1);
  if (d[0] == '+') d.erase(0, 1);
  mpz_class zn(n, 10), zd(d, 10);
  if (zd == 0) throw DomainError("rational with zero denominator");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

long double to_long_double(const Rational& r) {
  if (sgn(r) == 0) return 0.0L;
  long en = 0, ed = 0;
  const long double mn = mantissa64(r.get_num(), en);
  const long double md = mantissa64(r.get_den(), ed);
  const long double v = std::ldexp(mn / md, static_cast<int>(en - ed));
  return sgn(r) < 0 ? -v : v;
}

long double log2_abs(const Rational& r) {
  if (sgn(r) == 0) throw DomainError("log2_abs of zero");
  long en = 0, ed = 0;
  const long double mn = mantissa64(r.get_num(), en);
  const long double md = mantissa64(r.get_den(), ed);
  return std::log2(mn) - std::log2(md) + static_cast<long double>(en - ed);
}

Rational pow(const Rational& base, unsigned exp) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), exp);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace pencil
