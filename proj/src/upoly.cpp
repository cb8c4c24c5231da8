#include "pencil/upoly.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace pencil {

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  std::vector<Rational> r = a.coeffs();
  const Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = r[static_cast<std::size_t>(k)] * inv;
    if (sgn(c) == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly divexact(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DivisibilityError("polynomial division is not exact");
  return q;
}

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const QPoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  const QPoly dp = derivative(p);
  QPoly a = gcd(p, dp);
  QPoly b = divexact(p, a);
  QPoly c = divexact(dp, a);
  QPoly d = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    QPoly bn = divexact(b, g);
    QPoly cn = divexact(d, g);
    if (g.degree() > 0) out.push_back({monic(g), i});
    b = std::move(bn);
    d = cn - derivative(b);
    ++i;
  }
  return out;
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() < 1) return p.is_zero() ? p : QPoly::constant(Rational(1));
  return monic(divexact(p, gcd(p, derivative(p))));
}

int distinct_root_count(const QPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has infinitely many roots");
  return std::max(0, squarefree_part(p).degree());
}

QPoly saturate(QPoly p, const QPoly& q) {
  if (q.is_zero()) throw DomainError("saturation by the zero polynomial");
  for (;;) {
    QPoly g = gcd(p, q);
    if (g.degree() < 1) return p;
    p = divexact(p, g);
  }
}

int multiplicity_of_factor(const QPoly& p, const QPoly& f) {
  if (f.degree() < 1) throw DomainError("multiplicity of a constant factor");
  if (p.is_zero()) throw DomainError("multiplicity in the zero polynomial");
  int k = 0;
  QPoly rest = p;
  for (;;) {
    auto [q, r] = divmod(rest, f);
    if (!r.is_zero()) return k;
    rest = std::move(q);
    ++k;
  }
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolation: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational den = xs[i] - xs[i - level];
      if (sgn(den) == 0) throw DomainError("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  QPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * QPoly{Rational(-xs[i]), Rational(1)} + QPoly::constant(dd[i]);
  }
  return acc;
}

QPoly primitive_part(const QPoly& p, Rational* scale) {
  if (p.is_zero()) {
    if (scale) *scale = 0;
    return p;
  }
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    if (sgn(c) == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(p.leading()) < 0) content = -content;
  if (scale) *scale = content;
  return p * Rational(1 / content);
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n) {
  // Only used for display factorization of small invariant polynomials.
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  if (a == 0 || mpz_sizeinbase(a.get_mpz_t(), 2) > 40) return out;
  unsigned long v = a.get_ui();
  for (unsigned long k = 1; k * k <= v; ++k) {
    if (v % k) continue;
    out.emplace_back(k);
    if (k != v / k) out.emplace_back(v / k);
  }
  return out;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const QPoly& p) {
  std::vector<std::pair<Rational, int>> out;
  if (p.degree() < 1) return out;
  QPoly rest = primitive_part(p);
  int zero_mult = 0;
  while (rest.degree() >= 1 && sgn(rest[0]) == 0) {
    rest = divexact(rest, QPoly::x());
    ++zero_mult;
  }
  if (zero_mult) out.emplace_back(Rational(0), zero_mult);
  if (rest.degree() >= 1) {
    const auto nums = divisors(rest[0].get_num());
    const auto dens = divisors(rest.leading().get_num());
    std::map<Rational, int> found;
    for (const auto& a : nums)
      for (const auto& b : dens)
        for (int sign : {1, -1}) {
          Rational r(sign * a, b);
          r.canonicalize();
          if (found.count(r) || rest.degree() < 1) continue;
          const QPoly lin{Rational(-r), Rational(1)};
          int m = 0;
          for (;;) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++m;
          }
          if (m) found[r] = m;
        }
    for (auto& [r, m] : found) out.emplace_back(r, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QPoly shift(const QPoly& p, const Rational& by) { return compose(p, QPoly{by, Rational(1)}); }

bool is_integer_valued(const QPoly& p) {
  for (int k = 0; k <= std::max(0, p.degree()); ++k)
    if (!is_integer(p(Rational(k)))) return false;
  return true;
}

Integer evaluate_integral(const QPoly& p, long at, std::string_view what) {
  const Rational v = p(Rational(at));
  if (!is_integer(v))
    throw DivisibilityError(std::string(what) + " is not an integer at d = " + std::to_string(at) + " (" +
                            to_string(v) + ")");
  return v.get_num();
}

std::string to_string(const QPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p[k];
    if (sgn(c) == 0) continue;
    const Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = a == 1;
    if (k == 0 || !unit) {
      if (is_integer(a))
        os << a.get_num();
      else if (k == 0)
        os << a.get_str();
      else
        os << '(' << a.get_str() << ')';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Factorization factor_over_rationals(const QPoly& p) {
  Factorization f;
  if (p.is_zero()) {
    f.content = 0;
    return f;
  }
  QPoly rest = primitive_part(p, &f.content);
  std::vector<std::pair<QPoly, int>> linear;
  for (const auto& [root, mult] : rational_roots(rest)) {
    const QPoly lin = primitive_part(QPoly{Rational(-root), Rational(1)});
    rest = divexact(rest, pow(lin, static_cast<unsigned>(mult)));
    linear.emplace_back(lin, mult);
  }
  // Linear factors ordered by leading coefficient, then by root.
  std::stable_sort(linear.begin(), linear.end(), [](const auto& a, const auto& b) {
    const Rational ra = -a.first[0] / a.first[1];
    const Rational rb = -b.first[0] / b.first[1];
    if (a.first[1] != b.first[1]) return a.first[1] < b.first[1];
    return ra < rb;
  });
  // Zero root first among linear factors so that "2d(d - 2)" reads naturally.
  std::stable_partition(linear.begin(), linear.end(), [](const auto& a) { return sgn(a.first[0]) == 0; });
  Rational scale;
  rest = primitive_part(rest, &scale);
  f.content *= scale;
  if (rest.degree() >= 1) f.factors.emplace_back(rest, 1);
  for (auto& l : linear) f.factors.push_back(std::move(l));
  return f;
}

QPoly expand(const Factorization& f) {
  QPoly acc = QPoly::constant(f.content);
  for (const auto& [factor, mult] : f.factors) acc *= pow(factor, static_cast<unsigned>(mult));
  return acc;
}

std::string to_string(const Factorization& f, std::string_view var) {
  if (sgn(f.content) == 0) return "0";
  std::ostringstream os;
  const Rational& c = f.content;
  if (f.factors.empty()) return c.get_str();
  if (f.factors.size() == 1 && f.factors[0].second == 1 && c == 1) return to_string(f.factors[0].first, var);
  if (c == -1) {
    os << '-';
  } else if (c != 1) {
    if (is_integer(c))
      os << c.get_num();
    else
      os << '(' << c.get_str() << ')';
  }
  for (const auto& [factor, mult] : f.factors) {
    const bool bare = factor.degree() == 1 && sgn(factor[0]) == 0 && factor[1] == 1;
    if (bare)
      os << var;
    else
      os << '(' << to_string(factor, var) << ')';
    if (mult > 1) os << '^' << mult;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for polynomial expressions in one variable.

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, char var) : s_(text), var_(var) {}

  QPoly parse() {
    QPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse polynomial '" + std::string(s_) + "': " + why + " at offset " +
                      std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  QPoly expr() {
    QPoly acc;
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      QPoly t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == '(';
  }

  QPoly term() {
    QPoly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        QPoly den = factor();
        if (den.degree() != 0) fail("division by a non-constant");
        acc *= Rational(1 / den[0]);
      } else if (starts_factor(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  QPoly factor() {
    QPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  QPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      QPoly v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == var_) {
      ++pos_;
      return QPoly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return QPoly::constant(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)), 10)));
    }
    fail("expected a number, the variable, or '('");
  }

  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(std::string_view text, char var) { return PolyParser(text, var).parse(); }

}  // namespace pencil
