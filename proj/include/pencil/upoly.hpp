#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "pencil/rational.hpp"

namespace pencil {

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational divexact(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw DomainError("division by zero");
  return a / b;
}

namespace detail {
template <typename S>
bool scalar_is_zero(const S& s) {
  return is_zero(s);
}
}  // namespace detail

template <typename Scalar>
class UniPoly;

namespace detail {
template <typename S>
struct is_unipoly : std::false_type {};
template <typename T>
struct is_unipoly<UniPoly<T>> : std::true_type {};

/// The image of an integer in the ring S.
template <typename S>
S from_int(long k) {
  if constexpr (is_unipoly<S>::value) {
    return S::constant(from_int<typename S::scalar_type>(k));
  } else {
    return S(k);
  }
}
}  // namespace detail

/// Dense univariate polynomial over a commutative ring `Scalar`.
///
/// Coefficients are stored low to high and kept trimmed, so the stored
/// leading coefficient is nonzero unless the polynomial is zero.  `Scalar`
/// must provide the ring operators, value-initialization to zero, and the
/// free functions `is_zero(s)` and `divexact(a, b)` (found by ADL or in this
/// namespace).
template <typename Scalar>
class UniPoly {
 public:
  using scalar_type = Scalar;

  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(Scalar c) { return UniPoly(std::vector<Scalar>{std::move(c)}); }
  static UniPoly monomial(Scalar c, int k) {
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return UniPoly(std::move(v));
  }
  /// The indeterminate itself.
  static UniPoly x() { return monomial(detail::from_int<Scalar>(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar coeff(int k) const {
    if (k < 0 || k > degree()) return Scalar();
    return c_[static_cast<std::size_t>(k)];
  }
  const Scalar& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  const Scalar& leading() const { return c_.back(); }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
  friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_scalar(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Horner evaluation at a value of any type that scalars convert into.
  template <typename Value>
  Value operator()(const Value& at) const {
    Value acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + Value(*it);
    return acc;
  }

 private:
  static bool is_zero_scalar(const Scalar& s) { return detail::scalar_is_zero(s); }
  void trim() {
    while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

template <typename S>
bool is_zero(const UniPoly<S>& p) {
  return p.is_zero();
}

template <typename S>
UniPoly<S> derivative(const UniPoly<S>& p) {
  if (p.degree() < 1) return {};
  std::vector<S> r(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) r[static_cast<std::size_t>(k - 1)] = p[k] * detail::from_int<S>(k);
  return UniPoly<S>(std::move(r));
}

template <typename S>
UniPoly<S> pow(const UniPoly<S>& p, unsigned n) {
  UniPoly<S> result = UniPoly<S>::constant(detail::from_int<S>(1));
  UniPoly<S> base = p;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

template <typename S>
S pow_scalar(const S& s, unsigned n) {
  S result = detail::from_int<S>(1);
  S base = s;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

/// p(q(x)).
template <typename S>
UniPoly<S> compose(const UniPoly<S>& p, const UniPoly<S>& q) {
  UniPoly<S> acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * q + UniPoly<S>::constant(p[k]);
  return acc;
}

/// Divides every coefficient by `c`; each division must be exact.
template <typename S>
UniPoly<S> divexact(const UniPoly<S>& p, const S& c) {
  std::vector<S> r;
  r.reserve(p.size());
  for (const auto& v : p.coeffs()) r.push_back(divexact(v, c));
  return UniPoly<S>(std::move(r));
}

/// lc(b)^(deg a - deg b + 1) * a  reduced modulo b; works over any ring.
template <typename S>
UniPoly<S> pseudo_remainder(UniPoly<S> a, const UniPoly<S>& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return a;
  const S& lb = b.leading();
  int steps = a.degree() - db + 1;
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    UniPoly<S> t = UniPoly<S>::monomial(a.leading(), shift) * b;
    a *= lb;
    a -= t;
    --steps;
  }
  if (steps > 0) a *= pow_scalar(lb, static_cast<unsigned>(steps));
  return a;
}

// ---------------------------------------------------------------------------
// Polynomials over the rationals.  PolyD houses the formal degree symbol d;
// QPoly is the same type used for univariate eliminants.

using PolyD = UniPoly<Rational>;
using QPoly = UniPoly<Rational>;

/// Quotient and remainder over the field Q.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Exact division; throws DivisibilityError on a nonzero remainder.
QPoly divexact(const QPoly& a, const QPoly& b);

/// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);

QPoly monic(const QPoly& p);

/// Squarefree factorization p = c * prod f_i^{m_i} with monic, pairwise
/// coprime, squarefree f_i (Yun's algorithm).  Factors are returned in
/// increasing multiplicity.
struct SquarefreeFactor {
  QPoly factor;
  int multiplicity = 1;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const QPoly& p);

QPoly squarefree_part(const QPoly& p);

/// Number of distinct complex roots.
int distinct_root_count(const QPoly& p);

/// Removes from `p` every root it shares with `q`, to all multiplicities.
QPoly saturate(QPoly p, const QPoly& q);

/// Largest k such that f^k divides p (f nonconstant).
int multiplicity_of_factor(const QPoly& p, const QPoly& f);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Rational roots with multiplicities, in increasing order.
std::vector<std::pair<Rational, int>> rational_roots(const QPoly& p);

/// p(x + shift).
QPoly shift(const QPoly& p, const Rational& by);

/// True when p(n) is an integer for every integer n.
bool is_integer_valued(const QPoly& p);

/// Evaluates p at an integer and requires the value to be an integer.
Integer evaluate_integral(const QPoly& p, long at, std::string_view what);

/// Integer polynomial proportional to p with coprime coefficients and
/// positive leading coefficient; `scale` receives p / primitive.
QPoly primitive_part(const QPoly& p, Rational* scale = nullptr);

/// Expanded rendering, e.g. "3d^2 - 12d + 8".
std::string to_string(const QPoly& p, std::string_view var = "d");

/// Display factorization: a rational content times factors with
/// multiplicities.  Linear factors are split off over Q; the rest stays as
/// one primitive factor.
struct Factorization {
  Rational content;
  std::vector<std::pair<QPoly, int>> factors;  // primitive integer factors
};
Factorization factor_over_rationals(const QPoly& p);
QPoly expand(const Factorization& f);
std::string to_string(const Factorization& f, std::string_view var = "d");

/// Parses expressions such as "3(d^2 + 6d - 4)(d - 3)(d - 4)",
/// "4d^4 - (13/2)d^3 + 5", "-2(d-1)^2".
QPoly parse_poly(std::string_view text, char var = 'd');

}  // namespace pencil
