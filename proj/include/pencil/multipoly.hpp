#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pencil/upoly.hpp"

namespace pencil {

/// Sparse polynomial over Q in named indeterminates.
///
/// Terms live in a map keyed by exponent vectors, so the term order is
/// lexicographic on exponents in variable order.  Zero coefficients are never
/// stored.  Binary operations on polynomials with different variable lists
/// work over the union of the two lists (first operand's order, then new
/// names appended).
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(static_cast<long>(c)) {}  // NOLINT

  MultiPoly(std::vector<std::string> vars, TermMap terms);

  /// The indeterminate `name`, living in the variable list `vars`.
  static MultiPoly variable(const std::vector<std::string>& vars, std::string_view name);
  static MultiPoly monomial(std::vector<std::string> vars, Exponents e, Rational c = Rational(1));

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; DomainError otherwise.
  Rational constant_value() const;

  /// Index of `name` in vars(), or -1.
  int index_of(std::string_view name) const;
  /// Total degree (-1 for zero).
  int total_degree() const;
  /// Degree in one variable (-1 for zero, 0 when the variable is absent).
  int degree_in(std::string_view name) const;
  bool is_homogeneous() const;

  /// Same polynomial re-expressed over `vars`, which must contain every
  /// variable that occurs.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }

  /// Equality as polynomials (variable lists may differ).
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void drop_zeros();
  std::vector<std::string> vars_;
  TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

MultiPoly pow(const MultiPoly& p, unsigned n);
MultiPoly derivative(const MultiPoly& p, std::string_view var);

/// Full evaluation; `values` is indexed like p.vars().
Rational evaluate(const MultiPoly& p, const std::vector<Rational>& values);

/// Replaces one variable by a rational value (the variable stays in vars()).
MultiPoly specialize(const MultiPoly& p, std::string_view var, const Rational& value);

/// Replaces one variable by a polynomial.
MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& value);

/// Exact division; throws DivisibilityError when b does not divide a.
MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);

/// Coefficients with respect to `var`; the coefficients keep p's variable
/// list and have degree zero in `var`.
UniPoly<MultiPoly> to_univariate(const MultiPoly& p, std::string_view var);
MultiPoly from_univariate(const UniPoly<MultiPoly>& u, std::string_view var);

/// A polynomial that involves at most `var`, as a dense QPoly.
QPoly to_qpoly(const MultiPoly& p, std::string_view var);
MultiPoly from_qpoly(const QPoly& p, const std::vector<std::string>& vars, std::string_view var);

/// Dense bivariate view: outer variable `outer`, coefficients QPoly in
/// `inner`.  Every other variable must be absent.
UniPoly<QPoly> to_bivariate(const MultiPoly& p, std::string_view outer, std::string_view inner);

/// Human-readable rendering, highest term first, e.g. "x^2*y - 3/2*z".
std::string to_string(const MultiPoly& p);

}  // namespace pencil
