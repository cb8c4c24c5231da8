#pragma once

#include <vector>

#include "pencil/multipoly.hpp"
#include "pencil/upoly.hpp"

namespace pencil {

// Resultants and subresultants of univariate polynomials over an integral
// domain S.  All divisions are exact divisions in S.

/// Subresultant PRS: a, b, then the successive reduced pseudo-remainders.
/// The last nonzero entry is proportional to gcd(a, b).
template <typename S>
std::vector<UniPoly<S>> subresultant_prs(UniPoly<S> a, UniPoly<S> b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("subresultant PRS of a zero polynomial");
  if (a.degree() < b.degree()) std::swap(a, b);
  std::vector<UniPoly<S>> seq{a, b};
  S g = detail::from_int<S>(1), h = detail::from_int<S>(1);
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    UniPoly<S> r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    a = std::move(b);
    b = divexact(r, S(g * pow_scalar(h, static_cast<unsigned>(delta))));
    seq.push_back(b);
    g = a.leading();
    if (delta == 0) continue;
    h = divexact(S(pow_scalar(g, static_cast<unsigned>(delta))), S(pow_scalar(h, static_cast<unsigned>(delta - 1))));
  }
  return seq;
}

/// Sylvester resultant by the subresultant PRS.
template <typename S>
S resultant_prs(UniPoly<S> a, UniPoly<S> b) {
  if (a.is_zero() || b.is_zero()) return S();
  S sign = detail::from_int<S>(1);
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2) && (b.degree() % 2)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * pow_scalar(b.leading(), static_cast<unsigned>(a.degree()));
  S g = detail::from_int<S>(1), h = detail::from_int<S>(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2) && (b.degree() % 2)) sign = -sign;
    UniPoly<S> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return S();
    b = divexact(r, S(g * pow_scalar(h, static_cast<unsigned>(delta))));
    g = a.leading();
    if (delta > 0)
      h = divexact(S(pow_scalar(g, static_cast<unsigned>(delta))), S(pow_scalar(h, static_cast<unsigned>(delta - 1))));
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  S num = pow_scalar(b.leading(), static_cast<unsigned>(da));
  if (da > 1) num = divexact(num, S(pow_scalar(h, static_cast<unsigned>(da - 1))));
  return sign * num;
}

/// Determinant by fraction-free Gaussian elimination (Bareiss).
template <typename S>
S bareiss_determinant(std::vector<std::vector<S>> m) {
  const std::size_t n = m.size();
  if (n == 0) return detail::from_int<S>(1);
  S sign = detail::from_int<S>(1);
  S prev = detail::from_int<S>(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::scalar_is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && detail::scalar_is_zero(m[p][k])) ++p;
      if (p == n) return S();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = divexact(S(m[i][j] * m[k][k] - m[i][k] * m[k][j]), prev);
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Sylvester matrix of a (degree p) and b (degree q): q shifted rows of a,
/// then p shifted rows of b, coefficients from the top degree down.
template <typename S>
std::vector<std::vector<S>> sylvester_matrix(const UniPoly<S>& a, const UniPoly<S>& b) {
  const int p = a.degree(), q = b.degree();
  const auto n = static_cast<std::size_t>(p + q);
  std::vector<std::vector<S>> m(n, std::vector<S>(n));
  for (int r = 0; r < q; ++r)
    for (int k = 0; k <= p; ++k) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + p - k)] = a[k];
  for (int r = 0; r < p; ++r)
    for (int k = 0; k <= q; ++k) m[static_cast<std::size_t>(q + r)][static_cast<std::size_t>(r + q - k)] = b[k];
  return m;
}

/// Resultant as the Sylvester determinant.  Slow; used as a cross-check.
template <typename S>
S resultant_sylvester(const UniPoly<S>& a, const UniPoly<S>& b) {
  if (a.is_zero() || b.is_zero()) return S();
  if (a.degree() == 0 && b.degree() == 0) return detail::from_int<S>(1);
  return bareiss_determinant(sylvester_matrix(a, b));
}

/// det of the j-th subresultant matrix with the x^i column as last column,
/// 0 <= i <= j < min(deg a, deg b) (or j == min when degrees differ).
template <typename S>
S subresultant_minor(const UniPoly<S>& a, const UniPoly<S>& b, int j, int i) {
  const int p = a.degree(), q = b.degree();
  const int rows = p + q - 2 * j;
  // Row r of the Sylvester-type matrix, expressed as a polynomial of degree
  // < p + q - j, column c holds the coefficient of x^(p+q-j-1-c).
  std::vector<std::vector<S>> full;
  full.reserve(static_cast<std::size_t>(rows));
  const int width = p + q - j;
  for (int r = q - j - 1; r >= 0; --r) {
    std::vector<S> row(static_cast<std::size_t>(width));
    for (int k = 0; k <= p; ++k) row[static_cast<std::size_t>(width - 1 - (k + r))] = a[k];
    full.push_back(std::move(row));
  }
  for (int r = p - j - 1; r >= 0; --r) {
    std::vector<S> row(static_cast<std::size_t>(width));
    for (int k = 0; k <= q; ++k) row[static_cast<std::size_t>(width - 1 - (k + r))] = b[k];
    full.push_back(std::move(row));
  }
  std::vector<std::vector<S>> m(static_cast<std::size_t>(rows), std::vector<S>(static_cast<std::size_t>(rows)));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < rows - 1; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = full[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(rows - 1)] = full[static_cast<std::size_t>(r)][static_cast<std::size_t>(width - 1 - i)];
  }
  return bareiss_determinant(std::move(m));
}

/// The j-th subresultant polynomial S_j(a, b) (degree <= j).
template <typename S>
UniPoly<S> subresultant(const UniPoly<S>& a, const UniPoly<S>& b, int j) {
  if (a.is_zero() || b.is_zero()) throw DomainError("subresultant of a zero polynomial");
  if (j < 0 || j >= std::min(a.degree(), b.degree()) + (a.degree() != b.degree() ? 1 : 0))
    throw DomainError("subresultant index out of range");
  std::vector<S> c(static_cast<std::size_t>(j) + 1);
  for (int i = 0; i <= j; ++i) c[static_cast<std::size_t>(i)] = subresultant_minor(a, b, j, i);
  return UniPoly<S>(std::move(c));
}

/// Principal subresultant coefficients psc_0 .. psc_{min(p,q)-1}; psc_0 is
/// the resultant.  gcd(a, b) has degree >= k iff psc_0 .. psc_{k-1} all vanish.
template <typename S>
std::vector<S> principal_subresultant_coefficients(const UniPoly<S>& a, const UniPoly<S>& b) {
  if (a.degree() < 1 || b.degree() < 1) throw DomainError("principal subresultants need positive degrees");
  const int n = std::min(a.degree(), b.degree());
  std::vector<S> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.push_back(subresultant_minor(a, b, j, j));
  return out;
}

/// Number of leading zeros of a psc list: the gcd degree it certifies.
template <typename S>
int gcd_degree_from_psc(const std::vector<S>& psc) {
  int k = 0;
  while (k < static_cast<int>(psc.size()) && detail::scalar_is_zero(psc[static_cast<std::size_t>(k)])) ++k;
  return k;
}

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p), the classical discriminant
/// (b^2 - 4ac for a quadratic).
template <typename S>
S discriminant(const UniPoly<S>& p) {
  if (p.degree() < 2) throw DomainError("discriminant needs degree >= 2");
  S r = divexact(resultant_prs(p, derivative(p)), p.leading());
  const int n = p.degree();
  if ((n * (n - 1) / 2) % 2) r = -r;
  return r;
}

// Multivariate front ends.  `var` is eliminated; the result lives in the
// remaining variables.

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);
MultiPoly resultant_sylvester(const MultiPoly& p, const MultiPoly& q, std::string_view var);
std::vector<MultiPoly> subresultant_prs(const MultiPoly& p, const MultiPoly& q, std::string_view var);
std::vector<MultiPoly> principal_subresultant_coefficients(const MultiPoly& p, const MultiPoly& q,
                                                           std::string_view var);
MultiPoly discriminant(const MultiPoly& p, std::string_view var);

/// Resultant in x of two bivariate polynomials given as UniPoly<QPoly>
/// (outer variable eliminated), by evaluation at deg-bound + 1 integer points
/// of the inner variable and interpolation.  Exact.  A caller that knows a
/// sharper degree bound (e.g. the product of total degrees) may pass it.
QPoly resultant_by_interpolation(const UniPoly<QPoly>& a, const UniPoly<QPoly>& b, int degree_bound = -1);

}  // namespace pencil
