#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pencil/upoly.hpp"

namespace pencil {

/// Polynomial in two commuting degree-one generators (u, v) with PolyD
/// coefficients, before any relation is applied.  Keys are (i, j) for u^i v^j.
class BiMonomialPoly {
 public:
  using Key = std::pair<int, int>;

  BiMonomialPoly() = default;
  BiMonomialPoly(const PolyD& c) { add(0, 0, c); }  // NOLINT(google-explicit-constructor)
  static BiMonomialPoly monomial(int i, int j, const PolyD& c = PolyD::constant(Rational(1)));

  const std::map<Key, PolyD>& terms() const { return t_; }
  PolyD coeff(int i, int j) const;
  void add(int i, int j, const PolyD& c);

  /// Homogeneous part of total degree k.
  BiMonomialPoly graded_part(int k) const;

  BiMonomialPoly& operator+=(const BiMonomialPoly& o);
  BiMonomialPoly& operator-=(const BiMonomialPoly& o);
  friend BiMonomialPoly operator+(BiMonomialPoly a, const BiMonomialPoly& b) { return a += b; }
  friend BiMonomialPoly operator-(BiMonomialPoly a, const BiMonomialPoly& b) { return a -= b; }
  friend BiMonomialPoly operator*(const BiMonomialPoly& a, const BiMonomialPoly& b);
  friend BiMonomialPoly operator*(BiMonomialPoly a, const PolyD& c);
  friend bool operator==(const BiMonomialPoly& a, const BiMonomialPoly& b) { return a.t_ == b.t_; }

 private:
  std::map<Key, PolyD> t_;
};

/// Renders with generator names, highest degree first, e.g.
/// "(3d^2 - 12d + 8)ζ^2 + (6d - 8)σ1ζ + 2σ1^2".
std::string to_string(const BiMonomialPoly& p, const std::string& u, const std::string& v);

// ---------------------------------------------------------------------------
// A(Psi): generators σ1 (u) and ζ (v), relations σ1^3 = 0, ζ^2 = σ1ζ - σ1^2,
// and ζ^3 = 0 (implied by the other two).

enum class PsiBasis { one, s, z, ss, sz, ssz };

class ChowClassPsi {
 public:
  ChowClassPsi() = default;
  explicit ChowClassPsi(std::array<PolyD, 6> c) : c_(std::move(c)) {}

  static ChowClassPsi one();
  static ChowClassPsi sigma1();
  static ChowClassPsi zeta();
  static ChowClassPsi basis(PsiBasis b, const PolyD& c = PolyD::constant(Rational(1)));

  const PolyD& operator[](PsiBasis b) const { return c_[static_cast<std::size_t>(b)]; }
  const std::array<PolyD, 6>& coeffs() const { return c_; }

  /// Back to an unreduced polynomial on the basis monomials.
  BiMonomialPoly lift() const;

  friend ChowClassPsi operator+(const ChowClassPsi& a, const ChowClassPsi& b);
  friend ChowClassPsi operator-(const ChowClassPsi& a, const ChowClassPsi& b);
  friend ChowClassPsi operator*(const ChowClassPsi& a, const ChowClassPsi& b);
  friend ChowClassPsi operator*(const ChowClassPsi& a, const PolyD& c);
  friend bool operator==(const ChowClassPsi& a, const ChowClassPsi& b) { return a.c_ == b.c_; }

 private:
  std::array<PolyD, 6> c_{};
};

/// Normal form in A(Psi).  With `use_zeta_cube` false the relation ζ^3 = 0 is
/// never applied directly.
ChowClassPsi psi_reduce(const BiMonomialPoly& p, bool use_zeta_cube = true);
ChowClassPsi psi_multiply(const ChowClassPsi& a, const ChowClassPsi& b);
/// Coefficient of the point class σ1^2 ζ.
PolyD psi_degree(const ChowClassPsi& a);
PolyD psi_degree(const BiMonomialPoly& unreduced);

// ---------------------------------------------------------------------------
// A(Y) with Y = P^2 x P^1: generators M (u) and q (v), M^3 = q^2 = 0.

enum class YBasis { one, M, q, MM, Mq, MMq };

class ChowClassY {
 public:
  ChowClassY() = default;
  explicit ChowClassY(std::array<PolyD, 6> c) : c_(std::move(c)) {}

  static ChowClassY one();
  static ChowClassY M();
  static ChowClassY q();
  static ChowClassY basis(YBasis b, const PolyD& c = PolyD::constant(Rational(1)));

  const PolyD& operator[](YBasis b) const { return c_[static_cast<std::size_t>(b)]; }
  const std::array<PolyD, 6>& coeffs() const { return c_; }

  friend ChowClassY operator+(const ChowClassY& a, const ChowClassY& b);
  friend ChowClassY operator-(const ChowClassY& a, const ChowClassY& b);
  friend ChowClassY operator*(const ChowClassY& a, const ChowClassY& b);
  friend ChowClassY operator*(const ChowClassY& a, const PolyD& c);
  friend bool operator==(const ChowClassY& a, const ChowClassY& b) { return a.c_ == b.c_; }

 private:
  std::array<PolyD, 6> c_{};
};

ChowClassY y_reduce(const BiMonomialPoly& p);
ChowClassY y_multiply(const ChowClassY& a, const ChowClassY& b);
/// Coefficient of M^2 q.
PolyD y_degree(const ChowClassY& a);

// ---------------------------------------------------------------------------
// Divisors h H - eb E_b - en E_n on the blown-up surface S.

struct SurfaceDivClass {
  PolyD h, eb, en;

  friend SurfaceDivClass operator+(const SurfaceDivClass& a, const SurfaceDivClass& b) {
    return {a.h + b.h, a.eb + b.eb, a.en + b.en};
  }
  friend SurfaceDivClass operator-(const SurfaceDivClass& a, const SurfaceDivClass& b) {
    return {a.h - b.h, a.eb - b.eb, a.en - b.en};
  }
  friend SurfaceDivClass operator*(const PolyD& c, const SurfaceDivClass& a) { return {c * a.h, c * a.eb, c * a.en}; }
  friend bool operator==(const SurfaceDivClass& a, const SurfaceDivClass& b) {
    return a.h == b.h && a.eb == b.eb && a.en == b.en;
  }
};

/// Pairing with H^2 = 1, E_b^2 = -d^2, E_n^2 = -3(d-1)^2, mixed terms 0.
PolyD s_pair(const SurfaceDivClass& a, const SurfaceDivClass& b);
/// K_S = -3H + E_b + E_n.
SurfaceDivClass canonical_class_S();
/// 1 + (c.c + c.K)/2.
PolyD s_adjunction_genus(const SurfaceDivClass& c);

struct MultiplePoints {
  PolyD count;
  PolyD multiplicity;
};
/// (D-1)(D-2)/2 - sum count * m(m-1)/2.
PolyD plane_model_genus(const PolyD& degree, const std::vector<MultiplePoints>& points);

std::string to_string(const SurfaceDivClass& c);

}  // namespace pencil
