#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pencil/chow.hpp"
#include "pencil/upoly.hpp"

namespace pencil {

/// The formal degree d as a PolyD.
PolyD d_poly();

/// N_d + 2 - sum(m_i - 1), with N_d = d(d+3)/2.  Every m_i must be >= 2 and
/// sum(m_i) <= d + 1.
long incidence_dimension(const std::vector<int>& m, long d);

// --- Principal parts and A(Psi) counts ------------------------------------

/// prod_{k=0..level} (1 + (d-2k)ζ + kσ1), before reduction.  Generators are
/// u = σ1, v = ζ.
BiMonomialPoly principal_parts_chern_unreduced(int level);
ChowClassPsi principal_parts_chern(int level);

PolyD hyperflex_degree();
/// (flex-point curve degree, flex-line curve degree).
std::pair<PolyD, PolyD> flex_degrees();
/// 12d^2 - 39d + 25, a quoted constant.
PolyD flex_curve_genus();
PolyD branch_curve_genus();

// --- The surface S -----------------------------------------------------------

PolyD euler_surface();
PolyD nodal_fiber_count();
PolyD tangency_cover_degree();
PolyD severi_cusp_count();

/// c(T_Y) = (1 + 3M + 3M^2)(1 + 2q) and its degree-one part.
ChowClassY tangent_bundle_Y();
ChowClassY tangent_bundle_Y_c1();
SurfaceDivClass pullback_M();
SurfaceDivClass pullback_q();
ChowClassY pushforward_S();
/// f^* of a class aM + bq (higher-degree parts must vanish).
SurfaceDivClass pullback(const ChowClassY& divisor_class);

struct DoublePointTerms {
  SurfaceDivClass pushpull;     // f^* f_* [S]
  SurfaceDivClass pullback_c1;  // f^* c_1(T_Y)
  SurfaceDivClass c1_S;         // c_1(T_S)
  SurfaceDivClass total;
};
DoublePointTerms double_point_terms();
SurfaceDivClass double_point_class();
SurfaceDivClass flex_class_S();
SurfaceDivClass bitangent_class_S();

// --- Bitangent lines -----------------------------------------------------------

enum class Derivation { chern, severi, recursion, double_point, hurwitz, genus_defect, closed_form, elementary };
std::string to_string(Derivation d);

struct RecursionIncrement {
  PolyD type_ii, type_iii, type_iv, total;
};
RecursionIncrement bitangent_recursion_increment();

PolyD bitangent_line_degree(Derivation route);

PolyD correspondence_coincidences(const PolyD& a, const PolyD& b);
PolyD inscribed_g12_count();
PolyD contact_point_curve_degree();

/// Solves f(d) = f(d-2) + increment(d) with f(b0) = v0, f(b0 + 1) = v1.
/// Each parity chain is interpolated and the chains must coincide; a
/// DomainError is raised otherwise.
PolyD solve_parity_recursion(const PolyD& increment, long b0, const Rational& v0, const Rational& v1);
/// The same recursion evaluated at one integer d (0 below the bases).
Rational recursion_value(const PolyD& increment, long b0, const Rational& v0, const Rational& v1, long d);

struct ImproperMultiplicities {
  long nu, mu;
  PolyD e_b, e_n;
};
ImproperMultiplicities improper_multiplicities();

PolyD hurwitz_ramification(const PolyD& genus, const PolyD& degree);
PolyD hurwitz_genus(const PolyD& degree, const PolyD& ramification);
/// hurwitz_genus evaluated at an integer d; DivisibilityError when the
/// genus is not an integer there.
Integer hurwitz_genus_at(const PolyD& degree, const PolyD& ramification, long d);

PolyD plucker_flexes();
PolyD plucker_bitangents();
PolyD dual_degree();

PolyD bitangent_point_degree(Derivation route);
PolyD bitangent_point_pa(Derivation route);

PolyD flex_bitangent_degree();
PolyD salmon_claimed_formula();

/// R(pi), assembled as the sum of its three contributions.
PolyD bitangent_curve_ramification();
/// A published total for R(pi).  It is not the sum of the
/// contributions and is kept only for the discrepancy report.
PolyD printed_ramification_total();
PolyD bitangent_curve_pg();

PolyD tritangent_increment();
PolyD tritangent_degree(Derivation route);

PolyD bitangent_line_genus();
PolyD extra_node_prediction();

// --- Tables ------------------------------------------------------------------

struct InvariantRow {
  std::string invariant_id;
  Derivation derivation;
  PolyD value;
  std::optional<std::string> factored_form;
};

/// Every invariant by every route it has, in a fixed order.
std::vector<InvariantRow> invariant_rows();

struct TableLine {
  std::string invariant_id;
  Derivation derivation;
  PolyD value;
  std::string factored_form;
  std::vector<Rational> values;  // one per d in the table range
  bool routes_agree = true;      // all routes of this invariant are PolyD-equal
};

struct InvariantTable {
  long d_min = 3, d_max = 3;
  std::vector<TableLine> lines;
};

/// Requires 3 <= d_min <= d_max.
InvariantTable invariant_table(long d_min, long d_max);

/// Display factorization of a PolyD ("6(d - 3)(3d - 2)").
std::string factored(const PolyD& p);

}  // namespace pencil
