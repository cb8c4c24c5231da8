#include "pencil/invariants.hpp"

#include <map>

namespace pencil {

namespace {

PolyD c(long v) { return PolyD::constant(Rational(v)); }

/// p(d - k) as a PolyD.
PolyD at_shift(const PolyD& p, long k) { return shift(p, Rational(-k)); }

}  // namespace

PolyD d_poly() { return PolyD::x(); }

long incidence_dimension(const std::vector<int>& m, long d) {
  long sum = 0, excess = 0;
  for (int mi : m) {
    if (mi < 2) throw DomainError("contact orders must be at least 2");
    sum += mi;
    excess += mi - 1;
  }
  if (sum > d + 1) throw DomainError("contact orders exceed d + 1; the fiber description fails");
  return d * (d + 3) / 2 + 2 - excess;
}

BiMonomialPoly principal_parts_chern_unreduced(int level) {
  if (level < 0) throw DomainError("principal parts level must be >= 0");
  const PolyD d = d_poly();
  BiMonomialPoly acc(c(1));
  for (int k = 0; k <= level; ++k) {
    BiMonomialPoly factor(c(1));
    factor.add(0, 1, d - c(2 * k));
    factor.add(1, 0, c(k));
    acc = acc * factor;
  }
  return acc;
}

ChowClassPsi principal_parts_chern(int level) { return psi_reduce(principal_parts_chern_unreduced(level)); }

PolyD hyperflex_degree() { return psi_degree(principal_parts_chern_unreduced(3).graded_part(3)); }

std::pair<PolyD, PolyD> flex_degrees() {
  const BiMonomialPoly c2 = principal_parts_chern_unreduced(2).graded_part(2);
  const auto zeta = BiMonomialPoly::monomial(0, 1);
  const auto sigma = BiMonomialPoly::monomial(1, 0);
  return {psi_degree(c2 * zeta), psi_degree(c2 * sigma)};
}

PolyD flex_curve_genus() { return parse_poly("12d^2 - 39d + 25"); }

PolyD branch_curve_genus() {
  const PolyD d = d_poly();
  return flex_curve_genus() - d * d;
}

PolyD euler_surface() {
  const PolyD d = d_poly();
  return c(3) + d * d + nodal_fiber_count();
}

PolyD nodal_fiber_count() {
  const PolyD dm1 = d_poly() - c(1);
  return c(3) * dm1 * dm1;
}

PolyD tangency_cover_degree() { return c(2) * d_poly() - c(2); }

PolyD severi_cusp_count() {
  // e(S) - n e(P^2*) = 2 p_g(B) - 2 - kappa with n = 2d - 2 and e(P^2*) = 3.
  return c(2) * branch_curve_genus() - c(2) - euler_surface() + tangency_cover_degree() * c(3);
}

ChowClassY tangent_bundle_Y() {
  const ChowClassY M = ChowClassY::M(), q = ChowClassY::q(), one = ChowClassY::one();
  return (one + M * c(3) + M * M * c(3)) * (one + q * c(2));
}

ChowClassY tangent_bundle_Y_c1() {
  const ChowClassY full = tangent_bundle_Y();
  return ChowClassY::M() * full[YBasis::M] + ChowClassY::q() * full[YBasis::q];
}

SurfaceDivClass pullback_M() {
  const PolyD d = d_poly();
  return {c(2) * d - c(1), c(1), c(1)};
}

SurfaceDivClass pullback_q() { return {d_poly(), c(1), c(0)}; }

ChowClassY pushforward_S() {
  const PolyD d = d_poly();
  return ChowClassY::M() * (d * (d - c(1))) + ChowClassY::q() * (c(2) * d - c(2));
}

SurfaceDivClass pullback(const ChowClassY& k) {
  for (YBasis b : {YBasis::one, YBasis::MM, YBasis::Mq, YBasis::MMq})
    if (!k[b].is_zero()) throw DomainError("pullback is implemented for divisor classes only");
  return k[YBasis::M] * pullback_M() + k[YBasis::q] * pullback_q();
}

DoublePointTerms double_point_terms() {
  DoublePointTerms t;
  t.pushpull = pullback(pushforward_S());
  t.pullback_c1 = pullback(tangent_bundle_Y_c1());
  t.c1_S = SurfaceDivClass{c(3), c(1), c(1)};
  t.total = t.pushpull - t.pullback_c1 + t.c1_S;
  return t;
}

SurfaceDivClass double_point_class() { return double_point_terms().total; }

SurfaceDivClass flex_class_S() { return {c(6) * d_poly() - c(6), c(3), c(2)}; }

SurfaceDivClass bitangent_class_S() { return double_point_class() - c(2) * flex_class_S(); }

std::string to_string(Derivation d) {
  switch (d) {
    case Derivation::chern: return "chern";
    case Derivation::severi: return "severi";
    case Derivation::recursion: return "recursion";
    case Derivation::double_point: return "double_point";
    case Derivation::hurwitz: return "hurwitz";
    case Derivation::genus_defect: return "genus_defect";
    case Derivation::closed_form: return "closed_form";
    case Derivation::elementary: return "elementary";
  }
  return "unknown";
}

PolyD correspondence_coincidences(const PolyD& a, const PolyD& b) { return a + b; }

PolyD inscribed_g12_count() { return c(2) * d_poly() - c(5); }

PolyD contact_point_curve_degree() {
  const PolyD d = d_poly();
  // Tangent lines through a point meet a member in d(d-1) contact points and
  // the pencil adds d^2 base points; the curve has degree that total over d.
  return divexact(d * (d - c(1)) + d * d, d);
}

RecursionIncrement bitangent_recursion_increment() {
  const PolyD d = d_poly();
  const ImproperMultiplicities im = improper_multiplicities();
  RecursionIncrement r;
  // A conic Γ has two tangents through the point; each is tangent to
  // 2(d-2) - 2 members of the residual pencil of degree d - 2.
  r.type_ii = dual_degree()(Rational(2)) * at_shift(tangency_cover_degree(), 2);
  const PolyD dm2 = d - c(2), dm3 = d - c(3);
  const PolyD coincidences = correspondence_coincidences(c(2) * dm2 * dm3, c(4) * dm2 * dm3);
  // The contact-point curve of the residual pencil meets Γ in 2(2(d-2)-1)
  // points, each removed with multiplicity two.
  const PolyD spurious = c(2) * c(2) * at_shift(contact_point_curve_degree(), 2);
  r.type_iii = c(im.nu) * (coincidences - spurious);
  r.type_iv = c(im.mu) * inscribed_g12_count();
  r.total = r.type_ii + r.type_iii + r.type_iv;
  return r;
}

Rational recursion_value(const PolyD& increment, long b0, const Rational& v0, const Rational& v1, long d) {
  if (d < b0) return 0;
  if (d == b0) return v0;
  if (d == b0 + 1) return v1;
  return recursion_value(increment, b0, v0, v1, d - 2) + increment(Rational(d));
}

PolyD solve_parity_recursion(const PolyD& increment, long b0, const Rational& v0, const Rational& v1) {
  // A chain of step 2 with a degree-k increment is a polynomial of degree
  // k + 1 in d; k + 3 samples per chain leave one spare to confirm.
  const int samples = std::max(0, increment.degree()) + 3;
  std::vector<PolyD> chains;
  for (long start : {b0, b0 + 1}) {
    std::vector<Rational> xs, ys;
    for (int i = 0; i < samples; ++i) {
      const long d = start + 2L * i;
      xs.emplace_back(d);
      ys.push_back(recursion_value(increment, b0, v0, v1, d));
    }
    std::vector<Rational> fx(xs.begin(), xs.end() - 1), fy(ys.begin(), ys.end() - 1);
    PolyD p = interpolate(fx, fy);
    if (p(xs.back()) != ys.back()) throw DomainError("recursion chain is not polynomial of the expected degree");
    chains.push_back(std::move(p));
  }
  if (chains[0] != chains[1]) throw DomainError("parity chains of the recursion disagree");
  return chains[0];
}

PolyD bitangent_line_degree(Derivation route) {
  switch (route) {
    case Derivation::chern:
    case Derivation::double_point:
      return s_pair(bitangent_class_S(), pullback_M()) * Rational(1, 2);
    case Derivation::recursion:
      return solve_parity_recursion(bitangent_recursion_increment().total, 2, Rational(0), Rational(0));
    default:
      throw DomainError("bitangent_line_degree: unsupported route " + to_string(route));
  }
}

PolyD hurwitz_ramification(const PolyD& genus, const PolyD& degree) {
  return c(2) * genus - c(2) + c(2) * degree;
}

PolyD hurwitz_genus(const PolyD& degree, const PolyD& ramification) {
  return (ramification - c(2) * degree + c(2)) * Rational(1, 2);
}

Integer hurwitz_genus_at(const PolyD& degree, const PolyD& ramification, long d) {
  return evaluate_integral(hurwitz_genus(degree, ramification), d, "Hurwitz genus");
}

ImproperMultiplicities improper_multiplicities() {
  const PolyD d = d_poly();
  const Rational half(1, 2);
  ImproperMultiplicities m;
  m.nu = 2;
  m.mu = 2 * m.nu;
  const PolyD n = d - c(2);
  m.e_b = hurwitz_ramification(d * (d - c(1)) * half - c(3), n);
  m.e_n = hurwitz_ramification((d - c(1)) * (d - c(2)) * half - c(1), n);
  return m;
}

PolyD plucker_flexes() {
  const PolyD d = d_poly();
  return c(3) * d * (d - c(2));
}

PolyD plucker_bitangents() {
  const PolyD d = d_poly();
  return d * (d - c(2)) * (d * d - c(9)) * Rational(1, 2);
}

PolyD dual_degree() {
  const PolyD d = d_poly();
  return d * (d - c(1));
}

PolyD bitangent_point_degree(Derivation route) {
  const PolyD d = d_poly();
  switch (route) {
    case Derivation::double_point:
      return bitangent_class_S().h;
    case Derivation::elementary:
      // Two contact points per bitangent, plus the base points counted with
      // the multiplicity e_b, all cut by a general member of degree d.
      return divexact(c(2) * plucker_bitangents() + d * d * improper_multiplicities().e_b, d);
    default:
      throw DomainError("bitangent_point_degree: unsupported route " + to_string(route));
  }
}

PolyD bitangent_point_pa(Derivation route) {
  const PolyD d = d_poly();
  switch (route) {
    case Derivation::double_point:
      return s_adjunction_genus(bitangent_class_S());
    case Derivation::elementary: {
      const SurfaceDivClass b = bitangent_class_S();
      const PolyD dm1 = d - c(1);
      return plane_model_genus(b.h, {{d * d, b.eb}, {c(3) * dm1 * dm1, b.en}});
    }
    default:
      throw DomainError("bitangent_point_pa: unsupported route " + to_string(route));
  }
}

PolyD flex_bitangent_degree() {
  return s_pair(bitangent_class_S(), flex_class_S()) - c(2) * hyperflex_degree();
}

PolyD salmon_claimed_formula() { return parse_poly("3(d-4)(3d^3 + 5d^2 - 32d + 18)"); }

PolyD bitangent_curve_ramification() {
  // Hyperflexes ramify simply, each node fiber contributes along its e_n
  // branches on both sides, and every flex bitangent contributes 4.
  return hyperflex_degree() + c(2) * nodal_fiber_count() * improper_multiplicities().e_n +
         c(4) * flex_bitangent_degree();
}

PolyD printed_ramification_total() { return parse_poly("9d^4 - 21d^3 - 102d^2 + 300d - 144"); }

PolyD bitangent_curve_pg() { return hurwitz_genus(c(2) * plucker_bitangents(), bitangent_curve_ramification()); }

PolyD tritangent_increment() { return parse_poly("10d^4 - 112d^3 + 350d^2 - 56d - 720"); }

PolyD tritangent_degree(Derivation route) {
  switch (route) {
    case Derivation::genus_defect: {
      const PolyD defect = bitangent_point_pa(Derivation::double_point) - bitangent_curve_pg();
      const PolyD t = defect * Rational(1, 3);
      if (!is_integer_valued(t)) throw DivisibilityError("p_a - p_g is not divisible by 3");
      return t;
    }
    case Derivation::recursion:
      return solve_parity_recursion(tritangent_increment(), 3, Rational(0), Rational(0));
    default:
      throw DomainError("tritangent_degree: unsupported route " + to_string(route));
  }
}

PolyD bitangent_line_genus() {
  // The bitangent-point curve double covers the bitangent-line curve,
  // branched at the hyperflexes.
  return (c(2) * bitangent_curve_pg() - c(2) - hyperflex_degree() + c(4)) * Rational(1, 4);
}

PolyD extra_node_prediction() {
  const PolyD deg = bitangent_line_degree(Derivation::chern);
  const PolyD pa = plane_model_genus(deg, {{tritangent_degree(Derivation::genus_defect), c(3)}});
  return pa - bitangent_line_genus();
}

std::string factored(const PolyD& p) { return to_string(factor_over_rationals(p)); }

std::vector<InvariantRow> invariant_rows() {
  std::vector<InvariantRow> rows;
  auto add = [&rows](const std::string& id, Derivation how, const PolyD& v) {
    rows.push_back({id, how, v, factored(v)});
  };
  const ImproperMultiplicities im = improper_multiplicities();
  const auto [flex_points, flex_lines] = flex_degrees();

  add("hyperflex", Derivation::chern, hyperflex_degree());
  add("hyperflex", Derivation::severi, severi_cusp_count());
  add("flex_bitangent", Derivation::double_point, flex_bitangent_degree());
  add("tritangent", Derivation::genus_defect, tritangent_degree(Derivation::genus_defect));
  add("tritangent", Derivation::recursion, tritangent_degree(Derivation::recursion));
  add("bitangent_lines", Derivation::chern, bitangent_line_degree(Derivation::chern));
  add("bitangent_lines", Derivation::recursion, bitangent_line_degree(Derivation::recursion));
  add("flex_points", Derivation::chern, flex_points);
  add("flex_lines", Derivation::chern, flex_lines);
  add("flex_lines", Derivation::closed_form, plucker_flexes());
  add("plucker_bitangents", Derivation::closed_form, plucker_bitangents());
  add("dual_degree", Derivation::closed_form, dual_degree());
  add("nodal_fibers", Derivation::closed_form, nodal_fiber_count());
  add("tangency_cover", Derivation::closed_form, tangency_cover_degree());
  add("euler_surface", Derivation::closed_form, euler_surface());
  add("flex_curve_genus", Derivation::closed_form, flex_curve_genus());
  add("branch_curve_genus", Derivation::severi, branch_curve_genus());
  add("e_b", Derivation::hurwitz, im.e_b);
  add("e_b", Derivation::double_point, bitangent_class_S().eb);
  add("e_n", Derivation::hurwitz, im.e_n);
  add("e_n", Derivation::double_point, bitangent_class_S().en);
  add("bitangent_point_degree", Derivation::double_point, bitangent_point_degree(Derivation::double_point));
  add("bitangent_point_degree", Derivation::elementary, bitangent_point_degree(Derivation::elementary));
  add("bitangent_point_pa", Derivation::double_point, bitangent_point_pa(Derivation::double_point));
  add("bitangent_point_pa", Derivation::elementary, bitangent_point_pa(Derivation::elementary));
  add("bitangent_curve_ramification", Derivation::hurwitz, bitangent_curve_ramification());
  add("bitangent_curve_pg", Derivation::hurwitz, bitangent_curve_pg());
  add("bitangent_line_genus", Derivation::hurwitz, bitangent_line_genus());
  add("extra_node_prediction", Derivation::genus_defect, extra_node_prediction());
  return rows;
}

InvariantTable invariant_table(long d_min, long d_max) {
  if (d_min < 3 || d_max < d_min) throw DomainError("invariant table needs 3 <= d_min <= d_max");
  InvariantTable table;
  table.d_min = d_min;
  table.d_max = d_max;
  const auto rows = invariant_rows();
  std::map<std::string, PolyD> first_value;
  std::map<std::string, bool> agree;
  for (const auto& r : rows) {
    auto [it, inserted] = first_value.emplace(r.invariant_id, r.value);
    if (inserted)
      agree[r.invariant_id] = true;
    else if (it->second != r.value)
      agree[r.invariant_id] = false;
  }
  for (const auto& r : rows) {
    TableLine line;
    line.invariant_id = r.invariant_id;
    line.derivation = r.derivation;
    line.value = r.value;
    line.factored_form = r.factored_form.value_or(to_string(r.value));
    for (long d = d_min; d <= d_max; ++d) line.values.push_back(r.value(Rational(d)));
    line.routes_agree = agree[r.invariant_id];
    table.lines.push_back(std::move(line));
  }
  return table;
}

}  // namespace pencil
