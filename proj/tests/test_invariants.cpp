#include <doctest.h>

#include "pencil/invariants.hpp"

using namespace pencil;

namespace {

PolyD D(const char* s) { return parse_poly(s); }
Rational at(const PolyD& p, long d) { return p(Rational(d)); }

}  // namespace

TEST_CASE("incidence dimension") {
  CHECK(incidence_dimension({3}, 4) == 14);
  CHECK(incidence_dimension({2, 2, 2}, 6) == 26);
  CHECK(incidence_dimension({2}, 2) == 6);
  CHECK_THROWS_AS(incidence_dimension({2, 2, 2}, 4), DomainError);
  CHECK_THROWS_AS(incidence_dimension({1}, 4), DomainError);
}

TEST_CASE("principal parts") {
  CHECK(principal_parts_chern(0) == ChowClassPsi::one() + ChowClassPsi::zeta() * D("d"));
  const auto c2 = principal_parts_chern_unreduced(2).graded_part(2);
  CHECK(c2.coeff(0, 2) == D("3d^2-12d+8"));
  CHECK(c2.coeff(1, 1) == D("6d-8"));
  CHECK(c2.coeff(2, 0) == D("2"));
  CHECK(hyperflex_degree() == D("18d^2-66d+36"));
  CHECK(factored(hyperflex_degree()) == "6(d - 3)(3d - 2)");
  CHECK(at(hyperflex_degree(), 3) == 0);
  CHECK(at(hyperflex_degree(), 4) == 60);
  CHECK(at(hyperflex_degree(), 5) == 156);
}

TEST_CASE("flex degrees and genera") {
  const auto [points, lines] = flex_degrees();
  CHECK(points == D("6d-6"));
  CHECK(lines == D("3d(d-2)"));
  CHECK(lines == plucker_flexes());
  CHECK(at(points, 3) == 12);
  CHECK(at(lines, 4) == 24);
  CHECK(at(flex_curve_genus(), 3) == 16);
  CHECK(at(flex_curve_genus(), 4) == 61);
  CHECK(branch_curve_genus() == flex_curve_genus() - D("d^2"));
}

TEST_CASE("surface invariants and Severi") {
  CHECK(at(nodal_fiber_count(), 4) == 27);
  CHECK(at(euler_surface(), 1) == 4);
  CHECK(at(tangency_cover_degree(), 2) == 2);
  CHECK(severi_cusp_count() == hyperflex_degree());
  CHECK(at(severi_cusp_count(), 4) == 60);
}

TEST_CASE("classes on Y and S") {
  CHECK(s_pair(pullback_M(), pullback_M()) == D("2d-2"));
  CHECK(y_degree(pushforward_S() * ChowClassY::M() * ChowClassY::M()) == D("2d-2"));
  CHECK(y_degree(pushforward_S() * ChowClassY::M() * ChowClassY::q()) == D("d(d-1)"));
  CHECK(tangent_bundle_Y_c1() == ChowClassY::M() * D("3") + ChowClassY::q() * D("2"));
  const auto t = double_point_terms();
  CHECK(t.pushpull == SurfaceDivClass{D("d(d-1)(2d+1)"), D("(d-1)(d+2)"), D("d(d-1)")});
  CHECK(t.pullback_c1 == SurfaceDivClass{D("8d-3"), D("5"), D("3")});
  CHECK(double_point_class() == SurfaceDivClass{D("2d^3-d^2-9d+6"), D("d^2+d-6"), D("d^2-d-2")});
  const auto b = bitangent_class_S();
  CHECK(b.h == D("2d^3-d^2-21d+18"));
  CHECK(b == SurfaceDivClass{D("(d-3)(2d^2+5d-6)"), D("(d-3)(d+4)"), D("(d-3)(d+2)")});
  CHECK(s_pair(b, pullback_M()) == D("4d(d-2)(d-3)"));
  CHECK(at(b.eb, 4) == 8);
}

TEST_CASE("bitangent lines by two routes") {
  const auto inc = bitangent_recursion_increment();
  CHECK(inc.type_ii == D("4(d-3)"));
  CHECK(inc.type_iii == D("4(3d^2-19d+28)"));
  CHECK(inc.type_iv == D("4(2d-5)"));
  CHECK(inc.total == D("4(d-2)(3d-10)"));
  const PolyD chern = bitangent_line_degree(Derivation::chern);
  CHECK(chern == bitangent_line_degree(Derivation::recursion));
  CHECK(chern == D("2d(d-2)(d-3)"));
  CHECK(at(chern, 4) == 16);
  CHECK(at(chern, 3) == 0);
  CHECK(at(chern, 5) == 60);
  for (long d = 2; d <= 12; ++d)
    CHECK(recursion_value(inc.total, 2, Rational(0), Rational(0), d) == at(chern, d));
}

TEST_CASE("recursion solver rejects inconsistent chains") {
  CHECK_THROWS_AS(solve_parity_recursion(D("4(d-2)(3d-10)"), 2, Rational(0), Rational(1)), DomainError);
}

TEST_CASE("correspondence helpers") {
  CHECK(correspondence_coincidences(D("2(d-2)(d-3)"), D("4(d-2)(d-3)")) == D("6(d-2)(d-3)"));
  CHECK(at(inscribed_g12_count(), 4) == 3);
  CHECK(at(contact_point_curve_degree(), 3) == 5);
}

TEST_CASE("Hurwitz and improper multiplicities") {
  CHECK(hurwitz_ramification(D("(d-1)(d-2)/2 - 1"), D("d-2")) == D("d^2-d-6"));
  CHECK(hurwitz_ramification(D("0"), D("1")).is_zero());
  CHECK(hurwitz_ramification(D("d(d-1)/2 - 3"), D("d-2")) == D("d^2+d-12"));
  const PolyD g = D("d^2 - 5");
  const PolyD n = D("3d");
  CHECK(hurwitz_genus(n, hurwitz_ramification(g, n)) == g);
  CHECK_THROWS_AS(hurwitz_genus_at(D("1"), D("d"), 3), DivisibilityError);
  const auto im = improper_multiplicities();
  CHECK(im.nu == 2);
  CHECK(im.mu == 4);
  CHECK(im.e_b == bitangent_class_S().eb);
  CHECK(im.e_n == bitangent_class_S().en);
  CHECK(at(im.e_b, 4) == 8);
  CHECK(at(im.e_n, 4) == 6);
  CHECK(at(plucker_bitangents(), 4) - 2 * at(im.e_n, 4) == 16);
}

TEST_CASE("Plucker constants") {
  CHECK(at(plucker_bitangents(), 4) == 28);
  CHECK(at(plucker_flexes(), 3) == 9);
  CHECK(at(dual_degree(), 2) == 2);
}

TEST_CASE("bitangent-point curve") {
  const PolyD deg = bitangent_point_degree(Derivation::double_point);
  CHECK(deg == bitangent_point_degree(Derivation::elementary));
  CHECK(deg == D("(d-3)(2d^2+5d-6)"));
  CHECK(at(deg, 4) == 46);
  CHECK(at(deg, 3) == 0);
  const PolyD pa = bitangent_point_pa(Derivation::double_point);
  CHECK(pa == bitangent_point_pa(Derivation::elementary));
  CHECK(pa == D("3d^5 - 19d^4 + 14d^3 + 120d^2 - 240d + 73"));
  CHECK(at(pa, 4) == 137);
}

TEST_CASE("flex bitangents and the older formula") {
  const PolyD fb = flex_bitangent_degree();
  CHECK(fb == D("3d^4 - 3d^3 - 102d^2 + 300d - 144"));
  CHECK(factored(fb) == "3(d^2 + 6d - 4)(d - 3)(d - 4)");
  CHECK(at(fb, 4) == 0);
  CHECK(at(fb, 5) == 306);
  CHECK(at(fb, 6) == 1224);
  CHECK(at(salmon_claimed_formula(), 5) == 1074);
  CHECK(fb != salmon_claimed_formula());
  CHECK(at(fb, 4) == at(salmon_claimed_formula(), 4));
  CHECK(at(salmon_claimed_formula(), 3) == -144);
}

TEST_CASE("genus of the bitangent curve") {
  CHECK(bitangent_curve_ramification() == D("18d^4 - 30d^3 - 408d^2 + 1200d - 576"));
  CHECK(bitangent_curve_ramification() != printed_ramification_total());
  const PolyD pg = bitangent_curve_pg();
  CHECK(pg == D("8d^4 - 13d^3 - 195d^2 + 582d - 287"));
  CHECK(at(pg, 4) == 137);
  for (long d = 3; d <= 10; ++d)
    CHECK(hurwitz_genus_at(2 * plucker_bitangents(), bitangent_curve_ramification(), d) == at(pg, d).get_num());
}

TEST_CASE("tritangents by two routes") {
  const PolyD t = tritangent_degree(Derivation::genus_defect);
  CHECK(t == tritangent_degree(Derivation::recursion));
  CHECK(t == D("(d^2+3d-2)(d-3)(d-4)(d-5)"));
  CHECK(at(t, 5) == 0);
  CHECK(at(t, 6) == 312);
  CHECK(bitangent_point_pa(Derivation::double_point) - bitangent_curve_pg() ==
        D("3d^5 - 27d^4 + 27d^3 + 315d^2 - 822d + 360"));
  CHECK(at(tritangent_increment(), 5) == 0);
}

TEST_CASE("bitangent-line genus and extra nodes") {
  CHECK(bitangent_line_genus() == D("4d^4 - (13/2)d^3 - 102d^2 + (615/2)d - 152"));
  CHECK(at(bitangent_line_genus(), 4) == 54);
  const PolyD e = extra_node_prediction();
  CHECK(e == D("2d^6 - 23d^5 + 97d^4 - (287/2)d^3 - 126d^2 + (993/2)d - 207"));
  CHECK(at(e, 4) == 51);
  CHECK(at(e, 3) == 0);
}

TEST_CASE("vanishing at small degree") {
  CHECK(at(hyperflex_degree(), 3) == 0);
  CHECK(at(flex_bitangent_degree(), 3) == 0);
  CHECK(at(flex_bitangent_degree(), 4) == 0);
  for (long d : {3, 4, 5}) CHECK(at(tritangent_degree(Derivation::recursion), d) == 0);
  CHECK(at(bitangent_line_degree(Derivation::chern), 3) == 0);
}

TEST_CASE("invariant table") {
  const auto table = invariant_table(4, 6);
  bool saw_hyper_chern = false, saw_hyper_severi = false;
  for (const auto& line : table.lines) {
    CHECK(line.routes_agree);
    CHECK(parse_poly(line.factored_form) == line.value);
    if (line.invariant_id == "hyperflex") {
      CHECK(line.values == std::vector<Rational>{Rational(60), Rational(156), Rational(288)});
      saw_hyper_chern |= line.derivation == Derivation::chern;
      saw_hyper_severi |= line.derivation == Derivation::severi;
    }
    if (line.invariant_id == "tritangent") CHECK(line.values[1] == 0);
    if (line.invariant_id == "flex_bitangent") CHECK(line.values[2] == 1224);
  }
  CHECK(saw_hyper_chern);
  CHECK(saw_hyper_severi);
  CHECK_THROWS_AS(invariant_table(2, 5), DomainError);
  CHECK_THROWS_AS(invariant_table(5, 4), DomainError);
}
