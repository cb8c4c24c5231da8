#include <doctest.h>

#include "pencil/curves.hpp"

using namespace pencil;

namespace {

MultiPoly X() { return MultiPoly::variable(plane_vars(), "x"); }
MultiPoly Y() { return MultiPoly::variable(plane_vars(), "y"); }
MultiPoly Z() { return MultiPoly::variable(plane_vars(), "z"); }

Point3 P(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

}  // namespace

TEST_CASE("plane curves validate input") {
  CHECK_THROWS_AS(PlaneCurve(X() * X() + Y()), DomainError);
  CHECK_THROWS_AS(PlaneCurve(MultiPoly(plane_vars(), {})), DomainError);
  const PlaneCurve c(X() * Y() - Z() * Z());
  CHECK(c.degree() == 2);
  CHECK(c(P(1, 1, 1)) == 0);
  CHECK_THROWS_AS(CurvePencil(c, PlaneCurve(X() * Rational(2) * Y() - Z() * Z() * Rational(2))), DomainError);
  CHECK_THROWS_AS(CurvePencil(c, PlaneCurve(X())), DomainError);
  CHECK_THROWS_AS(LineParam(P(1, 2, 3), P(2, 4, 6)), DomainError);
}

TEST_CASE("hessian and polar examples") {
  CHECK(hessian(fermat_curve(3)).poly() == X() * Y() * Z() * Rational(216));
  CHECK(hessian(PlaneCurve(X() * X() + Y() * Y() + Z() * Z())).poly() == MultiPoly(8L).with_vars(plane_vars()));
  CHECK(polar(PlaneCurve(X() * Y() - Z() * Z()), P(0, 0, 1)).poly() == Z() * Rational(-2));
  CHECK_THROWS_AS(hessian(PlaneCurve(X() * X() * X() + Y() * Y() * Y())), DomainError);
}

TEST_CASE("restriction to a line") {
  const PlaneCurve c(X() * X() + Y() * Y() - Z() * Z());
  const LineParam line(P(0, 0, 1), P(1, 0, 0));
  CHECK(restrict_to_line_q(c, line) == QPoly{Rational(-1), Rational(0), Rational(1)});
  CHECK(restrict_to_line(c, line).total_degree() == 2);
  CHECK_THROWS_AS(restrict_to_line_q(PlaneCurve(X() * Y()), line), DomainError);
}

TEST_CASE("member through a point") {
  const CurvePencil p(PlaneCurve(X() * X() - Z() * Z()), PlaneCurve(Y() * Y() - Z() * Z()));
  CHECK(member_through(p, P(2, 0, 1)) == 3);
  CHECK_THROWS_AS(member_through(p, P(1, 1, 1)), DomainError);
  CHECK_THROWS_AS(member_through(p, P(2, 1, 1)), DomainError);
  const PlaneCurve m = p.member(member_through(p, P(2, 0, 1)));
  CHECK(m(P(2, 0, 1)) == 0);
}

TEST_CASE("projectivities are covariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    const PlaneCurve f = random_curve(3, rng, 5);
    const Matrix3 t = random_projectivity(rng);
    const Rational det = determinant(t);
    CHECK(det != 0);
    const Matrix3 ti = inverse(t);
    CHECK(map_point(ti, map_point(t, P(1, -2, 5))) == P(1, -2, 5));
    const PlaneCurve ft = transform(f, t);
    CHECK(hessian(ft).poly() == transform(hessian(f), t).poly() * (det * det));
    const Point3 q = P(2, -1, 3);
    CHECK(polar(ft, q).poly() == transform(polar(f, map_point(t, q)), t).poly());
    CHECK(ft(q) == f(map_point(t, q)));
  }
}

TEST_CASE("random generation is deterministic") {
  const CurvePencil a = random_pencil(4, 123, 10);
  const CurvePencil b = random_pencil(4, 123, 10);
  CHECK(a.f() == b.f());
  CHECK(a.g() == b.g());
  CHECK(a.seed() == std::optional<std::uint64_t>(123));
  CHECK_FALSE(random_pencil(4, 124, 10).f() == a.f());
  auto r1 = derived_rng(1, 2, 3), r2 = derived_rng(1, 2, 3), r3 = derived_rng(1, 2, 4);
  CHECK(r1() == r2());
  CHECK_FALSE(r1() == r3());
  std::mt19937_64 rng(5);
  const PlaneCurve n = random_nodal_quartic(rng, 10);
  CHECK(n.degree() == 4);
  CHECK(n(P(0, 0, 1)) == 0);
  CHECK(evaluate(derivative(n.poly(), "x"), {0, 0, 1}) == 0);
  CHECK(evaluate(derivative(n.poly(), "y"), {0, 0, 1}) == 0);
}

TEST_CASE("serialization round trips") {
  const CurvePencil p = random_pencil(3, 99, 10);
  const CurvePencil j = pencil_from_json(nlohmann::json::parse(to_json(p).dump()));
  CHECK(j.f() == p.f());
  CHECK(j.g() == p.g());
  CHECK(j.seed() == p.seed());
  const CurvePencil t = pencil_from_text(to_text(p));
  CHECK(t.f() == p.f());
  CHECK(t.g() == p.g());
  CHECK(t.seed() == p.seed());
  const PlaneCurve c(X() * X() * Rational(3, 2) - Y() * Z());
  CHECK(curve_from_text(to_text(c)) == c);
  CHECK(curve_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(curve_from_json(nlohmann::json::parse(R"({"degree": 2})")), DomainError);
  CHECK_THROWS_AS(curve_from_text("curve 2\n1 1 1 3\n"), DomainError);
}
