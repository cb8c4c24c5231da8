#include <doctest.h>

#include "pencil/elimination.hpp"
#include "pencil/oracle.hpp"

using namespace pencil;

namespace {

MultiPoly X() { return MultiPoly::variable(plane_vars(), "x"); }
MultiPoly Y() { return MultiPoly::variable(plane_vars(), "y"); }
MultiPoly Z() { return MultiPoly::variable(plane_vars(), "z"); }

Point3 P(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

OracleConfig config(std::uint64_t seed) {
  OracleConfig c;
  c.seed = seed;
  return c;
}

PlaneCurve random_smooth(int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_curve(degree, rng, 10);
}

}  // namespace

TEST_CASE("flexes") {
  CHECK(count_flexes(fermat_curve(3), config(1)).distinct == 9);
  CHECK(count_flexes(random_smooth(3, 2), config(2)).distinct == 9);
  const auto q = count_flexes(random_smooth(4, 3), config(3));
  CHECK(q.distinct == 24);
  CHECK(q.weighted == 24);
  CHECK_THROWS_AS(count_flexes(PlaneCurve(X() * X() + Y() * Z()), config(1)), DomainError);
}

TEST_CASE("tangents from a point") {
  CHECK(count_tangents_from_point(PlaneCurve(X() * X() + Y() * Y() - Z() * Z()), P(3, 1, 1), config(1)).distinct == 2);
  CHECK(count_tangents_from_point(random_smooth(3, 4), P(2, -3, 5), config(4)).distinct == 6);
  CHECK(count_tangents_from_point(random_smooth(4, 5), P(7, 1, -2), config(5)).distinct == 12);
  CHECK_THROWS_AS(count_tangents_from_point(PlaneCurve(X() * X() - Z() * Z()), P(1, 0, 1), config(1)), DomainError);
}

TEST_CASE("tangent members") {
  for (int d = 2; d <= 4; ++d) {
    const auto p = random_pencil(d, 10 + static_cast<std::uint64_t>(d), 10);
    CHECK(count_tangent_members(p, std::nullopt, config(6)).distinct == 2 * d - 2);
  }
  const auto p = random_pencil(3, 40, 10);
  CHECK(count_tangent_members(p, LineParam(P(0, 1, 2), P(3, -1, 1)), config(6)).distinct == 4);
}

TEST_CASE("nodal members") {
  for (int d = 2; d <= 4; ++d) {
    const auto p = random_pencil(d, 20 + static_cast<std::uint64_t>(d), 10);
    CHECK(count_nodal_members(p, config(7)).distinct == 3 * (d - 1) * (d - 1));
  }
}

TEST_CASE("flex points on a line") {
  CHECK(count_flex_points_on_line(random_pencil(3, 31, 10), std::nullopt, config(8)).distinct == 12);
  CHECK(count_flex_points_on_line(random_pencil(4, 32, 10), std::nullopt, config(8)).distinct == 18);
}

TEST_CASE("quartic bitangents") {
  const auto smooth = count_bitangents_quartic(random_smooth(4, 9), std::nullopt, config(9));
  CHECK(smooth.proper == 28);
  CHECK(smooth.improper == 0);

  std::mt19937_64 rng(10);
  const PlaneCurve nodal = random_nodal_quartic(rng, 10);
  const auto n = count_bitangents_quartic(nodal, P(0, 0, 1), config(10));
  CHECK(n.proper == 16);
  CHECK(n.improper == 6);
  CHECK(n.weighted == 28);
  CHECK_THROWS_AS(count_bitangents_quartic(nodal, P(1, 0, 1), config(10)), DomainError);
}

TEST_CASE("constructed quartic has its four forced bitangents") {
  // (conic)^2 + e l1 l2 l3 l4: each l_i restricts to a perfect square.
  const MultiPoly conic = X() * X() + Y() * Y() * Rational(2) - Z() * Z() * Rational(3) + X() * Y();
  const std::array<std::array<long, 3>, 4> lines{{{1, 2, -1}, {3, -1, 2}, {1, 1, 1}, {2, -3, 5}}};
  MultiPoly prod = MultiPoly(1L).with_vars(plane_vars());
  for (const auto& l : lines) prod = prod * (X() * Rational(l[0]) + Y() * Rational(l[1]) + Z() * Rational(l[2]));
  const PlaneCurve c(conic * conic + prod * Rational(1, 7));
  const auto r = count_bitangents_quartic(c, std::nullopt, config(11));
  CHECK(r.proper == 28);
  for (const auto& l : lines) {
    // The line a.X = 0 becomes (T^t a).X = 0 in the working chart.
    Point3 a{Rational(0), Rational(0), Rational(0)};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a[i] += r.projectivity[j][i] * Rational(l[j]);
    REQUIRE(sgn(a[1]) != 0);
    CHECK(r.slope_eliminant(Rational(-a[0] / a[1])) == 0);
  }
}

TEST_CASE("counts do not depend on the seed") {
  const PlaneCurve c = random_smooth(3, 12);
  CHECK(count_flexes(c, config(100)).distinct == count_flexes(c, config(200)).distinct);
  const auto p = random_pencil(3, 13, 10);
  CHECK(count_nodal_members(p, config(100)).distinct == count_nodal_members(p, config(200)).distinct);
}

TEST_CASE("degenerate input exhausts the retry budget") {
  // x^3 + y^3 + xyz is singular at (0:0:1); smoothness is never certified.
  OracleConfig c = config(1);
  c.retries = 2;
  CHECK_THROWS_AS(count_flexes(PlaneCurve(X() * X() * X() + Y() * Y() * Y() + X() * Y() * Z()), c), RetryExhausted);
}

TEST_CASE("bitangent lines through a point") {
  const Point3 x = P(2, -3, 1);
  CHECK(count_bitangent_lines_through_point(random_pencil(4, 77, 10), x, config(5)).distinct == 16);
  CHECK(count_bitangent_lines_through_point(random_pencil(3, 77, 10), x, config(5)).distinct == 0);
}

TEST_CASE("no hyperflexes on cubic pencils") {
  CHECK(count_hyperflexes(random_pencil(3, 77, 10), config(5)).distinct == 0);
}
