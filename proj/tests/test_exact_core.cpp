#include <doctest.h>

#include <random>

#include "pencil/elimination.hpp"
#include "pencil/multipoly.hpp"
#include "pencil/upoly.hpp"

using namespace pencil;

namespace {

QPoly P(const char* s) { return parse_poly(s, 'x'); }

QPoly random_qpoly(std::mt19937_64& rng, int deg, long height = 9) {
  std::vector<Rational> c;
  for (int k = 0; k <= deg; ++k) c.emplace_back(static_cast<long>(rng() % (2 * height + 1)) - height);
  if (sgn(c.back()) == 0) c.back() = 1;
  return QPoly(std::move(c));
}

const std::vector<std::string> kXYZ{"x", "y", "z"};

MultiPoly random_multipoly(std::mt19937_64& rng, int deg, int terms) {
  MultiPoly p(kXYZ, {});
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Exponents e(3);
    int left = static_cast<int>(rng() % static_cast<unsigned>(deg + 1));
    for (int i = 0; i < 2; ++i) {
      e[static_cast<std::size_t>(i)] = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
      left -= e[static_cast<std::size_t>(i)];
    }
    e[2] = left;
    p += MultiPoly::monomial(kXYZ, e, Rational(static_cast<long>(rng() % 11) - 5));
  }
  return p;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(to_string(parse_rational(" -10/4 ")) == "-5/2");
  CHECK(parse_rational("+7").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
  CHECK(to_long_double(make_rational(1, 3)) == doctest::Approx(1.0 / 3));
  Rational huge = pow(Rational(10), 400) / 3;
  CHECK(log2_abs(huge) == doctest::Approx(400 * 3.321928094887362 - 1.584962500721156));
}

TEST_CASE("poly_eval examples") {
  const QPoly hyper = parse_poly("6(d-3)(3d-2)");
  CHECK(hyper(Rational(4)) == 60);
  CHECK(QPoly()(Rational(17)) == 0);
  CHECK(parse_poly("2d(d-2)(d-3)")(Rational(5)) == 60);
  CHECK(parse_poly("4d^4 - (13/2)d^3 - 102d^2 + (615/2)d - 152")(Rational(4)) == 54);
}

TEST_CASE("univariate division, gcd and squarefree decomposition") {
  const QPoly a = P("(x-1)^2(x-2)^3(x+5)");
  auto [q, r] = divmod(a, P("x^2+1"));
  CHECK(q * P("x^2+1") + r == a);
  CHECK(gcd(a, derivative(a)) == P("(x-1)(x-2)^2"));
  const auto sf = squarefree_decomposition(a);
  REQUIRE(sf.size() == 3);
  CHECK(sf[0].factor == P("x+5"));
  CHECK(sf[0].multiplicity == 1);
  CHECK(sf[1].factor == P("x-1"));
  CHECK(sf[1].multiplicity == 2);
  CHECK(sf[2].factor == P("x-2"));
  CHECK(sf[2].multiplicity == 3);
  CHECK(distinct_root_count(a) == 3);
  CHECK(saturate(a, P("(x-2)(x+7)")) == P("(x-1)^2(x+5)"));
  CHECK(multiplicity_of_factor(a, P("x-2")) == 3);
  CHECK_THROWS_AS(divexact(a, P("x-3")), DivisibilityError);
}

TEST_CASE("interpolation and rational roots") {
  const QPoly p = parse_poly("(d^2+3d-2)(d-3)(d-4)(d-5)");
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= 5; ++k) {
    xs.emplace_back(k * 2 - 3);
    ys.push_back(p(xs.back()));
  }
  CHECK(interpolate(xs, ys) == p);
  const auto roots = rational_roots(parse_poly("(2d-3)^2 d (d+4)(d^2+1)"));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == std::pair<Rational, int>{Rational(-4), 1});
  CHECK(roots[1] == std::pair<Rational, int>{Rational(0), 1});
  CHECK(roots[2] == std::pair<Rational, int>{make_rational(3, 2), 2});
  CHECK(is_integer_valued(parse_poly("d(d-1)/2")));
  CHECK_FALSE(is_integer_valued(parse_poly("d/2")));
  CHECK_THROWS_AS(evaluate_integral(parse_poly("d/2"), 3, "half"), DivisibilityError);
}

TEST_CASE("rendering and factorization") {
  CHECK(to_string(parse_poly("3d^2-12d+8")) == "3d^2 - 12d + 8");
  CHECK(to_string(parse_poly("4d^4 - (13/2)d^3 + 1/2")) == "4d^4 - (13/2)d^3 + 1/2");
  CHECK(to_string(factor_over_rationals(parse_poly("18d^2-66d+36"))) == "6(d - 3)(3d - 2)");
  CHECK(to_string(factor_over_rationals(parse_poly("2d^3-10d^2+12d"))) == "2d(d - 2)(d - 3)");
  const QPoly fb = parse_poly("3d^4 - 3d^3 - 102d^2 + 300d - 144");
  CHECK(to_string(factor_over_rationals(fb)) == "3(d^2 + 6d - 4)(d - 3)(d - 4)");
  const QPoly tri = parse_poly("(d^2+3d-2)(d-3)(d-4)(d-5)");
  CHECK(to_string(factor_over_rationals(tri)) == "(d^2 + 3d - 2)(d - 3)(d - 4)(d - 5)");
  CHECK(to_string(factor_over_rationals(parse_poly("-3(d-1)^2"))) == "-3(d - 1)^2");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    const QPoly p = random_qpoly(rng, 1 + i % 5) * random_qpoly(rng, 1) * QPoly{Rational(i), Rational(1)};
    const auto f = factor_over_rationals(p);
    CHECK(expand(f) == p);
    CHECK(parse_poly(to_string(f)) == p);
    CHECK(parse_poly(to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse_poly("3d +"), DomainError);
  CHECK_THROWS_AS(parse_poly("1/d"), DomainError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const QPoly a = random_qpoly(rng, 4), b = random_qpoly(rng, 3), c = random_qpoly(rng, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QPoly());
    const MultiPoly p = random_multipoly(rng, 3, 5), q = random_multipoly(rng, 2, 4), r = random_multipoly(rng, 3, 4);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    if (!q.is_zero()) CHECK(divexact(p * q, q) == p);
  }
}

TEST_CASE("multivariate basics") {
  const MultiPoly x = MultiPoly::variable(kXYZ, "x"), y = MultiPoly::variable(kXYZ, "y"),
                  z = MultiPoly::variable(kXYZ, "z");
  const MultiPoly f = x * x * y - Rational(3, 2) * z * z * z + MultiPoly(4L) * x * y * z;
  CHECK(f.is_homogeneous());
  CHECK(f.total_degree() == 3);
  CHECK(f.degree_in("z") == 3);
  CHECK(derivative(f, "x") == MultiPoly(2L) * x * y + MultiPoly(4L) * y * z);
  CHECK(evaluate(f, {Rational(1), Rational(2), Rational(1)}) == Rational(2) - Rational(3, 2) + Rational(8));
  CHECK(substitute(f, "z", x + y) == x * x * y - Rational(3, 2) * pow(x + y, 3) + MultiPoly(4L) * x * y * (x + y));
  CHECK(from_univariate(to_univariate(f, "y"), "y") == f);
  CHECK_THROWS_AS(divexact(f, x + y), DivisibilityError);
  CHECK_FALSE((f + MultiPoly(1L)).is_homogeneous());
}

TEST_CASE("resultant examples") {
  const std::vector<std::string> xab{"x", "a", "b"};
  const MultiPoly x = MultiPoly::variable(xab, "x"), a = MultiPoly::variable(xab, "a"),
                  b = MultiPoly::variable(xab, "b");
  CHECK(resultant(x * x - MultiPoly(1L), x - MultiPoly(2L), "x") == MultiPoly(3L));
  CHECK(resultant(x - a, x - b, "x") == a - b);
  const MultiPoly p = x * x * x + a * x + b;
  CHECK(resultant(p, p, "x").is_zero());
  CHECK(resultant_sylvester(p, derivative(p, "x"), "x") == resultant(p, derivative(p, "x"), "x"));
  CHECK(discriminant(p, "x") == MultiPoly(-4L) * pow(a, 3) - MultiPoly(27L) * b * b);
  CHECK(discriminant(x * x + b * x + a, "x") == b * b - MultiPoly(4L) * a);
  CHECK(discriminant(pow(x - a, 2), "x").is_zero());
  CHECK_THROWS_AS(resultant(a + b, x, "x"), DomainError);
}

TEST_CASE("resultant routes agree and are multiplicative") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const QPoly p = random_qpoly(rng, 1 + i % 4), q = random_qpoly(rng, 1 + (i / 4) % 4),
                r = random_qpoly(rng, 1 + (i / 2) % 3);
    CHECK(resultant_prs(p, r) == resultant_sylvester(p, r));
    CHECK(resultant_prs(p * q, r) == resultant_prs(p, r) * resultant_prs(q, r));
    CHECK(principal_subresultant_coefficients(p, r)[0] == resultant_prs(p, r));
  }
  for (int i = 0; i < 10; ++i) {
    const MultiPoly p = random_multipoly(rng, 3, 6), q = random_multipoly(rng, 2, 5);
    if (p.degree_in("x") < 1 || q.degree_in("x") < 1) continue;
    CHECK(resultant(p, q, "x") == resultant_sylvester(p, q, "x"));
  }
}

TEST_CASE("subresultants and gcd degree") {
  const QPoly p = P("(x-1)^2(x-2)^2");
  const auto psc = principal_subresultant_coefficients(p, derivative(p));
  CHECK(sgn(psc[0]) == 0);
  CHECK(sgn(psc[1]) == 0);
  CHECK(sgn(psc[2]) != 0);
  CHECK(gcd_degree_from_psc(psc) == 2);
  CHECK(monic(subresultant(p, derivative(p), 2)) == P("(x-1)(x-2)"));
  const auto prs = subresultant_prs(p, p);
  CHECK(prs.size() == 2);
  CHECK(prs.back() == p);
  CHECK(sgn(principal_subresultant_coefficients(P("x^2+1"), P("x-3"))[0]) != 0);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const QPoly common = random_qpoly(rng, i % 3);
    const QPoly a = common * random_qpoly(rng, 2 + i % 2), b = common * random_qpoly(rng, 1 + i % 3);
    const int g = gcd(a, b).degree();
    CHECK(gcd_degree_from_psc(principal_subresultant_coefficients(a, b)) == g);
    CHECK(monic(subresultant_prs(a, b).back()) == gcd(a, b));
  }
}

TEST_CASE("discriminant detects forced double roots") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const QPoly f = random_qpoly(rng, 2 + i % 3);
    const QPoly forced = f * pow(QPoly{Rational(static_cast<long>(i)), Rational(1)}, 2);
    CHECK(sgn(discriminant(forced)) == 0);
    if (distinct_root_count(f) == f.degree() && f.degree() >= 2) CHECK(sgn(discriminant(f)) != 0);
  }
}

TEST_CASE("bivariate resultant by interpolation") {
  const std::vector<std::string> xy{"x", "y"};
  const MultiPoly x = MultiPoly::variable(xy, "x"), y = MultiPoly::variable(xy, "y");
  const MultiPoly f = x * x * y + y * y * y - MultiPoly(2L) * x + MultiPoly(1L);
  const MultiPoly g = x * x * x - x * y * y + MultiPoly(3L) * y;
  const QPoly direct = to_qpoly(resultant(f, g, "x"), "y");
  CHECK(resultant_by_interpolation(to_bivariate(f, "x", "y"), to_bivariate(g, "x", "y")) == direct);
  CHECK(resultant_prs(to_bivariate(f, "x", "y"), to_bivariate(g, "x", "y")) == direct);
}
