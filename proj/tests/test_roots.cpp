#include <doctest.h>

#include <random>

#include "pencil/roots.hpp"

using namespace pencil;

namespace {

QPoly from_roots(const std::vector<long>& rs) {
  QPoly p{Rational(1)};
  for (long r : rs) p = p * QPoly{Rational(-r), Rational(1)};
  return p;
}

}  // namespace

TEST_CASE("cube roots of unity") {
  const auto c = roots(QPoly{Rational(-1), Rational(0), Rational(0), Rational(1)}, 1e-6L);
  REQUIRE(c.size() == 3);
  for (const auto& r : c) {
    CHECK(r.multiplicity == 1);
    CHECK(std::abs(std::abs(r.representative) - 1) < 1e-15L);
    CHECK(r.residual < 1e-15L);
  }
}

TEST_CASE("exact multiplicities") {
  const auto rep = exact_roots(from_roots({2, 2, -1}), 1e-6L, 1e-8L, true);
  CHECK(rep.distinct == 2);
  CHECK(rep.total == 3);
  CHECK(rep.cross_checked);
  std::vector<int> m;
  for (const auto& c : rep.clusters) m.push_back(c.multiplicity);
  std::sort(m.begin(), m.end());
  CHECK(m == std::vector<int>{1, 2});
  const auto zero = exact_roots(from_roots({0, 0, 0, 5}), 1e-6L, 1e-8L, true);
  CHECK(zero.distinct == 2);
  CHECK(zero.total == 4);
}

TEST_CASE("random squarefree polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    QPoly p;
    std::vector<Rational> cs;
    for (int k = 0; k <= 12; ++k) cs.emplace_back(static_cast<long>(rng() % 21) - 10);
    cs.back() = 1 + static_cast<long>(rng() % 5);
    p = QPoly(cs);
    if (squarefree_part(p).degree() != 12) continue;
    const auto rep = exact_roots(p, 1e-6L, 1e-8L, true);
    CHECK(rep.distinct == 12);
    for (const auto& c : rep.clusters) CHECK(relative_residual(p, c.representative) < 1e-12L);
  }
}

TEST_CASE("badly scaled coefficients") {
  // Roots 1e-30 and 1e30 together with unit roots.
  const Rational tiny = Rational(1, 1) / Rational(mpz_class("1000000000000000000000000000000"));
  const Rational huge(mpz_class("1000000000000000000000000000000"));
  QPoly p = QPoly{-tiny, Rational(1)} * QPoly{-huge, Rational(1)} * from_roots({1, -3});
  const auto rep = exact_roots(p, 1e-6L, 1e-8L, false);
  CHECK(rep.distinct == 4);
  bool saw_huge = false;
  for (const auto& c : rep.clusters) saw_huge |= std::abs(c.representative) > 1e29L;
  CHECK(saw_huge);
}

TEST_CASE("high degree products") {
  std::vector<long> rs;
  for (long r = -20; r <= 20; ++r) rs.push_back(r);
  const auto rep = exact_roots(from_roots(rs), 1e-6L, 1e-8L, false);
  CHECK(rep.distinct == 41);
  CHECK_THROWS_AS(roots(QPoly{Rational(1), Rational(1)}, 0), DomainError);
}
