#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pencil/multipoly.hpp"

namespace pencil {

/// Thrown when a bounded genericity retry loop runs out of attempts.
class RetryExhausted : public Error {
 public:
  using Error::Error;
};

using Point3 = std::array<Rational, 3>;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

/// The coordinate names every plane curve uses.
const std::vector<std::string>& plane_vars();

/// A nonzero homogeneous form in x, y, z.
class PlaneCurve {
 public:
  explicit PlaneCurve(MultiPoly poly);

  const MultiPoly& poly() const { return poly_; }
  int degree() const { return degree_; }
  Rational operator()(const Point3& p) const;

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) { return a.poly_ == b.poly_; }

 private:
  MultiPoly poly_;
  int degree_;
};

/// The pencil f + t g (with g the member at t = infinity).
class CurvePencil {
 public:
  CurvePencil(PlaneCurve f, PlaneCurve g, std::optional<std::uint64_t> seed = std::nullopt);

  const PlaneCurve& f() const { return f_; }
  const PlaneCurve& g() const { return g_; }
  int degree() const { return f_.degree(); }
  std::optional<std::uint64_t> seed() const { return seed_; }
  PlaneCurve member(const Rational& t) const;

 private:
  PlaneCurve f_, g_;
  std::optional<std::uint64_t> seed_;
};

/// Points base + s * direction.
class LineParam {
 public:
  LineParam(Point3 base, Point3 direction);
  const Point3& base() const { return base_; }
  const Point3& direction() const { return direction_; }
  Point3 point(const Rational& s) const;

 private:
  Point3 base_, direction_;
};

/// The monomial coefficients of a random form, uniform in [-height, height].
PlaneCurve random_curve(int degree, std::mt19937_64& rng, long height);
/// Deterministic in (degree, seed, height).
CurvePencil random_pencil(int degree, std::uint64_t seed, long height);
/// A quartic with a node at [0:0:1] and otherwise random coefficients.
PlaneCurve random_nodal_quartic(std::mt19937_64& rng, long height);

PlaneCurve fermat_curve(int degree);

PlaneCurve hessian(const PlaneCurve& c);
PlaneCurve polar(const PlaneCurve& c, const Point3& point);
/// c(base + s * direction) as a polynomial in "s".
MultiPoly restrict_to_line(const PlaneCurve& c, const LineParam& line);
QPoly restrict_to_line_q(const PlaneCurve& c, const LineParam& line);
/// t with f(point) + t g(point) = 0.
Rational member_through(const CurvePencil& p, const Point3& point);

/// Integer matrix with entries in {-4..4} \ {0} and nonzero determinant.
Matrix3 random_projectivity(std::mt19937_64& rng);
Rational determinant(const Matrix3& m);
Matrix3 inverse(const Matrix3& m);
Point3 map_point(const Matrix3& m, const Point3& p);
/// F(T X).
PlaneCurve transform(const PlaneCurve& c, const Matrix3& t);
CurvePencil transform(const CurvePencil& p, const Matrix3& t);

/// Deterministic generator for attempt `attempt` of a computation tagged
/// `tag` under `seed`.
std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t tag, std::uint64_t attempt);

// Serialization.  JSON: {"degree": n, "terms": [{"e": [i, j, k], "n": "p",
// "d": "q"}, ...]}; a pencil is {"f": curve, "g": curve, "seed": n or null}.
// Plain text: one "i j k p/q" line per term after a "curve n" header; a
// pencil file has "pencil n [seed]" and then lines prefixed by f or g.

nlohmann::ordered_json to_json(const PlaneCurve& c);
nlohmann::ordered_json to_json(const CurvePencil& p);
PlaneCurve curve_from_json(const nlohmann::json& j);
CurvePencil pencil_from_json(const nlohmann::json& j);
std::string to_text(const PlaneCurve& c);
std::string to_text(const CurvePencil& p);
PlaneCurve curve_from_text(std::string_view text);
CurvePencil pencil_from_text(std::string_view text);

}  // namespace pencil
