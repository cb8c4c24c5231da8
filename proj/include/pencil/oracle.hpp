#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pencil/curves.hpp"
#include "pencil/roots.hpp"

namespace pencil {

struct OracleConfig {
  std::uint64_t seed = 1;
  long height = 10;
  long double cluster_radius = 1e-6L;
  long double residual_tol = 1e-8L;
  int retries = 8;
};

/// One numeric count.  `distinct` is the number of root clusters of the
/// final eliminant and `weighted` the sum of their multiplicities.
struct CountResult {
  int distinct = 0;
  int weighted = 0;
  int attempts = 1;
  int eliminant_degree = 0;
  bool cross_checked = false;
  std::string method;
};

struct BitangentCount {
  int proper = 0;
  int improper = 0;
  int weighted = 0;  // proper + 2 * improper
  int attempts = 1;
  QPoly slope_eliminant;  // bitangent slopes in the chart of `projectivity`
  Matrix3 projectivity{};
};

/// Flexes of a smooth curve: points of c and hessian(c).
CountResult count_flexes(const PlaneCurve& c, const OracleConfig& cfg);

/// Points of c whose tangent passes through `from` (c and its polar).
CountResult count_tangents_from_point(const PlaneCurve& c, const Point3& from, const OracleConfig& cfg);

/// Members of the pencil tangent to a line.  Without a line a random one is
/// drawn on every attempt.
CountResult count_tangent_members(const CurvePencil& p, const std::optional<LineParam>& line,
                                  const OracleConfig& cfg);

/// Singular members of the pencil.
CountResult count_nodal_members(const CurvePencil& p, const OracleConfig& cfg);

/// Points s of a line at which the member through the point has a flex.
CountResult count_flex_points_on_line(const CurvePencil& p, const std::optional<LineParam>& line,
                                      const OracleConfig& cfg);

/// Bitangents of a quartic.  When `node` is given the curve must have a
/// node there and lines through it are classified as improper.
BitangentCount count_bitangents_quartic(const PlaneCurve& c, const std::optional<Point3>& node,
                                        const OracleConfig& cfg);

/// Lines through `point` that are bitangent to some member of the pencil.
CountResult count_bitangent_lines_through_point(const CurvePencil& p, const Point3& point, const OracleConfig& cfg);

/// Points at which the member through the point has contact order four with
/// its tangent line.
CountResult count_hyperflexes(const CurvePencil& p, const OracleConfig& cfg);

/// Exact squarefree structure solved numerically; retries with the radius
/// shrunk by 1e2 and then 1e4 before giving up with NumericError.
RootReport solve_eliminant(const QPoly& p, const OracleConfig& cfg);

/// Line through two random integer points of height cfg.height.
LineParam random_line(std::mt19937_64& rng, long height);

}  // namespace pencil
