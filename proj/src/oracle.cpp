#include "pencil/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "pencil/elimination.hpp"

namespace pencil {

namespace {

/// A draw that is not in general position; the caller retries.
class Degenerate : public Error {
 public:
  using Error::Error;
};

/// Resultant in the working chart.  A factor of degree zero in the
/// eliminated variable means the chart is not generic.
QPoly chart_resultant(const UniPoly<QPoly>& a, const UniPoly<QPoly>& b, int degree_bound = -1) {
  if (a.degree() < 1 || b.degree() < 1) throw Degenerate("degree drop in the working chart");
  return resultant_by_interpolation(a, b, degree_bound);
}

enum Tag : std::uint64_t {
  kFlexes = 1,
  kTangents,
  kTangentMembers,
  kNodalMembers,
  kFlexLine,
  kBitangents,
  kThroughPoint,
  kHyperflexes,
};

template <typename Result, typename Fn>
Result with_retries(const OracleConfig& cfg, Tag tag, const char* what, Fn&& attempt) {
  std::string last = "no attempts";
  const int budget = std::max(1, cfg.retries);
  for (int a = 0; a < budget; ++a) {
    auto rng = derived_rng(cfg.seed, tag, static_cast<std::uint64_t>(a));
    try {
      Result r = attempt(rng);
      r.attempts = a + 1;
      return r;
    } catch (const Degenerate& e) {
      last = e.what();
    } catch (const NumericError& e) {
      last = e.what();
    }
  }
  throw RetryExhausted(std::string(what) + ": " + std::to_string(budget) + " attempts exhausted (last: " + last + ")");
}

long small(std::mt19937_64& rng) { return static_cast<long>(rng() % 7) - 3; }

/// f + a g, g + b f with 1 - ab != 0: the same pencil, t moved by a Moebius map.
CurvePencil reparametrize(const CurvePencil& p, std::mt19937_64& rng) {
  for (;;) {
    const long a = small(rng), b = small(rng);
    if (a * b == 1) continue;
    return CurvePencil(PlaneCurve(p.f().poly() + p.g().poly() * Rational(a)),
                       PlaneCurve(p.g().poly() + p.f().poly() * Rational(b)), p.seed());
  }
}

UniPoly<QPoly> affine_xy(const MultiPoly& F) {
  return to_bivariate(specialize(F, "z", Rational(1)), "x", "y");
}

/// F(x, 1, 0) as a polynomial in x.
QPoly at_infinity(const MultiPoly& F) {
  return to_qpoly(specialize(specialize(F, "z", Rational(0)), "y", Rational(1)), "x");
}

QPoly restrict(const MultiPoly& F, const LineParam& line) {
  std::array<QPoly, 3> coord;
  for (std::size_t i = 0; i < 3; ++i) coord[i] = QPoly{line.base()[i], line.direction()[i]};
  QPoly acc;
  for (const auto& [e, k] : F.terms())
    acc += pow(coord[0], static_cast<unsigned>(e[0])) * pow(coord[1], static_cast<unsigned>(e[1])) *
           pow(coord[2], static_cast<unsigned>(e[2])) * k;
  return acc;
}

QPoly specialize_inner(const UniPoly<QPoly>& u, const Rational& y) {
  std::vector<Rational> c;
  c.reserve(u.size());
  for (const auto& v : u.coeffs()) c.push_back(v(y));
  return QPoly(std::move(c));
}

int inner_degree(const UniPoly<QPoly>& u) {
  int m = 0;
  for (const auto& c : u.coeffs()) m = std::max(m, c.degree());
  return m;
}

/// The polynomial in y given pointwise by fn(a(., y), b(., y)), by
/// interpolation through bound + 1 nodes that keep both degrees.
template <typename Fn>
QPoly interpolate_in_y(const UniPoly<QPoly>& a, const UniPoly<QPoly>& b, int bound, Fn&& fn) {
  std::vector<Rational> xs, ys;
  for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    const Rational y = k % 2 ? Rational((k + 1) / 2) : Rational(-(k / 2));
    if (sgn(a.leading()(y)) == 0 || sgn(b.leading()(y)) == 0) continue;
    xs.push_back(y);
    ys.push_back(fn(specialize_inner(a, y), specialize_inner(b, y)));
  }
  return interpolate(xs, ys);
}

/// First subresultant S_1 = s1 x + s0 of a and b in x, coefficients in y.
std::pair<QPoly, QPoly> first_subresultant(const UniPoly<QPoly>& a, const UniPoly<QPoly>& b) {
  if (b.degree() == 1) return {b[1], b[0]};
  if (a.degree() == 1) return {a[1], a[0]};
  const int bound = (b.degree() - 1) * inner_degree(a) + (a.degree() - 1) * inner_degree(b);
  QPoly s1 = interpolate_in_y(a, b, bound, [](const QPoly& p, const QPoly& q) { return subresultant_minor(p, q, 1, 1); });
  QPoly s0 = interpolate_in_y(a, b, bound, [](const QPoly& p, const QPoly& q) { return subresultant_minor(p, q, 1, 0); });
  return {std::move(s1), std::move(s0)};
}

Complex eval_c(const QPoly& p, Complex z) {
  Complex acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * z + Complex(to_long_double(p[k]), 0);
  return acc;
}

/// |F(x, y, 1)| relative to the sum of absolute term values.
long double affine_residual(const MultiPoly& F, Complex x, Complex y) {
  Complex value = 0;
  long double bound = 0;
  const long double ax = std::abs(x), ay = std::abs(y);
  for (const auto& [e, k] : F.terms()) {
    const long double c = to_long_double(k);
    value += c * std::pow(x, e[0]) * std::pow(y, e[1]);
    bound += std::abs(c) * std::pow(ax, e[0]) * std::pow(ay, e[1]);
  }
  return bound > 0 ? std::abs(value) / bound : 0;
}

bool vanishes(const MultiPoly& F, const Point3& p) { return sgn(evaluate(F, {p[0], p[1], p[2]})) == 0; }

const Point3 kVertex{Rational(1), Rational(0), Rational(0)};

/// Intersection points of two curves already in general position for the
/// chart: (1:0:0) on neither and no common point on z = 0.
CountResult intersect(const MultiPoly& A, const MultiPoly& B, const OracleConfig& cfg, const char* method) {
  const int da = A.total_degree(), db = B.total_degree();
  if (vanishes(A, kVertex) || vanishes(B, kVertex)) throw Degenerate("coordinate vertex lies on a curve");
  if (sgn(resultant_prs(at_infinity(A), at_infinity(B))) == 0) throw Degenerate("common point at infinity");
  const auto a = affine_xy(A), b = affine_xy(B);
  const QPoly R = chart_resultant(a, b, da * db);
  if (R.degree() != da * db) throw Degenerate("eliminant has the wrong degree");
  const auto [s1, s0] = first_subresultant(a, b);
  if (gcd(squarefree_part(R), s1).degree() > 0) throw Degenerate("two intersection points share a y-coordinate");
  const RootReport rep = solve_eliminant(R, cfg);
  for (const auto& c : rep.clusters) {
    const Complex y = c.representative;
    const Complex x = -eval_c(s0, y) / eval_c(s1, y);
    const MultiPoly Aa = specialize(A, "z", Rational(1)), Ba = specialize(B, "z", Rational(1));
    if (affine_residual(Aa, x, y) > cfg.residual_tol || affine_residual(Ba, x, y) > cfg.residual_tol)
      throw NumericError("fiber point fails the residual test");
  }
  CountResult out;
  out.distinct = rep.distinct;
  out.weighted = rep.total;
  out.eliminant_degree = R.degree();
  out.cross_checked = rep.cross_checked;
  out.method = method;
  return out;
}

/// Certifies smoothness in the chart by elimination on the partials.
void require_smooth(const MultiPoly& F) {
  const auto& v = plane_vars();
  const MultiPoly fx = derivative(F, v[0]), fy = derivative(F, v[1]), fz = derivative(F, v[2]);
  QPoly g = gcd(gcd(at_infinity(fx), at_infinity(fy)), at_infinity(fz));
  if (g.degree() != 0) throw Degenerate("smoothness not certified at infinity");
  const int e = F.total_degree() - 1;
  const auto ax = affine_xy(fx);
  const QPoly r1 = chart_resultant(ax, affine_xy(fy), e * e);
  const QPoly r2 = chart_resultant(ax, affine_xy(fz), e * e);
  if (r1.is_zero() || r2.is_zero() || gcd(r1, r2).degree() > 0) throw Degenerate("smoothness not certified");
}

void require_squarefree(const QPoly& p, const char* what) {
  if (squarefree_part(p).degree() != p.degree()) throw Degenerate(std::string(what) + " has repeated roots");
}

CountResult count_of(const QPoly& p, const OracleConfig& cfg, const char* method) {
  const RootReport rep = solve_eliminant(p, cfg);
  CountResult out;
  out.distinct = rep.distinct;
  out.weighted = rep.total;
  out.eliminant_degree = std::max(0, p.degree());
  out.cross_checked = rep.cross_checked;
  out.method = method;
  return out;
}

/// y-coordinates of the singular points of the members, for a pencil in
/// general position: Res_x of two gradient minors with the points where
/// f_x = g_x = 0 removed.  Also returns that removed factor.
struct SingularLocus {
  QPoly N, S;
  UniPoly<QPoly> mxy, mxz;
};

SingularLocus singular_locus(const MultiPoly& f, const MultiPoly& g) {
  const auto& v = plane_vars();
  const MultiPoly fx = derivative(f, v[0]), fy = derivative(f, v[1]), fz = derivative(f, v[2]);
  const MultiPoly gx = derivative(g, v[0]), gy = derivative(g, v[1]), gz = derivative(g, v[2]);
  const MultiPoly Mxy = fx * gy - fy * gx, Mxz = fx * gz - fz * gx;
  const int d = f.total_degree();
  for (const auto* F : {&Mxy, &Mxz, &fx, &gx})
    if (vanishes(*F, kVertex)) throw Degenerate("coordinate vertex on a gradient curve");
  if (sgn(resultant_prs(at_infinity(Mxy), at_infinity(Mxz))) == 0 || sgn(resultant_prs(at_infinity(fx), at_infinity(gx))) == 0)
    throw Degenerate("gradient curves meet at infinity");
  SingularLocus out;
  out.mxy = affine_xy(Mxy);
  out.mxz = affine_xy(Mxz);
  const QPoly R = chart_resultant(out.mxy, out.mxz, (2 * d - 2) * (2 * d - 2));
  out.S = chart_resultant(affine_xy(fx), affine_xy(gx), (d - 1) * (d - 1));
  if (R.degree() != (2 * d - 2) * (2 * d - 2) || out.S.degree() != (d - 1) * (d - 1))
    throw Degenerate("gradient eliminant has the wrong degree");
  try {
    out.N = divexact(R, out.S);
  } catch (const DivisibilityError&) {
    throw Degenerate("spurious gradient factor does not divide");
  }
  if (out.N.degree() != 3 * (d - 1) * (d - 1) || gcd(out.N, out.S).degree() > 0)
    throw Degenerate("singular points are not in general position");
  return out;
}


/// Bitangents x = c z have no slope; a chart with one is rejected.
void require_no_vertical_bitangent(const MultiPoly& F) {
  const auto a = to_bivariate(specialize(F, "z", Rational(1)), "y", "x");
  if (a.degree() != 4 || a.leading().degree() != 0) throw Degenerate("vertical direction lies on the curve");
  const QPoly u = a[2] * a[4] * Rational(4) - a[3] * a[3];
  const QPoly e1 = a[4] * a[4] * a[1] * Rational(8) - a[3] * u;
  const QPoly e2 = a[4] * a[4] * a[4] * a[0] * Rational(64) - u * u;
  if (gcd(e1, e2).degree() != 0) throw Degenerate("a bitangent is vertical in this chart");
}

}  // namespace

RootReport solve_eliminant(const QPoly& p, const OracleConfig& cfg) {
  if (p.is_zero()) throw DomainError("eliminant vanishes identically");
  if (p.degree() < 1) return {};
  long double r = cfg.cluster_radius;
  std::string last;
  for (int k = 0; k < 3; ++k, r /= 100) {
    try {
      return exact_roots(p, r, cfg.residual_tol, p.degree() <= 64);
    } catch (const NumericError& e) {
      last = e.what();
    }
  }
  throw NumericError(last);
}

LineParam random_line(std::mt19937_64& rng, long height) {
  auto coord = [&] { return Rational(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * height + 1)) - height); };
  for (;;) {
    Point3 a{coord(), coord(), coord()}, b{coord(), coord(), coord()};
    try {
      return LineParam(a, b);
    } catch (const DomainError&) {
    }
  }
}

CountResult count_flexes(const PlaneCurve& c, const OracleConfig& cfg) {
  if (c.degree() < 3) throw DomainError("flexes need degree >= 3");
  return with_retries<CountResult>(cfg, kFlexes, "flexes", [&](std::mt19937_64& rng) {
    const PlaneCurve ct = transform(c, random_projectivity(rng));
    require_smooth(ct.poly());
    return intersect(ct.poly(), hessian(ct).poly(), cfg, "curve-hessian elimination");
  });
}

CountResult count_tangents_from_point(const PlaneCurve& c, const Point3& from, const OracleConfig& cfg) {
  if (c.degree() < 2) throw DomainError("tangents need degree >= 2");
  if (sgn(c(from)) == 0) throw DomainError("the point lies on the curve");
  return with_retries<CountResult>(cfg, kTangents, "tangents from a point", [&](std::mt19937_64& rng) {
    const Matrix3 t = random_projectivity(rng);
    const PlaneCurve ct = transform(c, t);
    require_smooth(ct.poly());
    return intersect(ct.poly(), polar(ct, map_point(inverse(t), from)).poly(), cfg, "curve-polar elimination");
  });
}

CountResult count_tangent_members(const CurvePencil& p, const std::optional<LineParam>& line, const OracleConfig& cfg) {
  const int d = p.degree();
  if (d < 2) throw DomainError("tangent members need degree >= 2");
  return with_retries<CountResult>(cfg, kTangentMembers, "tangent members", [&](std::mt19937_64& rng) {
    const LineParam L = line ? *line : random_line(rng, cfg.height);
    const CurvePencil q = reparametrize(p, rng);
    const QPoly fl = restrict(q.f().poly(), L), gl = restrict(q.g().poly(), L);
    const int n = std::max(fl.degree(), gl.degree());
    if (n < d) throw Degenerate("the direction point is a base point");
    std::vector<QPoly> coeffs;
    for (int k = 0; k <= n; ++k)
      coeffs.push_back(QPoly{k <= fl.degree() ? fl[k] : Rational(0), k <= gl.degree() ? gl[k] : Rational(0)});
    const QPoly D = discriminant(UniPoly<QPoly>(std::move(coeffs)));
    if (D.degree() != 2 * d - 2) throw Degenerate("member at infinity is tangent to the line");
    require_squarefree(D, "tangency discriminant");
    return count_of(D, cfg, "discriminant in s");
  });
}

CountResult count_nodal_members(const CurvePencil& p, const OracleConfig& cfg) {
  const int d = p.degree();
  if (d < 2) throw DomainError("nodal members need degree >= 2");
  return with_retries<CountResult>(cfg, kNodalMembers, "nodal members", [&](std::mt19937_64& rng) {
    const CurvePencil q = transform(reparametrize(p, rng), random_projectivity(rng));
    const MultiPoly &f = q.f().poly(), &g = q.g().poly();
    const SingularLocus loc = singular_locus(f, g);
    const auto [s1, s0] = first_subresultant(loc.mxy, loc.mxz);
    if (gcd(loc.N, s1).degree() > 0) throw Degenerate("two singular points share a y-coordinate");
    // H(y, t) = s1^(d-1) (f_x + t g_x)(-s0/s1, y).
    const auto fx = affine_xy(derivative(f, "x")), gx = affine_xy(derivative(g, "x"));
    std::vector<QPoly> num_pow{QPoly{Rational(1)}}, den_pow{QPoly{Rational(1)}};
    for (int k = 1; k < d; ++k) {
      num_pow.push_back(num_pow.back() * -s0);
      den_pow.push_back(den_pow.back() * s1);
    }
    auto homogenized = [&](const UniPoly<QPoly>& u) {
      QPoly acc;
      for (int k = 0; k <= u.degree(); ++k)
        acc += u[k] * num_pow[static_cast<std::size_t>(k)] * den_pow[static_cast<std::size_t>(d - 1 - k)];
      return acc;
    };
    QPoly hf = homogenized(fx), hg = homogenized(gx);
    // Integer coefficients keep the resultant's remainder sequence cheap.
    {
      mpz_class den = 1, num = 0;
      for (const auto* h : {&hf, &hg})
        for (const auto& c : h->coeffs()) {
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
          mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
        }
      if (num != 0) {
        Rational scale(den, num);
        scale.canonicalize();
        hf *= scale;
        hg *= scale;
      }
    }
    std::vector<QPoly> h;
    for (int k = 0; k <= std::max(hf.degree(), hg.degree()); ++k)
      h.push_back(QPoly{k <= hf.degree() ? hf[k] : Rational(0), k <= hg.degree() ? hg[k] : Rational(0)});
    std::vector<QPoly> n;
    const QPoly n_int = primitive_part(loc.N);
    for (const auto& c : n_int.coeffs()) n.push_back(QPoly{c});
    UniPoly<QPoly> H(std::move(h));
    if (H.degree() < 1) throw Degenerate("member map is constant on the singular locus");
    const QPoly T = chart_resultant(UniPoly<QPoly>(std::move(n)), H, loc.N.degree());
    if (T.degree() != loc.N.degree()) throw Degenerate("a singular point lies on the member at infinity");
    require_squarefree(T, "member eliminant");
    return count_of(T, cfg, "gradient minors, then Res_y");
  });
}

CountResult count_flex_points_on_line(const CurvePencil& p, const std::optional<LineParam>& line,
                                      const OracleConfig& cfg) {
  const int d = p.degree();
  if (d < 3) throw DomainError("flex points need degree >= 3");
  return with_retries<CountResult>(cfg, kFlexLine, "flex points on a line", [&](std::mt19937_64& rng) {
    const LineParam L = line ? *line : random_line(rng, cfg.height);
    const CurvePencil q = reparametrize(p, rng);
    const QPoly fl = restrict(q.f().poly(), L), gl = restrict(q.g().poly(), L);
    if (gcd(fl, gl).degree() > 0) throw Degenerate("a base point lies on the line");
    const auto& v = plane_vars();
    QPoly m[3][3];
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const MultiPoly fij = derivative(derivative(q.f().poly(), v[i]), v[j]);
        const MultiPoly gij = derivative(derivative(q.g().poly(), v[i]), v[j]);
        m[i][j] = gl * restrict(fij, L) - fl * restrict(gij, L);
      }
    const QPoly Q = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (Q.degree() != 6 * d - 6) throw Degenerate("flex eliminant has the wrong degree");
    require_squarefree(Q, "flex eliminant");
    return count_of(Q, cfg, "hessian of the member through p(s)");
  });
}

BitangentCount count_bitangents_quartic(const PlaneCurve& c, const std::optional<Point3>& node, const OracleConfig& cfg) {
  if (c.degree() != 4) throw DomainError("bitangent count needs a quartic");
  if (node) {
    const auto& v = plane_vars();
    if (sgn(c(*node)) != 0) throw DomainError("the node is not on the curve");
    for (const auto& name : v)
      if (!vanishes(derivative(c.poly(), name), *node)) throw DomainError("the given point is not singular");
  }
  return with_retries<BitangentCount>(cfg, kBitangents, "quartic bitangents", [&](std::mt19937_64& rng) {
    const Matrix3 t = random_projectivity(rng);
    const PlaneCurve ct = transform(c, t);
    // Lines y = m x + b; q(x) = a4 x^4 + ... + a0 with a_k in (m, b).
    const std::vector<std::string> vars{"x", "m", "b"};
    const MultiPoly X = MultiPoly::variable(vars, "x"), M = MultiPoly::variable(vars, "m"),
                    B = MultiPoly::variable(vars, "b");
    const MultiPoly q = substitute(specialize(ct.poly(), "z", Rational(1)), "y", M * X + B).with_vars(vars);
    const auto a = to_univariate(q, "x");
    if (a.degree() != 4) throw Degenerate("vertical direction lies on the curve");
    const MultiPoly u = a[2] * a[4] * Rational(4) - a[3] * a[3];
    const MultiPoly E1 = a[4] * a[4] * a[1] * Rational(8) - a[3] * u;
    const MultiPoly E2 = a[4] * a[4] * a[4] * a[0] * Rational(64) - u * u;
    const QPoly R = chart_resultant(to_bivariate(E1, "b", "m"), to_bivariate(E2, "b", "m"));
    if (R.is_zero()) throw Degenerate("square conditions share a component");
    const QPoly P = saturate(R, to_qpoly(a[4], "m"));
    require_no_vertical_bitangent(ct.poly());
    BitangentCount out;
    out.slope_eliminant = P;
    out.projectivity = t;
    if (!node) {
      require_squarefree(P, "slope eliminant");
      out.proper = solve_eliminant(P, cfg).distinct;
      out.weighted = out.proper;
      return out;
    }
    const Point3 n = map_point(inverse(t), *node);
    if (sgn(n[2]) == 0) throw Degenerate("node at infinity");
    const Rational x0 = n[0] / n[2], y0 = n[1] / n[2];
    // Lines through the node: q has a double root at x0; what is left is a
    // quadratic whose discriminant vanishes on the tangents from the node.
    MultiPoly through = substitute(q, "b", MultiPoly(y0) - M * x0).with_vars(vars);
    const MultiPoly sq = (X - MultiPoly(x0)) * (X - MultiPoly(x0));
    MultiPoly rest;
    try {
      rest = divexact(through, sq.with_vars(vars));
    } catch (const DivisibilityError&) {
      throw DomainError("the node did not transform to a double point");
    }
    const QPoly D = to_qpoly(discriminant(rest, "x"), "m");
    const QPoly I = gcd(P, D);
    if (I.degree() < 1) throw Degenerate("no improper bitangent found");
    QPoly proper;
    try {
      proper = divexact(P, I * I);
    } catch (const DivisibilityError&) {
      throw Degenerate("improper bitangents are not double");
    }
    if (gcd(proper, I).degree() > 0) throw Degenerate("improper bitangents are more than double");
    require_squarefree(I, "improper factor");
    require_squarefree(proper, "proper factor");
    out.improper = solve_eliminant(I, cfg).distinct;
    out.proper = solve_eliminant(proper, cfg).distinct;
    out.weighted = out.proper + 2 * out.improper;
    return out;
  });
}

CountResult count_bitangent_lines_through_point(const CurvePencil& p, const Point3& point, const OracleConfig& cfg) {
  if (p.degree() < 3) throw DomainError("bitangent lines need degree >= 3");
  return with_retries<CountResult>(cfg, kThroughPoint, "bitangent lines through a point", [&](std::mt19937_64& rng) {
    const Matrix3 t = random_projectivity(rng);
    const CurvePencil q = transform(reparametrize(p, rng), t);
    const Point3 pt = map_point(inverse(t), point);
    if (sgn(pt[2]) == 0) throw Degenerate("point at infinity");
    const Rational x0 = pt[0] / pt[2], y0 = pt[1] / pt[2];
    const std::vector<std::string> vars{"s", "m", "t"};
    const MultiPoly S = MultiPoly::variable(vars, "s"), M = MultiPoly::variable(vars, "m"),
                    T = MultiPoly::variable(vars, "t");
    auto along = [&](const MultiPoly& F) {
      MultiPoly r = specialize(F, "z", Rational(1));
      r = substitute(r, "y", MultiPoly(y0) + M * S);
      r = substitute(r, "x", MultiPoly(x0) + S);
      return r.with_vars(vars);
    };
    const MultiPoly alpha = along(q.f().poly()), beta = along(q.g().poly());
    const MultiPoly poly = alpha + T * beta;
    const auto psc = principal_subresultant_coefficients(poly, derivative(poly, "s"), "s");
    const MultiPoly lc = to_univariate(poly, "s").leading();
    const MultiPoly s0 = divexact(psc[0], lc), s1 = divexact(psc[1], lc);
    if (s0.degree_in("t") < 1 || s1.degree_in("t") < 1) throw Degenerate("tangency conditions do not involve t");
    const QPoly R = chart_resultant(to_bivariate(s0, "t", "m"), to_bivariate(s1, "t", "m"));
    if (R.is_zero()) throw Degenerate("tangency conditions share a component");
    // Spurious: the leading coefficient in s vanishing twice, and lines on
    // which some member has a triple root wherever it has a double one.
    const auto au = to_univariate(alpha, "s"), bu = to_univariate(beta, "s");
    const int d = au.degree();
    const QPoly spur = to_qpoly(au[d] * bu[d - 1] - au[d - 1] * bu[d], "m");
    const MultiPoly a1 = derivative(alpha, "s"), a2 = derivative(a1, "s");
    const MultiPoly b1 = derivative(beta, "s"), b2 = derivative(b1, "s");
    const QPoly phi = to_qpoly(resultant(alpha * b2 - a2 * beta, a1 * b2 - a2 * b1, "s"), "m");
    QPoly fin = spur.is_zero() ? R : saturate(R, spur);
    if (!phi.is_zero()) fin = saturate(fin, phi);
    return count_of(fin, cfg, "Res_t of the two tangency subresultants");
  });
}

CountResult count_hyperflexes(const CurvePencil& p, const OracleConfig& cfg) {
  const int d = p.degree();
  if (d < 3) throw DomainError("hyperflexes need degree >= 3");
  return with_retries<CountResult>(cfg, kHyperflexes, "hyperflexes", [&](std::mt19937_64& rng) {
    const CurvePencil q = transform(reparametrize(p, rng), random_projectivity(rng));
    const SingularLocus loc = singular_locus(q.f().poly(), q.g().poly());
    const MultiPoly f = specialize(q.f().poly(), "z", Rational(1)), g = specialize(q.g().poly(), "z", Rational(1));
    auto D = [](const MultiPoly& F, const char* vs) {
      MultiPoly r = F;
      for (const char* c = vs; *c; ++c) r = derivative(r, std::string(1, *c));
      return r;
    };
    // Member through p frozen at p: P = g(p) f - f(p) g.
    auto P = [&](const char* vs) { return g * D(f, vs) - f * D(g, vs); };
    const MultiPoly v1 = -P("y"), v2 = P("x");
    const MultiPoly C2 = P("xx") * v1 * v1 + P("xy") * v1 * v2 * Rational(2) + P("yy") * v2 * v2;
    const MultiPoly C3 = P("xxx") * v1 * v1 * v1 + P("xxy") * v1 * v1 * v2 * Rational(3) +
                         P("xyy") * v1 * v2 * v2 * Rational(3) + P("yyy") * v2 * v2 * v2;
    const int bound = C2.total_degree() * C3.total_degree();
    const QPoly R = chart_resultant(to_bivariate(C2, "x", "y"), to_bivariate(C3, "x", "y"), bound);
    if (R.is_zero()) throw Degenerate("contact conditions share a component");
    const QPoly base = chart_resultant(affine_xy(q.f().poly()), affine_xy(q.g().poly()), d * d);
    const QPoly fin = saturate(saturate(R, base), loc.N);
    require_squarefree(fin, "hyperflex eliminant");
    return count_of(fin, cfg, "Res_x of the contact-order forms");
  });
}

}  // namespace pencil
