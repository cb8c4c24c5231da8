#include "pencil/elimination.hpp"

namespace pencil {

namespace {

void require_positive_degree(const MultiPoly& p, std::string_view var) {
  if (p.degree_in(var) < 1)
    throw DomainError("polynomial has degree zero in '" + std::string(var) + "': " + to_string(p));
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  require_positive_degree(p, var);
  require_positive_degree(q, var);
  return resultant_prs(to_univariate(p, var), to_univariate(q, var));
}

MultiPoly resultant_sylvester(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  require_positive_degree(p, var);
  require_positive_degree(q, var);
  return resultant_sylvester(to_univariate(p, var), to_univariate(q, var));
}

std::vector<MultiPoly> subresultant_prs(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  require_positive_degree(p, var);
  require_positive_degree(q, var);
  std::vector<MultiPoly> out;
  for (const auto& u : subresultant_prs(to_univariate(p, var), to_univariate(q, var)))
    out.push_back(from_univariate(u, var));
  return out;
}

std::vector<MultiPoly> principal_subresultant_coefficients(const MultiPoly& p, const MultiPoly& q,
                                                           std::string_view var) {
  require_positive_degree(p, var);
  require_positive_degree(q, var);
  return principal_subresultant_coefficients(to_univariate(p, var), to_univariate(q, var));
}

MultiPoly discriminant(const MultiPoly& p, std::string_view var) {
  if (p.degree_in(var) < 2)
    throw DomainError("discriminant needs degree >= 2 in '" + std::string(var) + "'");
  return discriminant(to_univariate(p, var));
}

QPoly resultant_by_interpolation(const UniPoly<QPoly>& a, const UniPoly<QPoly>& b, int degree_bound) {
  if (a.degree() < 1 || b.degree() < 1) throw DomainError("interpolated resultant needs positive degrees");
  auto inner_degree = [](const UniPoly<QPoly>& u) {
    int m = 0;
    for (const auto& c : u.coeffs()) m = std::max(m, c.degree());
    return m;
  };
  const int bound =
      degree_bound >= 0 ? degree_bound : a.degree() * inner_degree(b) + b.degree() * inner_degree(a);
  std::vector<Rational> xs, ys;
  auto specialize_at = [](const UniPoly<QPoly>& u, const Rational& y) {
    std::vector<Rational> c;
    c.reserve(u.size());
    for (const auto& v : u.coeffs()) c.push_back(v(y));
    return QPoly(std::move(c));
  };
  for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    // Alternate 0, 1, -1, 2, -2, ... to keep nodes small.
    const Rational y = k % 2 ? Rational((k + 1) / 2) : Rational(-(k / 2));
    if (sgn(a.leading()(y)) == 0 || sgn(b.leading()(y)) == 0) continue;
    xs.push_back(y);
    ys.push_back(resultant_prs(specialize_at(a, y), specialize_at(b, y)));
  }
  return interpolate(xs, ys);
}

}  // namespace pencil
