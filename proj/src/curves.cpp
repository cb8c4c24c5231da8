#include "pencil/curves.hpp"

#include <sstream>

namespace pencil {

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(plane_vars(), name); }

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms().size() != b.terms().size()) return false;
  const auto& [ea, ca] = *a.terms().begin();
  const auto it = b.terms().find(ea);
  if (it == b.terms().end()) return false;
  const Rational ratio = it->second / ca;
  return a * ratio == b;
}

MultiPoly random_form(int degree, std::mt19937_64& rng, long height) {
  MultiPoly::TermMap t;
  for (int i = degree; i >= 0; --i)
    for (int j = degree - i; j >= 0; --j) {
      const long v = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * height + 1)) - height;
      if (v != 0) t.emplace(MultiPoly::Exponents{i, j, degree - i - j}, Rational(v));
    }
  return MultiPoly(plane_vars(), std::move(t));
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

const std::vector<std::string>& plane_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

PlaneCurve::PlaneCurve(MultiPoly poly) : poly_(poly.with_vars(plane_vars())), degree_(poly_.total_degree()) {
  if (poly_.is_zero()) throw DomainError("plane curve equation is zero");
  if (!poly_.is_homogeneous()) throw DomainError("plane curve equation is not homogeneous: " + to_string(poly_));
}

Rational PlaneCurve::operator()(const Point3& p) const { return evaluate(poly_, {p[0], p[1], p[2]}); }

CurvePencil::CurvePencil(PlaneCurve f, PlaneCurve g, std::optional<std::uint64_t> seed)
    : f_(std::move(f)), g_(std::move(g)), seed_(seed) {
  if (f_.degree() != g_.degree()) throw DomainError("pencil members must have equal degrees");
  if (proportional(f_.poly(), g_.poly())) throw DomainError("pencil generators are proportional");
}

PlaneCurve CurvePencil::member(const Rational& t) const { return PlaneCurve(f_.poly() + g_.poly() * t); }

LineParam::LineParam(Point3 base, Point3 direction) : base_(std::move(base)), direction_(std::move(direction)) {
  const bool dependent = base_[0] * direction_[1] == base_[1] * direction_[0] &&
                         base_[0] * direction_[2] == base_[2] * direction_[0] &&
                         base_[1] * direction_[2] == base_[2] * direction_[1];
  if (dependent) throw DomainError("line parametrization needs two distinct points");
}

Point3 LineParam::point(const Rational& s) const {
  return {base_[0] + s * direction_[0], base_[1] + s * direction_[1], base_[2] + s * direction_[2]};
}

PlaneCurve random_curve(int degree, std::mt19937_64& rng, long height) {
  if (degree < 1) throw DomainError("curve degree must be positive");
  if (height < 1) throw DomainError("coefficient height must be positive");
  for (;;) {
    MultiPoly f = random_form(degree, rng, height);
    if (!f.is_zero()) return PlaneCurve(std::move(f));
  }
}

CurvePencil random_pencil(int degree, std::uint64_t seed, long height) {
  if (degree < 2) throw DomainError("pencil degree must be at least 2");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    PlaneCurve f = random_curve(degree, rng, height);
    PlaneCurve g = random_curve(degree, rng, height);
    if (f.degree() != degree || g.degree() != degree) continue;
    if (proportional(f.poly(), g.poly())) continue;
    return CurvePencil(std::move(f), std::move(g), seed);
  }
  throw RetryExhausted("random_pencil: could not draw two independent forms");
}

PlaneCurve random_nodal_quartic(std::mt19937_64& rng, long height) {
  for (;;) {
    MultiPoly f = random_form(4, rng, height);
    MultiPoly::TermMap t;
    for (const auto& [e, c] : f.terms())
      if (e[0] + e[1] >= 2) t.emplace(e, c);
    MultiPoly g(plane_vars(), std::move(t));
    if (!g.is_zero()) return PlaneCurve(std::move(g));
  }
}

PlaneCurve fermat_curve(int degree) {
  return PlaneCurve(pow(var("x"), static_cast<unsigned>(degree)) + pow(var("y"), static_cast<unsigned>(degree)) +
                    pow(var("z"), static_cast<unsigned>(degree)));
}

PlaneCurve hessian(const PlaneCurve& c) {
  if (c.degree() < 2) throw DomainError("hessian needs degree >= 2");
  const auto& v = plane_vars();
  MultiPoly h[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = derivative(derivative(c.poly(), v[static_cast<std::size_t>(i)]), v[static_cast<std::size_t>(j)]);
  MultiPoly det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                  h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  if (det.is_zero()) throw DomainError("hessian vanishes identically (curve is a cone over points)");
  return PlaneCurve(std::move(det));
}

PlaneCurve polar(const PlaneCurve& c, const Point3& point) {
  if (c.degree() < 2) throw DomainError("polar needs degree >= 2");
  const auto& v = plane_vars();
  MultiPoly acc(plane_vars(), {});
  for (std::size_t i = 0; i < 3; ++i) acc += derivative(c.poly(), v[i]) * point[i];
  if (acc.is_zero()) throw DomainError("polar is identically zero at this point");
  return PlaneCurve(std::move(acc));
}

MultiPoly restrict_to_line(const PlaneCurve& c, const LineParam& line) {
  return from_qpoly(restrict_to_line_q(c, line), {"s"}, "s");
}

QPoly restrict_to_line_q(const PlaneCurve& c, const LineParam& line) {
  std::array<QPoly, 3> coord;
  for (std::size_t i = 0; i < 3; ++i) coord[i] = QPoly{line.base()[i], line.direction()[i]};
  QPoly acc;
  for (const auto& [e, k] : c.poly().terms())
    acc += pow(coord[0], static_cast<unsigned>(e[0])) * pow(coord[1], static_cast<unsigned>(e[1])) *
           pow(coord[2], static_cast<unsigned>(e[2])) * k;
  if (acc.is_zero()) throw DomainError("the line is a component of the curve");
  return acc;
}

Rational member_through(const CurvePencil& p, const Point3& point) {
  const Rational fv = p.f()(point), gv = p.g()(point);
  if (sgn(gv) == 0) {
    if (sgn(fv) == 0) throw DomainError("point is a base point of the pencil");
    throw DomainError("point lies on the member at infinity");
  }
  return -fv / gv;
}

Rational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 inverse(const Matrix3& m) {
  const Rational det = determinant(m);
  if (sgn(det) == 0) throw DomainError("singular matrix");
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (m[static_cast<std::size_t>(i1)][static_cast<std::size_t>(j1)] * m[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)] -
           m[static_cast<std::size_t>(i1)][static_cast<std::size_t>(j2)] * m[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j1)]) /
          det;
    }
  return r;
}

Point3 map_point(const Matrix3& m, const Point3& p) {
  Point3 r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
  return r;
}

Matrix3 random_projectivity(std::mt19937_64& rng) {
  for (;;) {
    Matrix3 m;
    for (auto& row : m)
      for (auto& v : row) {
        // Nonzero entries keep the coordinate vertices off coordinate-aligned curves.
        const long k = static_cast<long>(rng() % 8) - 4;
        v = k >= 0 ? k + 1 : k;
      }
    if (sgn(determinant(m)) != 0) return m;
  }
}

PlaneCurve transform(const PlaneCurve& c, const Matrix3& t) {
  std::array<MultiPoly, 3> lin;
  for (std::size_t i = 0; i < 3; ++i)
    lin[i] = var("x") * t[i][0] + var("y") * t[i][1] + var("z") * t[i][2];
  std::array<std::vector<MultiPoly>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    powers[i].push_back(MultiPoly(1L));
    for (int k = 1; k <= c.degree(); ++k) powers[i].push_back(powers[i].back() * lin[i]);
  }
  MultiPoly acc(plane_vars(), {});
  for (const auto& [e, k] : c.poly().terms())
    acc += powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
           powers[2][static_cast<std::size_t>(e[2])] * k;
  return PlaneCurve(std::move(acc));
}

CurvePencil transform(const CurvePencil& p, const Matrix3& t) {
  return CurvePencil(transform(p.f(), t), transform(p.g(), t), p.seed());
}

std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t tag, std::uint64_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(attempt)};
  return std::mt19937_64(seq);
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json to_json(const PlaneCurve& c) {
  nlohmann::ordered_json j;
  j["degree"] = c.degree();
  j["terms"] = nlohmann::ordered_json::array();
  for (auto it = c.poly().terms().rbegin(); it != c.poly().terms().rend(); ++it) {
    nlohmann::ordered_json t;
    t["e"] = it->first;
    t["n"] = it->second.get_num().get_str();
    t["d"] = it->second.get_den().get_str();
    j["terms"].push_back(std::move(t));
  }
  return j;
}

nlohmann::ordered_json to_json(const CurvePencil& p) {
  nlohmann::ordered_json j;
  j["f"] = to_json(p.f());
  j["g"] = to_json(p.g());
  if (p.seed())
    j["seed"] = *p.seed();
  else
    j["seed"] = nullptr;
  return j;
}

PlaneCurve curve_from_json(const nlohmann::json& j) {
  try {
    MultiPoly::TermMap t;
    for (const auto& term : j.at("terms")) {
      const auto e = term.at("e").get<std::vector<int>>();
      if (e.size() != 3) throw DomainError("curve term needs three exponents");
      const Rational v = parse_rational(term.at("n").get<std::string>() + "/" + term.at("d").get<std::string>());
      t[e] += v;
    }
    PlaneCurve c(MultiPoly(plane_vars(), std::move(t)));
    if (j.contains("degree") && j.at("degree").get<int>() != c.degree())
      throw DomainError("declared degree does not match the terms");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed curve JSON: ") + e.what());
  }
}

CurvePencil pencil_from_json(const nlohmann::json& j) {
  try {
    std::optional<std::uint64_t> seed;
    if (j.contains("seed") && !j.at("seed").is_null()) seed = j.at("seed").get<std::uint64_t>();
    return CurvePencil(curve_from_json(j.at("f")), curve_from_json(j.at("g")), seed);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed pencil JSON: ") + e.what());
  }
}

namespace {

void write_terms(std::ostringstream& os, const PlaneCurve& c, const char* prefix) {
  for (auto it = c.poly().terms().rbegin(); it != c.poly().terms().rend(); ++it)
    os << prefix << it->first[0] << ' ' << it->first[1] << ' ' << it->first[2] << ' ' << rational_text(it->second)
       << '\n';
}

void read_term(std::istringstream& line, MultiPoly::TermMap& into) {
  int i = 0, j = 0, k = 0;
  std::string value;
  if (!(line >> i >> j >> k >> value)) throw DomainError("malformed curve term line");
  into[{i, j, k}] += parse_rational(value);
}

}  // namespace

std::string to_text(const PlaneCurve& c) {
  std::ostringstream os;
  os << "curve " << c.degree() << '\n';
  write_terms(os, c, "");
  return os.str();
}

std::string to_text(const CurvePencil& p) {
  std::ostringstream os;
  os << "pencil " << p.degree();
  if (p.seed()) os << ' ' << *p.seed();
  os << '\n';
  write_terms(os, p.f(), "f ");
  write_terms(os, p.g(), "g ");
  return os.str();
}

PlaneCurve curve_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  int degree = 0;
  if (!(in >> header >> degree) || header != "curve") throw DomainError("curve text must start with 'curve <degree>'");
  MultiPoly::TermMap t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    read_term(ls, t);
  }
  PlaneCurve c(MultiPoly(plane_vars(), std::move(t)));
  if (c.degree() != degree) throw DomainError("declared degree does not match the terms");
  return c;
}

CurvePencil pencil_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string first;
  std::getline(in, first);
  std::istringstream hs(first);
  std::string header;
  int degree = 0;
  if (!(hs >> header >> degree) || header != "pencil")
    throw DomainError("pencil text must start with 'pencil <degree> [seed]'");
  std::optional<std::uint64_t> seed;
  std::uint64_t s = 0;
  if (hs >> s) seed = s;
  MultiPoly::TermMap tf, tg;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string which;
    ls >> which;
    if (which == "f")
      read_term(ls, tf);
    else if (which == "g")
      read_term(ls, tg);
    else
      throw DomainError("pencil term lines must start with 'f' or 'g'");
  }
  CurvePencil p(PlaneCurve(MultiPoly(plane_vars(), std::move(tf))), PlaneCurve(MultiPoly(plane_vars(), std::move(tg))),
                seed);
  if (p.degree() != degree) throw DomainError("declared degree does not match the terms");
  return p;
}

}  // namespace pencil
