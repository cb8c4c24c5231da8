#include "pencil/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace pencil {

namespace {

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_)
    if (e.size() != vars_.size()) throw DomainError("exponent vector length does not match variable count");
  drop_zeros();
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, std::string_view name) {
  const auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw DomainError("unknown variable '" + std::string(name) + "'");
  Exponents e(vars.size(), 0);
  e[static_cast<std::size_t>(it - vars.begin())] = 1;
  return monomial(vars, std::move(e));
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents e, Rational c) {
  TermMap t;
  t.emplace(std::move(e), std::move(c));
  return MultiPoly(std::move(vars), std::move(t));
}

void MultiPoly::drop_zeros() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (sgn(it->second) == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant: " + to_string(*this));
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    best = std::max(best, s);
  }
  return best;
}

int MultiPoly::degree_in(std::string_view name) const {
  if (terms_.empty()) return -1;
  const int i = index_of(name);
  if (i < 0) return 0;
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[static_cast<std::size_t>(i)]);
  return best;
}

bool MultiPoly::is_homogeneous() const {
  const int deg = total_degree();
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (s != deg) return false;
  }
  return true;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    pos[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (pos[i] < 0) throw DomainError("variable '" + vars_[i] + "' missing from target variable list");
      ne[static_cast<std::size_t>(pos[i])] = e[i];
    }
    out.emplace(std::move(ne), c);
  }
  return MultiPoly(vars, std::move(out));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    const auto vars = merged(vars_, o.vars_);
    *this = with_vars(vars);
    return *this += o.with_vars(vars);
  }
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    const auto vars = merged(vars_, o.vars_);
    *this = with_vars(vars);
    return *this *= o.with_vars(vars);
  }
  TermMap out;
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  terms_ = std::move(out);
  drop_zeros();
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

MultiPoly pow(const MultiPoly& p, unsigned n) {
  MultiPoly result(1L);
  MultiPoly base = p;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

MultiPoly derivative(const MultiPoly& p, std::string_view var) {
  const int i = p.index_of(var);
  if (i < 0) return MultiPoly(p.vars(), {});
  const auto k = static_cast<std::size_t>(i);
  MultiPoly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    auto ne = e;
    --ne[k];
    out.emplace(std::move(ne), c * e[k]);
  }
  return MultiPoly(p.vars(), std::move(out));
}

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& values) {
  if (values.size() != p.vars().size()) throw DomainError("evaluate: wrong number of values");
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= pow(values[i], static_cast<unsigned>(e[i]));
    acc += t;
  }
  return acc;
}

MultiPoly specialize(const MultiPoly& p, std::string_view var, const Rational& value) {
  const int i = p.index_of(var);
  if (i < 0) return p;
  const auto k = static_cast<std::size_t>(i);
  MultiPoly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    auto ne = e;
    ne[k] = 0;
    out[ne] += c * pow(value, static_cast<unsigned>(e[k]));
  }
  return MultiPoly(p.vars(), std::move(out));
}

MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& value) {
  if (p.index_of(var) < 0) return p;
  const auto u = to_univariate(p, var);
  MultiPoly acc(p.vars(), {});
  for (int k = u.degree(); k >= 0; --k) acc = acc * value + u[k];
  return acc;
}

MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DomainError("multivariate division by zero");
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  const auto vars = merged(a.vars(), b.vars());
  MultiPoly r = a.with_vars(vars);
  const MultiPoly d = b.with_vars(vars);
  const auto& [lead_e, lead_c] = *d.terms().rbegin();
  MultiPoly::TermMap q;
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    MultiPoly::Exponents qe(vars.size());
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < 0) throw DivisibilityError("multivariate division is not exact");
    }
    const Rational qc = rc / lead_c;
    r -= MultiPoly::monomial(vars, qe, qc) * d;
    q.emplace(std::move(qe), qc);
  }
  return MultiPoly(vars, std::move(q));
}

UniPoly<MultiPoly> to_univariate(const MultiPoly& p, std::string_view var) {
  const int i = p.index_of(var);
  if (i < 0) return UniPoly<MultiPoly>::constant(p);
  const auto k = static_cast<std::size_t>(i);
  std::vector<MultiPoly::TermMap> parts(static_cast<std::size_t>(std::max(0, p.degree_in(var))) + 1);
  for (const auto& [e, c] : p.terms()) {
    auto ne = e;
    const int deg = ne[k];
    ne[k] = 0;
    parts[static_cast<std::size_t>(deg)].emplace(std::move(ne), c);
  }
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(parts.size());
  for (auto& t : parts) coeffs.emplace_back(p.vars(), std::move(t));
  return UniPoly<MultiPoly>(std::move(coeffs));
}

MultiPoly from_univariate(const UniPoly<MultiPoly>& u, std::string_view var) {
  std::vector<std::string> vars;
  for (const auto& c : u.coeffs()) vars = merged(vars, c.vars());
  if (std::find(vars.begin(), vars.end(), var) == vars.end()) vars.emplace_back(var);
  const MultiPoly x = MultiPoly::variable(vars, var);
  MultiPoly acc(vars, {});
  for (int k = u.degree(); k >= 0; --k) acc = acc * x + u[k];
  return acc;
}

QPoly to_qpoly(const MultiPoly& p, std::string_view var) {
  const int i = p.index_of(var);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree_in(var))) + 1);
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t j = 0; j < e.size(); ++j)
      if (static_cast<int>(j) != i && e[j] != 0)
        throw DomainError("polynomial involves variables other than '" + std::string(var) + "'");
    c[static_cast<std::size_t>(i < 0 ? 0 : e[static_cast<std::size_t>(i)])] = v;
  }
  return QPoly(std::move(c));
}

MultiPoly from_qpoly(const QPoly& p, const std::vector<std::string>& vars, std::string_view var) {
  const auto it = std::find(vars.begin(), vars.end(), var);
  if (it == vars.end()) throw DomainError("unknown variable '" + std::string(var) + "'");
  const auto k = static_cast<std::size_t>(it - vars.begin());
  MultiPoly::TermMap t;
  for (int j = 0; j <= p.degree(); ++j) {
    if (sgn(p[j]) == 0) continue;
    MultiPoly::Exponents e(vars.size(), 0);
    e[k] = j;
    t.emplace(std::move(e), p[j]);
  }
  return MultiPoly(vars, std::move(t));
}

UniPoly<QPoly> to_bivariate(const MultiPoly& p, std::string_view outer, std::string_view inner) {
  const int io = p.index_of(outer), ii = p.index_of(inner);
  std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(std::max(0, p.degree_in(outer))) + 1);
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t j = 0; j < e.size(); ++j)
      if (static_cast<int>(j) != io && static_cast<int>(j) != ii && e[j] != 0)
        throw DomainError("bivariate view: unexpected variable '" + p.vars()[j] + "'");
    const int a = io < 0 ? 0 : e[static_cast<std::size_t>(io)];
    const int b = ii < 0 ? 0 : e[static_cast<std::size_t>(ii)];
    auto& row = grid[static_cast<std::size_t>(a)];
    if (row.size() <= static_cast<std::size_t>(b)) row.resize(static_cast<std::size_t>(b) + 1);
    row[static_cast<std::size_t>(b)] = v;
  }
  std::vector<QPoly> coeffs;
  coeffs.reserve(grid.size());
  for (auto& row : grid) coeffs.emplace_back(std::move(row));
  return UniPoly<QPoly>(std::move(coeffs));
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    const Rational a = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (constant || a != 1) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << p.vars()[i];
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace pencil
