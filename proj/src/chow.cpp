#include "pencil/chow.hpp"

#include <sstream>

namespace pencil {

namespace {

PolyD constant(long c) { return PolyD::constant(Rational(c)); }
const PolyD& d_symbol() {
  static const PolyD d = PolyD::x();
  return d;
}

template <typename Basis>
std::size_t idx(Basis b) {
  return static_cast<std::size_t>(b);
}

}  // namespace

BiMonomialPoly BiMonomialPoly::monomial(int i, int j, const PolyD& c) {
  BiMonomialPoly p;
  p.add(i, j, c);
  return p;
}

PolyD BiMonomialPoly::coeff(int i, int j) const {
  const auto it = t_.find({i, j});
  return it == t_.end() ? PolyD() : it->second;
}

void BiMonomialPoly::add(int i, int j, const PolyD& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(Key{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

BiMonomialPoly BiMonomialPoly::graded_part(int k) const {
  BiMonomialPoly out;
  for (const auto& [key, c] : t_)
    if (key.first + key.second == k) out.add(key.first, key.second, c);
  return out;
}

BiMonomialPoly& BiMonomialPoly::operator+=(const BiMonomialPoly& o) {
  for (const auto& [key, c] : o.t_) add(key.first, key.second, c);
  return *this;
}

BiMonomialPoly& BiMonomialPoly::operator-=(const BiMonomialPoly& o) {
  for (const auto& [key, c] : o.t_) add(key.first, key.second, -c);
  return *this;
}

BiMonomialPoly operator*(const BiMonomialPoly& a, const BiMonomialPoly& b) {
  BiMonomialPoly out;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BiMonomialPoly operator*(BiMonomialPoly a, const PolyD& c) {
  BiMonomialPoly out;
  for (const auto& [k, v] : a.t_) out.add(k.first, k.second, v * c);
  return out;
}

std::string to_string(const BiMonomialPoly& p, const std::string& u, const std::string& v) {
  if (p.terms().empty()) return "0";
  // Highest total degree first; within a degree, higher power of v first.
  std::vector<std::pair<BiMonomialPoly::Key, PolyD>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.second > b.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    std::string mono;
    auto power = [](const std::string& g, int e) {
      if (e == 0) return std::string();
      return e == 1 ? g : g + "^" + std::to_string(e);
    };
    mono = power(u, key.first) + power(v, key.second);
    std::string coeff;
    bool negative = false;
    if (c.degree() == 0) {
      negative = sgn(c[0]) < 0;
      const Rational a = abs(c[0]);
      if (a != 1 || mono.empty()) coeff = a.get_str();
    } else {
      coeff = "(" + to_string(c) + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    os << coeff << mono;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

ChowClassPsi ChowClassPsi::one() { return basis(PsiBasis::one); }
ChowClassPsi ChowClassPsi::sigma1() { return basis(PsiBasis::s); }
ChowClassPsi ChowClassPsi::zeta() { return basis(PsiBasis::z); }
ChowClassPsi ChowClassPsi::basis(PsiBasis b, const PolyD& c) {
  std::array<PolyD, 6> a{};
  a[idx(b)] = c;
  return ChowClassPsi(a);
}

BiMonomialPoly ChowClassPsi::lift() const {
  static constexpr std::array<std::pair<int, int>, 6> mono{{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}}};
  BiMonomialPoly p;
  for (std::size_t k = 0; k < 6; ++k) p.add(mono[k].first, mono[k].second, c_[k]);
  return p;
}

ChowClassPsi operator+(const ChowClassPsi& a, const ChowClassPsi& b) {
  std::array<PolyD, 6> c;
  for (std::size_t k = 0; k < 6; ++k) c[k] = a.c_[k] + b.c_[k];
  return ChowClassPsi(c);
}

ChowClassPsi operator-(const ChowClassPsi& a, const ChowClassPsi& b) {
  std::array<PolyD, 6> c;
  for (std::size_t k = 0; k < 6; ++k) c[k] = a.c_[k] - b.c_[k];
  return ChowClassPsi(c);
}

ChowClassPsi operator*(const ChowClassPsi& a, const ChowClassPsi& b) { return psi_multiply(a, b); }

ChowClassPsi operator*(const ChowClassPsi& a, const PolyD& c) {
  std::array<PolyD, 6> r;
  for (std::size_t k = 0; k < 6; ++k) r[k] = a.c_[k] * c;
  return ChowClassPsi(r);
}

ChowClassPsi psi_reduce(const BiMonomialPoly& p, bool use_zeta_cube) {
  // Rewrite from the highest power of ζ down: every step lowers the ζ-degree,
  // so the loop terminates.
  BiMonomialPoly work = p;
  for (;;) {
    bool changed = false;
    BiMonomialPoly next;
    for (const auto& [key, c] : work.terms()) {
      const auto [i, j] = key;
      if (i >= 3 || (use_zeta_cube && j >= 3)) {
        changed = true;
        continue;
      }
      if (j >= 2) {
        next.add(i + 1, j - 1, c);
        next.add(i + 2, j - 2, -c);
        changed = true;
        continue;
      }
      next.add(i, j, c);
    }
    work = std::move(next);
    if (!changed) break;
  }
  std::array<PolyD, 6> out{};
  for (const auto& [key, c] : work.terms()) {
    const auto [i, j] = key;
    PsiBasis b;
    if (j == 0)
      b = i == 0 ? PsiBasis::one : i == 1 ? PsiBasis::s : PsiBasis::ss;
    else
      b = i == 0 ? PsiBasis::z : i == 1 ? PsiBasis::sz : PsiBasis::ssz;
    out[idx(b)] += c;
  }
  return ChowClassPsi(out);
}

ChowClassPsi psi_multiply(const ChowClassPsi& a, const ChowClassPsi& b) { return psi_reduce(a.lift() * b.lift()); }

PolyD psi_degree(const ChowClassPsi& a) { return a[PsiBasis::ssz]; }
PolyD psi_degree(const BiMonomialPoly& unreduced) { return psi_degree(psi_reduce(unreduced)); }

// ---------------------------------------------------------------------------

ChowClassY ChowClassY::one() { return basis(YBasis::one); }
ChowClassY ChowClassY::M() { return basis(YBasis::M); }
ChowClassY ChowClassY::q() { return basis(YBasis::q); }
ChowClassY ChowClassY::basis(YBasis b, const PolyD& c) {
  std::array<PolyD, 6> a{};
  a[idx(b)] = c;
  return ChowClassY(a);
}

namespace {
BiMonomialPoly lift_y(const ChowClassY& a) {
  static constexpr std::array<std::pair<int, int>, 6> mono{{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}}};
  BiMonomialPoly p;
  for (std::size_t k = 0; k < 6; ++k) p.add(mono[k].first, mono[k].second, a.coeffs()[k]);
  return p;
}
}  // namespace

ChowClassY operator+(const ChowClassY& a, const ChowClassY& b) {
  std::array<PolyD, 6> c;
  for (std::size_t k = 0; k < 6; ++k) c[k] = a.c_[k] + b.c_[k];
  return ChowClassY(c);
}

ChowClassY operator-(const ChowClassY& a, const ChowClassY& b) {
  std::array<PolyD, 6> c;
  for (std::size_t k = 0; k < 6; ++k) c[k] = a.c_[k] - b.c_[k];
  return ChowClassY(c);
}

ChowClassY operator*(const ChowClassY& a, const ChowClassY& b) { return y_multiply(a, b); }

ChowClassY operator*(const ChowClassY& a, const PolyD& c) {
  std::array<PolyD, 6> r;
  for (std::size_t k = 0; k < 6; ++k) r[k] = a.c_[k] * c;
  return ChowClassY(r);
}

ChowClassY y_reduce(const BiMonomialPoly& p) {
  std::array<PolyD, 6> out{};
  for (const auto& [key, c] : p.terms()) {
    const auto [i, j] = key;
    if (i >= 3 || j >= 2) continue;
    YBasis b;
    if (j == 0)
      b = i == 0 ? YBasis::one : i == 1 ? YBasis::M : YBasis::MM;
    else
      b = i == 0 ? YBasis::q : i == 1 ? YBasis::Mq : YBasis::MMq;
    out[idx(b)] += c;
  }
  return ChowClassY(out);
}

ChowClassY y_multiply(const ChowClassY& a, const ChowClassY& b) { return y_reduce(lift_y(a) * lift_y(b)); }

PolyD y_degree(const ChowClassY& a) { return a[YBasis::MMq]; }

// ---------------------------------------------------------------------------

PolyD s_pair(const SurfaceDivClass& a, const SurfaceDivClass& b) {
  const PolyD& d = d_symbol();
  const PolyD dm1 = d - constant(1);
  return a.h * b.h - d * d * a.eb * b.eb - constant(3) * dm1 * dm1 * a.en * b.en;
}

SurfaceDivClass canonical_class_S() { return {constant(-3), constant(-1), constant(-1)}; }

PolyD s_adjunction_genus(const SurfaceDivClass& c) {
  const PolyD twice = s_pair(c, c) + s_pair(c, canonical_class_S());
  return constant(1) + twice * Rational(1, 2);
}

PolyD plane_model_genus(const PolyD& degree, const std::vector<MultiplePoints>& points) {
  const Rational half(1, 2);
  PolyD g = (degree - constant(1)) * (degree - constant(2)) * half;
  for (const auto& [count, m] : points) g -= count * m * (m - constant(1)) * half;
  return g;
}

std::string to_string(const SurfaceDivClass& c) {
  std::ostringstream os;
  os << "[" << to_string(c.h) << "]H - [" << to_string(c.eb) << "]E_b - [" << to_string(c.en) << "]E_n";
  return os.str();
}

}  // namespace pencil
