#include "pencil/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace pencil {

namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();

Complex ldexp(Complex z, long e) {
  return {std::ldexp(z.real(), static_cast<int>(e)), std::ldexp(z.imag(), static_cast<int>(e))};
}

/// Value and derivative ratio p/p' and the backward-error bound, evaluated
/// on the reversed polynomial outside the unit disk for stability.
struct Eval {
  Complex ratio;
  long double value_abs;
  long double bound;
};

Eval newton_ratio(const std::vector<Complex>& c, Complex z) {
  const int n = static_cast<int>(c.size()) - 1;
  if (std::abs(z) <= 1) {
    Complex p = c[static_cast<std::size_t>(n)], dp = 0;
    long double bound = std::abs(p);
    const long double az = std::abs(z);
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + c[static_cast<std::size_t>(k)];
      bound = bound * az + std::abs(c[static_cast<std::size_t>(k)]);
    }
    return {p / dp, std::abs(p), bound};
  }
  const Complex y = Complex(1) / z;
  const long double ay = std::abs(y);
  Complex r = c[0], dr = 0;
  long double bound = std::abs(r);
  for (int k = 1; k <= n; ++k) {
    dr = dr * y + r;
    r = r * y + c[static_cast<std::size_t>(k)];
    bound = bound * ay + std::abs(c[static_cast<std::size_t>(k)]);
  }
  // p(z) = z^n r(y) and p'(z) = z^(n-1) (n r(y) - y r'(y)).
  return {z / (Complex(static_cast<long double>(n)) - y * dr / r), std::abs(r), bound};
}

/// Starting points on circles whose radii come from the upper convex hull
/// of (k, log|c_k|).
std::vector<Complex> initial_points(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<long double> lg(c.size());
  for (std::size_t k = 0; k < c.size(); ++k)
    lg[k] = std::abs(c[k]) > 0 ? std::log(std::abs(c[k])) : -std::numeric_limits<long double>::infinity();
  std::vector<int> hull;
  for (int k = 0; k <= n; ++k) {
    if (!std::isfinite(lg[static_cast<std::size_t>(k)])) continue;
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2], b = hull.back();
      const long double cross = (lg[static_cast<std::size_t>(b)] - lg[static_cast<std::size_t>(a)]) * (k - a) -
                                (lg[static_cast<std::size_t>(k)] - lg[static_cast<std::size_t>(a)]) * (b - a);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }
  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(n));
  const long double two_pi = 2 * std::acos(-1.0L);
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int i = hull[h], j = hull[h + 1];
    const long double r = std::exp((lg[static_cast<std::size_t>(i)] - lg[static_cast<std::size_t>(j)]) / (j - i));
    for (int k = 0; k < j - i; ++k) {
      const long double theta = two_pi * k / (j - i) + two_pi * (static_cast<long double>(h) + 1) / (n + 1) + 0.4L;
      z.emplace_back(r * std::cos(theta), r * std::sin(theta));
    }
  }
  return z;
}

/// With `strict` unset the current approximations are returned when the
/// iteration budget runs out; a polishing stage follows.
std::vector<Complex> aberth(const std::vector<Complex>& c, bool strict) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Complex> z = initial_points(c);
  if (static_cast<int>(z.size()) != n) throw NumericError("root finder: bad starting configuration");
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  const int max_iter = 2000;
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (done[ui]) continue;
      const Eval e = newton_ratio(c, z[ui]);
      if (e.value_abs <= 4 * kEps * e.bound) {
        done[ui] = 1;
        continue;
      }
      Complex sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += Complex(1) / (z[ui] - z[static_cast<std::size_t>(j)]);
      const Complex w = e.ratio / (Complex(1) - e.ratio * sum);
      z[ui] -= w;
      if (!std::isfinite(z[ui].real()) || !std::isfinite(z[ui].imag()))
        throw NumericError("root finder diverged");
      if (std::abs(w) <= kEps * std::abs(z[ui])) done[ui] = 1;
      all = all && done[ui];
    }
    if (all && std::all_of(done.begin(), done.end(), [](char v) { return v != 0; })) return z;
  }
  if (strict) throw NumericError("root finder did not converge within the iteration budget");
  return z;
}

long double scaled_residual(const std::vector<Complex>& c, Complex z) {
  const Eval e = newton_ratio(c, z);
  return e.bound > 0 ? e.value_abs / e.bound : 0;
}

int find(std::vector<int>& parent, int i) {
  while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
  return i;
}

template <typename Residual>
std::vector<RootCluster> cluster(const std::vector<Complex>& z, long double cluster_radius, long scale_exponent,
                                 std::size_t low, Residual&& residual) {
  const int n = static_cast<int>(z.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      const long double scale = std::max({1.0L, std::abs(z[ui]), std::abs(z[uj])});
      if (std::abs(z[ui] - z[uj]) <= cluster_radius * scale) parent[static_cast<std::size_t>(find(parent, i))] = find(parent, j);
    }
  std::vector<RootCluster> out;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  std::vector<Complex> sums;
  for (int i = 0; i < n; ++i) {
    const int r = find(parent, i);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.push_back({Complex(0), 0, 0});
      sums.emplace_back(0);
    }
    const auto k = static_cast<std::size_t>(slot[static_cast<std::size_t>(r)]);
    sums[k] += z[static_cast<std::size_t>(i)];
    ++out[k].multiplicity;
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Complex rep = sums[k] / static_cast<long double>(out[k].multiplicity);
    out[k].residual = residual(rep);
    out[k].representative = ldexp(rep, scale_exponent);
  }
  if (low > 0) out.push_back({Complex(0), static_cast<int>(low), 0});
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.representative.real() != b.representative.real()) return a.representative.real() < b.representative.real();
    return a.representative.imag() < b.representative.imag();
  });
  return out;
}

// Multiprecision stage.  gmpxx temporaries take the default precision, so
// it is raised for the duration of a polish.

class PrecisionGuard {
 public:
  explicit PrecisionGuard(mp_bitcnt_t prec) : old_(mpf_get_default_prec()) { mpf_set_default_prec(prec); }
  ~PrecisionGuard() { mpf_set_default_prec(old_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  mp_bitcnt_t old_;
};

struct MpComplex {
  mpf_class re, im;
};

MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }
MpComplex operator*(const MpComplex& a, const MpComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
mpf_class norm(const MpComplex& a) { return a.re * a.re + a.im * a.im; }
MpComplex operator/(const MpComplex& a, const MpComplex& b) {
  const mpf_class n = norm(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
bool is_zero(const MpComplex& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

long double to_ld(const mpf_class& x) {
  long e = 0;
  const double m = mpf_get_d_2exp(&e, x.get_mpf_t());
  return std::ldexp(static_cast<long double>(m), static_cast<int>(e));
}
Complex to_complex(const MpComplex& a) { return {to_ld(a.re), to_ld(a.im)}; }
MpComplex from_complex(Complex z) {
  return {mpf_class(static_cast<double>(z.real())) + mpf_class(static_cast<double>(z.real() - static_cast<double>(z.real()))),
          mpf_class(static_cast<double>(z.imag())) + mpf_class(static_cast<double>(z.imag() - static_cast<double>(z.imag())))};
}

/// Value and derivative by Horner, plus sum |c_k| |z|^k.
void horner(const std::vector<mpf_class>& c, const MpComplex& z, MpComplex& p, MpComplex& dp, mpf_class* bound) {
  p = {c.back(), 0};
  dp = {0, 0};
  mpf_class az = sqrt(norm(z)), b = abs(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + MpComplex{c[k], 0};
    if (bound) b = b * az + abs(c[k]);
  }
  if (bound) *bound = b;
}

long double mp_residual(const std::vector<mpf_class>& c, const MpComplex& z) {
  MpComplex p, dp;
  mpf_class bound;
  horner(c, z, p, dp, &bound);
  if (sgn(bound) == 0) return 0;
  return to_ld(sqrt(norm(p)) / bound);
}

/// Simultaneous Aberth steps at `prec` bits from long double starts.
std::vector<MpComplex> polish(const std::vector<mpf_class>& c, const std::vector<Complex>& start, mp_bitcnt_t prec) {
  std::vector<MpComplex> z;
  z.reserve(start.size());
  for (const auto& s : start) z.push_back(from_complex(s));
  mpf_class target(1);
  mpf_div_2exp(target.get_mpf_t(), target.get_mpf_t(), 2 * (prec - 32));
  const std::size_t n = z.size();
  for (int iter = 0; iter < 100; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      MpComplex p, dp;
      horner(c, z[i], p, dp, nullptr);
      if (is_zero(p) || is_zero(dp)) continue;
      const MpComplex ratio = p / dp;
      MpComplex sum{0, 0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const MpComplex diff = z[i] - z[j];
        if (!is_zero(diff)) sum = sum + MpComplex{1, 0} / diff;
      }
      const MpComplex denom = MpComplex{1, 0} - ratio * sum;
      if (is_zero(denom)) continue;
      const MpComplex step = ratio / denom;
      z[i] = z[i] - step;
      if (norm(step) > target * norm(z[i])) converged = false;
    }
    if (converged) break;
  }
  return z;
}

}  // namespace

ComplexPoly ComplexPoly::from_exact(const QPoly& p) {
  if (p.is_zero()) throw NumericError("cannot convert the zero polynomial");
  ComplexPoly out;
  const int n = p.degree();
  int low = 0;
  while (sgn(p[low]) == 0) ++low;
  if (n > low)
    out.scale_exponent = std::lround((log2_abs(p[low]) - log2_abs(p.leading())) / (n - low));
  std::vector<Rational> scaled(static_cast<std::size_t>(n) + 1);
  long double top = -std::numeric_limits<long double>::infinity();
  for (int k = 0; k <= n; ++k) {
    if (sgn(p[k]) == 0) continue;
    Rational v = p[k];
    const long shift = out.scale_exponent * k;
    if (shift >= 0)
      mpq_mul_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
    else
      mpq_div_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
    top = std::max(top, log2_abs(v));
    scaled[static_cast<std::size_t>(k)] = std::move(v);
  }
  const long norm = static_cast<long>(std::floor(top));
  out.coeffs.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational& v = scaled[static_cast<std::size_t>(k)];
    if (sgn(v) == 0) continue;
    if (norm >= 0)
      mpq_div_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<mp_bitcnt_t>(norm));
    else
      mpq_mul_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<mp_bitcnt_t>(-norm));
    out.coeffs[static_cast<std::size_t>(k)] = Complex(to_long_double(v), 0);
  }
  return out;
}

std::vector<RootCluster> roots(const ComplexPoly& p, long double cluster_radius) {
  if (!(cluster_radius > 0)) throw DomainError("cluster radius must be positive");
  if (p.degree() < 1) return {};
  // Zero roots are split off exactly.
  std::size_t low = 0;
  while (low < p.coeffs.size() && p.coeffs[low] == Complex(0)) ++low;
  std::vector<Complex> c(p.coeffs.begin() + static_cast<long>(low), p.coeffs.end());
  if (std::abs(c.back()) == 0) throw NumericError("leading coefficient underflowed after normalization");
  const std::vector<Complex> z = c.size() > 1 ? aberth(c, true) : std::vector<Complex>{};
  return cluster(z, cluster_radius, p.scale_exponent, low, [&](Complex r) { return scaled_residual(c, r); });
}

std::vector<RootCluster> roots(const QPoly& p, long double cluster_radius) {
  if (!(cluster_radius > 0)) throw DomainError("cluster radius must be positive");
  if (p.is_zero()) throw NumericError("roots of the zero polynomial");
  if (p.degree() < 1) return {};
  const ComplexPoly cp = ComplexPoly::from_exact(p);
  std::size_t low = 0;
  while (sgn(p[static_cast<int>(low)]) == 0) ++low;
  std::vector<Complex> c(cp.coeffs.begin() + static_cast<long>(low), cp.coeffs.end());
  std::vector<Complex> z = c.size() > 1 ? aberth(c, false) : std::vector<Complex>{};
  if (z.empty()) return cluster(z, cluster_radius, cp.scale_exponent, low, [](Complex) { return 0.0L; });
  // Polish against the exact coefficients in the same balanced variable.
  const mp_bitcnt_t prec = std::max<mp_bitcnt_t>(256, 4 * static_cast<mp_bitcnt_t>(z.size()));
  PrecisionGuard guard(prec);
  std::vector<mpf_class> mc;
  for (int k = static_cast<int>(low); k <= p.degree(); ++k) {
    mpf_class v(p[k]);
    const long shift = cp.scale_exponent * k;
    if (shift >= 0)
      mpf_mul_2exp(v.get_mpf_t(), v.get_mpf_t(), static_cast<mp_bitcnt_t>(shift));
    else
      mpf_div_2exp(v.get_mpf_t(), v.get_mpf_t(), static_cast<mp_bitcnt_t>(-shift));
    mc.push_back(std::move(v));
  }
  std::vector<MpComplex> w = polish(mc, z, prec);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = to_complex(w[i]);
  return cluster(z, cluster_radius, cp.scale_exponent, low, [&](Complex r) { return mp_residual(mc, from_complex(r)); });
}

long double relative_residual(const QPoly& p, Complex z) {
  const ComplexPoly cp = ComplexPoly::from_exact(p);
  return scaled_residual(cp.coeffs, ldexp(z, -cp.scale_exponent));
}

RootReport exact_roots(const QPoly& p, long double cluster_radius, long double residual_tol, bool cross_check) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  RootReport rep;
  rep.total = std::max(0, p.degree());
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    const auto simple = roots(factor, cluster_radius);
    int found = 0;
    for (const auto& c : simple) {
      if (c.multiplicity != 1)
        throw NumericError("roots of a squarefree factor of degree " + std::to_string(factor.degree()) +
                           " are closer than the cluster radius");
      if (c.residual > residual_tol)
        throw NumericError("root residual " + std::to_string(static_cast<double>(c.residual)) +
                           " exceeds the tolerance");
      rep.clusters.push_back({c.representative, mult, c.residual});
      ++found;
    }
    if (found != factor.degree()) throw NumericError("root finder lost roots of a squarefree factor");
    rep.distinct += found;
  }
  // Distances are measured in the balanced variable of p, so that the
  // radius means the same thing for tiny and huge roots.
  const long e = ComplexPoly::from_exact(p).scale_exponent;
  auto unit = [e](Complex z) { return ldexp(z, -e); };
  // Distinct factors are coprime, so their roots must also be separated.
  for (std::size_t i = 0; i < rep.clusters.size(); ++i)
    for (std::size_t j = i + 1; j < rep.clusters.size(); ++j) {
      const Complex a = unit(rep.clusters[i].representative), b = unit(rep.clusters[j].representative);
      if (std::abs(a - b) <= cluster_radius * std::max({1.0L, std::abs(a), std::abs(b)}))
        throw NumericError("roots of coprime factors are closer than the cluster radius");
    }
  if (cross_check && p.degree() >= 1) {
    // Perturbation of an m-fold root is of order eps^(1/m) at the polishing
    // precision; only confirm when that stays well inside the gap between
    // distinct roots.
    long double gap = std::numeric_limits<long double>::infinity();
    for (std::size_t i = 0; i < rep.clusters.size(); ++i)
      for (std::size_t j = i + 1; j < rep.clusters.size(); ++j) {
        const Complex a = unit(rep.clusters[i].representative), b = unit(rep.clusters[j].representative);
        gap = std::min(gap, std::abs(a - b) / std::max({1.0L, std::abs(a), std::abs(b)}));
      }
    int max_mult = 1;
    for (const auto& c : rep.clusters) max_mult = std::max(max_mult, c.multiplicity);
    const long double spread = 1e3L * std::pow(std::ldexp(1.0L, -200) * static_cast<long double>(p.degree()), 1.0L / max_mult);
    const long double radius = std::max(cluster_radius, spread);
    if (radius < gap / 4) {
      std::vector<Complex> all;
      for (const auto& c : roots(p, radius))
        for (int k = 0; k < c.multiplicity; ++k) all.push_back(unit(c.representative));
      bool ok = static_cast<int>(all.size()) == rep.total;
      for (const auto& c : rep.clusters) {
        const Complex r = unit(c.representative);
        int near = 0;
        for (const auto& z : all)
          if (std::abs(z - r) <= 2 * radius * std::max(1.0L, std::abs(r))) ++near;
        ok = ok && near == c.multiplicity;
      }
      if (!ok) throw NumericError("cluster multiplicities disagree with the exact squarefree decomposition");
      rep.cross_checked = true;
    }
  }
  return rep;
}

}  // namespace pencil
