#pragma once

#include <complex>
#include <vector>

#include "pencil/upoly.hpp"

namespace pencil {

using Complex = std::complex<long double>;

/// Raised when root iteration does not converge or the input is ill-scaled.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Floating-point image of an exact polynomial.  The variable is scaled by a
/// power of two so that the extreme coefficients balance, and coefficients
/// are normalized so that the largest has magnitude one.
struct ComplexPoly {
  std::vector<Complex> coeffs;  // low to high, in the scaled variable
  long scale_exponent = 0;      // x = 2^scale_exponent * (scaled variable)

  static ComplexPoly from_exact(const QPoly& p);
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct RootCluster {
  Complex representative;
  int multiplicity = 1;
  long double residual = 0;  // relative backward error at the representative
};

/// All complex roots by Aberth-Ehrlich iteration, grouped into clusters of
/// relative radius `cluster_radius`.  Deterministic for fixed input.
std::vector<RootCluster> roots(const ComplexPoly& p, long double cluster_radius);
std::vector<RootCluster> roots(const QPoly& p, long double cluster_radius);

/// Relative backward error |p(z)| / sum |c_k| |z|^k of an exact polynomial.
long double relative_residual(const QPoly& p, Complex z);

/// Roots of an exact polynomial with exact multiplicities.
///
/// The squarefree factors from Yun's algorithm are solved separately, so
/// each reported multiplicity is exact.  Each factor's roots must be
/// pairwise separated by more than the cluster radius and have residual
/// below `residual_tol`; otherwise NumericError.  When `cross_check` is set
/// the full polynomial is also solved and its cluster cardinalities must
/// reproduce the exact multiplicities.
struct RootReport {
  std::vector<RootCluster> clusters;
  int distinct = 0;
  int total = 0;
  bool cross_checked = false;
};
RootReport exact_roots(const QPoly& p, long double cluster_radius, long double residual_tol, bool cross_check);

}  // namespace pencil
