#pragma once

#include <map>
#include <string>
#include <vector>

#include "tacnode/poly.hpp"

namespace tacnode {

// Point of the versal deformation space of the m-tacnode, in the basis
// {1, z, ..., z^{m-1}, y, yz, ..., yz^{m-2}}:
//   F = y^2 + (sum alpha_i z^i + z^m) y + sum beta_i z^i.
struct VersalPoint {
  int m = 0;
  std::vector<cplx> alpha;  // alpha_0 .. alpha_{m-2}
  std::vector<cplx> beta;   // beta_0 .. beta_{m-1}

  static VersalPoint origin(int m);
  void validate() const;
  // beta_1 = ... = beta_{m-1} = 0 exactly.
  bool on_hp() const;
  // nu(z) = z^m + sum alpha_i z^i
  MonicPoly nu() const;
};

// Delta(z) = nu(z)^2 - 4 sum beta_i z^i, monic of degree 2m with no z^{2m-1} term.
MonicPoly discriminant(const VersalPoint& point);

// Inverse of the discriminant map: nu is the polynomial square root of Delta
// (deg(nu^2 - Delta) < m), beta = (nu^2 - Delta) / 4.
VersalPoint invert_discriminant(const MonicPoly& delta);

struct RootCluster {
  cplx location;
  int multiplicity = 1;
  // max over i < multiplicity of |t_i| / max(S_i, 1): t_i = p^{(i)}(z0)/i!, S_i the magnitude of
  // the summed terms, in coordinates where the roots have unit scale.
  double residual = 0.0;
};

// Default relative clustering tolerance.
inline constexpr double kDefaultClusterTol = 1e-6;

// Simple roots: companion-matrix eigenvalues polished by Newton.
std::vector<cplx> polynomial_roots(const MonicPoly& p);

// Roots with multiplicities, certified by Taylor coefficients at each cluster centre.
// `tol` is relative: it applies after rescaling z so the roots have unit scale.
// A coefficient c_i with |c_i| <= noise[i] is rounding residue of the caller's arithmetic
// and is treated as an exact zero. `noise` may be empty.
// Throws AmbiguousClustering when no grouping can be certified.
std::vector<RootCluster> cluster_roots(const MonicPoly& p, double tol = kDefaultClusterTol,
                                       const std::vector<double>& noise = {});

// Rounding bound for the coefficients of a*b: 8 eps sum |a_i||b_j|.
std::vector<double> product_noise(const Coeffs& a, const Coeffs& b);

// k -> number of A_k singularities.
struct SingularityProfile {
  std::map<int, int> counts;

  int total_tjurina() const;  // sum k * count
  std::string to_string() const;
  friend bool operator==(const SingularityProfile&, const SingularityProfile&) = default;
};

// A_k for each discriminant root of multiplicity k + 1 >= 2.
// Throws Degenerate for an H_p point with beta_0 = 0.
SingularityProfile classify(const VersalPoint& point, double tol = kDefaultClusterTol);

}  // namespace tacnode
