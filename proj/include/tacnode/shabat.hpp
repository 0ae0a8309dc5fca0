#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tacnode/combinatorics.hpp"
#include "tacnode/poly.hpp"
#include "tacnode/polyalg.hpp"

namespace tacnode {

struct RootMultiplicity {
  cplx location;
  int multiplicity = 1;
};

// Monic nu of degree m, no z^{m-1} term, with nu + 1 and nu - 1 factored over their
// distinct roots. The multiplicities realise the tuple (plus side = roots of nu + 1).
struct ShabatSolution {
  MonicPoly nu;
  std::vector<RootMultiplicity> roots_plus;
  std::vector<RootMultiplicity> roots_minus;
  double residual = 0.0;
  std::uint64_t seed = 0;
  int attempts = 0;

  int m() const { return nu.degree(); }
};

struct SolverConfig {
  int max_iterations = 80;
  double newton_tolerance = 1e-12;
  int restart_count = 2000;
  std::uint64_t rng_seed = 20240601;

  void validate() const;
};

// Relative threshold under which a coefficient counts as zero when normalising.
inline constexpr double kStructuralZero = 1e-9;

// Newton iteration on the distinct roots of nu + 1 and nu - 1 from randomised starts.
// The result is ζ-normalised (see zeta_canonical). Throws NoConvergence after
// config.restart_count failed starts.
ShabatSolution solve(const AdmissibleTuple& tuple, const SolverConfig& config = {});

// Among the rotations nu(zeta z), zeta^m = 1, the one whose nonzero coefficients, read from
// the lowest index up, have the lexicographically smallest arguments in [0, 2 pi).
// Returns the rotated polynomial and the zeta used.
std::pair<MonicPoly, cplx> zeta_canonical(const MonicPoly& nu);
// Applies zeta_canonical to the polynomial and its stored roots.
ShabatSolution zeta_normalized(const ShabatSolution& s);

// Split realised by rescaled Chebyshev polynomials: d_2^+ = floor(m/2), d_2^- = ceil(m/2) - 1.
AdmissibleTuple balanced_nodal_tuple(int m);

// Closed form for the balanced nodal split: nu(z) = P_m(2^{1/m} z) / 2 where
// P_k = w P_{k-1} - P_{k-2}, P_0 = 2, P_1 = w. Not ζ-normalised.
ShabatSolution chebyshev_oracle(int m);

// max coefficient violation of nu + 1 = prod (z - a)^k, nu - 1 = prod (z - b)^k, and |c_{m-1}|.
double solution_residual(const ShabatSolution& s);

struct VerifyReport {
  bool ok = true;
  double coefficient_residual = 0.0;
  std::vector<std::string> issues;
  std::vector<std::string> notes;  // observations that do not fail verification

  explicit operator bool() const { return ok; }
};

// Independent re-check: product re-expansion, root clustering of nu + 1, nu - 1 and nu^2 - 1,
// and the parity pattern (m even: odd c_i vanish; m odd with symmetric split: even c_i vanish).
// Parity is enforced for nodal profiles and reported as a note otherwise. When nu^2 - 1 is
// too ill-conditioned to cluster, its census is taken from the two certified factors (noted).
VerifyReport verify(const ShabatSolution& solution, const AdmissibleTuple& tuple, double tol = 1e-8);

// Monodromy of nu: P^1 -> P^1 around infinity, -1 and +1 by path lifting.
// sigma is the loop around infinity, tau+ around -1, tau- around +1.
PermutationTriple monodromy_of(const ShabatSolution& solution);

}  // namespace tacnode
