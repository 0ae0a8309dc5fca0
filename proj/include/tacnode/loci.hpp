#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tacnode/combinatorics.hpp"
#include "tacnode/polyalg.hpp"
#include "tacnode/shabat.hpp"

namespace tacnode {

// Coefficients with |c_i| below kZeroBelow * max|c| are structural zeros; above
// kNonzeroAbove * max they are certainly present. In between is refused.
inline constexpr double kZeroBelow = 1e-9;
inline constexpr double kNonzeroAbove = 1e-4;

struct BranchTerm {
  static constexpr int kBeta0 = -1;

  int target = kBeta0;  // i for alpha_i, kBeta0 for beta_0
  int exponent = 0;     // raw exponent of u
  cplx coefficient;
  bool ambiguous = false;  // magnitude in the dead zone; kept but undecided

  std::string name() const { return target == kBeta0 ? "beta_0" : "alpha_" + std::to_string(target); }
};

// alpha_i = c_i u^{m-i}, beta_0 = u^{2m}/4, restricted to the nonzero c_i.
// `reduction` is the gcd g of the surviving exponents: the curve is reduced in t = u^g.
struct BranchParam {
  int m = 0;
  AdmissibleTuple split;
  std::vector<BranchTerm> terms;
  int reduction = 1;

  bool has_ambiguous_term() const;
  std::string to_string() const;
};

struct MultiplicityReport {
  std::vector<int> m_C_per_branch;
  int m_C_total = 0;
  int m_g = 0;
  int k = 0;
  int expected_total = 0;  // m * k
  bool matches_expectation = false;
};

BranchParam branch_for(const AdmissibleTuple& split, const ShabatSolution& solution);

// Per branch m_C = 2m / g; m_g is the minimum. `solutions` must cover every admissible split.
// Throws AmbiguousStructuralZero on dead-zone coefficients, ContractViolation on missing splits.
MultiplicityReport multiplicities(const Profile& profile,
                                  const std::vector<std::pair<AdmissibleTuple, ShabatSolution>>& solutions);

// Point of H_p at raw parameter u: beta_1 = ... = beta_{m-1} = 0.
VersalPoint sample_branch(const BranchParam& branch, cplx u);

// The A_k profile a generic branch point should classify to.
SingularityProfile target_profile(const AdmissibleTuple& split);
SingularityProfile target_profile(const Profile& profile);

}  // namespace tacnode
