#include "tacnode/loci.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tacnode/errors.hpp"

namespace tacnode {

bool BranchParam::has_ambiguous_term() const {
  return std::any_of(terms.begin(), terms.end(), [](const BranchTerm& t) { return t.ambiguous; });
}

std::string BranchParam::to_string() const {
  std::ostringstream os;
  const std::string param = reduction == 1 ? "u" : "t";
  auto power = [&](int e) {
    const int r = e / reduction;
    return r == 1 ? param : param + "^" + std::to_string(r);
  };
  for (const auto& t : terms) {
    os << t.name() << " = ";
    if (t.target == BranchTerm::kBeta0) os << power(t.exponent) << "/4";
    else os << format_complex(t.coefficient, 10) << "*" << power(t.exponent);
    if (t.ambiguous) os << "  [ambiguous]";
    os << '\n';
  }
  os << "other alpha_i = 0, ";
  if (m == 2) os << "beta_1 = 0";
  else os << "beta_1 = ... = beta_" << m - 1 << " = 0";
  if (reduction > 1) os << ", t = u^" << reduction;
  return os.str();
}

BranchParam branch_for(const AdmissibleTuple& split, const ShabatSolution& solution) {
  const int m = split.m();
  if (solution.nu.degree() != m) throw ContractViolation("solution degree differs from the split's m");
  BranchParam b{m, split, {}, 1};
  double scale = 0.0;
  for (int i = 0; i <= m - 2; ++i) scale = std::max(scale, std::abs(solution.nu.coeff(i)));

  int g = 2 * m;
  for (int i = 0; i <= m - 2; ++i) {
    const cplx c = solution.nu.coeff(i);
    const double a = std::abs(c);
    if (a < kZeroBelow * scale) continue;
    const bool ambiguous = a <= kNonzeroAbove * scale;
    b.terms.push_back({i, m - i, c, ambiguous});
    if (!ambiguous) g = std::gcd(g, m - i);
  }
  b.terms.push_back({BranchTerm::kBeta0, 2 * m, cplx(0.25), false});
  b.reduction = g;
  return b;
}

MultiplicityReport multiplicities(const Profile& profile,
                                  const std::vector<std::pair<AdmissibleTuple, ShabatSolution>>& solutions) {
  const auto splits = enumerate_splits(profile);
  MultiplicityReport r;
  r.k = static_cast<int>(splits.size());
  const int m = profile.m();
  for (const auto& split : splits) {
    const auto it = std::find_if(solutions.begin(), solutions.end(), [&](const auto& s) { return s.first == split; });
    if (it == solutions.end()) throw ContractViolation("no solution supplied for split " + split.to_string());
    const BranchParam b = branch_for(split, it->second);
    if (b.has_ambiguous_term())
      throw AmbiguousStructuralZero("coefficient magnitude in the structural-zero dead zone for " + split.to_string());
    r.m_C_per_branch.push_back(2 * m / b.reduction);
  }
  r.m_C_total = std::accumulate(r.m_C_per_branch.begin(), r.m_C_per_branch.end(), 0);
  r.m_g = r.m_C_per_branch.empty() ? 0 : *std::min_element(r.m_C_per_branch.begin(), r.m_C_per_branch.end());
  r.expected_total = m * r.k;
  r.matches_expectation = r.m_C_total == r.expected_total;
  return r;
}

VersalPoint sample_branch(const BranchParam& branch, cplx u) {
  VersalPoint p = VersalPoint::origin(branch.m);
  for (const auto& t : branch.terms) {
    const cplx v = t.coefficient * std::pow(u, t.exponent);
    if (t.target == BranchTerm::kBeta0) p.beta[0] = v;
    else p.alpha[static_cast<std::size_t>(t.target)] = v;
  }
  return p;
}

SingularityProfile target_profile(const Profile& profile) {
  SingularityProfile s;
  for (std::size_t i = 0; i < profile.d.size(); ++i)
    if (profile.d[i] > 0) s.counts[static_cast<int>(i) + 1] = profile.d[i];
  return s;
}

SingularityProfile target_profile(const AdmissibleTuple& split) {
  Counts d(std::max(split.d_plus().size(), split.d_minus().size()), 0);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = count_at(split.d_plus(), static_cast<int>(i) + 2) + count_at(split.d_minus(), static_cast<int>(i) + 2);
  return target_profile(Profile{d});
}

}  // namespace tacnode
