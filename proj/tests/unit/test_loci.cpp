#include <doctest.h>

#include <numeric>
#include <random>

#include "tacnode/errors.hpp"
#include "tacnode/loci.hpp"

using namespace tacnode;

namespace {

std::vector<std::pair<AdmissibleTuple, ShabatSolution>> solved_splits(const Profile& p) {
  std::vector<std::pair<AdmissibleTuple, ShabatSolution>> out;
  for (const auto& t : enumerate_splits(p)) out.emplace_back(t, solve(t));
  return out;
}

const BranchTerm* term(const BranchParam& b, int target) {
  for (const auto& t : b.terms)
    if (t.target == target) return &t;
  return nullptr;
}

Counts single(int m) {
  Counts d(static_cast<std::size_t>(m - 1), 0);
  d.back() = 1;
  return d;
}

}  // namespace

TEST_CASE("branch of a single A_{m-1}: alpha_0 = t, beta_0 = t^2/4") {
  for (int m = 2; m <= 8; ++m) {
    const AdmissibleTuple t({}, single(m));
    const BranchParam b = branch_for(t, solve(t));
    CHECK(b.reduction == m);
    REQUIRE(b.terms.size() == 2);
    const BranchTerm* a0 = term(b, 0);
    REQUIRE(a0 != nullptr);
    CHECK(a0->exponent == m);
    CHECK(std::abs(a0->coefficient - 1.0) < 1e-10);
    const BranchTerm* b0 = term(b, BranchTerm::kBeta0);
    REQUIRE(b0 != nullptr);
    CHECK(b0->exponent == 2 * m);
    CHECK_FALSE(b.has_ambiguous_term());
  }
}

TEST_CASE("m = 5 cusp branch: alpha_1 = c_1 t^2, alpha_3 = c_3 t, beta_0 = t^5/4") {
  const AdmissibleTuple t({0, 1}, {0, 1});
  const BranchParam b = branch_for(t, solve(t));
  CHECK(b.reduction == 2);
  REQUIRE(b.terms.size() == 3);
  REQUIRE(term(b, 1) != nullptr);
  REQUIRE(term(b, 3) != nullptr);
  CHECK(term(b, 1)->exponent / b.reduction == 2);
  CHECK(term(b, 3)->exponent / b.reduction == 1);
  CHECK(term(b, BranchTerm::kBeta0)->exponent / b.reduction == 5);
  CHECK(term(b, 0) == nullptr);
  CHECK(term(b, 2) == nullptr);
}

TEST_CASE("even m balanced nodal branches use only even-index alpha and t = u^2") {
  for (int m = 2; m <= 10; m += 2) {
    const AdmissibleTuple t = balanced_nodal_tuple(m);
    const BranchParam b = branch_for(t, chebyshev_oracle(m));
    CHECK(b.reduction == 2);
    for (const auto& term : b.terms)
      if (term.target != BranchTerm::kBeta0) CHECK(term.target % 2 == 0);
  }
}

TEST_CASE("multiplicities for d_m = 1: two branches of multiplicity 2") {
  for (int m = 2; m <= 7; ++m) {
    const Profile p{single(m)};
    const MultiplicityReport r = multiplicities(p, solved_splits(p));
    CHECK(r.k == 2);
    CHECK(r.m_C_per_branch == std::vector<int>{2, 2});
    CHECK(r.m_g == 2);
  }
}

TEST_CASE("multiplicities for two cusps at m = 5") {
  const Profile p{{0, 2}};
  const MultiplicityReport r = multiplicities(p, solved_splits(p));
  CHECK(r.k == 1);
  CHECK(r.m_C_total == 5);
  CHECK(r.m_g == 5);
  CHECK(r.matches_expectation);
}

TEST_CASE("nodal profiles give m_C = m per branch") {
  for (int m = 2; m <= 8; ++m) {
    const Profile p{{m - 1}};
    const MultiplicityReport r = multiplicities(p, solved_splits(p));
    for (int c : r.m_C_per_branch) CHECK(c == m);
    CHECK(r.m_C_total == m * r.k);
  }
}

TEST_CASE("missing split solutions are a contract violation") {
  const Profile p{single(4)};
  auto sols = solved_splits(p);
  sols.pop_back();
  CHECK_THROWS_AS(multiplicities(p, sols), ContractViolation);
}

TEST_CASE("sampling at u = 0 gives the tacnode itself") {
  const AdmissibleTuple t({0, 1}, {0, 1});
  const VersalPoint p = sample_branch(branch_for(t, solve(t)), 0.0);
  CHECK(p.m == 5);
  for (const auto& a : p.alpha) CHECK(a == cplx(0.0));
  for (const auto& b : p.beta) CHECK(b == cplx(0.0));
}

TEST_CASE("sampled branch points classify to the target profile") {
  for (int m = 2; m <= 6; ++m) {
    const AdmissibleTuple t({}, single(m));
    const VersalPoint p = sample_branch(branch_for(t, solve(t)), 0.1);
    CHECK(classify(p) == SingularityProfile{{{m - 1, 1}}});
    CHECK(p.on_hp());
  }
  const AdmissibleTuple cusps({0, 1}, {0, 1});
  CHECK(classify(sample_branch(branch_for(cusps, solve(cusps)), 0.1)) == SingularityProfile{{{2, 2}}});
  CHECK(target_profile(cusps) == SingularityProfile{{{2, 2}}});
  CHECK(target_profile(Profile{{1, 0, 1}}) == SingularityProfile{{{1, 1}, {3, 1}}});
}

TEST_CASE("random samples in an annulus classify generically, m <= 6") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> r(0.05, 0.2), th(0.0, 2.0 * M_PI);
  for (int m = 2; m <= 6; ++m)
    for (const auto& t : enumerate_admissible(m)) {
      const BranchParam b = branch_for(t, solve(t));
      int hits = 0;
      for (int s = 0; s < 10; ++s)
        if (classify(sample_branch(b, std::polar(r(rng), th(rng)))) == target_profile(t)) ++hits;
      CHECK_MESSAGE(hits >= 9, t.to_string());
    }
}
