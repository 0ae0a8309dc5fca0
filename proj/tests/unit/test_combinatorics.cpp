#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tacnode/combinatorics.hpp"
#include "tacnode/errors.hpp"

using namespace tacnode;

namespace {

std::set<std::pair<Counts, Counts>> split_set(const Profile& p) {
  std::set<std::pair<Counts, Counts>> s;
  for (const auto& t : enumerate_splits(p)) s.emplace(t.d_plus(), t.d_minus());
  return s;
}

// Both inequalities evaluated directly: sum (j-1)(d+ + d-) = m - 1, sum j d^pm <= m.
bool admissible_by_hand(const Counts& plus, const Counts& minus, int m) {
  return weighted_order(plus) + weighted_order(minus) == m - 1 && moved_points(plus) <= m && moved_points(minus) <= m;
}

}  // namespace

TEST_CASE("admissibility examples") {
  CHECK(is_admissible({0, 1}, {0, 1}));
  CHECK(AdmissibleTuple({0, 1}, {0, 1}).m() == 5);
  CHECK(is_admissible({1}, {}));
  CHECK(AdmissibleTuple({1}, {}).m() == 2);
  CHECK(is_admissible({0, 0, 0, 1}, {}, 5));
  CHECK_FALSE(is_admissible({0, 0, 0, 0, 1}, {}, 5));
  CHECK_FALSE(is_admissible({2}, {}));
  CHECK_THROWS_AS(is_admissible({}, {}), EmptyTuple);
  CHECK_THROWS_AS(AdmissibleTuple({0}, {0, 0}), EmptyTuple);
  CHECK_THROWS_AS(AdmissibleTuple({2}, {}), ContractViolation);
}

TEST_CASE("admissibility agrees with the two inequalities on a grid") {
  for (int a2 = 0; a2 <= 3; ++a2)
    for (int a3 = 0; a3 <= 2; ++a3)
      for (int b2 = 0; b2 <= 3; ++b2)
        for (int b4 = 0; b4 <= 1; ++b4) {
          const Counts plus{a2, a3}, minus{b2, 0, b4};
          if (a2 + a3 + b2 + b4 == 0) continue;
          const int m = weighted_order(plus) + weighted_order(minus) + 1;
          CHECK(is_admissible(plus, minus) == admissible_by_hand(plus, minus, m));
        }
}

TEST_CASE("split enumeration examples") {
  const auto nodes = split_set(Profile{{2}});
  CHECK(nodes == std::set<std::pair<Counts, Counts>>{{{1}, {1}}});
  CHECK(enumerate_splits(Profile{{0, 0, 0, 1}}).size() == 2);
  const auto cusps = split_set(Profile{{0, 2}});
  REQUIRE(cusps.size() == 1);
  CHECK(count_at(cusps.begin()->first, 3) == 1);
  CHECK(count_at(cusps.begin()->second, 3) == 1);
  CHECK(enumerate_splits(Profile{{1}}).size() == 2);
}

TEST_CASE("profiles of order m are the partitions of m - 1") {
  for (int m = 2; m <= 10; ++m) CHECK(static_cast<long>(enumerate_profiles_of_order(m).size()) == oracle::partition_count(m - 1));
}

TEST_CASE("admissible tuples are exactly the admissible splits of all profiles") {
  for (int m = 2; m <= 8; ++m) {
    std::size_t total = 0;
    for (const auto& p : enumerate_profiles_of_order(m)) total += enumerate_splits(p).size();
    CHECK(enumerate_admissible(m).size() == total);
  }
}

TEST_CASE("factorize examples") {
  const auto t2 = factorize(AdmissibleTuple({1}, {}));
  CHECK(t2.tau_plus == Permutation::from_cycles(2, {{1, 2}}));
  CHECK(t2.tau_minus.is_identity());
  CHECK(t2.sigma == Permutation::from_cycles(2, {{1, 2}}));

  const AdmissibleTuple t3({1}, {1});
  const auto f3 = factorize(t3);
  CHECK(triple_violations(f3, t3).empty());
  CHECK(f3.tau_plus.cycle_type() == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK((f3.sigma * f3.tau_plus * f3.tau_minus).is_identity());

  const AdmissibleTuple t5({0, 1}, {0, 1});
  const auto f5 = factorize(t5);
  CHECK(triple_violations(f5, t5).empty());
  CHECK(f5.tau_plus.cycle_type() == std::map<int, int>{{1, 2}, {3, 1}});
  CHECK(f5.tau_minus.cycle_type() == std::map<int, int>{{1, 2}, {3, 1}});
  CHECK(oracle::is_full_cycle(f5.sigma));
  CHECK(oracle::hurwitz_search(t5).orbit_count == 1);
}

TEST_CASE("factorize is valid for every admissible tuple up to m = 9") {
  for (int m = 2; m <= 9; ++m)
    for (const auto& t : enumerate_admissible(m)) {
      const auto f = factorize(t);
      CHECK_MESSAGE(triple_violations(f, t).empty(), t.to_string());
      CHECK(ramification_check(f) == 2 * m - 2);
    }
}

TEST_CASE("canonical form is invariant under conjugation") {
  std::mt19937_64 rng(11);
  for (int m = 2; m <= 8; ++m)
    for (const auto& t : enumerate_admissible(m)) {
      const auto f = factorize(t);
      std::vector<int> v(static_cast<std::size_t>(m));
      std::iota(v.begin(), v.end(), 1);
      std::shuffle(v.begin(), v.end(), rng);
      const Permutation g(v);
      const PermutationTriple c{f.tau_plus.conjugated_by(g), f.tau_minus.conjugated_by(g), f.sigma.conjugated_by(g)};
      CHECK(canonical_form(c) == canonical_form(f));
      CHECK(canonical_form(f).sigma == Permutation::from_cycles(m, {[&] {
                                          std::vector<int> cyc(static_cast<std::size_t>(m));
                                          std::iota(cyc.begin(), cyc.end(), 1);
                                          return cyc;
                                        }()}));
    }
}

TEST_CASE("the two splits of d_5 = 1 have distinct canonical forms") {
  const AdmissibleTuple a({0, 0, 0, 1}, {}), b({}, {0, 0, 0, 1});
  CHECK(canonical_form(factorize(a)) != canonical_form(factorize(b)));
}

TEST_CASE("canonical forms agree with exhaustive search where the class is unique, m <= 6") {
  int unique = 0, several = 0;
  for (int m = 2; m <= 6; ++m)
    for (const auto& t : enumerate_admissible(m)) {
      const auto hs = oracle::hurwitz_search(t);
      REQUIRE(hs.orbit_count >= 1);
      const auto canon = canonical_form(factorize(t));
      // factorize must land in one of the brute-force classes
      bool found = false;
      for (const auto& [a, b] : hs.pairs) {
        const PermutationTriple tr{a, b, (a * b).inverse()};
        if (canonical_form(tr) == canon) found = true;
      }
      CHECK_MESSAGE(found, t.to_string());
      if (hs.orbit_count == 1) {
        ++unique;
        for (const auto& [a, b] : hs.pairs) CHECK(canonical_form(PermutationTriple{a, b, (a * b).inverse()}) == canon);
      } else {
        ++several;
      }
    }
  CHECK(unique > 0);
  // the first tuples with several classes appear at m = 6
  CHECK(several == 6);
}

TEST_CASE("brute-force class counts for known m = 6 cases") {
  CHECK(oracle::hurwitz_search(AdmissibleTuple({2}, {0, 0, 1})).orbit_count == 2);
  CHECK(oracle::hurwitz_search(AdmissibleTuple({2}, {1, 1})).orbit_count == 3);
}

TEST_CASE("triple violations detect broken triples") {
  const auto f = factorize(AdmissibleTuple({0, 1}, {0, 1}));
  PermutationTriple bad = f;
  bad.sigma = Permutation::identity(5);
  CHECK_FALSE(triple_violations(bad).empty());
  CHECK_FALSE(triple_violations(f, AdmissibleTuple({0, 0, 0, 1}, {})).empty());
}

TEST_CASE("ramification examples") {
  CHECK(ramification_check(factorize(AdmissibleTuple({0, 1}, {0, 1}))) == 8);
  CHECK(ramification_check(factorize(AdmissibleTuple({1}, {}))) == 2);
}
