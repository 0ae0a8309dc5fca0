#pragma once

#include <string>
#include <vector>

#include "tacnode/permutation.hpp"

namespace tacnode {

// Count vectors are indexed by j = 2, 3, ...: counts[0] is the count for j = 2.
using Counts = std::vector<int>;

inline int count_at(const Counts& c, int j) {
  const auto idx = static_cast<std::size_t>(j - 2);
  return j >= 2 && idx < c.size() ? c[idx] : 0;
}

// sum_j (j-1) c_j
int weighted_order(const Counts& c);
// sum_j j c_j: number of points moved by a permutation of cycle type prod j^{c_j}
int moved_points(const Counts& c);
int total_count(const Counts& c);

// Split singularity profile (d_j^+, d_j^-). Only constructible when admissible.
class AdmissibleTuple {
 public:
  // Throws EmptyTuple for all-zero counts and ContractViolation when inadmissible.
  AdmissibleTuple(Counts d_plus, Counts d_minus);

  const Counts& d_plus() const { return plus_; }
  const Counts& d_minus() const { return minus_; }
  int m() const { return m_; }
  int plus(int j) const { return count_at(plus_, j); }
  int minus(int j) const { return count_at(minus_, j); }

  // Same tuple with the two sides exchanged.
  AdmissibleTuple swapped() const { return {minus_, plus_}; }
  bool is_symmetric() const { return plus_ == minus_; }

  // "3:1,2:2|2:1" style text, plus side first.
  std::string to_string() const;

  friend bool operator==(const AdmissibleTuple&, const AdmissibleTuple&) = default;

 private:
  Counts plus_;
  Counts minus_;
  int m_ = 0;
};

// Unsplit profile: d_j singularities of type A_{j-1}.
struct Profile {
  Counts d;

  // Tacnode order m with sum (j-1) d_j = m - 1.
  int m() const { return weighted_order(d) + 1; }
  std::string to_string() const;

  friend bool operator==(const Profile&, const Profile&) = default;
};

// Both admissibility inequalities with m derived from the counts.
// Throws EmptyTuple when every count is zero.
bool is_admissible(const Counts& d_plus, const Counts& d_minus);
// Same, but against a claimed tacnode order m, which must equal the derived one.
bool is_admissible(const Counts& d_plus, const Counts& d_minus, int m);

// All ordered admissible splits d_j = d_j^+ + d_j^-. May be empty.
std::vector<AdmissibleTuple> enumerate_splits(const Profile& profile);

// Every profile with sum (j-1) d_j = m - 1 (partitions of m - 1), and every admissible tuple of order m.
std::vector<Profile> enumerate_profiles_of_order(int m);
std::vector<AdmissibleTuple> enumerate_admissible(int m);

struct PermutationTriple {
  Permutation tau_plus;
  Permutation tau_minus;
  Permutation sigma;

  int m() const { return sigma.size(); }
  friend bool operator==(const PermutationTriple&, const PermutationTriple&) = default;
};

// Individual invariant checks; empty result means the triple is valid for the tuple.
std::vector<std::string> triple_violations(const PermutationTriple& t, const AdmissibleTuple& tuple);
// Checks that do not need the tuple: product identity, sigma an m-cycle, transitivity.
std::vector<std::string> triple_violations(const PermutationTriple& t);

// Constructive existence proof: builds (tau+, tau-, sigma) with sigma tau+ tau- = 1.
PermutationTriple factorize(const AdmissibleTuple& tuple);

// Conjugates so that sigma = (1 2 ... m); the remaining rotation freedom is fixed by the
// lexicographically least one-line image of tau+.
PermutationTriple canonical_form(const PermutationTriple& t);

// sum over the three permutations of (m - number of cycles).
int ramification_check(const PermutationTriple& t);

}  // namespace tacnode
