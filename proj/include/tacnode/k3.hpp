#pragma once

#include <map>
#include <vector>

#include "tacnode/combinatorics.hpp"

namespace tacnode::k3 {

struct Rational {
  long num = 0;
  long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  // v < num/den, evaluated exactly
  bool exceeds(long v) const { return static_cast<__int128>(v) * den < static_cast<__int128>(num); }
};

// Genus p = 2l + epsilon polarization, curves in |nH|.
struct K3Budget {
  int p = 0;
  int n = 0;
  int l = 0;
  int epsilon = 0;
  long dim_nH = 0;  // n^2 (p - 1) + 1
  long budget = 0;  // maximal sum (k-1) d_k
  bool exceptional = false;
};

// Throws ContractViolation for p < 3 or n < 1.
K3Budget budget(int p, int n);

// delta = dim|nH| - sum (k-1) d_k: the number of extra nodes.
long delta(const K3Budget& b, const Profile& profile);

struct RegularityCheck {
  std::map<int, int> a;  // k -> number of A_k
  long deg_T1 = 0;       // sum k a_k
  Rational threshold;
  bool passes = false;
  // Optional comparison: sum (k+1)^2 a_k <= n^2 H^2 with H^2 = 2p - 2.
  long keilen_lhs = 0;
  long keilen_rhs = 0;
  bool keilen_passes = false;
};

// Threshold (p+2)/2 for n = 1 and 2(n-1)(p-1) for n >= 2; strict inequality.
RegularityCheck regularity(int p, int n, const std::map<int, int>& a);

// Upper bound g - tau/2 for dim T ES(C) of a genus g curve with tau cusps.
double dim_bound(int g, int tau);

// Profiles (d_2, ..., d_max_k) with sum (k-1) d_k equal to the budget. With
// include_subprofiles, every profile of weight <= budget (the independent-smoothing closure).
// max_k <= 1 means unbounded (max_k = budget + 1).
std::vector<Profile> enumerate_profiles(int p, int n, int max_k = 0, bool include_subprofiles = false);

}  // namespace tacnode::k3
