#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "tacnode/combinatorics.hpp"
#include "tacnode/permutation.hpp"

namespace oracle {

using tacnode::Permutation;

inline std::vector<Permutation> all_permutations(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// length -> count, fixed points included.
inline std::map<int, int> full_cycle_type(const tacnode::Counts& d, int m) {
  std::map<int, int> t;
  int moved = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) {
      t[static_cast<int>(i) + 2] = d[i];
      moved += (static_cast<int>(i) + 2) * d[i];
    }
  if (m > moved) t[1] = m - moved;
  return t;
}

inline bool is_full_cycle(const Permutation& p) {
  int x = 1, len = 0;
  do {
    x = p(x);
    ++len;
  } while (x != 1);
  return len == p.size();
}

// All pairs (tau+, tau-) of the prescribed cycle types whose product is an m-cycle,
// partitioned into orbits under simultaneous conjugation by S_m.
struct HurwitzSearch {
  std::vector<std::pair<Permutation, Permutation>> pairs;
  std::vector<int> orbit;  // orbit index per pair
  int orbit_count = 0;
};

inline HurwitzSearch hurwitz_search(const tacnode::AdmissibleTuple& t) {
  const int m = t.m();
  const auto type_plus = full_cycle_type(t.d_plus(), m);
  const auto type_minus = full_cycle_type(t.d_minus(), m);
  std::vector<Permutation> plus, minus;
  for (const auto& p : all_permutations(m)) {
    const auto ct = p.cycle_type();
    if (ct == type_plus) plus.push_back(p);
    if (ct == type_minus) minus.push_back(p);
  }
  HurwitzSearch hs;
  std::map<std::pair<Permutation, Permutation>, int> index;
  for (const auto& a : plus)
    for (const auto& b : minus)
      if (is_full_cycle(a * b)) {
        index.emplace(std::make_pair(a, b), static_cast<int>(hs.pairs.size()));
        hs.pairs.emplace_back(a, b);
      }
  // S_m is generated by (1 2) and (1 2 ... m)
  std::vector<Permutation> gens;
  if (m >= 2) {
    gens.push_back(Permutation::from_cycles(m, {{1, 2}}));
    std::vector<int> c(static_cast<std::size_t>(m));
    std::iota(c.begin(), c.end(), 1);
    gens.push_back(Permutation::from_cycles(m, {c}));
  }
  hs.orbit.assign(hs.pairs.size(), -1);
  for (std::size_t s = 0; s < hs.pairs.size(); ++s) {
    if (hs.orbit[s] >= 0) continue;
    const int id = hs.orbit_count++;
    std::queue<std::size_t> q;
    q.push(s);
    hs.orbit[s] = id;
    while (!q.empty()) {
      const auto [a, b] = hs.pairs[q.front()];
      q.pop();
      for (const auto& g : gens) {
        const auto it = index.find({a.conjugated_by(g), b.conjugated_by(g)});
        if (it != index.end() && hs.orbit[static_cast<std::size_t>(it->second)] < 0) {
          hs.orbit[static_cast<std::size_t>(it->second)] = id;
          q.push(static_cast<std::size_t>(it->second));
        }
      }
    }
  }
  return hs;
}

// Number of partitions of n.
inline long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(n)];
}

}  // namespace oracle
