#include "tacnode/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tacnode/errors.hpp"

namespace tacnode {
namespace {

Counts trimmed(Counts c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

void require_non_negative(const Counts& c) {
  for (int v : c)
    if (v < 0) throw ContractViolation("counts must be non-negative");
}

std::string counts_text(const Counts& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    os << (first ? "" : ",") << i + 2 << ':' << c[i];
    first = false;
  }
  return first ? std::string("-") : os.str();
}

Counts decremented(Counts c, int j) {
  c[static_cast<std::size_t>(j - 2)] -= 1;
  return trimmed(std::move(c));
}

// Extends a permutation of {1..n} to {1..size} by fixing the new letters.
Permutation extended(const Permutation& p, int size) {
  std::vector<int> img = p.image();
  for (int k = p.size() + 1; k <= size; ++k) img.push_back(k);
  return Permutation(std::move(img));
}

struct Pair {
  Permutation plus;
  Permutation minus;
};

// Base case: at most one cycle on the minus side. tau- = (1 2 ... i) and every cycle
// of tau+ (fixed points included) contains exactly one letter of {1..i}.
Pair build_base(const Counts& plus, const Counts& minus, int m) {
  int i = 1;
  for (int j = 2; j <= static_cast<int>(minus.size()) + 1; ++j)
    if (count_at(minus, j) == 1) i = j;

  std::vector<int> minus_cycle(static_cast<std::size_t>(i));
  for (int k = 0; k < i; ++k) minus_cycle[static_cast<std::size_t>(k)] = k + 1;
  const Permutation tau_minus =
      i > 1 ? Permutation::from_cycles(m, {minus_cycle}) : Permutation::identity(m);

  std::vector<int> lengths;
  for (int j = static_cast<int>(plus.size()) + 1; j >= 2; --j)
    for (int c = 0; c < count_at(plus, j); ++c) lengths.push_back(j);
  if (static_cast<int>(lengths.size()) > i) throw std::logic_error("base case: too many plus cycles");
  lengths.resize(static_cast<std::size_t>(i), 1);

  std::vector<std::vector<int>> cycles;
  int fresh = i + 1;
  for (int a = 1; a <= i; ++a) {
    std::vector<int> cyc{a};
    for (int r = 1; r < lengths[static_cast<std::size_t>(a - 1)]; ++r) cyc.push_back(fresh++);
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
  }
  if (fresh != m + 1) throw std::logic_error("base case: letters not exhausted");
  return {Permutation::from_cycles(m, cycles), tau_minus};
}

// Returns (tau+, tau-) in S_m whose product tau+ tau- is an m-cycle.
Pair build(const Counts& plus, const Counts& minus) {
  const int m = weighted_order(plus) + weighted_order(minus) + 1;
  auto swap_sides = [&] {
    Pair p = build(minus, plus);
    // q r an m-cycle implies r q = q^{-1} (q r) q is one too
    return Pair{p.minus, p.plus};
  };

  if (total_count(minus) <= 1) return build_base(plus, minus, m);
  if (total_count(plus) <= 1) return swap_sides();
  if (moved_points(minus) < moved_points(plus)) return swap_sides();

  int i = 2;
  while (count_at(minus, i) == 0) ++i;
  const int m_prime = m - i + 1;
  const Pair inner = build(plus, decremented(minus, i));

  int x = 0;
  for (int k = 1; k <= m_prime; ++k)
    if (inner.minus(k) == k) {
      x = k;
      break;
    }
  if (x == 0) throw std::logic_error("inductive step: no fixed letter available");

  std::vector<int> new_cycle;
  for (int k = m_prime + 1; k <= m; ++k) new_cycle.push_back(k);
  new_cycle.push_back(x);
  const Permutation appended = Permutation::from_cycles(m, {new_cycle});
  return {extended(inner.plus, m), extended(inner.minus, m) * appended};
}

void partitions_into(int remaining, int max_part, Counts& current, int m, std::vector<Profile>& out) {
  if (remaining == 0) {
    out.push_back(Profile{trimmed(current)});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    const int j = part + 1;
    if (j > m) continue;
    current[static_cast<std::size_t>(j - 2)] += 1;
    partitions_into(remaining - part, part, current, m, out);
    current[static_cast<std::size_t>(j - 2)] -= 1;
  }
}

}  // namespace

int weighted_order(const Counts& c) {
  int s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<int>(i + 1) * c[i];
  return s;
}

int moved_points(const Counts& c) {
  int s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<int>(i + 2) * c[i];
  return s;
}

int total_count(const Counts& c) {
  int s = 0;
  for (int v : c) s += v;
  return s;
}

bool is_admissible(const Counts& d_plus, const Counts& d_minus) {
  require_non_negative(d_plus);
  require_non_negative(d_minus);
  const int m = weighted_order(d_plus) + weighted_order(d_minus) + 1;
  if (m < 2) throw EmptyTuple();
  return m >= moved_points(d_plus) && m >= moved_points(d_minus);
}

bool is_admissible(const Counts& d_plus, const Counts& d_minus, int m) {
  if (!is_admissible(d_plus, d_minus)) return false;
  return m == weighted_order(d_plus) + weighted_order(d_minus) + 1;
}

AdmissibleTuple::AdmissibleTuple(Counts d_plus, Counts d_minus)
    : plus_(trimmed(std::move(d_plus))), minus_(trimmed(std::move(d_minus))) {
  if (!is_admissible(plus_, minus_))
    throw ContractViolation("inadmissible tuple " + counts_text(plus_) + " | " + counts_text(minus_));
  m_ = weighted_order(plus_) + weighted_order(minus_) + 1;
}

std::string AdmissibleTuple::to_string() const {
  return "m=" + std::to_string(m_) + " plus=" + counts_text(plus_) + " minus=" + counts_text(minus_);
}

std::string Profile::to_string() const { return counts_text(d); }

std::vector<AdmissibleTuple> enumerate_splits(const Profile& profile) {
  require_non_negative(profile.d);
  std::vector<AdmissibleTuple> out;
  if (total_count(profile.d) == 0) return out;
  Counts plus(profile.d.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == profile.d.size()) {
      Counts minus(profile.d.size());
      for (std::size_t i = 0; i < minus.size(); ++i) minus[i] = profile.d[i] - plus[i];
      if (is_admissible(plus, minus)) out.emplace_back(plus, minus);
      return;
    }
    // d^+ descending, so (d,0) comes before (0,d)
    for (int v = profile.d[idx]; v >= 0; --v) {
      plus[idx] = v;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Profile> enumerate_profiles_of_order(int m) {
  std::vector<Profile> out;
  if (m < 2) return out;
  Counts current(static_cast<std::size_t>(m - 1), 0);
  partitions_into(m - 1, m - 1, current, m, out);
  return out;
}

std::vector<AdmissibleTuple> enumerate_admissible(int m) {
  std::vector<AdmissibleTuple> out;
  for (const auto& p : enumerate_profiles_of_order(m))
    for (auto& t : enumerate_splits(p)) out.push_back(std::move(t));
  return out;
}

std::vector<std::string> triple_violations(const PermutationTriple& t) {
  std::vector<std::string> v;
  const int m = t.sigma.size();
  if (t.tau_plus.size() != m || t.tau_minus.size() != m) {
    v.emplace_back("permutations act on different sets");
    return v;
  }
  if (!(t.sigma * t.tau_plus * t.tau_minus).is_identity()) v.emplace_back("sigma tau+ tau- != 1");
  if (t.sigma.cycle_count() != 1) v.emplace_back("sigma is not an m-cycle");
  if (!generates_transitive_group({t.tau_plus, t.tau_minus, t.sigma})) v.emplace_back("not transitive");
  return v;
}

std::vector<std::string> triple_violations(const PermutationTriple& t, const AdmissibleTuple& tuple) {
  std::vector<std::string> v;
  if (t.m() != tuple.m()) {
    v.emplace_back("triple size differs from tuple order m");
    return v;
  }
  v = triple_violations(t);
  auto matches = [&](const Permutation& p, const Counts& want) {
    const auto type = p.cycle_type();
    for (const auto& [len, n] : type)
      if (len >= 2 && count_at(want, len) != n) return false;
    for (std::size_t i = 0; i < want.size(); ++i) {
      const int len = static_cast<int>(i + 2);
      const auto it = type.find(len);
      if ((it == type.end() ? 0 : it->second) != want[i]) return false;
    }
    return true;
  };
  if (!matches(t.tau_plus, tuple.d_plus())) v.emplace_back("tau+ has wrong cycle type");
  if (!matches(t.tau_minus, tuple.d_minus())) v.emplace_back("tau- has wrong cycle type");
  if (ramification_check(t) != 2 * t.m() - 2) v.emplace_back("total ramification != 2m-2");
  return v;
}

PermutationTriple factorize(const AdmissibleTuple& tuple) {
  const Pair p = build(tuple.d_plus(), tuple.d_minus());
  PermutationTriple t{p.plus, p.minus, (p.plus * p.minus).inverse()};
  if (const auto v = triple_violations(t, tuple); !v.empty())
    throw std::logic_error("factorize produced an invalid triple: " + v.front());
  return t;
}

PermutationTriple canonical_form(const PermutationTriple& t) {
  const int m = t.m();
  if (t.sigma.cycle_count() != 1) throw ContractViolation("canonical_form: sigma is not an m-cycle");
  PermutationTriple best;
  bool have = false;
  for (int start = 1; start <= m; ++start) {
    std::vector<int> phi(static_cast<std::size_t>(m));
    int x = start;
    for (int k = 1; k <= m; ++k) {
      phi[static_cast<std::size_t>(x - 1)] = k;
      x = t.sigma(x);
    }
    const Permutation conj(std::move(phi));
    PermutationTriple c{t.tau_plus.conjugated_by(conj), t.tau_minus.conjugated_by(conj),
                        t.sigma.conjugated_by(conj)};
    if (!have || c.tau_plus.image() < best.tau_plus.image()) {
      best = std::move(c);
      have = true;
    }
  }
  return best;
}

int ramification_check(const PermutationTriple& t) {
  const int m = t.m();
  return (m - t.sigma.cycle_count()) + (m - t.tau_plus.cycle_count()) + (m - t.tau_minus.cycle_count());
}

}  // namespace tacnode
