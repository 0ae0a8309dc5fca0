#include "tacnode/k3.hpp"

#include <functional>

#include "tacnode/errors.hpp"

namespace tacnode::k3 {

K3Budget budget(int p, int n) {
  if (p < 3) throw ContractViolation("genus p must be >= 3");
  if (n < 1) throw ContractViolation("multiple n must be >= 1");
  K3Budget b;
  b.p = p;
  b.n = n;
  b.epsilon = p % 2;
  b.l = (p - b.epsilon) / 2;
  b.dim_nH = static_cast<long>(n) * n * (p - 1) + 1;
  b.exceptional = n == 2 && (p == 3 || p == 4);
  b.budget = 2L * n * (b.l - 1 + b.epsilon) + 2 - b.epsilon - (b.exceptional ? 1 : 0);
  return b;
}

long delta(const K3Budget& b, const Profile& profile) { return b.dim_nH - weighted_order(profile.d); }

RegularityCheck regularity(int p, int n, const std::map<int, int>& a) {
  if (p < 3) throw ContractViolation("genus p must be >= 3");
  if (n < 1) throw ContractViolation("multiple n must be >= 1");
  RegularityCheck r;
  r.a = a;
  for (const auto& [k, c] : a) {
    if (k < 1 || c < 0) throw ContractViolation("A_k counts need k >= 1 and count >= 0");
    r.deg_T1 += static_cast<long>(k) * c;
    r.keilen_lhs += static_cast<long>(k + 1) * (k + 1) * c;
  }
  r.threshold = n == 1 ? Rational{p + 2, 2} : Rational{2L * (n - 1) * (p - 1), 1};
  r.passes = r.threshold.exceeds(r.deg_T1);
  r.keilen_rhs = static_cast<long>(n) * n * (2L * p - 2);
  r.keilen_passes = r.keilen_lhs <= r.keilen_rhs;
  return r;
}

double dim_bound(int g, int tau) {
  if (g < 0 || tau < 0) throw ContractViolation("dim_bound needs g >= 0 and tau >= 0");
  return g - tau / 2.0;
}

std::vector<Profile> enumerate_profiles(int p, int n, int max_k, bool include_subprofiles) {
  const K3Budget b = budget(p, n);
  const int total = static_cast<int>(b.budget);
  const int top = max_k <= 1 ? total + 1 : max_k;
  std::vector<Profile> out;
  Counts d(static_cast<std::size_t>(std::max(top - 1, 0)), 0);

  // parts (k-1) in non-increasing order, k from top down to 2
  std::function<void(int, int)> rec = [&](int remaining, int k) {
    if (k < 2) {
      if (remaining == 0 || include_subprofiles) {
        Counts c = d;
        while (!c.empty() && c.back() == 0) c.pop_back();
        out.push_back(Profile{c});
      }
      return;
    }
    for (int cnt = remaining / (k - 1); cnt >= 0; --cnt) {
      d[static_cast<std::size_t>(k - 2)] = cnt;
      rec(remaining - cnt * (k - 1), k - 1);
    }
    d[static_cast<std::size_t>(k - 2)] = 0;
  };
  rec(total, top);
  return out;
}

}  // namespace tacnode::k3
