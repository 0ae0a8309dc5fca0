#include "tacnode/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tacnode/errors.hpp"

namespace tacnode {

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw ContractViolation("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(n);
  // rightmost cycle acts first
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    Permutation cyc = identity(n);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i];
      const int to = c[(i + 1) % c.size()];
      if (from < 1 || from > n) throw ContractViolation("cycle entry out of range");
      cyc.image_[static_cast<std::size_t>(from - 1)] = to;
    }
    result = cyc * result;
  }
  return Permutation(result.image_);
}

Permutation Permutation::inverse() const {
  Permutation inv = identity(size());
  for (int k = 1; k <= size(); ++k) inv.image_[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return inv;
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= size(); ++k)
    if ((*this)(k) != k) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::map<int, int> Permutation::cycle_type() const {
  std::map<int, int> type;
  for (const auto& c : cycles()) ++type[static_cast<int>(c.size())];
  return type;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

Permutation Permutation::conjugated_by(const Permutation& conj) const {
  // (c p c^-1)(c(x)) = c(p(x))
  Permutation out = identity(size());
  for (int x = 1; x <= size(); ++x)
    out.image_[static_cast<std::size_t>(conj(x) - 1)] = conj((*this)(x));
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ContractViolation("permutation sizes differ");
  Permutation out = Permutation::identity(a.size());
  for (int x = 1; x <= a.size(); ++x) out.image_[static_cast<std::size_t>(x - 1)] = a(b(x));
  return out;
}

bool generates_transitive_group(const std::vector<Permutation>& gens) {
  if (gens.empty()) return false;
  const int n = gens.front().size();
  if (n == 0) return false;
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::vector<int> stack{1};
  reached[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      const int y = g(x);
      if (!reached[static_cast<std::size_t>(y - 1)]) {
        reached[static_cast<std::size_t>(y - 1)] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

}  // namespace tacnode
