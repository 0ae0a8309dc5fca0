#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace tacnode {

// Permutation of {1..n} in one-line notation: image()[k-1] = p(k).
// Products compose right to left: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  // Product of the given cycles (1-indexed), applied right to left.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int k) const { return image_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  // Disjoint cycles including fixed points, each starting at its least element.
  std::vector<std::vector<int>> cycles() const;
  // length -> number of cycles of that length (fixed points included).
  std::map<int, int> cycle_type() const;
  int cycle_count() const;

  // conj * this * conj^{-1}
  Permutation conjugated_by(const Permutation& conj) const;

  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

// True when the group generated by the permutations acts transitively on {1..n}.
bool generates_transitive_group(const std::vector<Permutation>& gens);

}  // namespace tacnode
