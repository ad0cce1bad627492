#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spinfloer {

// Largest supported grid size. Generator sets are n!, so anything near this
// bound is only usable for single-generator queries.
inline constexpr int kMaxDegree = 16;

// A bijection of {0,...,n-1} stored by its images: images[k] = x(k).
// Composition is (p*q)(k) = p(q(k)), so x * tau_{a,b} swaps the values of x
// at positions a and b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // Inverse of rank(): the k-th permutation of size n in lexicographic order.
  static Permutation unrank(int n, std::uint64_t k);

  int size() const { return n_; }
  int operator()(int k) const { return img_[static_cast<std::size_t>(k)]; }
  int operator[](int k) const { return img_[static_cast<std::size_t>(k)]; }

  std::vector<int> images() const;
  Permutation inverse() const;
  // this * tau_{a,b}
  Permutation swap_positions(int a, int b) const;
  bool is_identity() const;
  // Lexicographic index among all permutations of the same size.
  std::uint64_t rank() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&,
                                          const Permutation&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

// Parity in {0,1}.
int signature(const Permutation& p);

std::vector<Permutation> all_permutations(int n);

std::uint64_t factorial(int n);

// "1 2 0" style, the same format accepted by parse_permutation.
std::string to_string(const Permutation& p);
Permutation parse_permutation(const std::string& text);

}  // namespace spinfloer
