#pragma once

#include <cstdint>
#include <vector>

#include "spinfloer/spin_group.hpp"

namespace spinfloer::testing {

// Integer multivectors in the Clifford algebra on e_0..e_{n-1} with
// e_k^2 = -1 and anticommuting generators. The label (a,b) maps to e_a - e_b,
// i.e. sqrt(2) times the image of the lifted transposition. This is an
// independent faithful model of the spin extension, used only by tests.
class Multivector {
 public:
  explicit Multivector(int n);
  static Multivector scalar(int n, std::int64_t value);

  int dimension() const { return n_; }
  std::int64_t coefficient(std::uint32_t blade) const { return coef_[blade]; }
  bool is_zero() const;

  // this * (e_a - e_b)
  Multivector times_root(int a, int b) const;
  Multivector negated() const;

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  int n_;
  std::vector<std::int64_t> coef_;
};

inline constexpr int kCliffordMaxDegree = 8;

Multivector clifford_image(int n, const GeneratorWord& w);

// Spin bit of the element named by w, recovered by comparing its multivector
// against that of the canonical word of the same permutation. Throws
// std::domain_error for n > kCliffordMaxDegree and std::logic_error if the two
// multivectors are not proportional by +-2^k (which would break the model).
int clifford_oracle_bit(int n, const GeneratorWord& w);

}  // namespace spinfloer::testing
