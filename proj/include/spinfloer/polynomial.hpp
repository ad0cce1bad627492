#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinfloer/permutation.hpp"

namespace spinfloer {

// Exponent vector over U_0..U_{n-1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : n_(static_cast<std::uint8_t>(nvars)) {}
  static Monomial from_exponents(const std::vector<int>& e);

  int variables() const { return n_; }
  int exponent(int k) const { return e_[static_cast<std::size_t>(k)]; }
  void set_exponent(int k, int value) { e_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(value); }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  // Maslov contribution of the U factors.
  int maslov_shift() const { return -2 * degree(); }

  Monomial operator*(const Monomial& other) const;
  // Variable k of this monomial becomes variable mapping[k].
  Monomial relabeled(const std::vector<int>& mapping) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> e_{};
};

std::string to_string(const Monomial& m);

// Sparse polynomial in the U variables with integer coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, std::int64_t>;

  void add(const Monomial& m, std::int64_t c);
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Polynomial reduced_mod2() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

std::string to_string(const Polynomial& p);

// Element of the quotient by (z + 1): coefficients live on plain
// permutations, a coefficient c on x meaning c * s(x).
class ChainElement {
 public:
  using Terms = std::map<Permutation, Polynomial>;

  void add(const Permutation& x, const Monomial& m, std::int64_t c);
  // this += coefficient(m, c) * other
  void add_scaled(const ChainElement& other, const Monomial& m, std::int64_t c);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const;
  ChainElement reduced_mod2() const;
  ChainElement relabeled(const std::vector<int>& variable_map) const;

  friend bool operator==(const ChainElement&, const ChainElement&) = default;

 private:
  Terms terms_;
};

std::string to_string(const ChainElement& c);

}  // namespace spinfloer
