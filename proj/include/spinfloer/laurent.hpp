#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinfloer {

class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Laurent polynomial in q and t_1..t_l with integer coefficients. Exponent
// keys are {q, 2*e_1, ..., 2*e_l}: t exponents are stored doubled so link
// gradings in (1/2)Z stay exact.
class LaurentPolynomial {
 public:
  using Key = std::vector<int>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(int t_vars) : t_vars_(t_vars) {}

  // (1 + q^-1 t_i^-1), i 1-based
  static LaurentPolynomial tilde_factor(int t_vars, int i);
  static LaurentPolynomial constant(int t_vars, std::int64_t c);

  int t_vars() const { return t_vars_; }
  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(int q, const std::vector<int>& t2, std::int64_t c);
  void add(const Key& key, std::int64_t c);
  std::int64_t coefficient(const Key& key) const;

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial shifted(const Key& delta) const;
  LaurentPolynomial negated() const;

  // Exact quotient by tilde_factor(t_vars, i); throws NotDivisible.
  LaurentPolynomial divide_tilde_factor(int i) const;
  // q -> -1
  LaurentPolynomial at_q_minus_one() const;
  // Sum of coefficients.
  std::int64_t total() const;
  // Evaluation at q = t = 1.
  std::int64_t at_one() const { return total(); }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void check(const Key& key) const;

  int t_vars_ = 0;
  std::map<Key, std::int64_t> terms_;
};

// Canonical text form, terms from the highest exponent key down, e.g.
// "q^-1*t^-1 + 1" (one t variable) or "t1^(1/2)*t2^(-1/2)" for links.
std::string to_string(const LaurentPolynomial& p);

}  // namespace spinfloer
