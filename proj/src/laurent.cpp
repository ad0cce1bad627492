#include "spinfloer/laurent.hpp"

#include <algorithm>

namespace spinfloer {

LaurentPolynomial LaurentPolynomial::tilde_factor(int t_vars, int i) {
  if (i < 1 || i > t_vars) throw std::invalid_argument("tilde_factor: variable out of range");
  LaurentPolynomial p(t_vars);
  Key one(static_cast<std::size_t>(t_vars + 1), 0);
  p.add(one, 1);
  Key m = one;
  m[0] = -1;
  m[static_cast<std::size_t>(i)] = -2;
  p.add(m, 1);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(int t_vars, std::int64_t c) {
  LaurentPolynomial p(t_vars);
  p.add(Key(static_cast<std::size_t>(t_vars + 1), 0), c);
  return p;
}

void LaurentPolynomial::check(const Key& key) const {
  if (key.size() != static_cast<std::size_t>(t_vars_ + 1)) throw std::invalid_argument("exponent key size mismatch");
}

void LaurentPolynomial::add(int q, const std::vector<int>& t2, std::int64_t c) {
  Key k;
  k.reserve(t2.size() + 1);
  k.push_back(q);
  k.insert(k.end(), t2.begin(), t2.end());
  add(k, c);
}

void LaurentPolynomial::add(const Key& key, std::int64_t c) {
  check(key);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPolynomial::coefficient(const Key& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  if (o.t_vars_ != t_vars_) throw std::invalid_argument("variable count mismatch");
  LaurentPolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const { return *this + o.negated(); }

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (o.t_vars_ != t_vars_) throw std::invalid_argument("variable count mismatch");
  LaurentPolynomial r(t_vars_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      Key k = k1;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += k2[i];
      r.add(k, c1 * c2);
    }
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Key& delta) const {
  check(delta);
  LaurentPolynomial r(t_vars_);
  for (const auto& [k, c] : terms_) {
    Key s = k;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += delta[i];
    r.add(s, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::negated() const {
  LaurentPolynomial r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::divide_tilde_factor(int i) const {
  if (i < 1 || i > t_vars_) throw std::invalid_argument("divide_tilde_factor: variable out of range");
  const auto ti = static_cast<std::size_t>(i);
  // P = (1 + m) Q with m = q^-1 t_i^-1. Peel off the term with the largest
  // t_i exponent (ties broken by the full key): it must be a term of Q.
  auto leading = [ti](const std::map<Key, std::int64_t>& terms) {
    auto best = terms.begin();
    for (auto it = terms.begin(); it != terms.end(); ++it) {
      if (it->first[ti] > best->first[ti] || (it->first[ti] == best->first[ti] && it->first > best->first)) best = it;
    }
    return *best;
  };
  // Every term of Q times m stays at or above the lowest t_i exponent of P.
  int floor_exponent = 0;
  if (!terms_.empty()) {
    floor_exponent = terms_.begin()->first[ti];
    for (const auto& [k, c] : terms_) floor_exponent = std::min(floor_exponent, k[ti]);
  }

  LaurentPolynomial rest = *this;
  LaurentPolynomial quotient(t_vars_);
  while (!rest.is_zero()) {
    const auto [key, c] = leading(rest.terms_);
    if (key[ti] - 2 < floor_exponent) {
      throw NotDivisible("polynomial is not divisible by (1 + q^-1 t" + std::to_string(i) + "^-1)");
    }
    quotient.add(key, c);
    rest.add(key, -c);
    Key m = key;
    m[0] -= 1;
    m[ti] -= 2;
    rest.add(m, -c);
  }
  return quotient;
}

LaurentPolynomial LaurentPolynomial::at_q_minus_one() const {
  LaurentPolynomial r(t_vars_);
  for (const auto& [k, c] : terms_) {
    Key s = k;
    s[0] = 0;
    r.add(s, (k[0] % 2 == 0) ? c : -c);
  }
  return r;
}

std::int64_t LaurentPolynomial::total() const {
  std::int64_t s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

namespace {

std::string power(const std::string& var, int e, bool halved) {
  if (halved) {
    if (e % 2 != 0) return var + "^(" + std::to_string(e) + "/2)";
    e /= 2;
  }
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [key, c] = *it;
    std::vector<std::string> factors;
    if (key[0] != 0) factors.push_back(power("q", key[0], false));
    for (int i = 1; i <= p.t_vars(); ++i) {
      const int e = key[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      factors.push_back(power(p.t_vars() == 1 ? "t" : "t" + std::to_string(i), e, true));
    }
    const std::int64_t mag = c < 0 ? -c : c;
    std::string term;
    if (factors.empty()) {
      term = std::to_string(mag);
    } else {
      if (mag != 1) term = std::to_string(mag) + "*";
      for (std::size_t f = 0; f < factors.size(); ++f) term += (f ? "*" : "") + factors[f];
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace spinfloer
