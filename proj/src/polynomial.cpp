#include "spinfloer/polynomial.hpp"

#include <stdexcept>

namespace spinfloer {

Monomial Monomial::from_exponents(const std::vector<int>& e) {
  if (e.size() > static_cast<std::size_t>(kMaxDegree)) throw std::invalid_argument("too many variables");
  Monomial m(static_cast<int>(e.size()));
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] < 0 || e[k] > 255) throw std::invalid_argument("exponent out of range");
    m.e_[k] = static_cast<std::uint8_t>(e[k]);
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int k = 0; k < n_; ++k) d += e_[static_cast<std::size_t>(k)];
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (n_ != other.n_) throw std::invalid_argument("monomial variable count mismatch");
  Monomial r(n_);
  for (std::size_t k = 0; k < n_; ++k) r.e_[k] = static_cast<std::uint8_t>(e_[k] + other.e_[k]);
  return r;
}

Monomial Monomial::relabeled(const std::vector<int>& mapping) const {
  Monomial r(n_);
  for (std::size_t k = 0; k < n_; ++k) r.e_[static_cast<std::size_t>(mapping.at(k))] = e_[k];
  return r;
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (int k = 0; k < m.variables(); ++k) {
    const int e = m.exponent(k);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += "U" + std::to_string(k + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

void Polynomial::add(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::reduced_mod2() const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (c % 2 != 0) r.terms_.emplace(m, 1);
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += std::to_string(mag);
    } else {
      if (mag != 1) s += std::to_string(mag) + "*";
      s += to_string(m);
    }
  }
  return s;
}

void ChainElement::add(const Permutation& x, const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto& poly = terms_[x];
  poly.add(m, c);
  if (poly.is_zero()) terms_.erase(x);
}

void ChainElement::add_scaled(const ChainElement& other, const Monomial& m, std::int64_t c) {
  for (const auto& [x, poly] : other.terms_)
    for (const auto& [mono, coef] : poly.terms()) add(x, mono * m, coef * c);
}

std::size_t ChainElement::term_count() const {
  std::size_t k = 0;
  for (const auto& [x, poly] : terms_) k += poly.terms().size();
  return k;
}

ChainElement ChainElement::reduced_mod2() const {
  ChainElement r;
  for (const auto& [x, poly] : terms_) {
    auto p = poly.reduced_mod2();
    if (!p.is_zero()) r.terms_.emplace(x, std::move(p));
  }
  return r;
}

ChainElement ChainElement::relabeled(const std::vector<int>& variable_map) const {
  ChainElement r;
  for (const auto& [x, poly] : terms_)
    for (const auto& [m, c] : poly.terms()) r.add(x, m.relabeled(variable_map), c);
  return r;
}

std::string to_string(const ChainElement& c) {
  if (c.is_zero()) return "0";
  std::string s;
  for (const auto& [x, poly] : c.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(poly) + ")*[" + to_string(x) + "]";
  }
  return s;
}

}  // namespace spinfloer
