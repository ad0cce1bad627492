#include "spinfloer/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinfloer {

Permutation::Permutation(std::span<const int> images) {
  if (images.size() > static_cast<std::size_t>(kMaxDegree)) {
    throw std::invalid_argument("permutation larger than supported degree " +
                                std::to_string(kMaxDegree));
  }
  n_ = static_cast<std::uint8_t>(images.size());
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t k = 0; k < images.size(); ++k) {
    const int v = images[k];
    if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("images do not form a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
    img_[k] = static_cast<std::uint8_t>(v);
  }
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::span<const int>(images.begin(), images.size())) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(v);
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw std::invalid_argument("transposition index out of range");
  }
  return identity(n).swap_positions(a, b);
}

Permutation Permutation::unrank(int n, std::uint64_t k) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto idx = static_cast<std::size_t>(k / f);
    k %= f;
    out.push_back(pool.at(idx));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(out);
}

std::vector<int> Permutation::images() const {
  return {img_.begin(), img_.begin() + n_};
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.n_ = n_;
  for (int k = 0; k < n_; ++k) r.img_[img_[k]] = static_cast<std::uint8_t>(k);
  return r;
}

Permutation Permutation::swap_positions(int a, int b) const {
  Permutation r = *this;
  std::swap(r.img_[static_cast<std::size_t>(a)], r.img_[static_cast<std::size_t>(b)]);
  return r;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < n_; ++k)
    if (img_[k] != k) return false;
  return true;
}

std::uint64_t Permutation::rank() const {
  std::uint64_t r = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j)
      if (img_[j] < img_[i]) ++smaller;
    r += static_cast<std::uint64_t>(smaller) * factorial(n_ - 1 - i);
  }
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.size());
  for (int k = 0; k < p.size(); ++k) h = h * 31 + static_cast<std::size_t>(p[k]);
  return h;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int k = 0; k < p.size(); ++k) v[static_cast<std::size_t>(k)] = p(q(k));
  return Permutation(v);
}

int signature(const Permutation& p) {
  // n minus the number of cycles
  std::array<bool, kMaxDegree> seen{};
  int cycles = 0;
  for (int k = 0; k < p.size(); ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    ++cycles;
    for (int j = k; !seen[static_cast<std::size_t>(j)]; j = p(j)) seen[static_cast<std::size_t>(j)] = true;
  }
  return (p.size() - cycles) & 1;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::string to_string(const Permutation& p) {
  std::string s;
  for (int k = 0; k < p.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(p[k]);
  }
  return s;
}

Permutation parse_permutation(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> v;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
    v.push_back(value);
  }
  return Permutation(v);
}

}  // namespace spinfloer
