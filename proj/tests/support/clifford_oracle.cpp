#include "clifford_oracle.hpp"

#include <bit>
#include <stdexcept>

namespace spinfloer::testing {

namespace {

// e_A e_B = sign * e_{A xor B}
int blade_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    const auto low = static_cast<unsigned>(std::countr_zero(rest));
    swaps += std::popcount(a >> (low + 1));
  }
  swaps += std::popcount(a & b);  // e_k^2 = -1
  return (swaps & 1) ? -1 : 1;
}

Permutation word_permutation(int n, const GeneratorWord& w) {
  Permutation p = Permutation::identity(n);
  for (const auto& f : w.factors) p = p.swap_positions(f.a, f.b);
  return p;
}

}  // namespace

Multivector::Multivector(int n) : n_(n), coef_(std::size_t{1} << n, 0) {}

Multivector Multivector::scalar(int n, std::int64_t value) {
  Multivector m(n);
  m.coef_[0] = value;
  return m;
}

bool Multivector::is_zero() const {
  for (auto c : coef_)
    if (c != 0) return false;
  return true;
}

Multivector Multivector::times_root(int a, int b) const {
  Multivector r(n_);
  const std::uint32_t ea = 1u << a;
  const std::uint32_t eb = 1u << b;
  for (std::uint32_t blade = 0; blade < coef_.size(); ++blade) {
    const std::int64_t c = coef_[blade];
    if (c == 0) continue;
    r.coef_[blade ^ ea] += c * blade_sign(blade, ea);
    r.coef_[blade ^ eb] -= c * blade_sign(blade, eb);
  }
  return r;
}

Multivector Multivector::negated() const {
  Multivector r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

Multivector clifford_image(int n, const GeneratorWord& w) {
  if (n > kCliffordMaxDegree) throw std::domain_error("clifford oracle: dimension too large");
  Multivector m = Multivector::scalar(n, (w.zexp & 1) ? -1 : 1);
  for (const auto& f : w.factors) m = m.times_root(f.a, f.b);
  return m;
}

int clifford_oracle_bit(int n, const GeneratorWord& w) {
  const Multivector word_image = clifford_image(n, w);
  const GeneratorWord canonical = canonical_word(word_permutation(n, w));
  const Multivector canon_image = clifford_image(n, canonical);

  // word = sign * 2^(k/2) * canonical, with k the length difference
  const auto lw = static_cast<long>(w.factors.size());
  const auto lc = static_cast<long>(canonical.factors.size());
  if ((lw - lc) % 2 != 0) throw std::logic_error("clifford oracle: parity mismatch");
  const long half = (lw - lc) / 2;
  const Multivector& big = half >= 0 ? word_image : canon_image;
  const Multivector& small = half >= 0 ? canon_image : word_image;
  const std::int64_t scale = std::int64_t{1} << (half >= 0 ? half : -half);

  int sign = 0;
  for (std::uint32_t blade = 0; blade < (1u << n); ++blade) {
    const std::int64_t s = small.coefficient(blade) * scale;
    const std::int64_t g = big.coefficient(blade);
    if (s == 0 && g == 0) continue;
    int here = 0;
    if (g == s) here = 1;
    else if (g == -s) here = -1;
    if (here == 0 || (sign != 0 && here != sign)) {
      throw std::logic_error("clifford oracle: images are not proportional");
    }
    sign = here;
  }
  if (sign == 0) throw std::logic_error("clifford oracle: zero image");
  return sign < 0 ? 1 : 0;
}

}  // namespace spinfloer::testing
