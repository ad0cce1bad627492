#include "spinfloer/spin_group.hpp"

#include <stdexcept>
#include <utility>

namespace spinfloer {

GeneratorWord canonical_word(const Permutation& p) {
  const int n = p.size();
  std::vector<int> cur = p.images();
  std::vector<TranspositionLabel> reversed;
  for (int m = n - 1; m >= 1; --m) {
    int i = 0;
    while (cur[static_cast<std::size_t>(i)] != m) ++i;
    if (i != m) {
      reversed.push_back({i, m});
      std::swap(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(m)]);
    }
  }
  return {{reversed.rbegin(), reversed.rend()}, 0};
}

SpinElement section(const Permutation& p) { return {p, 0}; }

SpinElement spin_identity(int n) { return {Permutation::identity(n), 0}; }

SpinElement spin_central(int n) { return {Permutation::identity(n), 1}; }

SpinElement lift(int n, TranspositionLabel t) {
  if (t.a == t.b) throw std::invalid_argument("lift: label indices must differ");
  return {Permutation::transposition(n, t.a, t.b), t.a > t.b ? 1 : 0};
}

// Works top-down through the canonical factors F_m = lift(i_m, m) of s(x).
// At level m the pending label is pushed left through F_m with
//   F t F^{-1} = z t'   (conjugation by a lifted transposition),
// and a label that lands on index m is merged with F_m using
//   lift(c,m) lift(i,m) = z lift(i,c) lift(c,m),   lift(i,m)^2 = z.
// Only the exponent of z is tracked; the permutation part is x * tau_{a,b}.
SpinElement right_mul_transposition(const SpinElement& g, TranspositionLabel t) {
  const int n = g.perm.size();
  if (t.a == t.b || t.a < 0 || t.b < 0 || t.a >= n || t.b >= n) {
    throw std::invalid_argument("right_mul_transposition: invalid label");
  }
  int u = g.bit;
  int a = t.a;
  int b = t.b;
  if (a > b) {
    std::swap(a, b);
    u ^= 1;
  }
  std::array<int, kMaxDegree> cur{};
  std::array<int, kMaxDegree> pos{};
  for (int k = 0; k < n; ++k) {
    cur[static_cast<std::size_t>(k)] = g.perm[k];
    pos[static_cast<std::size_t>(g.perm[k])] = k;
  }
  auto swap_cur = [&](int p, int q) {
    std::swap(cur[static_cast<std::size_t>(p)], cur[static_cast<std::size_t>(q)]);
    pos[static_cast<std::size_t>(cur[static_cast<std::size_t>(p)])] = p;
    pos[static_cast<std::size_t>(cur[static_cast<std::size_t>(q)])] = q;
  };
  auto swap_index = [](int k, int i, int m) { return k == i ? m : (k == m ? i : k); };

  bool absorbed = false;
  for (int m = n - 1; m >= 1 && !absorbed; --m) {
    const int i = pos[static_cast<std::size_t>(m)];
    if (i == m) {
      // F_m trivial; a label touching m becomes the new top factor.
      if (b == m) absorbed = true;
      continue;
    }
    u ^= 1;
    int a2 = swap_index(a, i, m);
    int b2 = swap_index(b, i, m);
    swap_cur(i, m);
    if (a2 != m && b2 != m) {
      a = a2;
      b = b2;
      if (a > b) {
        std::swap(a, b);
        u ^= 1;
      }
      continue;
    }
    int c = 0;
    if (a2 == m) {
      u ^= 1;  // lift(m,c) = z lift(c,m)
      c = b2;
    } else {
      c = a2;
    }
    if (c == i) {
      u ^= 1;
      absorbed = true;
      continue;
    }
    u ^= 1;
    a = i;
    b = c;
    if (a > b) {
      std::swap(a, b);
      u ^= 1;
    }
  }
  if (!absorbed) throw std::logic_error("right_mul_transposition: label not absorbed");
  return {g.perm.swap_positions(t.a, t.b), u};
}

SpinElement multiply(const SpinElement& g, const SpinElement& h) {
  if (g.perm.size() != h.perm.size()) throw std::invalid_argument("multiply: size mismatch");
  SpinElement r = g;
  for (const auto& f : canonical_word(h.perm).factors) r = right_mul_transposition(r, f);
  r.bit ^= h.bit;
  return r;
}

SpinElement inverse(const SpinElement& g) {
  // (F_0 ... F_k)^{-1} = z^{eps(x)} F_k ... F_0
  const int n = g.perm.size();
  const auto word = canonical_word(g.perm);
  SpinElement r = spin_identity(n);
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
    r = right_mul_transposition(r, *it);
  }
  r.bit ^= signature(g.perm) ^ g.bit;
  return r;
}

SpinElement evaluate(int n, const GeneratorWord& w) {
  SpinElement r = spin_identity(n);
  for (const auto& f : w.factors) r = right_mul_transposition(r, f);
  r.bit ^= (w.zexp & 1);
  return r;
}

int cocycle(const Permutation& p, const Permutation& q) {
  return multiply(section(p), section(q)).bit ? -1 : 1;
}

Conjugation conjugate_transposition(const SpinElement& g, TranspositionLabel t) {
  if (t.a == t.b) throw std::invalid_argument("conjugate_transposition: invalid label");
  return {signature(g.perm), {g.perm(t.a), g.perm(t.b)}};
}

}  // namespace spinfloer
