#pragma once

#include <vector>

#include "spinfloer/permutation.hpp"

namespace spinfloer {

// Ordered column pair naming a lifted transposition. (a,b) and (b,a) are
// different labels: the lift of (b,a) is z times the lift of (a,b).
struct TranspositionLabel {
  int a = 0;
  int b = 0;
  friend bool operator==(const TranspositionLabel&, const TranspositionLabel&) = default;
  friend auto operator<=>(const TranspositionLabel&, const TranspositionLabel&) = default;
};

// z^bit * s(perm), the normal form of an element of the spin extension.
struct SpinElement {
  Permutation perm;
  int bit = 0;
  friend bool operator==(const SpinElement&, const SpinElement&) = default;
  friend auto operator<=>(const SpinElement&, const SpinElement&) = default;
};

// z^zexp * t_1 * t_2 * ... (lifted transpositions multiplied left to right).
struct GeneratorWord {
  std::vector<TranspositionLabel> factors;
  int zexp = 0;
};

// Factors (i_k, k), i_k < k, of x = tau_{i_0,0} ... tau_{i_{n-1},n-1};
// identity factors are dropped.
GeneratorWord canonical_word(const Permutation& p);

SpinElement section(const Permutation& p);
SpinElement spin_identity(int n);
// The central element z.
SpinElement spin_central(int n);
SpinElement lift(int n, TranspositionLabel t);

// Normal form of g * lift(t). Throws std::invalid_argument on a bad label.
SpinElement right_mul_transposition(const SpinElement& g, TranspositionLabel t);

SpinElement multiply(const SpinElement& g, const SpinElement& h);
SpinElement inverse(const SpinElement& g);

// Evaluates a word by folding right multiplications onto the identity.
SpinElement evaluate(int n, const GeneratorWord& w);

// s(p) s(q) = c(p,q) s(pq), returned as +1 or -1.
int cocycle(const Permutation& p, const Permutation& q);

struct Conjugation {
  int bitflip = 0;
  TranspositionLabel label;
};

// g * lift(t) * g^{-1} = z^bitflip * lift(label).
Conjugation conjugate_transposition(const SpinElement& g, TranspositionLabel t);

}  // namespace spinfloer
