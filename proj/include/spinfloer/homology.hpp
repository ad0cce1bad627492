#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinfloer/grid.hpp"
#include "spinfloer/laurent.hpp"
#include "spinfloer/smith.hpp"

namespace spinfloer {

// Generators of the graded complex split by bigrading. The order inside each
// piece fixes the basis used for the boundary matrices.
struct GradedComplex {
  std::map<Bigrading, std::vector<Permutation>> pieces;
};

GradedComplex graded_complex(const Grid& g);

// Matrix of the graded differential from `source` to `target` (rows index
// target generators, columns source generators).
IntegerMatrix graded_boundary(const Grid& g, const std::vector<Permutation>& source,
                              const std::vector<Permutation>& target);

struct PieceHomology {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1
  // Tilde flavor only: chain dimension and ranks of the adjacent maps.
  int generators = 0;
  int rank_in = 0;
  int rank_out = 0;
};

struct HomologySummary {
  std::string flavor;  // "tilde" or "hat"
  int components = 0;
  std::map<Bigrading, PieceHomology> pieces;
  LaurentPolynomial poincare;
  LaurentPolynomial euler;
  // For each invariant factor d: sum over pieces of (#Z/d) q^M t^A.
  std::map<std::int64_t, LaurentPolynomial> torsion_poincare;

  int total_rank() const;
  bool torsion_free() const;
};

HomologySummary bigraded_homology(const Grid& g, int threads = 1);
HomologySummary bigraded_homology(const Grid& g, const GradedComplex& complex, int threads = 1);

// Divides by prod_i (1 + q^-1 t_i^-1)^(n_i - 1); throws NotDivisible.
HomologySummary hat_reduction(const HomologySummary& tilde, const ComponentData& components);

// Euler characteristic of the chain complex itself, sum of (-1)^M t^A.
LaurentPolynomial chain_euler(const Grid& g);

// Knots: symmetric, Delta(1) = 1. Links: each variable centred where the
// exponent range allows it, highest term positive.
LaurentPolynomial normalize_alexander(const LaurentPolynomial& euler, int components);
LaurentPolynomial alexander_polynomial(const Grid& g, int threads = 1);

}  // namespace spinfloer
