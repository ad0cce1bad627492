#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinfloer/grid.hpp"
#include "spinfloer/polynomial.hpp"
#include "spinfloer/spin_group.hpp"

namespace spinfloer {

enum class Flavor { Minus, TildeGraded, Mod2Minus, Mod2Unsigned };

std::string to_string(Flavor f);

// One empty rectangle leaving a generator, with everything the differentials
// need: its O monomial, marker totals and the spin sign of s(x) * lift(label).
struct RectangleTerm {
  TranspositionLabel label;
  Permutation target;
  Monomial monomial;
  int o_total = 0;
  int x_total = 0;
  int spin_sign = 1;
};

std::vector<RectangleTerm> empty_rectangles(const Grid& g, const Permutation& x);

ChainElement differential_minus(const Grid& g, const SpinElement& x);
// Linear extension over a chain.
ChainElement differential_minus(const Grid& g, const ChainElement& c);

// Rectangles free of every O and X marker; preserves the Alexander grading.
ChainElement graded_differential(const Grid& g, const SpinElement& x);
ChainElement graded_differential(const Grid& g, const ChainElement& c);

ChainElement unsigned_differential_mod2(const Grid& g, const Permutation& x);

ChainElement differential(const Grid& g, const SpinElement& x, Flavor flavor);

// Which argument order is used for the cocycle in S(r) = eps(r) * c(., .),
// with y = x * tau the target of r.
enum class CocycleOrder {
  GeneratorFirst,      // c(x, x^{-1} y)
  TranspositionFirst,  // c(x^{-1} y, x)
};

std::string to_string(CocycleOrder o);

// Throws std::invalid_argument if the rectangle is not empty.
int sign_assignment(const Grid& g, const Permutation& x, TranspositionLabel label,
                    CocycleOrder order = CocycleOrder::GeneratorFirst);

ChainElement differential_signed(const Grid& g, const Permutation& x,
                                 CocycleOrder order = CocycleOrder::GeneratorFirst);

using SignFunction = std::function<int(const Permutation&, TranspositionLabel)>;

SignFunction spin_sign_function(const Grid& g, CocycleOrder order);

struct SignViolation {
  std::string axiom;  // "Sq", "V", "H" or "Sq-structure"
  Permutation start;
  std::vector<TranspositionLabel> labels;
};

struct SignAxiomReport {
  std::int64_t squares = 0;
  std::int64_t vertical_annuli = 0;
  std::int64_t horizontal_annuli = 0;
  std::int64_t violation_count = 0;
  std::vector<SignViolation> violations;  // first few witnesses
  bool ok() const { return violation_count == 0; }
};

SignAxiomReport check_sign_axioms(const Grid& g, const SignFunction& s);

struct CoboundaryResult {
  bool consistent = false;
  int graph_components = 0;
  // Indexed by Permutation::rank(); +1 at each component's first vertex.
  std::vector<int> gauge;
  std::vector<int> component_of;
  std::optional<std::pair<Permutation, TranspositionLabel>> witness;
};

// Looks for f with s1(r) = f(x) f(y) s2(r) on every empty rectangle r: x -> y.
CoboundaryResult check_coboundary_equivalence(const Grid& g, const SignFunction& s1,
                                              const SignFunction& s2);

}  // namespace spinfloer
