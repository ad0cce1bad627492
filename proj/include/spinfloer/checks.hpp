#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "spinfloer/grid.hpp"
#include "spinfloer/sign_complex.hpp"

namespace spinfloer {

// Outcome of one property suite. `cases` counts the items examined (generators,
// rectangles, triples, ...); `detail` names the first failure.
struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string detail;
  bool passed() const { return failures == 0; }
  void fail(const std::string& witness) {
    if (failures++ == 0) detail = witness;
  }
};

// d(d(x)) = 0 over the integers in the minus complex, every generator.
CheckResult check_d_squared(const Grid& g);
// The same for the graded (marker-free) differential.
CheckResult check_graded_d_squared(const Grid& g);
// Mod 2 reduction of the spin differential equals the unsigned one, termwise.
CheckResult check_mod2_reduction(const Grid& g);
// differential_signed with the given cocycle order equals the spin differential.
CheckResult check_signed_matches_spin(const Grid& g, CocycleOrder order);
// (Sq), (V), (H) for the sign assignment with the given cocycle order.
CheckResult check_sign_axioms(const Grid& g, CocycleOrder order);
// For every empty rectangle r: x -> y, M(x) - M(y) = 1 - 2 O(r) and
// A_j(x) - A_j(y) = X_j(r) - O_j(r).
CheckResult check_grading_identities(const Grid& g);

// z^2 = 1, z central, t_ij = z t_ji, t_ij^2 = z, disjoint lifts anticommute,
// t_ij t_jk t_ij = t_jk t_ij t_jk = t_ik; all labels of size n.
CheckResult check_spin_relations(int n);
// c(y,w) c(xy,w) c(x,yw) c(x,y) = 1; exhaustive when samples == 0.
CheckResult check_cocycle_condition(int n, std::int64_t samples, std::mt19937_64& rng);
// Closure of {t_i, z} has 2 n! elements.
CheckResult check_group_order(int n);

}  // namespace spinfloer
