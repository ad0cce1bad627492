#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinfloer/grid.hpp"
#include "spinfloer/homology.hpp"
#include "spinfloer/polynomial.hpp"
#include "spinfloer/spin_group.hpp"

namespace spinfloer {

class IllegalCommutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadPosition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MoveKind { CyclicUp, CyclicDown, CyclicLeft, CyclicRight, CommuteColumns, CommuteRows, Stabilize, Destabilize };

enum class MarkerType { X, O };
enum class Corner { NW, NE, SW, SE };

// Stabilization splits a marker of type `split` into a 2x2 block holding two
// markers of that type on one diagonal, one of the other type, and an empty
// cell at `empty`. Written "XNW", "OSE", ...
struct StabilizationVariant {
  MarkerType split = MarkerType::X;
  Corner empty = Corner::NW;
  friend bool operator==(const StabilizationVariant&, const StabilizationVariant&) = default;
};

struct MoveSpec {
  MoveKind kind = MoveKind::CyclicUp;
  // CommuteColumns / CommuteRows: index i swaps with i + 1.
  // Stabilize: the row (or column) holding the marker to split.
  int index = 0;
  bool along_row = true;
  StabilizationVariant variant;
  // Destabilize: bottom-left cell of the 2x2 block.
  int col = 0;
  int row = 0;
  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

// Script lines: "cyclic up|down|left|right", "commute cols i", "commute rows j",
// "stabilize row|col <pos> <variant>", "destabilize <col> <row>".
// Throws std::invalid_argument on a malformed line.
MoveSpec parse_move(const std::string& line);
// One move per line; blank lines and '#' comments are skipped.
std::vector<MoveSpec> parse_move_script(const std::string& text);
std::string to_string(const MoveSpec& m);
std::string to_string(const StabilizationVariant& v);

// Throws IllegalCommutation or BadPosition.
GridDiagram apply_move(const GridDiagram& g, const MoveSpec& m);

// Spans of the two columns (rows) are disjoint or nested; touching spans,
// which share an endpoint row (column), are rejected.
bool commutation_is_legal(const GridDiagram& g, const MoveSpec& m);
std::vector<MoveSpec> legal_commutations(const GridDiagram& g);
// Every marker in every variant, located by row.
std::vector<MoveSpec> all_stabilizations(const GridDiagram& g);
std::vector<MoveSpec> legal_destabilizations(const GridDiagram& g);
// Picks one of the available families (cyclic moves, legal commutations,
// stabilizations while n < max_size, destabilizations) uniformly, then a
// uniform move inside it.
MoveSpec random_legal_move(const GridDiagram& g, std::mt19937_64& rng, int max_size = 6);

// sigma = tau_0 tau_1 ... tau_{n-2} lifted, projecting to k -> k + 1 mod n.
SpinElement sigma_lift(int n);

// Generator map for the grid moved one step up: sigma * x.
SpinElement phi_cyclic_vertical(const SpinElement& x);
// Generator map for the horizontal cyclic move:
// (-1)^(eps(sigma) eps(x)) x sigma^-1. Points move one column to the right,
// so it pairs with the cyclic_right move here.
SpinElement phi_cyclic_horizontal(const SpinElement& x);

enum class PhiKind { Vertical, Horizontal };

struct PhiCheck {
  PhiKind kind = PhiKind::Vertical;
  std::int64_t generators = 0;
  std::int64_t chain_mismatches = 0;
  std::optional<Permutation> first_mismatch;
  bool bijective = false;
  // Measured M_H(phi x) - M_G(x) and 2A_H - 2A_G per component of G, and
  // whether they were the same for every generator checked.
  int maslov_shift = 0;
  std::vector<int> alexander2_shift;
  bool shifts_constant = true;
  // O variable of G -> O variable of H; component of G -> component of H (1-based).
  std::vector<int> variable_map;
  std::vector<int> component_map;

  bool ok() const { return chain_mismatches == 0 && bijective && shifts_constant; }
};

// Checks phi o d = d o phi on the minus complex between G and its cyclic
// image. Exhaustive over S_n unless `sample` is given.
PhiCheck check_phi(const GridDiagram& g, PhiKind kind, const std::vector<Permutation>* sample = nullptr);

// Applies phi termwise to a chain of G, relabeling U variables for H.
ChainElement apply_phi(const ChainElement& c, PhiKind kind, const std::vector<int>& variable_map);

struct InvarianceReport {
  HomologySummary tilde1;
  HomologySummary tilde2;
  HomologySummary hat1;
  HomologySummary hat2;
  bool components_match = false;
  bool hat_equal = false;
  // Component i of the first grid corresponds to component_map[i-1] of the
  // second; alexander2_shift[i-1] is 2A_2 - 2A_1 for it.
  std::vector<int> component_map;
  std::vector<int> alexander2_shift;
  // tilde2 / tilde1 = prod_i (1 + q^-1 t_i^-1)^(segment_change[i-1]) up to
  // the same Alexander shift.
  std::vector<int> segment_change;
  bool tilde_relation = false;

  bool ok() const { return components_match && hat_equal && tilde_relation; }
};

InvarianceReport invariance_report(const GridDiagram& g1, const GridDiagram& g2, int threads = 1);

}  // namespace spinfloer
