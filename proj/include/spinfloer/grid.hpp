#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinfloer/permutation.hpp"
#include "spinfloer/spin_group.hpp"

namespace spinfloer {

enum class GridErrorKind { NotAPermutation, SharedCell, TooSmall, Malformed };

std::string to_string(GridErrorKind kind);

class GridError : public std::runtime_error {
 public:
  GridError(GridErrorKind kind, const std::string& what)
      : std::runtime_error(to_string(kind) + ": " + what), kind_(kind) {}
  GridErrorKind kind() const { return kind_; }

 private:
  GridErrorKind kind_;
};

// o_rows[i] / x_rows[i]: row of the O / X marker in column i. Origin at the
// bottom-left; coordinates in [0,n).
struct GridDiagram {
  int n = 0;
  std::vector<int> o_rows;
  std::vector<int> x_rows;
  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;
};

// Throws GridError.
void validate(const GridDiagram& g);

// Components are numbered 1..l in order of their leftmost O. O markers get
// variable numbers 0..n-1: the leftmost O of each component first (so
// variables 0..l-1 sit on distinct components), then the rest by column.
struct ComponentData {
  int count = 0;
  std::vector<int> comp_of_o;   // per column, 1-based
  std::vector<int> comp_of_x;   // per column, 1-based
  std::vector<int> segments;    // n_i, indexed by component - 1
  std::vector<int> o_variable;  // per column: index of U_{O} for that marker
};

ComponentData trace_components(const GridDiagram& g);

// Points with doubled coordinates: lattice points (i, x(i)) become (2i, 2x(i))
// and cell centers (c+1/2, r+1/2) become (2c+1, 2r+1).
struct Point2 {
  int x = 0;
  int y = 0;
};

// A formal integer combination of points; plain sets have unit weights.
struct FormalSum {
  std::vector<Point2> points;
  std::vector<long long> weights;

  void add(Point2 p, long long w) {
    points.push_back(p);
    weights.push_back(w);
  }
  void append(const FormalSum& other, long long scale);
};

FormalSum generator_points(const Permutation& x);

long long count_pairs_I(const FormalSum& a, const FormalSum& b);
// 2 * J(A,B) = I(A,B) + I(B,A), extended bilinearly.
long long count_pairs_J2(const FormalSum& a, const FormalSum& b);

struct Bigrading {
  int maslov = 0;
  std::vector<int> alexander2;  // 2 * A_i
  friend bool operator==(const Bigrading&, const Bigrading&) = default;
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

// Cyclic run of `length` cells starting at `start` on Z/n.
struct CyclicInterval {
  int start = 0;
  int length = 0;
  int n = 0;
  bool contains(int k) const { return ((k - start) % n + n) % n < length; }
  // Lattice lines strictly between the two boundary lines.
  bool contains_interior_line(int k) const {
    const int d = ((k - start) % n + n) % n;
    return d >= 1 && d < length;
  }
};

struct RectangleInstance {
  Permutation base;
  TranspositionLabel label;
  CyclicInterval cols;
  CyclicInterval rows;
  Permutation target() const { return base.swap_positions(label.a, label.b); }
};

struct MarkerCounts {
  std::vector<int> o_counts;  // indexed by O variable number
  std::vector<int> x_counts;  // indexed by column of the X marker
  int o_total() const;
  int x_total() const;
};

// A validated diagram together with its traced components and a cell table.
class Grid {
 public:
  explicit Grid(GridDiagram diagram);

  int size() const { return d_.n; }
  const GridDiagram& diagram() const { return d_; }
  const ComponentData& components() const { return comp_; }

  FormalSum o_points() const;
  FormalSum x_points() const;
  FormalSum o_points_of(int component) const;
  FormalSum x_points_of(int component) const;

  // M_S(x); the default uses the O markers.
  int maslov(const Permutation& x) const;
  int maslov(const Permutation& x, const FormalSum& s) const;
  // 2 * A_i(x) for each component.
  std::vector<int> alexander2(const Permutation& x) const;
  Bigrading bigrading(const Permutation& x) const;

  // Both rectangles for every column pair, targets x * tau_{a,b}.
  std::vector<std::pair<TranspositionLabel, Permutation>> rectangles_from(const Permutation& x) const;
  RectangleInstance realize_rectangle(const Permutation& x, TranspositionLabel label) const;
  MarkerCounts marker_counts(const RectangleInstance& r) const;

  // -1 for an empty cell, else the O variable / X column occupying it.
  int o_at(int col, int row) const { return o_cell_[static_cast<std::size_t>(row * d_.n + col)]; }
  bool x_at(int col, int row) const { return d_.x_rows[static_cast<std::size_t>(col)] == row; }

 private:
  GridDiagram d_;
  ComponentData comp_;
  std::vector<int> o_cell_;
};

bool is_empty(const RectangleInstance& r);
bool is_horizontally_torn(const RectangleInstance& r);

// Uniformly random valid diagram of size n.
GridDiagram random_grid(int n, std::mt19937_64& rng);
// Every valid diagram of size n (n! times the derangement count).
std::vector<GridDiagram> all_grids(int n);

}  // namespace spinfloer
