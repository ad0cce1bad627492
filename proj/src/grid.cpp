#include "spinfloer/grid.hpp"

#include <algorithm>
#include <numeric>

namespace spinfloer {

std::string to_string(GridErrorKind kind) {
  switch (kind) {
    case GridErrorKind::NotAPermutation: return "NotAPermutation";
    case GridErrorKind::SharedCell: return "SharedCell";
    case GridErrorKind::TooSmall: return "TooSmall";
    case GridErrorKind::Malformed: return "Malformed";
  }
  return "Unknown";
}

namespace {

bool is_permutation_of_range(const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int r : v) {
    if (r < 0 || r >= n || seen[static_cast<std::size_t>(r)]) return false;
    seen[static_cast<std::size_t>(r)] = true;
  }
  return true;
}

}  // namespace

void validate(const GridDiagram& g) {
  if (g.n < 2) throw GridError(GridErrorKind::TooSmall, "grid size must be at least 2");
  if (g.n > kMaxDegree) {
    throw GridError(GridErrorKind::TooSmall, "grid size exceeds " + std::to_string(kMaxDegree));
  }
  if (!is_permutation_of_range(g.o_rows, g.n)) {
    throw GridError(GridErrorKind::NotAPermutation, "O rows are not a permutation");
  }
  if (!is_permutation_of_range(g.x_rows, g.n)) {
    throw GridError(GridErrorKind::NotAPermutation, "X rows are not a permutation");
  }
  for (int i = 0; i < g.n; ++i) {
    if (g.o_rows[static_cast<std::size_t>(i)] == g.x_rows[static_cast<std::size_t>(i)]) {
      throw GridError(GridErrorKind::SharedCell,
                      "column " + std::to_string(i) + " has O and X in the same cell");
    }
  }
}

ComponentData trace_components(const GridDiagram& g) {
  const auto n = static_cast<std::size_t>(g.n);
  std::vector<int> x_col_of_row(n);
  for (std::size_t c = 0; c < n; ++c) x_col_of_row[static_cast<std::size_t>(g.x_rows[c])] = static_cast<int>(c);

  // O in column c -> along its row to the X -> down that X's column to its O.
  ComponentData d;
  d.comp_of_o.assign(n, 0);
  d.comp_of_x.assign(n, 0);
  d.o_variable.assign(n, -1);
  std::vector<int> leaders;
  for (std::size_t c = 0; c < n; ++c) {
    if (d.comp_of_o[c] != 0) continue;
    const int id = ++d.count;
    leaders.push_back(static_cast<int>(c));
    int size = 0;
    for (auto k = c; d.comp_of_o[k] == 0;
         k = static_cast<std::size_t>(x_col_of_row[static_cast<std::size_t>(g.o_rows[k])])) {
      d.comp_of_o[k] = id;
      d.comp_of_x[k] = id;
      ++size;
    }
    d.segments.push_back(size);
  }
  int next = 0;
  for (int c : leaders) d.o_variable[static_cast<std::size_t>(c)] = next++;
  for (std::size_t c = 0; c < n; ++c)
    if (d.o_variable[c] < 0) d.o_variable[c] = next++;
  return d;
}

void FormalSum::append(const FormalSum& other, long long scale) {
  for (std::size_t k = 0; k < other.points.size(); ++k) add(other.points[k], other.weights[k] * scale);
}

FormalSum generator_points(const Permutation& x) {
  FormalSum s;
  for (int i = 0; i < x.size(); ++i) s.add({2 * i, 2 * x(i)}, 1);
  return s;
}

long long count_pairs_I(const FormalSum& a, const FormalSum& b) {
  long long total = 0;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    for (std::size_t j = 0; j < b.points.size(); ++j) {
      if (a.points[i].x < b.points[j].x && a.points[i].y < b.points[j].y) {
        total += a.weights[i] * b.weights[j];
      }
    }
  }
  return total;
}

long long count_pairs_J2(const FormalSum& a, const FormalSum& b) {
  return count_pairs_I(a, b) + count_pairs_I(b, a);
}

int MarkerCounts::o_total() const { return std::accumulate(o_counts.begin(), o_counts.end(), 0); }
int MarkerCounts::x_total() const { return std::accumulate(x_counts.begin(), x_counts.end(), 0); }

Grid::Grid(GridDiagram diagram) : d_(std::move(diagram)) {
  validate(d_);
  comp_ = trace_components(d_);
  o_cell_.assign(static_cast<std::size_t>(d_.n * d_.n), -1);
  for (int c = 0; c < d_.n; ++c) {
    o_cell_[static_cast<std::size_t>(d_.o_rows[static_cast<std::size_t>(c)] * d_.n + c)] =
        comp_.o_variable[static_cast<std::size_t>(c)];
  }
}

FormalSum Grid::o_points() const { return o_points_of(0); }
FormalSum Grid::x_points() const { return x_points_of(0); }

// component 0 selects every marker
FormalSum Grid::o_points_of(int component) const {
  FormalSum s;
  for (int c = 0; c < d_.n; ++c) {
    if (component == 0 || comp_.comp_of_o[static_cast<std::size_t>(c)] == component) {
      s.add({2 * c + 1, 2 * d_.o_rows[static_cast<std::size_t>(c)] + 1}, 1);
    }
  }
  return s;
}

FormalSum Grid::x_points_of(int component) const {
  FormalSum s;
  for (int c = 0; c < d_.n; ++c) {
    if (component == 0 || comp_.comp_of_x[static_cast<std::size_t>(c)] == component) {
      s.add({2 * c + 1, 2 * d_.x_rows[static_cast<std::size_t>(c)] + 1}, 1);
    }
  }
  return s;
}

int Grid::maslov(const Permutation& x) const { return maslov(x, o_points()); }

int Grid::maslov(const Permutation& x, const FormalSum& s) const {
  FormalSum diff = generator_points(x);
  diff.append(s, -1);
  // J(D,D) = I(D,D) for a single formal sum D
  return static_cast<int>(count_pairs_I(diff, diff)) + 1;
}

std::vector<int> Grid::alexander2(const Permutation& x) const {
  FormalSum left = generator_points(x);
  for (auto& w : left.weights) w *= 2;
  left.append(x_points(), -1);
  left.append(o_points(), -1);
  std::vector<int> out;
  for (int i = 1; i <= comp_.count; ++i) {
    FormalSum right = x_points_of(i);
    right.append(o_points_of(i), -1);
    // 2 A_i = J(2x - X - O, X_i - O_i) - (n_i - 1)
    const long long j2 = count_pairs_J2(left, right);
    if (j2 % 2 != 0) throw std::logic_error("alexander2: odd pairing");
    out.push_back(static_cast<int>(j2 / 2) - (comp_.segments[static_cast<std::size_t>(i - 1)] - 1));
  }
  return out;
}

Bigrading Grid::bigrading(const Permutation& x) const { return {maslov(x), alexander2(x)}; }

std::vector<std::pair<TranspositionLabel, Permutation>> Grid::rectangles_from(const Permutation& x) const {
  std::vector<std::pair<TranspositionLabel, Permutation>> out;
  out.reserve(static_cast<std::size_t>(d_.n * (d_.n - 1)));
  for (int a = 0; a < d_.n; ++a) {
    for (int b = a + 1; b < d_.n; ++b) {
      const Permutation y = x.swap_positions(a, b);
      out.emplace_back(TranspositionLabel{a, b}, y);
      out.emplace_back(TranspositionLabel{b, a}, y);
    }
  }
  return out;
}

RectangleInstance Grid::realize_rectangle(const Permutation& x, TranspositionLabel label) const {
  const int n = d_.n;
  if (x.size() != n || label.a == label.b || label.a < 0 || label.b < 0 || label.a >= n ||
      label.b >= n) {
    throw std::invalid_argument("realize_rectangle: invalid generator or label");
  }
  const int width = ((label.b - label.a) % n + n) % n;
  const int height = ((x(label.b) - x(label.a)) % n + n) % n;
  return {x, label, {label.a, width, n}, {x(label.a), height, n}};
}

MarkerCounts Grid::marker_counts(const RectangleInstance& r) const {
  MarkerCounts m;
  m.o_counts.assign(static_cast<std::size_t>(d_.n), 0);
  m.x_counts.assign(static_cast<std::size_t>(d_.n), 0);
  for (int k = 0; k < r.cols.length; ++k) {
    const int c = (r.cols.start + k) % d_.n;
    const auto cu = static_cast<std::size_t>(c);
    if (r.rows.contains(d_.o_rows[cu])) ++m.o_counts[static_cast<std::size_t>(comp_.o_variable[cu])];
    if (r.rows.contains(d_.x_rows[cu])) ++m.x_counts[cu];
  }
  return m;
}

bool is_empty(const RectangleInstance& r) {
  for (int k = 0; k < r.base.size(); ++k) {
    if (k == r.label.a || k == r.label.b) continue;
    if (r.cols.contains_interior_line(k) && r.rows.contains_interior_line(r.base(k))) return false;
  }
  return true;
}

bool is_horizontally_torn(const RectangleInstance& r) { return r.label.a > r.label.b; }

GridDiagram random_grid(int n, std::mt19937_64& rng) {
  GridDiagram g;
  g.n = n;
  g.o_rows.resize(static_cast<std::size_t>(n));
  std::iota(g.o_rows.begin(), g.o_rows.end(), 0);
  std::shuffle(g.o_rows.begin(), g.o_rows.end(), rng);
  g.x_rows = g.o_rows;
  for (;;) {
    std::shuffle(g.x_rows.begin(), g.x_rows.end(), rng);
    bool clash = false;
    for (std::size_t i = 0; i < g.x_rows.size(); ++i) clash = clash || g.x_rows[i] == g.o_rows[i];
    if (!clash) return g;
  }
}

std::vector<GridDiagram> all_grids(int n) {
  std::vector<GridDiagram> out;
  const auto perms = all_permutations(n);
  for (const auto& o : perms) {
    for (const auto& x : perms) {
      bool clash = false;
      for (int i = 0; i < n && !clash; ++i) clash = o(i) == x(i);
      if (!clash) out.push_back({n, o.images(), x.images()});
    }
  }
  return out;
}

}  // namespace spinfloer
