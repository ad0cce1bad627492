#include "mod2_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spinfloer::testing {

namespace {

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Cells of the torus rectangle with lower-left lattice corner (c0, r0) and
// upper-right corner (c1, r1), walking right and up with wrap-around.
std::vector<std::pair<int, int>> rectangle_cells(int n, int c0, int r0, int c1, int r1) {
  std::vector<std::pair<int, int>> cells;
  for (int c = c0; c != c1; c = (c + 1) % n)
    for (int r = r0; r != r1; r = (r + 1) % n) cells.emplace_back(c, r);
  return cells;
}

bool strictly_inside(int n, int lo, int hi, int v) {
  for (int k = (lo + 1) % n; k != hi; k = (k + 1) % n)
    if (k == v) return true;
  return false;
}

// Targets of the marker-free empty rectangles out of x, with multiplicity.
std::vector<std::vector<int>> graded_targets(const GridDiagram& d, const std::vector<int>& x) {
  const int n = d.n;
  std::vector<std::vector<int>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) {
        if (k == a || k == b) continue;
        if (strictly_inside(n, a, b, k) && strictly_inside(n, x[static_cast<std::size_t>(a)],
                                                          x[static_cast<std::size_t>(b)], x[static_cast<std::size_t>(k)]))
          ok = false;
      }
      for (const auto& [c, r] : rectangle_cells(n, a, x[static_cast<std::size_t>(a)], b, x[static_cast<std::size_t>(b)])) {
        if (d.o_rows[static_cast<std::size_t>(c)] == r || d.x_rows[static_cast<std::size_t>(c)] == r) ok = false;
      }
      if (!ok) continue;
      auto y = x;
      std::swap(y[static_cast<std::size_t>(a)], y[static_cast<std::size_t>(b)]);
      out.push_back(std::move(y));
    }
  }
  return out;
}

// Rank over Z/2 of a dense 0/1 matrix given as rows of 64-bit words.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int cols) {
  int rank = 0;
  const auto nrows = rows.size();
  for (int c = 0; c < cols && static_cast<std::size_t>(rank) < nrows; ++c) {
    const auto word = static_cast<std::size_t>(c / 64);
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < nrows && !(rows[pivot][word] & bit)) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r != static_cast<std::size_t>(rank) && (rows[r][word] & bit)) {
        for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[static_cast<std::size_t>(rank)][w];
      }
    }
    ++rank;
  }
  return rank;
}

int index_of(const std::vector<std::vector<int>>& perms, const std::vector<int>& p) {
  const auto it = std::lower_bound(perms.begin(), perms.end(), p);
  return static_cast<int>(it - perms.begin());
}

// Rank of the mod-2 differential restricted to the given source/target sets.
int restricted_rank(const GridDiagram& d, const std::vector<std::vector<int>>& source,
                    const std::vector<std::vector<int>>& target) {
  if (source.empty() || target.empty()) return 0;
  const int cols = static_cast<int>(target.size());
  const std::size_t words = static_cast<std::size_t>((cols + 63) / 64);
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& x : source) {
    std::vector<std::uint64_t> row(words, 0);
    for (const auto& y : graded_targets(d, x)) {
      const int k = index_of(target, y);
      if (k >= cols || target[static_cast<std::size_t>(k)] != y) continue;
      row[static_cast<std::size_t>(k / 64)] ^= std::uint64_t{1} << (k % 64);
    }
    rows.push_back(std::move(row));
  }
  return gf2_rank(std::move(rows), cols);
}

// Count of point pairs p < q in both coordinates, points scaled by 2.
long long pairs(const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b) {
  long long k = 0;
  for (const auto& p : a)
    for (const auto& q : b)
      if (p.first < q.first && p.second < q.second) ++k;
  return k;
}

int maslov(const GridDiagram& d, const std::vector<int>& x) {
  std::vector<std::pair<int, int>> xs;
  std::vector<std::pair<int, int>> os;
  for (int i = 0; i < d.n; ++i) {
    xs.emplace_back(2 * i, 2 * x[static_cast<std::size_t>(i)]);
    os.emplace_back(2 * i + 1, 2 * d.o_rows[static_cast<std::size_t>(i)] + 1);
  }
  // M = J(x,x) - 2J(x,O) + J(O,O) + 1 with J(A,B) = (I(A,B) + I(B,A)) / 2
  const long long twice = 2 * pairs(xs, xs) - 2 * (pairs(xs, os) + pairs(os, xs)) + 2 * pairs(os, os);
  return static_cast<int>(twice / 2) + 1;
}

// Winding number of the knot around the lattice point (i, j).
int winding(const GridDiagram& d, int i, int j) {
  int w = 0;
  for (int c = i; c < d.n; ++c) {
    const int rx = d.x_rows[static_cast<std::size_t>(c)];
    const int ro = d.o_rows[static_cast<std::size_t>(c)];
    // vertical segment in column c runs from the X to the O
    if (std::min(rx, ro) < j && j <= std::max(rx, ro)) w += ro > rx ? 1 : -1;
  }
  return w;
}

}  // namespace

int winding_alexander2(const GridDiagram& d, const std::vector<int>& x) {
  // 8A = -8 sum_x w + sum over marker corners of w - 4(n - 1)
  long long eight = 0;
  for (int i = 0; i < d.n; ++i) eight -= 8LL * winding(d, i, x[static_cast<std::size_t>(i)]);
  for (int c = 0; c < d.n; ++c) {
    for (int r : {d.o_rows[static_cast<std::size_t>(c)], d.x_rows[static_cast<std::size_t>(c)]}) {
      eight += winding(d, c, r) + winding(d, c + 1, r) + winding(d, c, r + 1) + winding(d, c + 1, r + 1);
    }
  }
  eight -= 4LL * (d.n - 1);
  if (eight % 4 != 0) throw std::logic_error("winding grading is not a half-integer");
  return static_cast<int>(eight / 4);
}

int mod2_total_dimension(const GridDiagram& d) {
  const auto perms = permutations(d.n);
  const int rank = restricted_rank(d, perms, perms);
  return static_cast<int>(perms.size()) - 2 * rank;
}

std::map<std::pair<int, int>, int> mod2_knot_poincare(const GridDiagram& d) {
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> pieces;
  for (const auto& x : permutations(d.n)) pieces[{maslov(d, x), winding_alexander2(d, x)}].push_back(x);
  std::map<std::pair<int, int>, int> out;
  for (const auto& [key, gens] : pieces) {
    const auto below = pieces.find({key.first - 1, key.second});
    const auto above = pieces.find({key.first + 1, key.second});
    const int r_out = below == pieces.end() ? 0 : restricted_rank(d, gens, below->second);
    const int r_in = above == pieces.end() ? 0 : restricted_rank(d, above->second, gens);
    const int dim = static_cast<int>(gens.size()) - r_out - r_in;
    if (dim != 0) out[key] = dim;
  }
  return out;
}

}  // namespace spinfloer::testing
