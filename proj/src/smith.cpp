#include "spinfloer/smith.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace spinfloer {

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void IntegerMatrix::add(int row, int col, std::int64_t value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw std::out_of_range("matrix index out of range");
  if (value != 0) entries_.push_back({row, col, value});
}

void IntegerMatrix::normalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  std::vector<Entry> merged;
  for (const auto& e : entries_) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
  entries_ = std::move(merged);
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.add(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

BigMatrix BigMatrix::identity(int n) {
  BigMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::from(const IntegerMatrix& m) {
  BigMatrix d(m.rows(), m.cols());
  for (const auto& e : m.entries()) d(e.row, e.col) += static_cast<long>(e.value);
  return d;
}

BigMatrix BigMatrix::transposed() const {
  BigMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  BigMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) mpz_addmul(c(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

namespace {

using Row = std::vector<mpz_class>;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void addmul_row(std::vector<Row>& m, int i, int j, const mpz_class& k) {
  auto& ri = m[at(i)];
  const auto& rj = m[at(j)];
  for (std::size_t c = 0; c < ri.size(); ++c)
    if (rj[c] != 0) mpz_addmul(ri[c].get_mpz_t(), rj[c].get_mpz_t(), k.get_mpz_t());
}

// (row_i, row_j) <- (p row_i + q row_j, r row_i + s row_j)
void combine_rows(std::vector<Row>& m, int i, int j, const mpz_class& p, const mpz_class& q, const mpz_class& r,
                  const mpz_class& s) {
  auto& ri = m[at(i)];
  auto& rj = m[at(j)];
  mpz_class x;
  mpz_class y;
  for (std::size_t c = 0; c < ri.size(); ++c) {
    if (ri[c] == 0 && rj[c] == 0) continue;
    mpz_mul(x.get_mpz_t(), p.get_mpz_t(), ri[c].get_mpz_t());
    mpz_addmul(x.get_mpz_t(), q.get_mpz_t(), rj[c].get_mpz_t());
    mpz_mul(y.get_mpz_t(), r.get_mpz_t(), ri[c].get_mpz_t());
    mpz_addmul(y.get_mpz_t(), s.get_mpz_t(), rj[c].get_mpz_t());
    ri[c].swap(x);
    rj[c].swap(y);
  }
}

// A matrix under unimodular row operations. When tracked, every operation is
// also applied to `left` (left * original == current) and to `left_inv_t`,
// the transpose of left^-1.
class RowSystem {
 public:
  RowSystem(std::vector<Row> rows, int cols, bool tracked) : a_(std::move(rows)), cols_(cols), tracked_(tracked) {
    if (!tracked_) return;
    const int m = rows_count();
    left_.assign(at(m), Row(at(m)));
    left_inv_t_ = left_;
    for (int i = 0; i < m; ++i) left_[at(i)][at(i)] = left_inv_t_[at(i)][at(i)] = 1;
  }

  int rows_count() const { return static_cast<int>(a_.size()); }
  int cols() const { return cols_; }
  const mpz_class& entry(int i, int j) const { return a_[at(i)][at(j)]; }
  std::vector<Row>& matrix() { return a_; }
  const std::vector<Row>& left() const { return left_; }
  const std::vector<Row>& left_inv_t() const { return left_inv_t_; }

  // row_i += k * row_j
  void add_multiple(int i, int j, const mpz_class& k) {
    if (k == 0) return;
    addmul_row(a_, i, j, k);
    if (!tracked_) return;
    addmul_row(left_, i, j, k);
    // the inverse picks up col_j -= k col_i
    addmul_row(left_inv_t_, j, i, -k);
  }

  void swap(int i, int j) {
    if (i == j) return;
    std::swap(a_[at(i)], a_[at(j)]);
    if (!tracked_) return;
    std::swap(left_[at(i)], left_[at(j)]);
    std::swap(left_inv_t_[at(i)], left_inv_t_[at(j)]);
  }

  void negate(int i) {
    for (auto& x : a_[at(i)]) x = -x;
    if (!tracked_) return;
    for (auto& x : left_[at(i)]) x = -x;
    for (auto& x : left_inv_t_[at(i)]) x = -x;
  }

  // Requires ps - qr = 1.
  void combine(int i, int j, const mpz_class& p, const mpz_class& q, const mpz_class& r, const mpz_class& s) {
    combine_rows(a_, i, j, p, q, r, s);
    if (!tracked_) return;
    combine_rows(left_, i, j, p, q, r, s);
    // columns of the inverse transform by [[s, -q], [-r, p]]
    combine_rows(left_inv_t_, i, j, s, -r, -q, p);
  }

  // Transform-only variants for when the matrix itself is kept elsewhere.
  void record_add_multiple(int i, int j, const mpz_class& k) {
    if (!tracked_ || k == 0) return;
    addmul_row(left_, i, j, k);
    addmul_row(left_inv_t_, j, i, -k);
  }

  void record_combine(int i, int j, const mpz_class& p, const mpz_class& q, const mpz_class& r, const mpz_class& s) {
    if (!tracked_) return;
    combine_rows(left_, i, j, p, q, r, s);
    combine_rows(left_inv_t_, i, j, s, -r, -q, p);
  }

 private:
  std::vector<Row> a_;
  int cols_;
  bool tracked_;
  std::vector<Row> left_;
  std::vector<Row> left_inv_t_;
};

// Reduces row k at column c into [0, pivot) using the pivot row j.
void reduce_against(RowSystem& s, int k, int j, int c) {
  const mpz_class& x = s.entry(k, c);
  if (x == 0) return;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), s.entry(j, c).get_mpz_t());
  s.add_multiple(k, j, -q);
}

// Hermite normal form, inserting one row at a time. Pivot rows are kept in
// reduced echelon form (entries above a pivot lie in [0, pivot)); without that
// the entries of dense matrices grow exponentially. On return the nonzero
// rows come first, ordered by pivot column.
void hermite_rows(RowSystem& s) {
  struct Pivot {
    int row;
    int col;
  };
  std::vector<Pivot> pivots;
  std::vector<int> pivot_row(at(s.cols()), -1);

  auto leading = [&](int i, int from) {
    for (int c = from; c < s.cols(); ++c)
      if (s.entry(i, c) != 0) return c;
    return -1;
  };

  for (int i = 0; i < s.rows_count(); ++i) {
    // Eliminate at the leading column while it holds a pivot. A gcd step may
    // only touch the pivot row once everything left of its pivot is zero here.
    bool dirty = false;
    int lead = leading(i, 0);
    while (lead >= 0 && pivot_row[at(lead)] >= 0) {
      const int k = pivot_row[at(lead)];
      const mpz_class b = s.entry(i, lead);
      const mpz_class a = s.entry(k, lead);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        s.add_multiple(i, k, -(b / a));
      } else {
        mpz_class g;
        mpz_class x;
        mpz_class y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        // [[x, y], [-b/g, a/g]] has determinant (xa + yb)/g = 1
        s.combine(k, i, x, y, -(b / g), a / g);
        dirty = true;
      }
      lead = leading(i, lead + 1);
    }

    if (lead >= 0) {
      if (s.entry(i, lead) < 0) s.negate(i);
      auto pos = std::find_if(pivots.begin(), pivots.end(), [&](const Pivot& p) { return p.col > lead; });
      for (auto it = pos; it != pivots.end(); ++it) reduce_against(s, i, it->row, it->col);
      pos = pivots.insert(pos, {i, lead});
      pivot_row[at(lead)] = i;
      for (auto it = pivots.begin(); it != pos; ++it) reduce_against(s, it->row, i, lead);
    }
    if (dirty) {
      // A pivot shrank, so entries above it (and the changed row's own
      // entries) need reducing again. Ascending order keeps earlier columns intact.
      for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t k = 0; k < j; ++k) reduce_against(s, pivots[k].row, pivots[j].row, pivots[j].col);
    }
  }

  std::vector<int> where(at(s.rows_count()));
  std::vector<int> occupant(at(s.rows_count()));
  for (int r = 0; r < s.rows_count(); ++r) where[at(r)] = occupant[at(r)] = r;
  for (std::size_t t = 0; t < pivots.size(); ++t) {
    const int from = where[at(pivots[t].row)];
    const int to = static_cast<int>(t);
    if (from == to) continue;
    s.swap(from, to);
    const int displaced = occupant[at(to)];
    occupant[at(from)] = displaced;
    where[at(displaced)] = from;
    occupant[at(to)] = pivots[t].row;
    where[at(pivots[t].row)] = to;
  }
}

// At most one nonzero entry in every row and every column.
bool is_monomial(const std::vector<Row>& m, int cols) {
  std::vector<bool> used(at(cols), false);
  for (const auto& row : m) {
    int seen = 0;
    for (int c = 0; c < cols; ++c) {
      if (row[at(c)] == 0) continue;
      if (++seen > 1 || used[at(c)]) return false;
      used[at(c)] = true;
    }
  }
  return true;
}

std::vector<Row> transpose(const std::vector<Row>& m, int cols) {
  std::vector<Row> t(at(cols), Row(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < cols; ++j) t[at(j)][i] = m[i][at(j)];
  return t;
}

BigMatrix to_big(const std::vector<Row>& rows, int cols) {
  BigMatrix b(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) b(static_cast<int>(i), j) = rows[i][at(j)];
  return b;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input, bool with_transforms) {
  const int m = input.rows();
  const int n = input.cols();
  std::vector<Row> a(at(m), Row(at(n)));
  for (const auto& e : input.entries()) a[at(e.row)][at(e.col)] += static_cast<long>(e.value);

  // Alternate row and column Hermite passes until the matrix is monomial.
  // Column passes run on the transpose, so the transform they accumulate is V^T.
  RowSystem rows(std::move(a), n, with_transforms);
  hermite_rows(rows);
  RowSystem cols(transpose(rows.matrix(), n), m, with_transforms);
  for (;;) {
    hermite_rows(cols);
    if (is_monomial(cols.matrix(), m)) break;
    rows.matrix() = transpose(cols.matrix(), m);
    hermite_rows(rows);
    cols.matrix() = transpose(rows.matrix(), n);
    if (is_monomial(rows.matrix(), n)) break;
  }

  // Row passes put the nonzero rows first and column operations cannot change
  // which rows vanish (and vice versa), so the monomial matrix is diagonal.
  auto& dt = cols.matrix();  // D^T, n x m
  int rank = 0;
  while (rank < std::min(m, n) && dt[at(rank)][at(rank)] != 0) ++rank;
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < m; ++c)
      if (dt[at(k)][at(c)] != 0 && (k != c || k >= rank)) throw std::logic_error("smith: reduction is not diagonal");

  // diag(a, b) -> diag(g, ab/g): add row j to row i, then
  // [[a, b], [0, b]] * [[x, -b/g], [y, a/g]] = [[g, 0], [yb, ab/g]],
  // then clear yb with a row operation.
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      const mpz_class di = dt[at(i)][at(i)];
      const mpz_class dj = dt[at(j)][at(j)];
      if (mpz_divisible_p(dj.get_mpz_t(), di.get_mpz_t())) continue;
      mpz_class g;
      mpz_class x;
      mpz_class y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), di.get_mpz_t(), dj.get_mpz_t());
      rows.record_add_multiple(i, j, 1);
      cols.record_combine(i, j, x, y, -(dj / g), di / g);
      rows.record_add_multiple(j, i, -(y * dj / g));
      dt[at(i)][at(i)] = g;
      dt[at(j)][at(j)] = di / g * dj;
    }
  }

  SmithForm out;
  for (int k = 0; k < rank; ++k) out.diagonal.push_back(dt[at(k)][at(k)]);
  if (with_transforms) {
    out.u = to_big(rows.left(), m);
    out.u_inverse = to_big(rows.left_inv_t(), m).transposed();
    out.v = to_big(cols.left(), n).transposed();
    out.v_inverse = to_big(cols.left_inv_t(), n);
  }
  return out;
}

BigMatrix diagonal_matrix(const SmithForm& s, int rows, int cols) {
  BigMatrix d(rows, cols);
  for (std::size_t k = 0; k < s.diagonal.size(); ++k) d(static_cast<int>(k), static_cast<int>(k)) = s.diagonal[k];
  return d;
}

}  // namespace spinfloer
