#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace spinfloer {

// Sparse integer matrix as (row, col, value) triplets without stored zeros.
class IntegerMatrix {
 public:
  struct Entry {
    int row = 0;
    int col = 0;
    std::int64_t value = 0;
  };

  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }

  // Adds value to (row, col); throws std::out_of_range on bad indices.
  void add(int row, int col, std::int64_t value);
  // Drops entries that cancelled to zero and merges duplicates.
  void normalize();

  static IntegerMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Entry> entries_;
};

class BigMatrix {
 public:
  BigMatrix() = default;
  BigMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static BigMatrix identity(int n);
  static BigMatrix from(const IntegerMatrix& m);
  BigMatrix transposed() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const mpz_class& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const BigMatrix&, const BigMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b);

struct SmithForm {
  // Nonzero invariant factors d_1 | d_2 | ..., all positive.
  std::vector<mpz_class> diagonal;
  // U * A * V = D when transforms were requested; empty otherwise. The
  // inverses are exact integer matrices, which certifies det U = +-1.
  BigMatrix u;
  BigMatrix v;
  BigMatrix u_inverse;
  BigMatrix v_inverse;

  int rank() const { return static_cast<int>(diagonal.size()); }
};

SmithForm smith_normal_form(const IntegerMatrix& a, bool with_transforms = true);

// The rows x cols matrix with the invariant factors on the diagonal.
BigMatrix diagonal_matrix(const SmithForm& s, int rows, int cols);

}  // namespace spinfloer
