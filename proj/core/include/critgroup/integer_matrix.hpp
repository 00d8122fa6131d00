#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace critgroup {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers. 0xn and nx0 shapes
// are valid and behave as expected under multiplication.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix diagonal(std::span<const Integer> entries, std::size_t rows,
                                std::size_t cols);
  static IntegerMatrix column(std::span<const Integer> v);
  static IntegerMatrix vstack(const IntegerMatrix& top, const IntegerMatrix& bottom);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerVector row(std::size_t r) const;
  IntegerVector col(std::size_t c) const;

  IntegerMatrix transpose() const;
  IntegerMatrix submatrix(std::span<const std::size_t> rows,
                          std::span<const std::size_t> cols) const;
  IntegerMatrix select_rows(std::span<const std::size_t> rows) const;
  IntegerMatrix select_columns(std::span<const std::size_t> cols) const;

  bool is_zero() const;
  bool is_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a);
IntegerVector operator*(const IntegerMatrix& a, std::span<const Integer> v);

IntegerVector add(std::span<const Integer> a, std::span<const Integer> b);
IntegerVector subtract(std::span<const Integer> a, std::span<const Integer> b);
bool is_zero(std::span<const Integer> v);

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

}  // namespace critgroup
