#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace semico {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix over the integers with exact arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;

  /// Horizontal concatenation [this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;
  /// Rows [begin, end) of this matrix.
  IntMatrix row_block(std::size_t begin, std::size_t end) const;
  IntMatrix transpose() const;

  bool is_zero() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row_i += k * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& k);
  /// col_i += k * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& k);
  void negate_row(std::size_t i);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * input * V == diagonal, with U and V unimodular and the diagonal a
/// divisibility chain d1 | d2 | ... (trailing zeros allowed).
struct SnfResult {
  IntMatrix left;      // U
  IntMatrix diagonal;  // S
  IntMatrix right;     // V
  std::size_t rank = 0;

  /// Nonzero diagonal entries, in order.
  std::vector<Integer> invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Determinant by fraction-free elimination.
Integer determinant(const IntMatrix& m);

/// A basis of { x in Z^cols : m x = 0 }, as columns of the returned matrix.
IntMatrix integer_kernel(const IntMatrix& m);

/// Some x with m x = target, or nullopt when target is not in the integer
/// column span of m.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& target);

bool in_column_span(const IntMatrix& m, const IntVector& target);

}  // namespace semico
