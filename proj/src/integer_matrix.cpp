#include "semico/integer_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace semico {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("IntMatrix: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("IntMatrix::hconcat: row mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const {
  IntMatrix m(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("IntMatrix: vector shape mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix: sum shape mismatch");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix: difference shape mismatch");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c).get_str();
    }
    os << ']';
  }
  return os << ']';
}

std::vector<Integer> SnfResult::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
  return out;
}

namespace {

// Smallest nonzero |entry| in the block rows/cols >= t; row-major first on ties.
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < s.rows(); ++r)
    for (std::size_t c = t; c < s.cols(); ++c) {
      const Integer& v = s(r, c);
      if (v == 0) continue;
      Integer a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& u = res.left;
  IntMatrix& s = res.diagonal;
  IntMatrix& v = res.right;
  const std::size_t limit = std::min(m.rows(), m.cols());

  std::size_t t = 0;
  for (; t < limit; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(s, t, pr, pc)) break;
    s.swap_rows(t, pr);
    u.swap_rows(t, pr);
    s.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < s.rows(); ++r) {
        if (s(r, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(r, t).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_row_multiple(r, t, -q);
        u.add_row_multiple(r, t, -q);
        if (s(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < s.cols(); ++c) {
        if (s(t, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, c).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_col_multiple(c, t, -q);
        v.add_col_multiple(c, t, -q);
        if (s(t, c) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot exists in row t or column t.
        std::size_t br = t, bc = t;
        Integer best = abs(s(t, t));
        for (std::size_t r = t + 1; r < s.rows(); ++r)
          if (s(r, t) != 0 && abs(s(r, t)) < best) best = abs(s(r, t)), br = r, bc = t;
        for (std::size_t c = t + 1; c < s.cols(); ++c)
          if (s(t, c) != 0 && abs(s(t, c)) < best) best = abs(s(t, c)), br = t, bc = c;
        s.swap_rows(t, br);
        u.swap_rows(t, br);
        s.swap_cols(t, bc);
        v.swap_cols(t, bc);
        continue;
      }
      // Row and column cleared; enforce divisibility of the remaining block.
      bool divides = true;
      for (std::size_t r = t + 1; r < s.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < s.cols(); ++c)
          if (s(r, c) % s(t, t) != 0) {
            s.add_row_multiple(t, r, 1);
            u.add_row_multiple(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  res.rank = t;
  return res;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SnfResult snf = smith_normal_form(m);
  const std::size_t dim = m.cols() - snf.rank;
  IntMatrix basis(m.cols(), dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t r = 0; r < m.cols(); ++r) basis(r, j) = snf.right(r, snf.rank + j);
  return basis;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& target) {
  if (target.size() != m.rows()) throw std::invalid_argument("solve_integer: target length mismatch");
  SnfResult snf = smith_normal_form(m);
  IntVector ut = snf.left * target;
  IntVector y(m.cols());
  for (std::size_t i = 0; i < ut.size(); ++i) {
    if (i < snf.rank) {
      const Integer& d = snf.diagonal(i, i);
      if (ut[i] % d != 0) return std::nullopt;
      y[i] = ut[i] / d;
    } else if (ut[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.right * y;
}

bool in_column_span(const IntMatrix& m, const IntVector& target) {
  return solve_integer(m, target).has_value();
}

}  // namespace semico
