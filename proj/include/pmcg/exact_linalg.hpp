#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmcg {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact (arbitrary-precision) entries.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const BigInt& v = x(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }

  bool is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (a_[i * cols_ + j] != (i == j ? 1 : 0)) return false;
    return true;
  }

  /// True when the matrix equals +I or -I exactly.
  bool is_plus_or_minus_identity() const {
    if (!square() || rows_ == 0) return is_identity();
    const BigInt& d = a_[0];
    if (d != 1 && d != -1) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (a_[i * cols_ + j] != (i == j ? d : 0)) return false;
    return true;
  }

private:
  std::size_t rows_, cols_;
  std::vector<BigInt> a_;
};

/// Exact determinant by fraction-free Bareiss elimination.
inline BigInt determinant(IntMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = t / prev;  // exact division (Bareiss)
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Leading principal minors det(M[0..k, 0..k]) for k = 0..n-1.
inline std::vector<BigInt> leading_principal_minors(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("minors of non-square matrix");
  std::vector<BigInt> out;
  out.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    out.push_back(determinant(sub));
  }
  return out;
}

/// Negative definiteness of a symmetric integer matrix: the k-th leading
/// principal minor must have sign (-1)^k.
inline bool is_negative_definite(const IntMatrix& m) {
  auto minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    bool want_negative = (k % 2 == 0);
    if (minors[k] == 0) return false;
    if ((minors[k] < 0) != want_negative) return false;
  }
  return true;
}

namespace detail {
// Integer row echelon via unimodular row operations (gcd elimination).
// Operates on m in place; if transform != nullptr it receives the same row
// operations (so transform * original == echelon result).
inline std::size_t echelonize(IntMatrix& m, IntMatrix* transform) {
  const std::size_t rows = m.rows(), cols = m.cols();
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
    if (transform)
      for (std::size_t j = 0; j < transform->cols(); ++j)
        std::swap((*transform)(a, j), (*transform)(b, j));
  };
  auto add_multiple = [&](std::size_t dst, std::size_t src, const BigInt& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols; ++j) m(dst, j) += c * m(src, j);
    if (transform)
      for (std::size_t j = 0; j < transform->cols(); ++j)
        (*transform)(dst, j) += c * (*transform)(src, j);
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclidean reduction: shrink entries below until a single nonzero pivot.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = pivot_row; i < rows; ++i) {
        if (m(i, col) == 0) continue;
        if (best == rows || abs(m(i, col)) < abs(m(best, col))) best = i;
      }
      if (best == rows) break;  // column is zero below pivot_row
      if (best != pivot_row) swap_rows(pivot_row, best);
      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (m(i, col) == 0) continue;
        BigInt q = m(i, col) / m(pivot_row, col);
        add_multiple(i, pivot_row, -q);
        if (m(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m(pivot_row, col) != 0) ++pivot_row;
  }
  return pivot_row;  // rank
}
}  // namespace detail

inline std::size_t rank(IntMatrix m) { return detail::echelonize(m, nullptr); }

/// Saturated basis of the left kernel: rows u with u * M = 0, obtained from
/// a unimodular transform, so they generate the full kernel lattice.
inline std::vector<std::vector<BigInt>> left_kernel_basis(const IntMatrix& m) {
  IntMatrix work = m;
  IntMatrix transform = IntMatrix::identity(m.rows());
  std::size_t r = detail::echelonize(work, &transform);
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t i = r; i < m.rows(); ++i) {
    std::vector<BigInt> row(m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) row[j] = transform(i, j);
    basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace pmcg
