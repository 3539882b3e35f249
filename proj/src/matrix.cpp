#include "htau/matrix.hpp"

namespace htau {

namespace {

// Swaps a nonzero entry into (k, k) from rows below; returns false if none.
bool pivot_rows(RationalMatrix& m, Eigen::Index k, Eigen::Index col) {
  for (Eigen::Index r = k; r < m.rows(); ++r) {
    if (!m(r, col).is_zero()) {
      if (r != k) m.row(k).swap(m.row(r));
      return true;
    }
  }
  return false;
}

} // namespace

Rational determinant(RationalMatrix m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw UsageError("determinant of a non-square matrix");
  if (n == 0) return Rational(1);
  Rational sign(1);
  Rational prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index r = k;
    while (r < n && m(r, k).is_zero()) ++r;
    if (r == n) return Rational(0);
    if (r != k) {
      m.row(k).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Rational(0);
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Eigen::Index rank(RationalMatrix m) {
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < m.cols() && r < m.rows(); ++col) {
    if (!pivot_rows(m, r, col)) continue;
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational f = m(i, col) / m(r, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RationalVector solve_exact(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.rows()) throw UsageError("solve_exact: row count mismatch");
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  RationalMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;

  // Gauss-Jordan; every column of A must receive a pivot.
  for (Eigen::Index k = 0; k < cols; ++k) {
    if (k >= rows || !pivot_rows(aug, k, k)) {
      throw SingularError(ErrorCode::singular_input, "solve_exact: matrix has deficient column rank");
    }
    const Rational inv = Rational(1) / aug(k, k);
    for (Eigen::Index j = k; j <= cols; ++j) aug(k, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == k || aug(i, k).is_zero()) continue;
      const Rational f = aug(i, k);
      for (Eigen::Index j = k; j <= cols; ++j) aug(i, j) -= f * aug(k, j);
    }
  }
  for (Eigen::Index i = cols; i < rows; ++i) {
    if (!aug(i, cols).is_zero()) {
      throw SingularError(ErrorCode::singular_input, "solve_exact: inconsistent system");
    }
  }
  return aug.col(cols).head(cols);
}

} // namespace htau
