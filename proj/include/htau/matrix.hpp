#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "htau/errors.hpp"
#include "htau/rational.hpp"

namespace htau {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Permutation-expansion determinant over any commutative ring.
///
/// Needs only +, -, * on Scalar, so it works for series-valued entries where
/// elimination would require division. Cost is n! * n; intended for n <= 5.
template <class Derived>
typename Derived::Scalar determinant_leibniz(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw UsageError("determinant of a non-square matrix");
  if (n == 0) return Scalar(Rational(1));
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Eigen::Index{0});
  std::optional<Scalar> total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = m(0, perm[0]);
    for (Eigen::Index i = 1; i < n; ++i) term = term * m(i, perm[static_cast<std::size_t>(i)]);
    if (inversions % 2 != 0) term = -term;
    total = total ? *total + term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *total;
}

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational determinant(RationalMatrix m);

/// Rank of a rational matrix (exact elimination).
Eigen::Index rank(RationalMatrix m);

/// Solves a (possibly overdetermined) consistent system A x = b exactly.
/// Throws SingularError if A has deficient column rank or the system is
/// inconsistent.
RationalVector solve_exact(const RationalMatrix& a, const RationalVector& b);

} // namespace htau
