#pragma once

// Exact symmetric elimination over a field scalar (Rational in practice).
// Nothing here touches floating point.

#include "k3/types.hpp"

#include <optional>

namespace Eigen {
template <>
struct NumTraits<k3::Rational> : GenericNumTraits<k3::Rational> {
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace k3 {

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  bool operator==(const Inertia&) const = default;
};

template <typename Scalar, typename Derived>
DenseMatrix<Scalar> cast_exact(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<Scalar> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j));
  return out;
}

/// Unit-lower-triangular L and diagonal D with A = L D L^T, computed without
/// pivoting. Empty when a zero pivot shows up.
template <typename Scalar>
struct Ldlt {
  DenseMatrix<Scalar> lower;
  std::vector<Scalar> diagonal;
};

template <typename Scalar>
std::optional<Ldlt<Scalar>> ldlt_unpivoted(const DenseMatrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  Ldlt<Scalar> out;
  out.lower = DenseMatrix<Scalar>::Identity(n, n);
  out.diagonal.assign(static_cast<std::size_t>(n), Scalar(0));
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar d = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k)
      d -= out.lower(j, k) * out.lower(j, k) * out.diagonal[static_cast<std::size_t>(k)];
    if (d == 0) return std::nullopt;
    out.diagonal[static_cast<std::size_t>(j)] = d;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Scalar s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k)
        s -= out.lower(i, k) * out.lower(j, k) * out.diagonal[static_cast<std::size_t>(k)];
      out.lower(i, j) = s / d;
    }
  }
  return out;
}

/// Sylvester inertia by congruence diagonalisation. Zero pivots are handled
/// with a symmetric swap, or, when the remaining diagonal vanishes, by adding
/// row/column j to row/column i so the new pivot is 2 a_ij.
template <typename Scalar>
Inertia inertia(DenseMatrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  Inertia result;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_with = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, i) != 0) {
          swap_with = i;
          break;
        }
      if (swap_with >= 0) {
        a.row(k).swap(a.row(swap_with));
        a.col(k).swap(a.col(swap_with));
      } else {
        Eigen::Index partner = -1;
        for (Eigen::Index i = k + 1; i < n; ++i)
          if (a(k, i) != 0) {
            partner = i;
            break;
          }
        if (partner < 0) {
          // Row k is zero on the remaining block.
          ++result.zero;
          continue;
        }
        for (Eigen::Index c = 0; c < n; ++c) a(k, c) += a(partner, c);
        for (Eigen::Index r = 0; r < n; ++r) a(r, k) += a(r, partner);
      }
    }
    const Scalar pivot = a(k, k);
    if (pivot > 0)
      ++result.positive;
    else
      ++result.negative;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Scalar factor = a(i, k) / pivot;
      for (Eigen::Index c = k; c < n; ++c) a(i, c) -= factor * a(k, c);
    }
    for (Eigen::Index i = k + 1; i < n; ++i) a(k, i) = 0;
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index c = k + 1; c < i; ++c) a(c, i) = a(i, c);
  }
  return result;
}

/// Exact determinant by fraction-free elimination (Bareiss).
template <typename Derived>
boost::multiprecision::cpp_int bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Big = boost::multiprecision::cpp_int;
  const Eigen::Index n = m.rows();
  if (n == 0) return Big(1);
  DenseMatrix<Big> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Big(m(i, j));
  Big sign = 1;
  Big previous = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return Big(0);
      a.row(k).swap(a.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace k3
