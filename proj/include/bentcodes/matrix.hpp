#ifndef BENTCODES_MATRIX_HPP
#define BENTCODES_MATRIX_HPP

#include <Eigen/Core>

#include <cstdint>
#include <utility>

namespace bentcodes {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Matrices over F_p hold least nonnegative residues in a signed 64-bit
/// scalar so that products of two entries never overflow before reduction.
using ResidueMatrix = MatrixX<std::int64_t>;
using ResidueVector = VectorX<std::int64_t>;

namespace detail {

template <typename Scalar>
Scalar mod_p(Scalar v, Scalar p) {
  v %= p;
  return v < 0 ? v + p : v;
}

template <typename Scalar>
Scalar inverse_mod_p(Scalar a, Scalar p) {
  // p is prime: a^(p-2).
  Scalar result = 1, base = mod_p(a, p);
  for (Scalar e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

}  // namespace detail

/// Reduced row echelon form over F_p, together with the rank. Zero rows are
/// moved to the bottom; pivots are chosen left to right, top to bottom.
template <typename Derived>
std::pair<MatrixX<typename Derived::Scalar>, Eigen::Index> rref_mod_p(
    const Eigen::MatrixBase<Derived>& input, typename Derived::Scalar p) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> a = input.unaryExpr([p](Scalar v) { return detail::mod_p(v, p); });
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.row(pivot).swap(a.row(row));
    const Scalar inv = detail::inverse_mod_p(a(row, col), p);
    a.row(row) = a.row(row).unaryExpr([inv, p](Scalar v) { return v * inv % p; });
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Scalar factor = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) {
        a(r, c) = detail::mod_p(a(r, c) - factor * a(row, c), p);
      }
    }
    ++row;
  }
  return {std::move(a), row};
}

template <typename Derived>
Eigen::Index rank_mod_p(const Eigen::MatrixBase<Derived>& a, typename Derived::Scalar p) {
  return rref_mod_p(a, p).second;
}

}  // namespace bentcodes

#endif  // BENTCODES_MATRIX_HPP
