#ifndef POSOP_MATRIX_HPP
#define POSOP_MATRIX_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "posop/multipoly.hpp"
#include "posop/rational.hpp"
#include "posop/unipoly.hpp"

namespace posop {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using PolyMatrix = Matrix<UniPoly>;
using MultiPolyMatrix = Matrix<MultiPoly>;

/// Rows/columns of `m` selected by `indices`.
template <class Derived>
Matrix<typename Derived::Scalar> principal_submatrix(const Eigen::MatrixBase<Derived>& m,
                                                     std::span<const int> indices)
{
    const auto n = static_cast<Eigen::Index>(indices.size());
    Matrix<typename Derived::Scalar> out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out(i, j) = m(indices[static_cast<std::size_t>(i)], indices[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact in the coefficient ring, which only needs `exact_div` and
/// `is_zero` overloads for Scalar.
template <class Scalar>
Scalar bareiss_determinant(Matrix<Scalar> m)
{
    const Eigen::Index n = m.rows();
    if (n == 0) {
        return Scalar(1);
    }
    Scalar previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            Eigen::Index swap_row = k + 1;
            while (swap_row < n && is_zero(m(swap_row, k))) {
                ++swap_row;
            }
            if (swap_row == n) {
                return Scalar(0);
            }
            m.row(k).swap(m.row(swap_row));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
            }
        }
        previous = m(k, k);
    }
    Scalar det = m(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

/// c^T M c
Rational quadratic_form(const RationalMatrix& m, const RationalVector& c);

/// Exact PSD test by symmetric congruence elimination. Returns a direction c
/// with c^T M c < 0 when M is not positive semidefinite.
std::optional<RationalVector> negative_direction(const RationalMatrix& m);

/// Reduced row echelon form over the rationals.
struct Echelon {
    RationalMatrix reduced;
    std::vector<Eigen::Index> pivots;
    [[nodiscard]] Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};
Echelon row_echelon(RationalMatrix m);

/// Basis of the right null space.
std::vector<RationalVector> null_space(const RationalMatrix& m);

/// Unique solution of the square nonsingular system A x = b; nullopt if singular.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

/// Evaluates every entry at y.
RationalMatrix evaluate(const PolyMatrix& m, const Rational& y);
RationalMatrix evaluate(const MultiPolyMatrix& m, std::span<const Rational> y);

} // namespace posop

#endif
