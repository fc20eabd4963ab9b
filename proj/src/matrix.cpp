#include "posop/matrix.hpp"

#include <stdexcept>

namespace posop {

Rational quadratic_form(const RationalMatrix& m, const RationalVector& c)
{
    if (m.rows() != m.cols() || m.rows() != c.size()) {
        throw std::invalid_argument("quadratic_form dimension mismatch");
    }
    Rational acc;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (c(i).is_zero()) {
            continue;
        }
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            acc += m(i, j) * c(i) * c(j);
        }
    }
    return acc;
}

std::optional<RationalVector> negative_direction(const RationalMatrix& h)
{
    const Eigen::Index n = h.rows();
    if (h.cols() != n) {
        throw std::invalid_argument("negative_direction: matrix is not square");
    }
    // a = B^T h B, with the columns of B the current congruence basis.
    RationalMatrix a = h;
    RationalMatrix basis = RationalMatrix::Identity(n, n);
    std::vector<bool> active(static_cast<std::size_t>(n), true);

    auto is_active = [&](Eigen::Index i) { return active[static_cast<std::size_t>(i)]; };

    for (Eigen::Index step = 0; step < n; ++step) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (is_active(i) && !a(i, i).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            // Zero diagonal: any nonzero off-diagonal entry makes the 2x2 block indefinite.
            for (Eigen::Index i = 0; i < n; ++i) {
                for (Eigen::Index j = i + 1; j < n; ++j) {
                    if (is_active(i) && is_active(j) && !a(i, j).is_zero()) {
                        // (e_i - s e_j)^T a (e_i - s e_j) = -2 s a_ij with s = sign(a_ij)
                        const Rational s(a(i, j).sign());
                        RationalVector c = basis.col(i) - basis.col(j) * s;
                        return c;
                    }
                }
            }
            return std::nullopt;
        }
        if (a(pivot, pivot).sign() < 0) {
            return RationalVector(basis.col(pivot));
        }
        const Rational inv = Rational(1) / a(pivot, pivot);
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == pivot || !is_active(j) || a(pivot, j).is_zero()) {
                continue;
            }
            const Rational f = a(pivot, j) * inv;
            // Column j -= f * column pivot, applied as a congruence.
            basis.col(j) -= basis.col(pivot) * f;
            for (Eigen::Index k = 0; k < n; ++k) {
                a(k, j) -= a(k, pivot) * f;
            }
            for (Eigen::Index k = 0; k < n; ++k) {
                a(j, k) -= a(pivot, k) * f;
            }
        }
        active[static_cast<std::size_t>(pivot)] = false;
    }
    return std::nullopt;
}

Echelon row_echelon(RationalMatrix m)
{
    Echelon out;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = row;
        while (p < m.rows() && m(p, col).is_zero()) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        m.row(row).swap(m.row(p));
        const Rational inv = Rational(1) / m(row, col);
        for (Eigen::Index j = col; j < m.cols(); ++j) {
            m(row, j) *= inv;
        }
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) {
                continue;
            }
            const Rational f = m(i, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) {
                m(i, j) -= f * m(row, j);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::vector<RationalVector> null_space(const RationalMatrix& m)
{
    const Echelon e = row_echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (auto p : e.pivots) {
        is_pivot[static_cast<std::size_t>(p)] = true;
    }
    std::vector<RationalVector> basis;
    for (Eigen::Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) {
            continue;
        }
        RationalVector v = RationalVector::Zero(m.cols());
        v(free) = Rational(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            v(e.pivots[r]) = -e.reduced(static_cast<Eigen::Index>(r), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b)
{
    if (a.rows() != a.cols() || a.rows() != b.size()) {
        throw std::invalid_argument("solve: dimension mismatch");
    }
    RationalMatrix aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const Echelon e = row_echelon(aug);
    if (e.rank() != a.rows() || (!e.pivots.empty() && e.pivots.back() == a.cols())) {
        return std::nullopt;
    }
    return RationalVector(e.reduced.col(a.cols()));
}

RationalMatrix evaluate(const PolyMatrix& m, const Rational& y)
{
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(i, j) = m(i, j)(y);
        }
    }
    return out;
}

RationalMatrix evaluate(const MultiPolyMatrix& m, std::span<const Rational> y)
{
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(i, j) = m(i, j)(y);
        }
    }
    return out;
}

} // namespace posop
