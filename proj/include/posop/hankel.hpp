#ifndef POSOP_HANKEL_HPP
#define POSOP_HANKEL_HPP

#include <optional>
#include <vector>

#include "posop/matrix.hpp"
#include "posop/realroots.hpp"
#include "posop/weyl.hpp"

namespace posop {

/// H_{y,m} = ((i+j)! q_{i+j}(y))_{i,j=0..m}, entries are polynomials in y.
class ParamHankel {
public:
    explicit ParamHankel(PolyMatrix entries);

    [[nodiscard]] Eigen::Index size() const { return entries_.rows(); }
    [[nodiscard]] const UniPoly& entry(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
    [[nodiscard]] const PolyMatrix& entries() const { return entries_; }
    [[nodiscard]] RationalMatrix at(const Rational& y) const { return evaluate(entries_, y); }
    /// True when no entry depends on y.
    [[nodiscard]] bool is_constant() const;

private:
    PolyMatrix entries_;
};

ParamHankel build_param_hankel(const WeylOp& t, unsigned m);

/// Principal minor on the sorted index set S, as a polynomial in y.
UniPoly principal_minor(const ParamHankel& h, const std::vector<int>& subset);

/// Status of one principal minor over the real line.
struct MinorReport {
    std::vector<int> subset;
    UniPoly minor;
    bool nonneg = true;
    /// y0 with minor(y0) < 0 when the minor is not nonnegative.
    std::optional<Rational> failing_y;
};

/// All 2^(m+1)-1 principal minors in lexicographic order of the index sets.
std::vector<std::vector<int>> principal_subsets(int size);

struct PsdForAllY {
    bool holds = false;
    /// Every minor, in lexicographic subset order, when `holds`.
    std::vector<MinorReport> minors;
    /// The lexicographically smallest failing minor otherwise.
    std::optional<MinorReport> failure;
};

/// H(y) positive semidefinite for every real y, via all principal minors.
PsdForAllY psd_for_all_y(const ParamHankel& h);

struct PdForAllY {
    bool holds = false;
    std::vector<UniPoly> leading_minors;
    /// 1-based size of the first leading minor that is not positive on R.
    std::optional<int> failing_size;
    std::optional<Rational> failing_y;
};

/// H(y) positive definite for every real y, via leading minors.
PdForAllY pd_for_all_y(const ParamHankel& h);

struct PointPsd {
    bool psd = true;
    RationalVector direction;  // c with c^T H(y0) c < 0 when !psd
    Rational value;            // c^T H(y0) c
};

PointPsd psd_at_point(const ParamHankel& h, const Rational& y0);
/// Exact PSD test of a constant rational symmetric matrix.
PointPsd psd_of(const RationalMatrix& m);

} // namespace posop

#endif
