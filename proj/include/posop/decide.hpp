#ifndef POSOP_DECIDE_HPP
#define POSOP_DECIDE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posop/hankel.hpp"
#include "posop/weyl.hpp"

namespace posop {

enum class Cone { SOS, POS, ELL };

std::string_view to_string(Cone cone);
/// Accepts sos/pos/ell in any case.
Cone parse_cone(std::string_view text);

struct WeightedSquare {
    Rational weight;  // >= 0
    UniPoly root;
};

/// Counterexample to preservation: h in the cone (restricted to degree <= d)
/// whose image T(h) leaves the cone.
///
/// h is declared as sum_j w_j g_j^2 + epsilon. For SOS the image is negative
/// at `point`; for POS it is <= 0 there; for ELL it has a real zero. When
/// positivity fails only at irrational zeros there is no rational point and
/// the image is certified by an exact real-root count instead.
struct Witness {
    UniPoly h;
    std::vector<WeightedSquare> squares;
    Rational epsilon;
    std::optional<Rational> point;
    Rational value;  // T(h)(point)
    Rational shift;  // y0 used in the construction
    int degree_bound = 0;
};

/// sum_j w_j g_j^2 + epsilon
UniPoly declared_sum(const Witness& w);

struct PredicateReport {
    bool psd_all_y = false;
    bool pd_all_y = false;
    bool det_positive_all_m = false;
    bool q0_positive = false;
    bool q0_nonneg = false;
};

struct Verdict {
    Cone cone = Cone::SOS;
    std::optional<int> degree_bound;  // nullopt: unbounded degree
    bool preserves = false;
    std::vector<MinorReport> certificate;  // Preserves: the principal minor reports
    std::optional<Witness> witness;        // Violates
    std::vector<Witness> branch_witnesses; // ELL Violates: T and -T POS witnesses
    PredicateReport predicates;
    bool truncated = false;  // operator order exceeds the degree bound
    std::vector<std::string> notices;
};

Verdict decide_sos_bounded(const WeylOp& t, int d);
Verdict decide_pos_bounded(const WeylOp& t, int d);
Verdict decide_ell_bounded(const WeylOp& t, int d);
Verdict decide_bounded(const WeylOp& t, int d, Cone cone);

/// Preservation of the whole cone (all degrees).
Verdict decide_unbounded(const WeylOp& t, Cone cone);
inline Verdict decide_sos_unbounded(const WeylOp& t) { return decide_unbounded(t, Cone::SOS); }

/// Builds h = g(x - y0)^2 with g = sum c_i x^i; T(h)(y0) = c^T H_{y0,k} c.
/// Throws std::invalid_argument unless that value is negative.
Witness extract_witness(const WeylOp& t, int d, const Rational& y0, const RationalVector& c);

struct StrictCriteria {
    bool pd_all_y = false;
    bool det_positive_all_m = false;
};

/// Positive definiteness of H_{y,k} and det H_{y,m} > 0 for m <= k (d = 2k).
StrictCriteria strict_criteria(const WeylOp& t, int d);

} // namespace posop

#endif
