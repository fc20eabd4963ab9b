#ifndef POSOP_REALROOTS_HPP
#define POSOP_REALROOTS_HPP

#include <optional>
#include <vector>

#include "posop/unipoly.hpp"

namespace posop {

struct SquarefreeFactor {
    UniPoly factor;  // monic, square-free
    unsigned multiplicity;
};

/// Yun decomposition p = leading * prod factor_i^multiplicity_i.
struct SquarefreeDecomposition {
    Rational leading;
    std::vector<SquarefreeFactor> factors;
};

SquarefreeDecomposition squarefree_decompose(const UniPoly& p);
/// Monic square-free part p / gcd(p, p').
UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);

/// Half-open interval (lo, hi]; a missing bound means infinity.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    static Interval real_line() { return {}; }
};

/// Sturm chain p, p', -rem(...), each term scaled to unit leading magnitude.
std::vector<UniPoly> sturm_chain(const UniPoly& p);
/// Number of distinct real roots of the square-free polynomial p in the
/// interval. Throws std::invalid_argument when p is not square-free.
int sturm_count(const UniPoly& p, const Interval& interval = Interval::real_line());

/// Root isolating intervals (lo, hi) with rational endpoints that are not roots.
struct RootIsolation {
    struct Entry {
        Rational lo;
        Rational hi;
        unsigned multiplicity;
    };
    std::vector<Entry> roots;  // ascending
};

/// Cauchy root bound rounded up to an integer; strictly larger than |root|.
Rational root_bound(const UniPoly& p);
RootIsolation isolate_real_roots(const UniPoly& p);
/// Shrinks an isolating interval of the square-free polynomial p below `width`.
RootIsolation::Entry refine_root(const UniPoly& p, RootIsolation::Entry entry, const Rational& width);
/// The root inside an isolating interval when it is rational.
std::optional<Rational> rational_root_in(const UniPoly& p, const RootIsolation::Entry& entry);

/// Outcome of a global sign decision. `point` is a rational certificate of
/// failure; it is absent only when positivity fails solely at irrational
/// zeros, in which case `zero_interval` isolates one of them.
struct SignDecision {
    bool holds = false;
    std::optional<Rational> point;
    std::optional<RootIsolation::Entry> zero_interval;

    explicit operator bool() const { return holds; }
};

/// p(x) >= 0 for all real x.
SignDecision nonneg_on_R(const UniPoly& p);
/// p(x) > 0 for all real x.
SignDecision positive_on_R(const UniPoly& p);
/// True iff p has at least one real zero (or is identically zero).
bool has_real_zero(const UniPoly& p);
/// Some rational zero of p if one exists (0 for the zero polynomial).
std::optional<Rational> rational_real_zero(const UniPoly& p);

} // namespace posop

#endif
