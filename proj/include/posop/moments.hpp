#ifndef POSOP_MOMENTS_HPP
#define POSOP_MOMENTS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "posop/matrix.hpp"
#include "posop/realroots.hpp"
#include "posop/weyl.hpp"

namespace posop {

/// Finite moment sequence a_0, ..., a_L.
struct MomentSequence {
    std::vector<Rational> values;

    friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

/// Finitely many atoms with weights that are polynomials in a parameter y.
class AtomicMeasureFamily {
public:
    struct Atom {
        std::vector<Rational> point;
        UniPoly weight;
    };

    AtomicMeasureFamily() = default;
    /// Throws std::invalid_argument on duplicate atoms or mixed dimensions.
    explicit AtomicMeasureFamily(std::vector<Atom> atoms);

    static AtomicMeasureFamily univariate(const std::vector<Rational>& atoms, const std::vector<UniPoly>& weights);

    [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }
    [[nodiscard]] std::size_t size() const { return atoms_.size(); }
    /// Dimension of the atoms; 1 for the empty family.
    [[nodiscard]] std::size_t dimension() const;
    [[nodiscard]] bool has_constant_weights() const;

private:
    std::vector<Atom> atoms_;
};

struct HamburgerResult {
    bool is_moment_sequence = false;
    /// Failing principal index set of (a_{i+j}) when not.
    std::vector<int> failing_subset;
    Rational failing_minor;
};

/// (a_{i+j})_{i,j=0..m} positive semidefinite; requires an odd number 2m+1 of values.
HamburgerResult hamburger_check(const MomentSequence& a);
RationalMatrix moment_hankel(const MomentSequence& a);

/// a_i = sum_k w_k(y0) t_k^i for i = 0..count-1 (univariate family).
MomentSequence moments_of_atomic(const AtomicMeasureFamily& m, const Rational& y0, unsigned count);
/// Same, keeping y symbolic.
std::vector<UniPoly> symbolic_moments(const AtomicMeasureFamily& m, unsigned count);

/// q_i(y) = (1/i!) sum_k w_k(y) t_k^i for i <= max_order.
WeylOp conv_operator_from_measure(const AtomicMeasureFamily& m, unsigned max_order);
/// Multivariate convolution q_alpha = (1/alpha!) sum_k w_k t_k^alpha for alpha <= bound.
MultiWeylOp mv_conv_operator_from_measure(const AtomicMeasureFamily& m, const Exponent& bound);

/// sum_k w_k f(x + t_k); weights must be constant.
UniPoly apply_convolution(const AtomicMeasureFamily& m, const UniPoly& f);

struct FamilyCheck {
    bool holds = true;
    std::optional<std::size_t> failing_atom;
    std::optional<Rational> failing_y;
};

/// Every weight nonnegative on R.
FamilyCheck measure_family_sos_check(const AtomicMeasureFamily& m);

/// Thrown by recover_atoms when the data admit no finitely atomic measure
/// at the given truncation.
class NotFinitelyAtomic : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RecoveredMeasure {
    UniPoly atom_polynomial;  // monic, its roots are the atoms
    RootIsolation atom_intervals;
    /// Exact atoms and weights when every atom is rational.
    std::optional<std::vector<Rational>> atoms;
    std::optional<std::vector<Rational>> weights;
    /// weight at atom t equals weight_polynomial(t) exactly.
    UniPoly weight_polynomial;
    /// Rational enclosures of the weights, one per isolating interval.
    std::vector<std::pair<Rational, Rational>> weight_enclosures;
};

RecoveredMeasure recover_atoms(const MomentSequence& a);

} // namespace posop

#endif
