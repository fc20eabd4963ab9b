#ifndef POSOP_MULTIVAR_HPP
#define POSOP_MULTIVAR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "posop/hankel.hpp"
#include "posop/moments.hpp"
#include "posop/weyl.hpp"

namespace posop {

/// Gram matrix of the kernel H_y(beta) = beta! q_beta(y) over {beta <= alpha}.
/// Rows and columns follow `index` (lexicographic order).
struct KernelGram {
    std::vector<Exponent> index;
    MultiPolyMatrix symbolic;  // entries as polynomials in y_1..y_n
};

KernelGram gram_kernel(const MultiWeylOp& t, const Exponent& alpha);
RationalMatrix gram_kernel_at(const MultiWeylOp& t, const Exponent& alpha, std::span<const Rational> y0);

struct KernelPsd {
    bool psd = true;
    RationalVector direction;  // indexed like KernelGram::index
    Rational value;
};

KernelPsd psd_kernel_at(const MultiWeylOp& t, const Exponent& alpha, std::span<const Rational> y0);

/// h = sum_j (g_j)^2 in SOS(n) with T(h)(point) = value < 0.
struct MvWitness {
    MultiPoly h;
    std::vector<MultiPoly> roots;
    std::vector<Rational> point;
    Rational value;
};

/// Builds h = g(x - y0)^2 from a negative kernel direction c.
MvWitness extract_mv_witness(const MultiWeylOp& t, const Exponent& alpha, std::span<const Rational> y0,
                             const RationalVector& c);
bool verify_mv_witness(const MultiWeylOp& t, const MvWitness& w);

struct FalsifyBudget {
    unsigned grid_radius = 2;       // grid coordinates in {-R..R}/q
    unsigned grid_denominator = 1;
    unsigned random_points = 100;
    unsigned random_height = 10;    // random numerators/denominators bounded by this
    std::uint64_t seed = 1;
};

struct FalsifyResult {
    std::optional<MvWitness> witness;
    std::size_t points_scanned = 0;
    std::uint64_t seed = 0;
};

/// Semi-decision: scans grid then random points for a non-PSD kernel Gram.
/// Grid points go outward from the origin by max-norm shells.
FalsifyResult falsify_mv(const MultiWeylOp& t, const Exponent& alpha, const FalsifyBudget& budget);

struct MvVerdict {
    bool preserves = false;
    RationalMatrix gram;
    std::vector<Exponent> index;
    std::optional<MvWitness> witness;
};

/// Exact decision for constant-coefficient operators on SOS(n) restricted to
/// multidegree 2*alpha. Throws std::invalid_argument for non-constant coefficients.
MvVerdict constant_coeff_decide(const MultiWeylOp& t, const Exponent& alpha);

/// Operator x^beta -> lambda_beta x^beta, known on beta <= bound.
struct DiagonalOp {
    Exponent bound;
    std::map<Exponent, Rational> eigenvalues;
};

/// lambda_beta = sum_k w_k s_k^beta for a measure with constant weights.
DiagonalOp diagonal_from_measure(const AtomicMeasureFamily& nu, const Exponent& bound);
/// a_alpha with lambda_beta = sum_{alpha <= beta} (beta)_alpha a_alpha.
std::map<Exponent, Rational> diagonal_to_weyl(const DiagonalOp& lambda);
/// Inverse of diagonal_to_weyl on beta <= bound.
DiagonalOp diagonal_from_generator(const std::map<Exponent, Rational>& a, const Exponent& bound);
/// sum_alpha a_alpha x^alpha d^alpha
MultiWeylOp weyl_from_generator(const std::map<Exponent, Rational>& a, std::size_t arity);
/// sum_k w_k f(s_k * x) (coordinatewise product).
MultiPoly apply_dilation_measure(const AtomicMeasureFamily& nu, const MultiPoly& f);

} // namespace posop

#endif
