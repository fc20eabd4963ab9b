#ifndef POSOP_WEYL_HPP
#define POSOP_WEYL_HPP

#include <map>
#include <span>
#include <vector>

#include "posop/matrix.hpp"
#include "posop/multipoly.hpp"
#include "posop/unipoly.hpp"

namespace posop {

class ConstCoeffOp;

/// Differential operator sum_i q_i(x) D^i with finitely many nonzero q_i.
class WeylOp {
public:
    WeylOp() = default;
    explicit WeylOp(std::vector<UniPoly> coeffs);

    static WeylOp identity() { return WeylOp({UniPoly(1)}); }
    /// q(x) D^k
    static WeylOp term(unsigned k, const UniPoly& q);
    static WeylOp multiplication(const UniPoly& q) { return term(0, q); }

    /// Largest i with q_i != 0; -1 for the zero operator.
    [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool has_constant_coefficients() const;
    /// q_i, zero beyond the stored order.
    [[nodiscard]] UniPoly coeff(int i) const;
    [[nodiscard]] std::span<const UniPoly> coeffs() const { return coeffs_; }

    friend WeylOp operator-(const WeylOp& t);
    friend WeylOp operator+(const WeylOp& a, const WeylOp& b);
    friend WeylOp operator*(const Rational& c, const WeylOp& t);
    friend bool operator==(const WeylOp&, const WeylOp&) = default;

private:
    std::vector<UniPoly> coeffs_;
};

/// Constant-coefficient operator sum_i c_i D^i.
class ConstCoeffOp {
public:
    ConstCoeffOp() = default;
    explicit ConstCoeffOp(std::vector<Rational> coeffs);

    [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Rational coeff(int i) const;
    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
    [[nodiscard]] WeylOp to_weyl() const;

    friend bool operator==(const ConstCoeffOp&, const ConstCoeffOp&) = default;

private:
    std::vector<Rational> coeffs_;
};

UniPoly apply(const WeylOp& t, const UniPoly& f);
UniPoly apply(const ConstCoeffOp& t, const UniPoly& f);

/// T_y at y = y0.
ConstCoeffOp specialize(const WeylOp& t, const Rational& y0);

/// m-truncated symbol sum_{i<=m} q_i(y) x^i, as an arity-2 polynomial in (x, y).
MultiPoly truncated_symbol(const WeylOp& t, unsigned m);
/// The truncated symbol with y fixed, as a polynomial in x.
UniPoly truncated_symbol_at(const WeylOp& t, unsigned m, const Rational& y0);

/// <p_{y0,d}, f(. + a)> with d = max(deg f, order T); equals T_{y0}(f)(a).
Rational ff_pairing(const WeylOp& t, const UniPoly& f, const Rational& y0, const Rational& a);

/// e^{-aD} T e^{aD}: coefficients q_i(x - a).
WeylOp conjugate_by_shift(const WeylOp& t, const Rational& a);

/// Action of T on R_d[x]: column j holds the coefficients of T(x^j). At least
/// d+1 rows, more when T raises the degree.
RationalMatrix matrix_from_operator(const WeylOp& t, unsigned d);
/// The unique operator of order <= d with the given action on 1, x, ..., x^d.
WeylOp operator_from_matrix(const RationalMatrix& action);

/// sum_alpha q_alpha(x) d^alpha on polynomials in n variables.
class MultiWeylOp {
public:
    using Terms = std::map<Exponent, MultiPoly>;

    MultiWeylOp() = default;
    explicit MultiWeylOp(std::size_t arity) : arity_(arity) {}

    static MultiWeylOp identity(std::size_t arity);
    static MultiWeylOp from_univariate(const WeylOp& t);

    [[nodiscard]] std::size_t arity() const { return arity_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool has_constant_coefficients() const;
    [[nodiscard]] MultiPoly coeff(const Exponent& alpha) const;
    /// Coordinatewise maximum of the support.
    [[nodiscard]] Exponent order() const;

    void add_term(const Exponent& alpha, const MultiPoly& q);

    friend bool operator==(const MultiWeylOp&, const MultiWeylOp&) = default;

private:
    std::size_t arity_ = 0;
    Terms terms_;
};

MultiPoly mv_apply(const MultiWeylOp& t, const MultiPoly& f);
/// T_y at y = y0; the result has constant coefficients.
MultiWeylOp mv_specialize(const MultiWeylOp& t, std::span<const Rational> y0);
/// alpha-truncated symbol sum_{beta<=alpha} q_beta(y) x^beta in variables (x_1..x_n, y_1..y_n).
MultiPoly mv_truncated_symbol(const MultiWeylOp& t, const Exponent& alpha);
/// <p_{y0,alpha}, f(. + a)> with alpha covering both f and T.
Rational mv_ff_pairing(const MultiWeylOp& t, const MultiPoly& f, std::span<const Rational> y0,
                       std::span<const Rational> a);

} // namespace posop

#endif
