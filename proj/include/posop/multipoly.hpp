#ifndef POSOP_MULTIPOLY_HPP
#define POSOP_MULTIPOLY_HPP

#include <map>
#include <span>
#include <vector>

#include "posop/rational.hpp"
#include "posop/unipoly.hpp"

namespace posop {

/// Multi-index in N_0^n.
using Exponent = std::vector<unsigned>;

/// Product partial order: a <= b coordinatewise.
bool dominated_by(const Exponent& a, const Exponent& b);
Exponent operator+(const Exponent& a, const Exponent& b);
/// alpha! = alpha_1! ... alpha_n!
Rational multi_factorial(const Exponent& alpha);
/// (beta)_alpha = prod_i (beta_i)_{alpha_i}
Rational multi_falling_factorial(const Exponent& beta, const Exponent& alpha);
/// All beta <= bound in lexicographic order.
std::vector<Exponent> exponents_below(const Exponent& bound);

/// Sparse multivariate polynomial with exact rational coefficients.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t arity) : arity_(arity) {}
    MultiPoly(std::size_t arity, const Rational& constant);
    /// c * x^alpha
    static MultiPoly monomial(const Exponent& alpha, const Rational& c = Rational(1));
    /// The univariate polynomial p placed in variable `var` of an arity-n ring.
    static MultiPoly from_uni(const UniPoly& p, std::size_t arity, std::size_t var);

    [[nodiscard]] std::size_t arity() const { return arity_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Rational coeff(const Exponent& alpha) const;
    /// Largest exponent of each variable.
    [[nodiscard]] Exponent multidegree() const;
    [[nodiscard]] int total_degree() const;

    [[nodiscard]] Rational operator()(std::span<const Rational> point) const;

    /// k-th partial derivative in variable `var`.
    [[nodiscard]] MultiPoly derivative(std::size_t var, unsigned k = 1) const;
    /// d^alpha
    [[nodiscard]] MultiPoly derivative(const Exponent& alpha) const;
    /// p(x + a).
    [[nodiscard]] MultiPoly taylor_shift(std::span<const Rational> a) const;
    /// Substitutes values for the trailing variables, keeping the first `keep`.
    [[nodiscard]] MultiPoly evaluate_tail(std::size_t keep, std::span<const Rational> values) const;
    /// Univariate view; requires every variable other than `var` to be absent.
    [[nodiscard]] UniPoly to_uni(std::size_t var = 0) const;

    void add_term(const Exponent& alpha, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

private:
    void check_arity(const MultiPoly& o) const;

    std::size_t arity_ = 0;
    Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exponent);
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Fischer-Fock pairing sum_alpha alpha! a_alpha b_alpha.
Rational ff_inner(const MultiPoly& f, const MultiPoly& g);

} // namespace posop

namespace Eigen {

template <>
struct NumTraits<posop::MultiPoly> : GenericNumTraits<posop::MultiPoly> {
    typedef posop::MultiPoly Real;
    typedef posop::MultiPoly NonInteger;
    typedef posop::MultiPoly Literal;
    typedef posop::MultiPoly Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 256,
        MulCost = 1024
    };
};

} // namespace Eigen

#endif
