#ifndef POSOP_UNIPOLY_HPP
#define POSOP_UNIPOLY_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posop/rational.hpp"

namespace posop {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored lowest degree first and trailing zeros are
/// always trimmed, so the zero polynomial has no stored coefficients.
class UniPoly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = -1;

    UniPoly() = default;
    UniPoly(int constant) : UniPoly(Rational(constant)) {}
    UniPoly(const Rational& constant);
    UniPoly(std::initializer_list<Rational> coeffs);
    explicit UniPoly(std::vector<Rational> coeffs);

    /// c * x^k
    static UniPoly monomial(unsigned k, const Rational& c = Rational(1));
    static UniPoly x() { return monomial(1); }

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    [[nodiscard]] Rational coeff(int i) const;
    [[nodiscard]] const Rational& leading() const;
    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }

    [[nodiscard]] Rational operator()(const Rational& x) const;

    /// k-th derivative.
    [[nodiscard]] UniPoly derivative(unsigned k = 1) const;
    /// p(x + a).
    [[nodiscard]] UniPoly taylor_shift(const Rational& a) const;
    /// p(c x).
    [[nodiscard]] UniPoly scale_argument(const Rational& c) const;
    [[nodiscard]] UniPoly monic() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend UniPoly operator-(const UniPoly& a);

    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, unsigned exponent);

/// Euclidean division: returns (quotient, remainder) with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Division that must leave no remainder; throws std::logic_error otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Bezout cofactors: returns (g, s, t) with s*a + t*b = g monic gcd.
struct ExtendedGcd {
    UniPoly gcd;
    UniPoly s;
    UniPoly t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// Fischer-Fock pairing sum_k k! a_k b_k.
Rational ff_inner(const UniPoly& f, const UniPoly& g);

} // namespace posop

namespace Eigen {

template <>
struct NumTraits<posop::UniPoly> : GenericNumTraits<posop::UniPoly> {
    typedef posop::UniPoly Real;
    typedef posop::UniPoly NonInteger;
    typedef posop::UniPoly Literal;
    typedef posop::UniPoly Nested;
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
