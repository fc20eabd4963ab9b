#ifndef POSOP_RATIONAL_HPP
#define POSOP_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace posop {

/// Exact rational number in canonical form (positive denominator, reduced).
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(unsigned long v) : q_(v) {}
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses `p` or `p/q` with an optional sign.
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& value() const { return q_; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] Rational abs() const { return Rational(::abs(q_)); }
    [[nodiscard]] std::string str() const { return q_.get_str(); }
    /// Smallest integer >= this.
    [[nodiscard]] mpz_class ceil() const;
    /// Largest integer <= this.
    [[nodiscard]] mpz_class floor() const;
    [[nodiscard]] double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

Rational pow(const Rational& base, unsigned exponent);
/// n! as an exact rational.
Rational factorial(unsigned n);
/// Falling factorial (m)_k = m(m-1)...(m-k+1); zero when k > m.
Rational falling_factorial(unsigned m, unsigned k);
Rational binomial(unsigned n, unsigned k);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

// Exact-division hooks used by the scalar-generic matrix routines.
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

} // namespace posop

template <>
struct std::hash<posop::Rational> {
    std::size_t operator()(const posop::Rational& r) const noexcept
    {
        return std::hash<std::string>{}(r.str());
    }
};

namespace Eigen {

template <>
struct NumTraits<posop::Rational> : GenericNumTraits<posop::Rational> {
    typedef posop::Rational Real;
    typedef posop::Rational NonInteger;
    typedef posop::Rational Literal;
    typedef posop::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 128
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

#endif
