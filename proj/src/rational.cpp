#include "posop/rational.hpp"

#include <cctype>
#include <vector>

namespace posop {

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text)
{
    std::size_t pos = 0;
    auto digits = [&](std::string& out) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out.push_back(text[pos++]);
        }
        return pos > start;
    };

    std::string num;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') {
            num.push_back('-');
        }
        ++pos;
    }
    if (!digits(num)) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den.clear();
        if (!digits(den)) {
            throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
        }
    }
    if (pos != text.size()) {
        throw std::invalid_argument("trailing characters in rational literal '" + std::string(text) + "'");
    }
    return Rational(mpz_class(num), mpz_class(den));
}

mpz_class Rational::floor() const
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational pow(const Rational& base, unsigned exponent)
{
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
    return Rational(n, d);
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational falling_factorial(unsigned m, unsigned k)
{
    if (k > m) {
        return Rational(0);
    }
    mpz_class r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= m - i;
    }
    return Rational(r);
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

namespace {

// Simplest rational in [lo, hi] for 0 <= lo <= hi, by continued fractions.
Rational simplest_nonnegative(const Rational& lo, const Rational& hi)
{
    const mpz_class fl = lo.floor();
    if (Rational(fl) == lo) {
        return lo;
    }
    if (Rational(mpz_class(fl + 1)) <= hi) {
        return Rational(mpz_class(fl + 1));
    }
    // lo and hi share the integer part fl; recurse on the reciprocals of the fractional parts.
    const Rational frac_lo = lo - Rational(fl);
    const Rational frac_hi = hi - Rational(fl);
    const Rational inner = simplest_nonnegative(Rational(1) / frac_hi, Rational(1) / frac_lo);
    return Rational(fl) + Rational(1) / inner;
}

} // namespace

Rational simplest_between(const Rational& lo, const Rational& hi)
{
    if (hi < lo) {
        throw std::invalid_argument("simplest_between: empty interval");
    }
    if (lo.sign() <= 0 && hi.sign() >= 0) {
        return Rational(0);
    }
    if (hi.sign() < 0) {
        return -simplest_nonnegative(-hi, -lo);
    }
    return simplest_nonnegative(lo, hi);
}

} // namespace posop
