#include "posop/unipoly.hpp"

#include <stdexcept>

namespace posop {

UniPoly::UniPoly(const Rational& constant)
{
    if (!constant.is_zero()) {
        coeffs_.push_back(constant);
    }
}

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(unsigned k, const Rational& c)
{
    if (c.is_zero()) {
        return {};
    }
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational UniPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const
{
    static const Rational zero;
    return coeffs_.empty() ? zero : coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative(unsigned k) const
{
    if (static_cast<int>(k) > degree()) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - k);
    for (std::size_t i = k; i < coeffs_.size(); ++i) {
        out[i - k] = coeffs_[i] * falling_factorial(static_cast<unsigned>(i), k);
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::taylor_shift(const Rational& a) const
{
    if (a.is_zero() || is_constant()) {
        return *this;
    }
    // In-place Horner scheme: after the pass for level i, c[j] holds the
    // coefficients of the partially shifted polynomial.
    std::vector<Rational> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) {
            c[j] += a * c[j + 1];
        }
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scale_argument(const Rational& c) const
{
    std::vector<Rational> out(coeffs_.size());
    Rational power(1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] = coeffs_[i] * power;
        power *= c;
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) {
        return {};
    }
    UniPoly r = *this;
    r *= Rational(1) / leading();
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) {
        v *= c;
    }
    return *this;
}

UniPoly operator-(const UniPoly& a)
{
    UniPoly r = a;
    for (auto& v : r.coeffs_) {
        v = -v;
    }
    return r;
}

UniPoly pow(const UniPoly& p, unsigned exponent)
{
    UniPoly result(1);
    UniPoly base = p;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {UniPoly(), a};
    }
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational inv_lead = Rational(1) / b.leading();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        const Rational factor = rem[static_cast<std::size_t>(i)] * inv_lead;
        if (factor.is_zero()) {
            continue;
        }
        quot[static_cast<std::size_t>(i - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw std::logic_error("exact_div: nonzero remainder");
    }
    return q;
}

UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly r0 = a, r1 = b;
    UniPoly s0(1), s1;
    UniPoly t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        return {UniPoly(), UniPoly(), UniPoly()};
    }
    const Rational inv = Rational(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Rational ff_inner(const UniPoly& f, const UniPoly& g)
{
    Rational acc;
    const int n = std::min(f.degree(), g.degree());
    for (int k = 0; k <= n; ++k) {
        acc += factorial(static_cast<unsigned>(k)) * f.coeff(k) * g.coeff(k);
    }
    return acc;
}

} // namespace posop
