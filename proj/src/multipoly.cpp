#include "posop/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace posop {

bool dominated_by(const Exponent& a, const Exponent& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("multi-index arity mismatch");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

Exponent operator+(const Exponent& a, const Exponent& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("multi-index arity mismatch");
    }
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

Rational multi_factorial(const Exponent& alpha)
{
    Rational r(1);
    for (unsigned a : alpha) {
        r *= factorial(a);
    }
    return r;
}

Rational multi_falling_factorial(const Exponent& beta, const Exponent& alpha)
{
    if (beta.size() != alpha.size()) {
        throw std::invalid_argument("multi-index arity mismatch");
    }
    Rational r(1);
    for (std::size_t i = 0; i < beta.size(); ++i) {
        r *= falling_factorial(beta[i], alpha[i]);
    }
    return r;
}

std::vector<Exponent> exponents_below(const Exponent& bound)
{
    std::vector<Exponent> out;
    Exponent cur(bound.size(), 0);
    // Odometer with the last coordinate fastest gives lexicographic order.
    while (true) {
        out.push_back(cur);
        std::size_t i = bound.size();
        while (i > 0) {
            --i;
            if (cur[i] < bound[i]) {
                ++cur[i];
                std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), 0U);
                break;
            }
            if (i == 0) {
                return out;
            }
        }
        if (bound.empty()) {
            return out;
        }
    }
}

MultiPoly::MultiPoly(std::size_t arity, const Rational& constant) : arity_(arity)
{
    if (!constant.is_zero()) {
        terms_.emplace(Exponent(arity, 0), constant);
    }
}

MultiPoly MultiPoly::monomial(const Exponent& alpha, const Rational& c)
{
    MultiPoly p(alpha.size());
    p.add_term(alpha, c);
    return p;
}

MultiPoly MultiPoly::from_uni(const UniPoly& p, std::size_t arity, std::size_t var)
{
    if (var >= arity) {
        throw std::invalid_argument("variable index out of range");
    }
    MultiPoly r(arity);
    for (int k = 0; k <= p.degree(); ++k) {
        Exponent e(arity, 0);
        e[var] = static_cast<unsigned>(k);
        r.add_term(e, p.coeff(k));
    }
    return r;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent(arity_, 0));
}

Rational MultiPoly::coeff(const Exponent& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

Exponent MultiPoly::multidegree() const
{
    Exponent d(arity_, 0);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < arity_; ++i) {
            d[i] = std::max(d[i], e[i]);
        }
    }
    return d;
}

int MultiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (unsigned v : e) {
            s += static_cast<int>(v);
        }
        d = std::max(d, s);
    }
    return d;
}

Rational MultiPoly::operator()(std::span<const Rational> point) const
{
    if (point.size() != arity_) {
        throw std::invalid_argument("evaluation point arity mismatch");
    }
    // Cache powers per variable; terms are sparse so Horner buys little here.
    std::vector<std::vector<Rational>> powers(arity_);
    const Exponent md = multidegree();
    for (std::size_t i = 0; i < arity_; ++i) {
        powers[i].resize(md[i] + 1);
        powers[i][0] = Rational(1);
        for (unsigned k = 1; k <= md[i]; ++k) {
            powers[i][k] = powers[i][k - 1] * point[i];
        }
    }
    Rational acc;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < arity_; ++i) {
            if (e[i] != 0) {
                t *= powers[i][e[i]];
            }
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var, unsigned k) const
{
    if (var >= arity_) {
        throw std::invalid_argument("variable index out of range");
    }
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < k) {
            continue;
        }
        Exponent ne = e;
        ne[var] -= k;
        r.add_term(ne, c * falling_factorial(e[var], k));
    }
    return r;
}

MultiPoly MultiPoly::derivative(const Exponent& alpha) const
{
    if (alpha.size() != arity_) {
        throw std::invalid_argument("multi-index arity mismatch");
    }
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (!dominated_by(alpha, e)) {
            continue;
        }
        Exponent ne(arity_);
        for (std::size_t i = 0; i < arity_; ++i) {
            ne[i] = e[i] - alpha[i];
        }
        r.add_term(ne, c * multi_falling_factorial(e, alpha));
    }
    return r;
}

MultiPoly MultiPoly::taylor_shift(std::span<const Rational> a) const
{
    if (a.size() != arity_) {
        throw std::invalid_argument("shift arity mismatch");
    }
    MultiPoly cur = *this;
    for (std::size_t var = 0; var < arity_; ++var) {
        if (a[var].is_zero()) {
            continue;
        }
        MultiPoly next(arity_);
        for (const auto& [e, c] : cur.terms_) {
            // (x_var + a)^m = sum_j C(m, j) a^(m-j) x_var^j
            const unsigned m = e[var];
            Exponent ne = e;
            for (unsigned j = 0; j <= m; ++j) {
                ne[var] = j;
                next.add_term(ne, c * binomial(m, j) * pow(a[var], m - j));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

MultiPoly MultiPoly::evaluate_tail(std::size_t keep, std::span<const Rational> values) const
{
    if (keep + values.size() != arity_) {
        throw std::invalid_argument("evaluate_tail arity mismatch");
    }
    MultiPoly r(keep);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < values.size(); ++i) {
            t *= pow(values[i], e[keep + i]);
        }
        r.add_term(Exponent(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(keep)), t);
    }
    return r;
}

UniPoly MultiPoly::to_uni(std::size_t var) const
{
    std::vector<Rational> c;
    for (const auto& [e, v] : terms_) {
        for (std::size_t i = 0; i < arity_; ++i) {
            if (i != var && e[i] != 0) {
                throw std::invalid_argument("polynomial depends on more than one variable");
            }
        }
        const std::size_t k = arity_ == 0 ? 0 : e[var];
        if (c.size() <= k) {
            c.resize(k + 1);
        }
        c[k] += v;
    }
    return UniPoly(std::move(c));
}

void MultiPoly::add_term(const Exponent& alpha, const Rational& c)
{
    if (alpha.size() != arity_) {
        throw std::invalid_argument("monomial arity mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void MultiPoly::check_arity(const MultiPoly& o) const
{
    if (arity_ != o.arity_) {
        throw std::invalid_argument("polynomial arity mismatch");
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    check_arity(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    check_arity(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.check_arity(b);
    MultiPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

MultiPoly pow(const MultiPoly& p, unsigned exponent)
{
    MultiPoly result(p.arity(), Rational(1));
    for (unsigned i = 0; i < exponent; ++i) {
        result = result * p;
    }
    return result;
}

Rational ff_inner(const MultiPoly& f, const MultiPoly& g)
{
    if (f.arity() != g.arity()) {
        throw std::invalid_argument("Fischer-Fock pairing arity mismatch");
    }
    Rational acc;
    for (const auto& [e, c] : f.terms()) {
        auto it = g.terms().find(e);
        if (it != g.terms().end()) {
            acc += multi_factorial(e) * c * it->second;
        }
    }
    return acc;
}

} // namespace posop
