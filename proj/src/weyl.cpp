#include "posop/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace posop {

namespace {

template <class T>
void trim_trailing_zero(std::vector<T>& v)
{
    while (!v.empty() && v.back().is_zero()) {
        v.pop_back();
    }
}

} // namespace

WeylOp::WeylOp(std::vector<UniPoly> coeffs) : coeffs_(std::move(coeffs)) { trim_trailing_zero(coeffs_); }

WeylOp WeylOp::term(unsigned k, const UniPoly& q)
{
    std::vector<UniPoly> c(k + 1);
    c[k] = q;
    return WeylOp(std::move(c));
}

bool WeylOp::has_constant_coefficients() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const UniPoly& q) { return q.is_constant(); });
}

UniPoly WeylOp::coeff(int i) const
{
    if (i < 0 || i > order()) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

WeylOp operator-(const WeylOp& t)
{
    std::vector<UniPoly> c(t.coeffs_.begin(), t.coeffs_.end());
    for (auto& q : c) {
        q = -q;
    }
    return WeylOp(std::move(c));
}

WeylOp operator+(const WeylOp& a, const WeylOp& b)
{
    std::vector<UniPoly> c(static_cast<std::size_t>(std::max(a.order(), b.order()) + 1));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    return WeylOp(std::move(c));
}

WeylOp operator*(const Rational& s, const WeylOp& t)
{
    std::vector<UniPoly> c(t.coeffs_.begin(), t.coeffs_.end());
    for (auto& q : c) {
        q *= s;
    }
    return WeylOp(std::move(c));
}

ConstCoeffOp::ConstCoeffOp(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim_trailing_zero(coeffs_);
}

Rational ConstCoeffOp::coeff(int i) const
{
    if (i < 0 || i > order()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

WeylOp ConstCoeffOp::to_weyl() const
{
    std::vector<UniPoly> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) {
        c.emplace_back(v);
    }
    return WeylOp(std::move(c));
}

UniPoly apply(const WeylOp& t, const UniPoly& f)
{
    UniPoly out;
    const int top = std::min(t.order(), f.degree());
    for (int i = 0; i <= top; ++i) {
        const UniPoly& q = t.coeffs()[static_cast<std::size_t>(i)];
        if (!q.is_zero()) {
            out += q * f.derivative(static_cast<unsigned>(i));
        }
    }
    return out;
}

UniPoly apply(const ConstCoeffOp& t, const UniPoly& f)
{
    UniPoly out;
    const int top = std::min(t.order(), f.degree());
    for (int i = 0; i <= top; ++i) {
        out += f.derivative(static_cast<unsigned>(i)) * t.coeff(i);
    }
    return out;
}

ConstCoeffOp specialize(const WeylOp& t, const Rational& y0)
{
    std::vector<Rational> c;
    c.reserve(t.coeffs().size());
    for (const auto& q : t.coeffs()) {
        c.push_back(q(y0));
    }
    return ConstCoeffOp(std::move(c));
}

MultiPoly truncated_symbol(const WeylOp& t, unsigned m)
{
    MultiPoly out(2);
    const int top = std::min(static_cast<int>(m), t.order());
    for (int i = 0; i <= top; ++i) {
        const UniPoly& q = t.coeffs()[static_cast<std::size_t>(i)];
        for (int k = 0; k <= q.degree(); ++k) {
            out.add_term({static_cast<unsigned>(i), static_cast<unsigned>(k)}, q.coeff(k));
        }
    }
    return out;
}

UniPoly truncated_symbol_at(const WeylOp& t, unsigned m, const Rational& y0)
{
    std::vector<Rational> c;
    const int top = std::min(static_cast<int>(m), t.order());
    for (int i = 0; i <= top; ++i) {
        c.push_back(t.coeffs()[static_cast<std::size_t>(i)](y0));
    }
    return UniPoly(std::move(c));
}

Rational ff_pairing(const WeylOp& t, const UniPoly& f, const Rational& y0, const Rational& a)
{
    const int d = std::max({f.degree(), t.order(), 0});
    return ff_inner(truncated_symbol_at(t, static_cast<unsigned>(d), y0), f.taylor_shift(a));
}

WeylOp conjugate_by_shift(const WeylOp& t, const Rational& a)
{
    std::vector<UniPoly> c;
    c.reserve(t.coeffs().size());
    for (const auto& q : t.coeffs()) {
        c.push_back(q.taylor_shift(-a));
    }
    return WeylOp(std::move(c));
}

RationalMatrix matrix_from_operator(const WeylOp& t, unsigned d)
{
    std::vector<UniPoly> images;
    int rows = static_cast<int>(d) + 1;
    for (unsigned j = 0; j <= d; ++j) {
        images.push_back(apply(t, UniPoly::monomial(j)));
        rows = std::max(rows, images.back().degree() + 1);
    }
    RationalMatrix m = RationalMatrix::Zero(rows, d + 1);
    for (unsigned j = 0; j <= d; ++j) {
        for (int i = 0; i <= images[j].degree(); ++i) {
            m(i, j) = images[j].coeff(i);
        }
    }
    return m;
}

WeylOp operator_from_matrix(const RationalMatrix& action)
{
    // T(x^j) = sum_{i<=j} q_i (j)_i x^{j-i}, so q_j is determined by the
    // image of x^j once q_0..q_{j-1} are known.
    std::vector<UniPoly> q;
    for (Eigen::Index j = 0; j < action.cols(); ++j) {
        std::vector<Rational> col(static_cast<std::size_t>(action.rows()));
        for (Eigen::Index i = 0; i < action.rows(); ++i) {
            col[static_cast<std::size_t>(i)] = action(i, j);
        }
        UniPoly rest(std::move(col));
        const auto uj = static_cast<unsigned>(j);
        for (unsigned i = 0; i < uj; ++i) {
            rest -= q[i] * UniPoly::monomial(uj - i, falling_factorial(uj, i));
        }
        q.push_back(rest * (Rational(1) / factorial(uj)));
    }
    return WeylOp(std::move(q));
}

MultiWeylOp MultiWeylOp::identity(std::size_t arity)
{
    MultiWeylOp t(arity);
    t.add_term(Exponent(arity, 0), MultiPoly(arity, Rational(1)));
    return t;
}

MultiWeylOp MultiWeylOp::from_univariate(const WeylOp& t)
{
    MultiWeylOp out(1);
    for (int i = 0; i <= t.order(); ++i) {
        out.add_term({static_cast<unsigned>(i)}, MultiPoly::from_uni(t.coeff(i), 1, 0));
    }
    return out;
}

bool MultiWeylOp::has_constant_coefficients() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_constant(); });
}

MultiPoly MultiWeylOp::coeff(const Exponent& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? MultiPoly(arity_) : it->second;
}

Exponent MultiWeylOp::order() const
{
    Exponent o(arity_, 0);
    for (const auto& [alpha, q] : terms_) {
        for (std::size_t i = 0; i < arity_; ++i) {
            o[i] = std::max(o[i], alpha[i]);
        }
    }
    return o;
}

void MultiWeylOp::add_term(const Exponent& alpha, const MultiPoly& q)
{
    if (alpha.size() != arity_ || q.arity() != arity_) {
        throw std::invalid_argument("operator term arity mismatch");
    }
    if (q.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(alpha, q);
    if (!inserted) {
        it->second += q;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultiPoly mv_apply(const MultiWeylOp& t, const MultiPoly& f)
{
    if (t.arity() != f.arity()) {
        throw std::invalid_argument("operator/polynomial arity mismatch");
    }
    const Exponent fdeg = f.multidegree();
    MultiPoly out(f.arity());
    for (const auto& [alpha, q] : t.terms()) {
        if (!dominated_by(alpha, fdeg)) {
            continue;
        }
        out += q * f.derivative(alpha);
    }
    return out;
}

MultiWeylOp mv_specialize(const MultiWeylOp& t, std::span<const Rational> y0)
{
    if (y0.size() != t.arity()) {
        throw std::invalid_argument("specialization point arity mismatch");
    }
    MultiWeylOp out(t.arity());
    for (const auto& [alpha, q] : t.terms()) {
        out.add_term(alpha, MultiPoly(t.arity(), q(y0)));
    }
    return out;
}

MultiPoly mv_truncated_symbol(const MultiWeylOp& t, const Exponent& alpha)
{
    const std::size_t n = t.arity();
    if (alpha.size() != n) {
        throw std::invalid_argument("truncation index arity mismatch");
    }
    MultiPoly out(2 * n);
    for (const auto& [beta, q] : t.terms()) {
        if (!dominated_by(beta, alpha)) {
            continue;
        }
        for (const auto& [e, c] : q.terms()) {
            Exponent full(beta);
            full.insert(full.end(), e.begin(), e.end());
            out.add_term(full, c);
        }
    }
    return out;
}

Rational mv_ff_pairing(const MultiWeylOp& t, const MultiPoly& f, std::span<const Rational> y0,
                       std::span<const Rational> a)
{
    if (f.arity() != t.arity()) {
        throw std::invalid_argument("operator/polynomial arity mismatch");
    }
    Exponent alpha = f.multidegree();
    const Exponent ord = t.order();
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        alpha[i] = std::max(alpha[i], ord[i]);
    }
    const MultiPoly symbol = mv_truncated_symbol(t, alpha).evaluate_tail(t.arity(), y0);
    return ff_inner(symbol, f.taylor_shift(a));
}

} // namespace posop
