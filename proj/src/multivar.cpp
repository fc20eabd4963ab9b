#include <algorithm>
#include "posop/multivar.hpp"

#include <random>
#include <stdexcept>

namespace posop {

KernelGram gram_kernel(const MultiWeylOp& t, const Exponent& alpha)
{
    if (alpha.size() != t.arity()) {
        throw std::invalid_argument("gram_kernel: multi-index arity mismatch");
    }
    KernelGram g;
    g.index = exponents_below(alpha);
    const auto n = static_cast<Eigen::Index>(g.index.size());
    g.symbolic.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const Exponent s = g.index[static_cast<std::size_t>(i)] + g.index[static_cast<std::size_t>(j)];
            g.symbolic(i, j) = t.coeff(s) * multi_factorial(s);
        }
    }
    return g;
}

RationalMatrix gram_kernel_at(const MultiWeylOp& t, const Exponent& alpha, std::span<const Rational> y0)
{
    if (y0.size() != t.arity()) {
        throw std::invalid_argument("gram_kernel_at: point arity mismatch");
    }
    return evaluate(gram_kernel(t, alpha).symbolic, y0);
}

KernelPsd psd_kernel_at(const MultiWeylOp& t, const Exponent& alpha, std::span<const Rational> y0)
{
    const auto res = psd_of(gram_kernel_at(t, alpha, y0));
    return {res.psd, res.direction, res.value};
}

MvWitness extract_mv_witness(const MultiWeylOp& t, const Exponent& alpha, std::span<const Rational> y0,
                             const RationalVector& c)
{
    const auto index = exponents_below(alpha);
    if (static_cast<std::size_t>(c.size()) != index.size()) {
        throw std::invalid_argument("extract_mv_witness: direction does not match the index set");
    }
    const Rational form = quadratic_form(gram_kernel_at(t, alpha, y0), c);
    if (form.sign() >= 0) {
        throw std::invalid_argument("extract_mv_witness: c^T G c is not negative");
    }
    MultiPoly g(t.arity());
    for (std::size_t i = 0; i < index.size(); ++i) {
        g.add_term(index[i], c(static_cast<Eigen::Index>(i)));
    }
    std::vector<Rational> back(y0.begin(), y0.end());
    for (auto& v : back) {
        v = -v;
    }
    const MultiPoly root = g.taylor_shift(back);
    MvWitness w{root * root, {root}, std::vector<Rational>(y0.begin(), y0.end()), Rational(0)};
    w.value = mv_apply(t, w.h)(w.point);
    if (w.value != form) {
        throw std::logic_error("extract_mv_witness: image value disagrees with the Gram form");
    }
    return w;
}

bool verify_mv_witness(const MultiWeylOp& t, const MvWitness& w)
{
    if (w.point.size() != t.arity() || w.h.arity() != t.arity()) {
        return false;
    }
    MultiPoly sum(t.arity());
    for (const auto& r : w.roots) {
        sum += r * r;
    }
    if (sum != w.h) {
        return false;
    }
    const Rational v = mv_apply(t, w.h)(w.point);
    return v == w.value && v.sign() < 0;
}

namespace {

std::optional<MvWitness> probe(const MultiWeylOp& t, const Exponent& alpha, const std::vector<Rational>& y)
{
    const auto k = psd_kernel_at(t, alpha, y);
    if (k.psd) {
        return std::nullopt;
    }
    return extract_mv_witness(t, alpha, y, k.direction);
}

} // namespace

FalsifyResult falsify_mv(const MultiWeylOp& t, const Exponent& alpha, const FalsifyBudget& budget)
{
    if (budget.grid_denominator == 0 || budget.random_height == 0) {
        throw std::invalid_argument("falsify_mv: budget denominators must be positive");
    }
    FalsifyResult out;
    out.seed = budget.seed;
    const std::size_t n = t.arity();
    const int r = static_cast<int>(budget.grid_radius);
    const Rational q(static_cast<long>(budget.grid_denominator));

    // Grid by shells max|num_i| = s for s = 0..R, lexicographic inside a shell,
    // so points near the origin come first.
    for (int shell = 0; shell <= r; ++shell) {
        std::vector<int> num(n, -shell);
        while (true) {
            const bool on_shell = shell == 0 ||
                std::any_of(num.begin(), num.end(), [&](int v) { return v == shell || v == -shell; });
            if (on_shell) {
                std::vector<Rational> y(n);
                for (std::size_t i = 0; i < n; ++i) {
                    y[i] = Rational(num[i]) / q;
                }
                ++out.points_scanned;
                if (auto w = probe(t, alpha, y)) {
                    out.witness = std::move(w);
                    return out;
                }
            }
            std::size_t i = n;
            bool advanced = false;
            while (i > 0) {
                --i;
                if (num[i] < shell) {
                    ++num[i];
                    for (std::size_t j = i + 1; j < n; ++j) {
                        num[j] = -shell;
                    }
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                break;
            }
        }
    }

    std::mt19937_64 rng(budget.seed);
    const long h = static_cast<long>(budget.random_height);
    std::uniform_int_distribution<long> numer(-h * h, h * h);
    std::uniform_int_distribution<long> denom(1, h);
    for (unsigned p = 0; p < budget.random_points; ++p) {
        std::vector<Rational> y(n);
        for (auto& v : y) {
            const long nu = numer(rng);
            const long de = denom(rng);
            v = Rational(nu) / Rational(de);
        }
        ++out.points_scanned;
        if (auto w = probe(t, alpha, y)) {
            out.witness = std::move(w);
            return out;
        }
    }
    return out;
}

MvVerdict constant_coeff_decide(const MultiWeylOp& t, const Exponent& alpha)
{
    if (!t.has_constant_coefficients()) {
        throw std::invalid_argument("constant_coeff_decide: operator has non-constant coefficients");
    }
    const std::vector<Rational> origin(t.arity());
    MvVerdict v;
    v.index = exponents_below(alpha);
    v.gram = gram_kernel_at(t, alpha, origin);
    const auto res = psd_of(v.gram);
    v.preserves = res.psd;
    if (!res.psd) {
        v.witness = extract_mv_witness(t, alpha, origin, res.direction);
    }
    return v;
}

DiagonalOp diagonal_from_measure(const AtomicMeasureFamily& nu, const Exponent& bound)
{
    if (!nu.has_constant_weights()) {
        throw std::invalid_argument("diagonal_from_measure needs constant weights");
    }
    if (!nu.atoms().empty() && nu.dimension() != bound.size()) {
        throw std::invalid_argument("atom dimension does not match the bound");
    }
    DiagonalOp d{bound, {}};
    for (const auto& beta : exponents_below(bound)) {
        Rational lambda;
        for (const auto& atom : nu.atoms()) {
            Rational term = atom.weight.coeff(0);
            for (std::size_t i = 0; i < beta.size(); ++i) {
                term *= pow(atom.point[i], beta[i]);
            }
            lambda += term;
        }
        d.eigenvalues.emplace(beta, lambda);
    }
    return d;
}

std::map<Exponent, Rational> diagonal_to_weyl(const DiagonalOp& lambda)
{
    std::map<Exponent, Rational> a;
    // Lexicographic order lists every alpha < beta before beta.
    for (const auto& beta : exponents_below(lambda.bound)) {
        auto it = lambda.eigenvalues.find(beta);
        if (it == lambda.eigenvalues.end()) {
            throw std::invalid_argument("diagonal_to_weyl: missing eigenvalue");
        }
        Rational rest = it->second;
        for (const auto& [alpha, value] : a) {
            if (dominated_by(alpha, beta)) {
                rest -= multi_falling_factorial(beta, alpha) * value;
            }
        }
        a.emplace(beta, rest / multi_factorial(beta));
    }
    std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
    return a;
}

DiagonalOp diagonal_from_generator(const std::map<Exponent, Rational>& a, const Exponent& bound)
{
    DiagonalOp d{bound, {}};
    for (const auto& beta : exponents_below(bound)) {
        Rational lambda;
        for (const auto& [alpha, value] : a) {
            if (dominated_by(alpha, beta)) {
                lambda += multi_falling_factorial(beta, alpha) * value;
            }
        }
        d.eigenvalues.emplace(beta, lambda);
    }
    return d;
}

MultiWeylOp weyl_from_generator(const std::map<Exponent, Rational>& a, std::size_t arity)
{
    MultiWeylOp t(arity);
    for (const auto& [alpha, value] : a) {
        t.add_term(alpha, MultiPoly::monomial(alpha, value));
    }
    return t;
}

MultiPoly apply_dilation_measure(const AtomicMeasureFamily& nu, const MultiPoly& f)
{
    if (!nu.has_constant_weights()) {
        throw std::invalid_argument("apply_dilation_measure needs constant weights");
    }
    MultiPoly out(f.arity());
    for (const auto& atom : nu.atoms()) {
        if (atom.point.size() != f.arity()) {
            throw std::invalid_argument("atom dimension does not match the polynomial");
        }
        for (const auto& [e, c] : f.terms()) {
            Rational scale = atom.weight.coeff(0) * c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                scale *= pow(atom.point[i], e[i]);
            }
            out.add_term(e, scale);
        }
    }
    return out;
}

} // namespace posop
