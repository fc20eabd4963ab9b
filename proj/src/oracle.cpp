#include "posop/oracle.hpp"

#include <stdexcept>

namespace posop {

void validate(const SampleSpec& sampling)
{
    if (sampling.degree_bound < 0 || sampling.squares == 0 || sampling.height == 0 || sampling.trials == 0) {
        throw std::invalid_argument("sampling settings need d >= 0 and positive squares, height and trials");
    }
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index)
{
    // splitmix64 finaliser
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

Rational random_int(std::mt19937_64& rng, unsigned height)
{
    const long h = static_cast<long>(height);
    return Rational(std::uniform_int_distribution<long>(-h, h)(rng));
}

Rational random_positive(std::mt19937_64& rng, unsigned height)
{
    std::uniform_int_distribution<long> dist(1, static_cast<long>(height));
    const long p = dist(rng);
    const long q = dist(rng);
    return Rational(p) / Rational(q);
}

} // namespace

SosSample random_sos(const SampleSpec& sampling, std::mt19937_64& rng)
{
    validate(sampling);
    const int half = sampling.degree_bound / 2;
    SosSample s;
    for (unsigned j = 0; j < sampling.squares; ++j) {
        std::vector<Rational> c(static_cast<std::size_t>(half) + 1);
        for (auto& v : c) {
            v = random_int(rng, sampling.height);
        }
        UniPoly g(std::move(c));
        s.f += g * g;
        s.roots.push_back(std::move(g));
    }
    return s;
}

SosSample random_sos(const SampleSpec& sampling)
{
    std::mt19937_64 rng(sampling.seed);
    return random_sos(sampling, rng);
}

std::optional<Witness> falsify_preservation(const WeylOp& t, int d, Cone cone, const SampleSpec& sampling)
{
    SampleSpec s = sampling;
    s.degree_bound = d;
    validate(s);
    for (unsigned trial = 0; trial < s.trials; ++trial) {
        std::mt19937_64 rng(trial_seed(s.seed, trial));
        auto sample = random_sos(s, rng);
        Witness w;
        w.h = std::move(sample.f);
        for (auto& g : sample.roots) {
            w.squares.push_back({Rational(1), std::move(g)});
        }
        w.degree_bound = d;
        // ELL samples stay positive: T(-h) = -T(h) has the same zeros.
        if (cone != Cone::SOS) {
            w.epsilon = random_positive(rng, s.height);
            w.h += UniPoly(w.epsilon);
        }
        const UniPoly image = apply(t, w.h);
        switch (cone) {
        case Cone::SOS: {
            const auto dec = nonneg_on_R(image);
            if (dec.holds) {
                continue;
            }
            w.point = dec.point;
            break;
        }
        case Cone::POS: {
            const auto dec = positive_on_R(image);
            if (dec.holds) {
                continue;
            }
            w.point = dec.point;
            break;
        }
        case Cone::ELL:
            if (!has_real_zero(image)) {
                continue;
            }
            w.point = rational_real_zero(image);
            break;
        }
        w.value = w.point ? image(*w.point) : Rational(0);
        w.shift = Rational(0);
        return w;
    }
    return std::nullopt;
}

bool verify_witness(const WeylOp& t, const Witness& w, Cone cone)
{
    if (w.epsilon.sign() < 0) {
        return false;
    }
    for (const auto& sq : w.squares) {
        if (sq.weight.sign() < 0) {
            return false;
        }
    }
    if (declared_sum(w) != w.h || w.h.degree() > w.degree_bound) {
        return false;
    }
    const UniPoly image = apply(t, w.h);
    if (w.point && image(*w.point) != w.value) {
        return false;
    }
    switch (cone) {
    case Cone::SOS:
        return w.point.has_value() && w.value.sign() < 0;
    case Cone::POS:
        if (!positive_on_R(w.h).holds) {
            return false;
        }
        return w.point ? w.value.sign() <= 0 : !positive_on_R(image).holds;
    case Cone::ELL:
        if (has_real_zero(w.h) || !has_real_zero(image)) {
            return false;
        }
        return !w.point || w.value.is_zero();
    }
    return false;
}

MvSosSample random_mv_sos(const Exponent& alpha, const SampleSpec& sampling, std::mt19937_64& rng)
{
    validate(sampling);
    MvSosSample s{MultiPoly(alpha.size()), {}};
    const auto support = exponents_below(alpha);
    for (unsigned j = 0; j < sampling.squares; ++j) {
        MultiPoly g(alpha.size());
        for (const auto& beta : support) {
            g.add_term(beta, random_int(rng, sampling.height));
        }
        s.f += g * g;
        s.roots.push_back(std::move(g));
    }
    return s;
}

std::optional<MvWitness> mv_falsify_preservation(const MultiWeylOp& t, const Exponent& alpha,
                                                 const SampleSpec& sampling, unsigned grid_radius)
{
    validate(sampling);
    if (alpha.size() != t.arity()) {
        throw std::invalid_argument("mv_falsify_preservation: arity mismatch");
    }
    const std::size_t n = alpha.size();
    // Grid points as offsets in {0..2R}^n.
    const auto grid = exponents_below(Exponent(n, 2 * grid_radius));
    for (unsigned trial = 0; trial < sampling.trials; ++trial) {
        std::mt19937_64 rng(trial_seed(sampling.seed, trial));
        auto sample = random_mv_sos(alpha, sampling, rng);
        const MultiPoly image = mv_apply(t, sample.f);
        for (const auto& offset : grid) {
            std::vector<Rational> pt(n);
            for (std::size_t i = 0; i < n; ++i) {
                pt[i] = Rational(static_cast<long>(offset[i]) - static_cast<long>(grid_radius));
            }
            const Rational v = image(pt);
            if (v.sign() < 0) {
                return MvWitness{std::move(sample.f), std::move(sample.roots), std::move(pt), v};
            }
        }
    }
    return std::nullopt;
}

} // namespace posop
