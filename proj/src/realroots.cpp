#include "posop/realroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace posop {

SquarefreeDecomposition squarefree_decompose(const UniPoly& p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("square-free decomposition of the zero polynomial");
    }
    SquarefreeDecomposition out{p.leading(), {}};
    if (p.degree() == 0) {
        return out;
    }
    // Yun's algorithm (characteristic zero).
    const UniPoly f = p.monic();
    const UniPoly df = f.derivative();
    const UniPoly a0 = gcd(f, df);
    UniPoly b = exact_div(f, a0);
    UniPoly c = exact_div(df, a0);
    UniPoly d = c - b.derivative();
    for (unsigned i = 1; b.degree() > 0; ++i) {
        const UniPoly a = gcd(b, d);
        if (a.degree() > 0) {
            out.factors.push_back({a, i});
        }
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("square-free part of the zero polynomial");
    }
    return exact_div(p, gcd(p, p.derivative())).monic();
}

bool is_squarefree(const UniPoly& p)
{
    return !p.is_zero() && gcd(p, p.derivative()).degree() == 0;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p)
{
    std::vector<UniPoly> chain;
    if (p.is_zero()) {
        return chain;
    }
    auto normalise = [](UniPoly q) { return q * (Rational(1) / q.leading().abs()); };
    chain.push_back(normalise(p));
    UniPoly d = p.derivative();
    if (d.is_zero()) {
        return chain;
    }
    chain.push_back(normalise(d));
    while (true) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) {
            break;
        }
        chain.push_back(normalise(-r));
    }
    return chain;
}

namespace {

int sign_changes(const std::vector<int>& signs)
{
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

int variations_at(const std::vector<UniPoly>& chain, const Rational& x)
{
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& q : chain) {
        s.push_back(q(x).sign());
    }
    return sign_changes(s);
}

int variations_at_infinity(const std::vector<UniPoly>& chain, bool positive)
{
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& q : chain) {
        int sg = q.leading().sign();
        if (!positive && q.degree() % 2 != 0) {
            sg = -sg;
        }
        s.push_back(sg);
    }
    return sign_changes(s);
}

int count_between(const std::vector<UniPoly>& chain, const Interval& iv)
{
    const int v_lo = iv.lo ? variations_at(chain, *iv.lo) : variations_at_infinity(chain, false);
    const int v_hi = iv.hi ? variations_at(chain, *iv.hi) : variations_at_infinity(chain, true);
    return v_lo - v_hi;
}

} // namespace

int sturm_count(const UniPoly& p, const Interval& interval)
{
    if (!is_squarefree(p)) {
        throw std::invalid_argument("sturm_count requires a square-free polynomial");
    }
    if (interval.lo && interval.hi && *interval.hi < *interval.lo) {
        throw std::invalid_argument("sturm_count: empty interval");
    }
    return count_between(sturm_chain(p), interval);
}

Rational root_bound(const UniPoly& p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("root bound of the zero polynomial");
    }
    Rational m;
    for (int i = 0; i < p.degree(); ++i) {
        m = std::max(m, (p.coeff(i) / p.leading()).abs());
    }
    return Rational(mpz_class((Rational(1) + m).ceil()));
}

RootIsolation isolate_real_roots(const UniPoly& p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("root isolation of the zero polynomial");
    }
    RootIsolation out;
    if (p.degree() == 0) {
        return out;
    }
    const UniPoly sf = squarefree_part(p);
    const auto chain = sturm_chain(sf);
    const Rational bound = root_bound(sf);

    struct Pending {
        Rational lo, hi;
        int count;
    };
    std::vector<Pending> stack;
    const int total = count_between(chain, {-bound, bound});
    if (total > 0) {
        stack.push_back({-bound, bound, total});
    }
    std::vector<std::pair<Rational, Rational>> found;
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        if (cur.count == 1) {
            found.emplace_back(cur.lo, cur.hi);
            continue;
        }
        const Rational width = cur.hi - cur.lo;
        Rational mid = cur.lo + width / Rational(2);
        // Split points must avoid roots; finitely many roots, so this terminates.
        for (unsigned k = 2; sf(mid).is_zero(); ++k) {
            mid = cur.lo + width / Rational(2) + width / Rational(mpz_class(mpz_class(1) << k));
        }
        const int left = count_between(chain, {cur.lo, mid});
        const int right = cur.count - left;
        if (right > 0) {
            stack.push_back({mid, cur.hi, right});
        }
        if (left > 0) {
            stack.push_back({cur.lo, mid, left});
        }
    }
    std::sort(found.begin(), found.end());

    const auto dec = squarefree_decompose(p);
    std::vector<std::vector<UniPoly>> factor_chains;
    for (const auto& f : dec.factors) {
        factor_chains.push_back(sturm_chain(f.factor));
    }
    for (const auto& [lo, hi] : found) {
        unsigned mult = 0;
        for (std::size_t i = 0; i < dec.factors.size(); ++i) {
            if (count_between(factor_chains[i], {lo, hi}) > 0) {
                mult = dec.factors[i].multiplicity;
                break;
            }
        }
        out.roots.push_back({lo, hi, mult});
    }
    return out;
}

RootIsolation::Entry refine_root(const UniPoly& p, RootIsolation::Entry entry, const Rational& width)
{
    const UniPoly sf = squarefree_part(p);
    int s_lo = sf(entry.lo).sign();
    while (entry.hi - entry.lo >= width) {
        const Rational mid = (entry.lo + entry.hi) / Rational(2);
        const int s_mid = sf(mid).sign();
        if (s_mid == 0) {
            const Rational quarter = (entry.hi - entry.lo) / Rational(4);
            Rational step = std::min(quarter, width / Rational(4));
            entry.lo = mid - step;
            entry.hi = mid + step;
            break;
        }
        if (s_mid == s_lo) {
            entry.lo = mid;
            s_lo = s_mid;
        } else {
            entry.hi = mid;
        }
    }
    return entry;
}

std::optional<Rational> rational_root_in(const UniPoly& p, const RootIsolation::Entry& entry)
{
    const UniPoly sf = squarefree_part(p);
    // Rational roots a/b of sf have b dividing the lcm of its coefficient
    // denominators (sf is monic); two such fractions are >= 1/L^2 apart.
    mpz_class lcm_den = 1;
    for (const auto& c : sf.coeffs()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.value().get_den_mpz_t());
    }
    const Rational gap(mpz_class(1), lcm_den * lcm_den);
    const auto fine = refine_root(sf, entry, gap);
    const Rational candidate = simplest_between(fine.lo, fine.hi);
    if (sf(candidate).is_zero()) {
        return candidate;
    }
    return std::nullopt;
}

namespace {

std::optional<Rational> negative_point(const UniPoly& p)
{
    if (p.degree() <= 0) {
        return p.leading().sign() < 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    }
    const Rational b = root_bound(p);
    if (p.leading().sign() < 0) {
        return b;
    }
    if (p.degree() % 2 != 0) {
        return -b;
    }
    // Signs are constant between isolated roots and interval endpoints are
    // never roots, so the endpoints see every sign p takes.
    for (const auto& r : isolate_real_roots(p).roots) {
        if (p(r.lo).sign() < 0) {
            return r.lo;
        }
        if (p(r.hi).sign() < 0) {
            return r.hi;
        }
    }
    return std::nullopt;
}

} // namespace

SignDecision nonneg_on_R(const UniPoly& p)
{
    if (p.is_zero()) {
        return {true, std::nullopt, std::nullopt};
    }
    if (p.leading().sign() > 0 && p.degree() % 2 == 0) {
        UniPoly odd_part(1);
        for (const auto& f : squarefree_decompose(p).factors) {
            if (f.multiplicity % 2 != 0) {
                odd_part *= f.factor;
            }
        }
        if (odd_part.degree() == 0 || sturm_count(odd_part) == 0) {
            return {true, std::nullopt, std::nullopt};
        }
    }
    auto x0 = negative_point(p);
    if (!x0) {
        throw std::logic_error("nonneg_on_R: failed to locate a negative value");
    }
    return {false, x0, std::nullopt};
}

SignDecision positive_on_R(const UniPoly& p)
{
    if (p.is_zero()) {
        return {false, Rational(0), std::nullopt};
    }
    if (p.leading().sign() > 0 && p.degree() % 2 == 0) {
        if (p.degree() == 0 || sturm_count(squarefree_part(p)) == 0) {
            return {true, std::nullopt, std::nullopt};
        }
    }
    if (auto x0 = negative_point(p)) {
        return {false, x0, std::nullopt};
    }
    // Nonnegative with real zeros: report a rational zero when there is one.
    const auto iso = isolate_real_roots(p);
    for (const auto& r : iso.roots) {
        if (auto z = rational_root_in(p, r)) {
            return {false, z, std::nullopt};
        }
    }
    return {false, std::nullopt, iso.roots.front()};
}

bool has_real_zero(const UniPoly& p)
{
    if (p.is_zero()) {
        return true;
    }
    if (p.degree() == 0) {
        return false;
    }
    return sturm_count(squarefree_part(p)) > 0;
}

std::optional<Rational> rational_real_zero(const UniPoly& p)
{
    if (p.is_zero()) {
        return Rational(0);
    }
    if (p.degree() == 0) {
        return std::nullopt;
    }
    const UniPoly sf = squarefree_part(p);
    for (const auto& r : isolate_real_roots(sf).roots) {
        if (auto z = rational_root_in(sf, r)) {
            return z;
        }
    }
    return std::nullopt;
}

} // namespace posop
