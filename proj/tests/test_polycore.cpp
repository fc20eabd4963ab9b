#include <doctest.h>

#include "posop/matrix.hpp"
#include "posop/multipoly.hpp"
#include "posop/realroots.hpp"
#include "support/naive.hpp"

using namespace posop;

namespace {

const UniPoly X = UniPoly::x();

Rational q(long p, long d = 1) { return Rational(p) / Rational(d); }

bool all_zero(const RationalVector& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!v(i).is_zero()) {
            return false;
        }
    }
    return true;
}

/// prod (x - r_i)
UniPoly from_roots(const std::vector<Rational>& roots)
{
    UniPoly p(1);
    for (const auto& r : roots) {
        p *= X - UniPoly(r);
    }
    return p;
}

} // namespace

TEST_CASE("rational parsing and arithmetic")
{
    CHECK(Rational::parse("3/6") == q(1, 2));
    CHECK(Rational::parse("-4") == q(-4));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS(Rational::parse("abc"));
    CHECK(q(7, 2).floor() == 3);
    CHECK(q(-7, 2).ceil() == -3);
    CHECK(falling_factorial(5, 2) == q(20));
    CHECK(binomial(6, 3) == q(20));
    CHECK(factorial(0) == q(1));
}

TEST_CASE("simplest rational in an interval")
{
    CHECK(simplest_between(q(1, 3), q(1, 2)) == q(1, 2));
    CHECK(simplest_between(q(3, 10), q(4, 10)) == q(1, 3));
    CHECK(simplest_between(q(-5, 2), q(-3, 2)) == q(-2));
    CHECK(simplest_between(q(-1), q(1)) == q(0));
    // brute force: smallest denominator in the interval
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = naive::random_rational(rng, 50, 30);
        Rational b = naive::random_rational(rng, 50, 30);
        if (b < a) {
            std::swap(a, b);
        }
        const Rational s = simplest_between(a, b);
        REQUIRE(a <= s);
        REQUIRE(s <= b);
        const long den = s.value().get_den().get_si();
        for (long d = 1; d < den; ++d) {
            // no fraction with a smaller denominator fits
            const Rational lo = a * Rational(d);
            CHECK(Rational(mpz_class(lo.ceil())) > b * Rational(d));
        }
    }
}

TEST_CASE("univariate arithmetic")
{
    CHECK((X + UniPoly(1)) * (X - UniPoly(1)) == X * X - UniPoly(1));
    CHECK(X * X + UniPoly() == X * X);
    CHECK((X * q(1, 2)) * q(2) == X);
    CHECK((X * X - UniPoly(1))(q(2)) == q(3));
    CHECK(pow(X, 4).derivative(2) == pow(X, 2) * q(12));
    CHECK(UniPoly(q(5)).derivative().is_zero());
    CHECK((X * X).taylor_shift(q(1)) == X * X + X * q(2) + UniPoly(1));
    CHECK(UniPoly().degree() == UniPoly::kZeroDegree);
}

TEST_CASE("univariate operations agree with coefficient-level references")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const UniPoly f = naive::random_poly(rng, 6, 9);
        const UniPoly g = naive::random_poly(rng, 4, 9);
        const Rational a = naive::random_rational(rng, 9, 5);
        const Rational b = naive::random_rational(rng, 9, 5);
        CHECK(naive::coeffs_of(f * g) == naive::mul(naive::coeffs_of(f), naive::coeffs_of(g)));
        CHECK(f(a) == naive::eval(naive::coeffs_of(f), a));
        CHECK(naive::coeffs_of(f.taylor_shift(a)) == naive::coeffs_of(UniPoly(naive::shift(naive::coeffs_of(f), a))));
        CHECK(f.taylor_shift(a).taylor_shift(b) == f.taylor_shift(a + b));
        CHECK(f.taylor_shift(a).taylor_shift(-a) == f);
        CHECK(naive::coeffs_of(f.derivative(2)) == naive::coeffs_of(UniPoly(naive::derive(naive::coeffs_of(f), 2))));
        if (!g.is_zero()) {
            const auto [quo, rem] = divmod(f, g);
            CHECK(quo * g + rem == f);
            CHECK(rem.degree() < g.degree());
            CHECK(exact_div(f * g, g) == f);
        }
        const auto eg = extended_gcd(f, g);
        CHECK(eg.s * f + eg.t * g == eg.gcd);
        if (!eg.gcd.is_zero()) {
            CHECK(divmod(f, eg.gcd).second.is_zero());
            CHECK(divmod(g, eg.gcd).second.is_zero());
        }
        CHECK(ff_inner(f, g) == naive::ff(naive::coeffs_of(f), naive::coeffs_of(g)));
        CHECK(ff_inner(f, g) == ff_inner(g, f));
        CHECK(ff_inner(f * a + g, g) == a * ff_inner(f, g) + ff_inner(g, g));
    }
    CHECK_THROWS_AS(exact_div(X * X + UniPoly(1), X), std::logic_error);
}

TEST_CASE("Fischer-Fock pairing on monomials")
{
    CHECK(ff_inner(UniPoly(1), UniPoly(1)) == q(1));
    CHECK(ff_inner(X, X * X) == q(0));
    CHECK(ff_inner(X * X, X * X) == q(2));
    for (unsigned a = 0; a < 6; ++a) {
        for (unsigned b = 0; b < 6; ++b) {
            CHECK(ff_inner(pow(X, a), pow(X, b)) == (a == b ? factorial(a) : q(0)));
        }
    }
}

TEST_CASE("square-free decomposition")
{
    const UniPoly x2m1 = X * X - UniPoly(1);
    auto d = squarefree_decompose(pow(x2m1, 2));
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].factor == x2m1);
    CHECK(d.factors[0].multiplicity == 2);
    CHECK(d.leading == q(1));

    d = squarefree_decompose(pow(X, 3));
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].factor == X);
    CHECK(d.factors[0].multiplicity == 3);

    d = squarefree_decompose(pow(X, 3) - X);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].multiplicity == 1);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly p = naive::random_poly(rng, 2, 4) * pow(naive::random_poly(rng, 2, 4), 2) *
                    pow(naive::random_poly(rng, 1, 4), 3);
        if (p.is_zero()) {
            continue;
        }
        const auto dec = squarefree_decompose(p);
        UniPoly back(dec.leading);
        for (const auto& f : dec.factors) {
            back *= pow(f.factor, f.multiplicity);
            CHECK(is_squarefree(f.factor));
        }
        CHECK(back == p);
    }
}

TEST_CASE("Sturm counts")
{
    CHECK(sturm_count(X * X - UniPoly(2)) == 2);
    CHECK(sturm_count(X * X + UniPoly(1)) == 0);
    CHECK(sturm_count(X, Interval{q(0), q(5)}) == 0);
    CHECK(sturm_count(X, Interval{q(-1), q(0)}) == 1);
    CHECK_THROWS_AS(sturm_count(pow(X, 2)), std::invalid_argument);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> roots;
        const int n = std::uniform_int_distribution<int>(0, 5)(rng);
        for (int i = 0; i < n; ++i) {
            roots.push_back(naive::random_rational(rng, 20, 6));
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        // an irreducible quadratic factor adds no real roots
        const UniPoly p = from_roots(roots) * (X * X + UniPoly(q(1, 3)));
        CHECK(sturm_count(p) == static_cast<int>(roots.size()));
        const auto iso = isolate_real_roots(p);
        REQUIRE(iso.roots.size() == roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(iso.roots[i].lo < roots[i]);
            CHECK(roots[i] < iso.roots[i].hi);
            CHECK(rational_root_in(p, iso.roots[i]) == roots[i]);
        }
    }
}

TEST_CASE("root isolation")
{
    auto iso = isolate_real_roots(X * X - UniPoly(2));
    REQUIRE(iso.roots.size() == 2);
    for (const auto& e : iso.roots) {
        // sign change across each interval, no root at the endpoints
        const UniPoly p = X * X - UniPoly(2);
        CHECK(p(e.lo).sign() * p(e.hi).sign() < 0);
        CHECK(e.multiplicity == 1);
        CHECK_FALSE(rational_root_in(p, e).has_value());
        const auto fine = refine_root(p, e, q(1, 1000));
        CHECK(fine.hi - fine.lo < q(1, 1000));
        CHECK(p(fine.lo).sign() * p(fine.hi).sign() < 0);
    }
    CHECK(isolate_real_roots(X * X + UniPoly(1)).roots.empty());
    iso = isolate_real_roots(pow(X - UniPoly(1), 2));
    REQUIRE(iso.roots.size() == 1);
    CHECK(iso.roots[0].multiplicity == 2);
    CHECK(iso.roots[0].lo < q(1));
    CHECK(q(1) < iso.roots[0].hi);
}

TEST_CASE("global sign decisions")
{
    CHECK(nonneg_on_R(X * X + UniPoly(1)).holds);
    auto d = nonneg_on_R(pow(X, 3));
    CHECK_FALSE(d.holds);
    CHECK(d.point == q(-1));
    d = nonneg_on_R(-(X * X));
    CHECK_FALSE(d.holds);
    CHECK(d.point == q(1));
    d = nonneg_on_R(UniPoly(-3));
    CHECK(d.point == q(0));
    CHECK(nonneg_on_R(pow(X * X - UniPoly(2), 2)).holds);
    CHECK(nonneg_on_R(UniPoly()).holds);

    CHECK(positive_on_R(X * X + UniPoly(1)).holds);
    CHECK(positive_on_R(UniPoly(5)).holds);
    d = positive_on_R(X * X);
    CHECK_FALSE(d.holds);
    CHECK(d.point == q(0));
    d = positive_on_R(UniPoly());
    CHECK_FALSE(d.holds);
    CHECK(d.point == q(0));
    // zeros only at +-sqrt(2): no rational point, an isolating interval instead
    d = positive_on_R(pow(X * X - UniPoly(2), 2));
    CHECK_FALSE(d.holds);
    CHECK_FALSE(d.point.has_value());
    REQUIRE(d.zero_interval.has_value());
    CHECK(sturm_count(X * X - UniPoly(2), Interval{d.zero_interval->lo, d.zero_interval->hi}) == 1);

    CHECK(has_real_zero(X));
    CHECK_FALSE(has_real_zero(X * X + UniPoly(1)));
    CHECK(rational_real_zero(X * X - UniPoly(q(1, 4))).has_value());
}

TEST_CASE("sign decisions: squares are nonnegative, counterexamples are exact")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const UniPoly p = naive::random_poly(rng, std::uniform_int_distribution<int>(0, 7)(rng), 6);
        CHECK(nonneg_on_R(p * p).holds);
        const auto d = nonneg_on_R(p);
        if (!d.holds) {
            REQUIRE(d.point.has_value());
            CHECK(p(*d.point).sign() < 0);
        }
        const auto s = positive_on_R(p);
        if (!s.holds && s.point) {
            CHECK(p(*s.point).sign() <= 0);
        }
        if (!s.holds && !s.point) {
            CHECK(d.holds);  // only irrational zeros, so p does not change sign
        }
        if (!p.is_zero()) {
            const auto sf = squarefree_part(p);
            CHECK(sturm_count(sf) == static_cast<int>(isolate_real_roots(sf).roots.size()));
        }
    }
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        RationalMatrix m(n, n);
        naive::Square s(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                // sparse entries exercise the pivot swaps
                const bool zero = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
                m(i, j) = zero ? Rational(0) : naive::random_rational(rng, 5, 3);
                s[i][j] = m(i, j);
            }
        }
        CHECK(bareiss_determinant(m) == naive::laplace_det(s));
    }
    // polynomial entries: det(M(y)) evaluated equals det(M(y0))
    for (int trial = 0; trial < 30; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m(i, j) = naive::random_poly(rng, 2, 3);
            }
        }
        const UniPoly det = bareiss_determinant(m);
        for (int k = 0; k < 3; ++k) {
            const Rational y = naive::random_rational(rng, 5, 3);
            CHECK(det(y) == bareiss_determinant(evaluate(m, y)));
        }
    }
}

TEST_CASE("negative directions, echelon form, null space, solve")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                m(i, j) = m(j, i) = Rational(std::uniform_int_distribution<long>(-2, 3)(rng));
            }
        }
        naive::Square s(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                s[i][j] = m(i, j);
            }
        }
        const auto c = negative_direction(m);
        CHECK(c.has_value() != naive::psd_by_minors(s));
        if (c) {
            CHECK(quadratic_form(m, *c).sign() < 0);
        }
        const auto ech = row_echelon(m);
        const auto kernel = null_space(m);
        CHECK(ech.rank() + static_cast<Eigen::Index>(kernel.size()) == n);
        for (const auto& v : kernel) {
            CHECK(all_zero(m * v));
        }
        RationalVector b(n);
        for (int i = 0; i < n; ++i) {
            b(i) = Rational(i + 1);
        }
        const auto x = solve(m, b);
        CHECK(x.has_value() == (ech.rank() == n));
        if (x) {
            CHECK(all_zero(m * *x - b));
        }
    }
    // all-zero diagonal with an off-diagonal entry
    RationalMatrix z(2, 2);
    z << Rational(0), Rational(1), Rational(1), Rational(0);
    const auto c = negative_direction(z);
    REQUIRE(c.has_value());
    CHECK(quadratic_form(z, *c) == q(-2));
}

TEST_CASE("multivariate polynomials")
{
    const MultiPoly x1 = MultiPoly::monomial({1, 0});
    const MultiPoly x2 = MultiPoly::monomial({0, 1});
    const std::vector<Rational> pt{q(3), q(1, 3)};
    CHECK((x1 * x2)(pt) == q(1));
    CHECK((x1 * x1 * x2).derivative(0) == x1 * x2 * q(2));
    CHECK((x1 + MultiPoly(2, q(7)))(std::vector<Rational>{q(0), q(0)}) == q(7));
    CHECK(MultiPoly::from_uni(X * X, 2, 1) == x2 * x2);
    CHECK((x2 * x2 + x2).to_uni(1) == X * X + X);
    CHECK_THROWS_AS(x1 + MultiPoly::monomial({1, 0, 0}), std::invalid_argument);
    CHECK(pow(x1 * x1 * x2 * x2, 1).derivative(Exponent{1, 1}) == x1 * x2 * q(4));
    CHECK(ff_inner(x1 * x2, x1 * x2) == q(1));
    CHECK(ff_inner(x1 * x1, x1 * x1) == q(2));
    CHECK(exponents_below({1, 1}) == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(multi_falling_factorial({3, 2}, {2, 1}) == q(12));

    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        MultiPoly f(2);
        for (const auto& e : exponents_below({3, 3})) {
            f.add_term(e, Rational(std::uniform_int_distribution<long>(-3, 3)(rng)));
        }
        const std::vector<Rational> a{naive::random_rational(rng, 4, 3), naive::random_rational(rng, 4, 3)};
        const std::vector<Rational> b{naive::random_rational(rng, 4, 3), naive::random_rational(rng, 4, 3)};
        const std::vector<Rational> ab{a[0] + b[0], a[1] + b[1]};
        CHECK(f.taylor_shift(a)(b) == f(ab));
        CHECK(f(a) == naive::mv_eval(naive::mv_of(f), a));
    }
}
