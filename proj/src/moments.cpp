#include "posop/moments.hpp"

#include <algorithm>
#include <set>

#include "posop/hankel.hpp"

namespace posop {

AtomicMeasureFamily::AtomicMeasureFamily(std::vector<Atom> atoms) : atoms_(std::move(atoms))
{
    std::set<std::vector<Rational>> seen;
    for (const auto& a : atoms_) {
        if (a.point.empty() || a.point.size() != atoms_.front().point.size()) {
            throw std::invalid_argument("atoms must share a positive dimension");
        }
        if (!seen.insert(a.point).second) {
            throw std::invalid_argument("duplicate atom in measure family");
        }
    }
}

AtomicMeasureFamily AtomicMeasureFamily::univariate(const std::vector<Rational>& atoms,
                                                    const std::vector<UniPoly>& weights)
{
    if (atoms.size() != weights.size()) {
        throw std::invalid_argument("atom/weight count mismatch");
    }
    std::vector<Atom> v;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        v.push_back({{atoms[i]}, weights[i]});
    }
    return AtomicMeasureFamily(std::move(v));
}

std::size_t AtomicMeasureFamily::dimension() const
{
    return atoms_.empty() ? 1 : atoms_.front().point.size();
}

bool AtomicMeasureFamily::has_constant_weights() const
{
    return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.weight.is_constant(); });
}

namespace {

void require_univariate(const AtomicMeasureFamily& m)
{
    if (m.dimension() != 1) {
        throw std::invalid_argument("univariate measure family expected");
    }
}

} // namespace

RationalMatrix moment_hankel(const MomentSequence& a)
{
    if (a.values.empty() || a.values.size() % 2 == 0) {
        throw std::invalid_argument("moment Hankel matrix needs an odd number of moments a_0..a_2m");
    }
    const auto n = static_cast<Eigen::Index>(a.values.size() / 2 + 1);
    RationalMatrix h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            h(i, j) = a.values[static_cast<std::size_t>(i + j)];
        }
    }
    return h;
}

HamburgerResult hamburger_check(const MomentSequence& a)
{
    const RationalMatrix h = moment_hankel(a);
    for (const auto& s : principal_subsets(static_cast<int>(h.rows()))) {
        const Rational minor = bareiss_determinant(principal_submatrix(h, s));
        if (minor.sign() < 0) {
            return {false, s, minor};
        }
    }
    return {true, {}, Rational(0)};
}

MomentSequence moments_of_atomic(const AtomicMeasureFamily& m, const Rational& y0, unsigned count)
{
    require_univariate(m);
    MomentSequence out{std::vector<Rational>(count)};
    for (const auto& atom : m.atoms()) {
        const Rational w = atom.weight(y0);
        Rational power(1);
        for (unsigned i = 0; i < count; ++i) {
            out.values[i] += w * power;
            power *= atom.point[0];
        }
    }
    return out;
}

std::vector<UniPoly> symbolic_moments(const AtomicMeasureFamily& m, unsigned count)
{
    require_univariate(m);
    std::vector<UniPoly> out(count);
    for (const auto& atom : m.atoms()) {
        Rational power(1);
        for (unsigned i = 0; i < count; ++i) {
            out[i] += atom.weight * power;
            power *= atom.point[0];
        }
    }
    return out;
}

WeylOp conv_operator_from_measure(const AtomicMeasureFamily& m, unsigned max_order)
{
    auto q = symbolic_moments(m, max_order + 1);
    for (unsigned i = 0; i <= max_order; ++i) {
        q[i] *= Rational(1) / factorial(i);
    }
    return WeylOp(std::move(q));
}

MultiWeylOp mv_conv_operator_from_measure(const AtomicMeasureFamily& m, const Exponent& bound)
{
    if (!m.has_constant_weights()) {
        throw std::invalid_argument("multivariate convolution needs constant weights");
    }
    const std::size_t n = bound.size();
    if (!m.atoms().empty() && m.dimension() != n) {
        throw std::invalid_argument("atom dimension does not match the order bound");
    }
    MultiWeylOp out(n);
    for (const auto& alpha : exponents_below(bound)) {
        Rational moment;
        for (const auto& atom : m.atoms()) {
            Rational t = atom.weight.coeff(0);
            for (std::size_t i = 0; i < n; ++i) {
                t *= pow(atom.point[i], alpha[i]);
            }
            moment += t;
        }
        out.add_term(alpha, MultiPoly(n, moment / multi_factorial(alpha)));
    }
    return out;
}

UniPoly apply_convolution(const AtomicMeasureFamily& m, const UniPoly& f)
{
    require_univariate(m);
    if (!m.has_constant_weights()) {
        throw std::invalid_argument("apply_convolution needs constant weights");
    }
    UniPoly out;
    for (const auto& atom : m.atoms()) {
        out += f.taylor_shift(atom.point[0]) * atom.weight.coeff(0);
    }
    return out;
}

FamilyCheck measure_family_sos_check(const AtomicMeasureFamily& m)
{
    for (std::size_t k = 0; k < m.size(); ++k) {
        const auto d = nonneg_on_R(m.atoms()[k].weight);
        if (!d.holds) {
            return {false, k, d.point};
        }
    }
    return {};
}

namespace {

std::pair<Rational, Rational> interval_horner(const UniPoly& p, const Rational& lo, const Rational& hi)
{
    Rational acc_lo = p.leading();
    Rational acc_hi = p.leading();
    for (int i = p.degree() - 1; i >= 0; --i) {
        const Rational c[4] = {acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi};
        acc_lo = *std::min_element(std::begin(c), std::end(c)) + p.coeff(i);
        acc_hi = *std::max_element(std::begin(c), std::end(c)) + p.coeff(i);
    }
    return {acc_lo, acc_hi};
}

} // namespace

RecoveredMeasure recover_atoms(const MomentSequence& a)
{
    if (!hamburger_check(a).is_moment_sequence) {
        throw std::invalid_argument("recover_atoms: not a moment sequence");
    }
    const RationalMatrix h = moment_hankel(a);
    const auto r = row_echelon(h).rank();
    if (r == h.rows()) {
        throw NotFinitelyAtomic("not finitely atomic at this truncation: moment Hankel matrix has full rank");
    }
    RecoveredMeasure out;
    if (r == 0) {
        out.atom_polynomial = UniPoly(1);
        out.weights = std::vector<Rational>{};
        out.atoms = std::vector<Rational>{};
        return out;
    }
    const RationalMatrix lead = h.topLeftCorner(r, r);
    RationalVector rhs(r);
    for (Eigen::Index i = 0; i < r; ++i) {
        rhs(i) = -a.values[static_cast<std::size_t>(i + r)];
    }
    const auto phi = solve(lead, rhs);
    if (!phi) {
        throw NotFinitelyAtomic("not finitely atomic at this truncation: leading rank-r block is singular");
    }
    std::vector<Rational> c(phi->data(), phi->data() + r);
    c.emplace_back(1);
    // The kernel vector must generate a recurrence across every supplied moment.
    const std::size_t len = a.values.size();
    const auto ur = static_cast<std::size_t>(r);
    for (std::size_t i = 0; i + ur < len; ++i) {
        Rational s;
        for (std::size_t j = 0; j <= ur; ++j) {
            s += a.values[i + j] * c[j];
        }
        if (!s.is_zero()) {
            throw NotFinitelyAtomic("not finitely atomic at this truncation: moments violate the kernel recurrence");
        }
    }
    out.atom_polynomial = UniPoly(c);
    const UniPoly& p = out.atom_polynomial;
    if (!is_squarefree(p) || sturm_count(p) != static_cast<int>(r)) {
        throw NotFinitelyAtomic("not finitely atomic at this truncation: kernel polynomial lacks r distinct real roots");
    }
    out.atom_intervals = isolate_real_roots(p);

    // Weight at atom t: Q(t) / P'(t) with Q(s) = L_t[(P(t) - P(s)) / (t - s)].
    UniPoly q;
    for (std::size_t j = 1; j <= ur; ++j) {
        for (std::size_t l = 0; l < j; ++l) {
            q += UniPoly::monomial(static_cast<unsigned>(j - 1 - l), c[j] * a.values[l]);
        }
    }
    const auto eg = extended_gcd(p.derivative(), p);
    out.weight_polynomial = divmod(q * eg.s, p).second;

    std::vector<Rational> atoms;
    for (const auto& entry : out.atom_intervals.roots) {
        if (auto z = rational_root_in(p, entry)) {
            atoms.push_back(*z);
        }
    }
    if (atoms.size() == ur) {
        RationalMatrix v(r, r);
        RationalVector b(r);
        for (Eigen::Index i = 0; i < r; ++i) {
            for (Eigen::Index j = 0; j < r; ++j) {
                v(i, j) = pow(atoms[static_cast<std::size_t>(j)], static_cast<unsigned>(i));
            }
            b(i) = a.values[static_cast<std::size_t>(i)];
        }
        const auto w = solve(v, b);
        out.weights = std::vector<Rational>(w->data(), w->data() + r);
        for (std::size_t k = 0; k < ur; ++k) {
            if ((*out.weights)[k] != out.weight_polynomial(atoms[k])) {
                throw std::logic_error("recover_atoms: Vandermonde and interpolation weights disagree");
            }
            out.weight_enclosures.emplace_back((*out.weights)[k], (*out.weights)[k]);
        }
        out.atoms = std::move(atoms);
    } else {
        const Rational width(mpz_class(1), mpz_class(1) << 40);
        for (const auto& entry : out.atom_intervals.roots) {
            const auto fine = refine_root(p, entry, width);
            out.weight_enclosures.push_back(interval_horner(out.weight_polynomial, fine.lo, fine.hi));
        }
    }
    return out;
}

} // namespace posop
