#include "posop/decide.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace posop {

std::string_view to_string(Cone cone)
{
    switch (cone) {
    case Cone::SOS:
        return "SOS";
    case Cone::POS:
        return "POS";
    case Cone::ELL:
        return "ELL";
    }
    return "?";
}

Cone parse_cone(std::string_view text)
{
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "sos") {
        return Cone::SOS;
    }
    if (s == "pos") {
        return Cone::POS;
    }
    if (s == "ell") {
        return Cone::ELL;
    }
    throw std::invalid_argument("unknown cone '" + std::string(text) + "' (expected sos, pos or ell)");
}

UniPoly declared_sum(const Witness& w)
{
    UniPoly s(w.epsilon);
    for (const auto& sq : w.squares) {
        s += sq.root * sq.root * sq.weight;
    }
    return s;
}

namespace {

int normalise_degree(int d, std::vector<std::string>& notices)
{
    if (d < 0) {
        throw std::invalid_argument("degree bound must be nonnegative");
    }
    if (d % 2 != 0) {
        notices.push_back("odd degree bound " + std::to_string(d) + " reduced to " + std::to_string(d - 1) +
                          " (the cones contain no polynomials of odd degree)");
        return d - 1;
    }
    return d;
}

PredicateReport compute_predicates(const WeylOp& t, int d, bool psd_all_y)
{
    PredicateReport r;
    r.psd_all_y = psd_all_y;
    const auto strict = strict_criteria(t, d);
    r.pd_all_y = strict.pd_all_y;
    r.det_positive_all_m = strict.det_positive_all_m;
    r.q0_positive = positive_on_R(t.coeff(0)).holds;
    r.q0_nonneg = nonneg_on_R(t.coeff(0)).holds;
    return r;
}

Verdict sos_core(const WeylOp& t, int d_in, Cone cone)
{
    Verdict v;
    v.cone = cone;
    const int d = normalise_degree(d_in, v.notices);
    v.degree_bound = d;
    v.truncated = t.order() > d;
    if (v.truncated) {
        v.notices.push_back("operator terms of order > " + std::to_string(d) +
                            " ignored (they annihilate polynomials of degree <= " + std::to_string(d) + ")");
    }
    const auto h = build_param_hankel(t, static_cast<unsigned>(d / 2));
    auto psd = psd_for_all_y(h);
    v.predicates = compute_predicates(t, d, psd.holds);
    if (psd.holds) {
        v.preserves = true;
        v.certificate = std::move(psd.minors);
        return v;
    }
    const Rational y0 = *psd.failure->failing_y;
    const auto at = psd_at_point(h, y0);
    if (at.psd) {
        throw std::logic_error("negative principal minor but PSD matrix at the same point");
    }
    v.certificate.push_back(*psd.failure);
    v.witness = extract_witness(t, d, y0, at.direction);
    return v;
}

/// Turns a SOS counterexample into a POS one by adding a small positive constant.
Witness upgrade_to_pos(const WeylOp& t, Witness w)
{
    const Rational x0 = *w.point;
    const Rational q0x = t.coeff(0)(x0);
    Rational eps = w.value.abs() / (Rational(2) * (Rational(1) + q0x.abs()));
    while (w.value + eps * q0x >= Rational(0)) {
        eps /= Rational(2);
    }
    w.epsilon += eps;
    w.h += UniPoly(eps);
    w.value = apply(t, w.h)(x0);
    if (w.value.sign() >= 0) {
        throw std::logic_error("POS witness upgrade failed");
    }
    return w;
}

Witness constant_one_witness(const WeylOp& t, int d, const SignDecision& q0_decision)
{
    Witness w;
    w.h = UniPoly(1);
    w.squares.push_back({Rational(1), UniPoly(1)});
    w.point = q0_decision.point;
    w.value = w.point ? t.coeff(0)(*w.point) : Rational(0);
    w.shift = w.point.value_or(Rational(0));
    w.degree_bound = d;
    return w;
}

/// Re-targets a POS-branch counterexample at ELL when its image has a real zero.
std::optional<Witness> as_ell_witness(const WeylOp& t, Witness w)
{
    const UniPoly image = apply(t, w.h);
    if (!has_real_zero(image)) {
        return std::nullopt;
    }
    w.point = rational_real_zero(image);
    w.value = w.point ? image(*w.point) : Rational(0);
    return w;
}

Witness combine_for_ell(const WeylOp& t, const Witness& neg, const Witness& pos, int d)
{
    // T(neg.h) < 0 and T(pos.h) > 0 on R: a convex combination vanishes at 0.
    const Rational u = apply(t, neg.h)(Rational(0));
    const Rational v = apply(t, pos.h)(Rational(0));
    const Rational s = u / (u - v);
    const Rational r = Rational(1) - s;
    Witness w;
    w.h = neg.h * r + pos.h * s;
    for (const auto& sq : neg.squares) {
        w.squares.push_back({sq.weight * r, sq.root});
    }
    for (const auto& sq : pos.squares) {
        w.squares.push_back({sq.weight * s, sq.root});
    }
    w.epsilon = neg.epsilon * r + pos.epsilon * s;
    w.point = Rational(0);
    w.value = apply(t, w.h)(Rational(0));
    w.shift = Rational(0);
    w.degree_bound = d;
    if (!w.value.is_zero()) {
        throw std::logic_error("ELL witness combination does not vanish");
    }
    return w;
}

} // namespace

Witness extract_witness(const WeylOp& t, int d, const Rational& y0, const RationalVector& c)
{
    const auto k = static_cast<unsigned>(c.size()) - 1;
    if (c.size() == 0 || static_cast<int>(2 * k) > d) {
        throw std::invalid_argument("extract_witness: direction too long for the degree bound");
    }
    const Rational form = quadratic_form(build_param_hankel(t, k).at(y0), c);
    if (form.sign() >= 0) {
        throw std::invalid_argument("extract_witness: c^T H c is not negative");
    }
    std::vector<Rational> gc(c.data(), c.data() + c.size());
    const UniPoly root = UniPoly(std::move(gc)).taylor_shift(-y0);
    Witness w;
    w.h = root * root;
    w.squares.push_back({Rational(1), root});
    w.point = y0;
    w.value = apply(t, w.h)(y0);
    w.shift = y0;
    w.degree_bound = d;
    if (w.value != form) {
        throw std::logic_error("extract_witness: image value disagrees with the Hankel form");
    }
    return w;
}

StrictCriteria strict_criteria(const WeylOp& t, int d)
{
    if (d < 0) {
        throw std::invalid_argument("degree bound must be nonnegative");
    }
    const auto k = static_cast<unsigned>(d / 2);
    StrictCriteria out;
    out.pd_all_y = pd_for_all_y(build_param_hankel(t, k)).holds;
    out.det_positive_all_m = true;
    for (unsigned m = 0; m <= k && out.det_positive_all_m; ++m) {
        const auto hm = build_param_hankel(t, m);
        out.det_positive_all_m = positive_on_R(bareiss_determinant(hm.entries())).holds;
    }
    return out;
}

Verdict decide_sos_bounded(const WeylOp& t, int d) { return sos_core(t, d, Cone::SOS); }

Verdict decide_pos_bounded(const WeylOp& t, int d)
{
    Verdict v = sos_core(t, d, Cone::POS);
    const auto q0 = positive_on_R(t.coeff(0));
    if (v.preserves && q0.holds) {
        return v;
    }
    const int bound = *v.degree_bound;
    if (!v.preserves) {
        v.witness = upgrade_to_pos(t, *v.witness);
    } else {
        v.preserves = false;
        v.certificate.clear();
        v.notices.push_back("T(1) = q0 is not positive on R");
        v.witness = constant_one_witness(t, bound, q0);
    }
    return v;
}

Verdict decide_ell_bounded(const WeylOp& t, int d)
{
    Verdict plus = decide_pos_bounded(t, d);
    if (plus.preserves) {
        plus.cone = Cone::ELL;
        return plus;
    }
    Verdict minus = decide_pos_bounded(-t, d);
    if (minus.preserves) {
        minus.cone = Cone::ELL;
        minus.notices.push_back("-T preserves POS");
        minus.predicates = plus.predicates;
        return minus;
    }
    Verdict v = plus;
    v.cone = Cone::ELL;
    v.branch_witnesses = {*plus.witness, *minus.witness};
    const int bound = *v.degree_bound;
    if (auto w = as_ell_witness(t, *plus.witness)) {
        v.witness = std::move(w);
    } else if (auto w2 = as_ell_witness(t, *minus.witness)) {
        v.witness = std::move(w2);
    } else {
        v.witness = combine_for_ell(t, *plus.witness, *minus.witness, bound);
    }
    return v;
}

Verdict decide_bounded(const WeylOp& t, int d, Cone cone)
{
    switch (cone) {
    case Cone::SOS:
        return decide_sos_bounded(t, d);
    case Cone::POS:
        return decide_pos_bounded(t, d);
    case Cone::ELL:
        return decide_ell_bounded(t, d);
    }
    throw std::invalid_argument("unknown cone");
}

Verdict decide_unbounded(const WeylOp& t, Cone cone)
{
    const int order = t.order();
    if (order <= 0) {
        Verdict v = decide_bounded(t, 0, cone);
        v.degree_bound.reset();
        return v;
    }
    // A positive-order operator already fails on the smallest even degree above its order.
    const int ell = order % 2 == 0 ? order + 2 : order + 1;
    Verdict v = decide_bounded(t, ell, cone);
    if (v.preserves) {
        throw std::logic_error("positive-order operator preserved the cone at degree " + std::to_string(ell));
    }
    v.degree_bound.reset();
    v.notices.push_back("operator of order " + std::to_string(order) + " fails already on degree " +
                        std::to_string(ell));
    return v;
}

} // namespace posop
