#include "posop/hankel.hpp"

#include <stdexcept>

namespace posop {

ParamHankel::ParamHankel(PolyMatrix entries) : entries_(std::move(entries))
{
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("Hankel matrix must be square");
    }
}

bool ParamHankel::is_constant() const
{
    for (Eigen::Index i = 0; i < size(); ++i) {
        for (Eigen::Index j = 0; j < size(); ++j) {
            if (!entries_(i, j).is_constant()) {
                return false;
            }
        }
    }
    return true;
}

ParamHankel build_param_hankel(const WeylOp& t, unsigned m)
{
    const auto n = static_cast<Eigen::Index>(m) + 1;
    std::vector<UniPoly> diag(static_cast<std::size_t>(2 * n - 1));
    for (std::size_t s = 0; s < diag.size(); ++s) {
        diag[s] = t.coeff(static_cast<int>(s)) * factorial(static_cast<unsigned>(s));
    }
    PolyMatrix e(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            e(i, j) = diag[static_cast<std::size_t>(i + j)];
        }
    }
    return ParamHankel(std::move(e));
}

UniPoly principal_minor(const ParamHankel& h, const std::vector<int>& subset)
{
    if (subset.empty()) {
        throw std::invalid_argument("principal minor of an empty index set");
    }
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (subset[k] < 0 || subset[k] >= h.size() || (k > 0 && subset[k] <= subset[k - 1])) {
            throw std::invalid_argument("principal minor index set must be sorted and in range");
        }
    }
    return bareiss_determinant(principal_submatrix(h.entries(), subset));
}

std::vector<std::vector<int>> principal_subsets(int size)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Depth-first preorder enumerates subsets in lexicographic order.
    auto visit = [&](auto&& self, int start) -> void {
        for (int i = start; i < size; ++i) {
            cur.push_back(i);
            out.push_back(cur);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    visit(visit, 0);
    return out;
}

PsdForAllY psd_for_all_y(const ParamHankel& h)
{
    PsdForAllY out;
    for (auto& s : principal_subsets(static_cast<int>(h.size()))) {
        MinorReport r{s, principal_minor(h, s), true, std::nullopt};
        const auto decision = nonneg_on_R(r.minor);
        if (!decision.holds) {
            r.nonneg = false;
            r.failing_y = decision.point;
            out.failure = std::move(r);
            out.minors.clear();
            return out;
        }
        out.minors.push_back(std::move(r));
    }
    out.holds = true;
    return out;
}

PdForAllY pd_for_all_y(const ParamHankel& h)
{
    PdForAllY out;
    std::vector<int> lead;
    for (int k = 0; k < h.size(); ++k) {
        lead.push_back(k);
        out.leading_minors.push_back(principal_minor(h, lead));
        if (out.failing_size) {
            continue;
        }
        const auto decision = positive_on_R(out.leading_minors.back());
        if (!decision.holds) {
            out.failing_size = k + 1;
            out.failing_y = decision.point;
        }
    }
    out.holds = !out.failing_size.has_value();
    return out;
}

PointPsd psd_of(const RationalMatrix& m)
{
    PointPsd out;
    if (auto c = negative_direction(m)) {
        out.psd = false;
        out.value = quadratic_form(m, *c);
        if (out.value.sign() >= 0) {
            throw std::logic_error("congruence certificate failed re-verification");
        }
        out.direction = std::move(*c);
    }
    return out;
}

PointPsd psd_at_point(const ParamHankel& h, const Rational& y0) { return psd_of(h.at(y0)); }

} // namespace posop
