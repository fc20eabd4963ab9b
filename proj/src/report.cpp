#include "posop/report.hpp"

#include <sstream>

#include "posop/text.hpp"

namespace posop {

using nlohmann::json;

namespace {

json optional_rational(const std::optional<Rational>& r) { return r ? json(r->str()) : json(nullptr); }

std::string point_text(const std::vector<Rational>& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        out += (i ? ", " : "") + p[i].str();
    }
    return out + ")";
}

std::string subset_text(const std::vector<int>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace

json to_json(const Witness& w)
{
    json squares = json::array();
    for (const auto& sq : w.squares) {
        squares.push_back({{"weight", sq.weight.str()}, {"root", format(sq.root)}});
    }
    return {
        {"h", format(w.h)},
        {"squares", squares},
        {"epsilon", w.epsilon.str()},
        {"point", optional_rational(w.point)},
        {"value", w.value.str()},
        {"shift", w.shift.str()},
        {"degree_bound", w.degree_bound},
    };
}

Witness witness_from_json(const json& j)
{
    Witness w;
    w.h = parse_unipoly(j.at("h").get<std::string>());
    for (const auto& sq : j.at("squares")) {
        w.squares.push_back(
            {parse_rational(sq.at("weight").get<std::string>()), parse_unipoly(sq.at("root").get<std::string>())});
    }
    w.epsilon = parse_rational(j.value("epsilon", std::string("0")));
    if (j.contains("point") && !j.at("point").is_null()) {
        w.point = parse_rational(j.at("point").get<std::string>());
    }
    w.value = parse_rational(j.at("value").get<std::string>());
    w.shift = parse_rational(j.value("shift", std::string("0")));
    w.degree_bound = j.at("degree_bound").get<int>();
    return w;
}

json to_json(const MinorReport& m)
{
    return {
        {"subset", m.subset},
        {"minor", format(m.minor, "y")},
        {"nonneg", m.nonneg},
        {"failing_y", optional_rational(m.failing_y)},
    };
}

json to_json(const Verdict& v)
{
    json certificate = json::array();
    for (const auto& m : v.certificate) {
        certificate.push_back(to_json(m));
    }
    json branches = json::array();
    for (const auto& w : v.branch_witnesses) {
        branches.push_back(to_json(w));
    }
    return {
        {"cone", std::string(to_string(v.cone))},
        {"degree_bound", v.degree_bound ? json(*v.degree_bound) : json(nullptr)},
        {"verdict", v.preserves ? "Preserves" : "Violates"},
        {"certificate", certificate},
        {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
        {"branch_witnesses", branches},
        {"predicate_report",
         {
             {"psd_all_y", v.predicates.psd_all_y},
             {"pd_all_y", v.predicates.pd_all_y},
             {"det_positive_all_m", v.predicates.det_positive_all_m},
             {"q0_positive", v.predicates.q0_positive},
             {"q0_nonneg", v.predicates.q0_nonneg},
         }},
        {"truncated", v.truncated},
        {"notices", v.notices},
    };
}

json to_json(const MvWitness& w)
{
    const auto vars = indexed_variables("x", w.h.arity());
    json roots = json::array();
    for (const auto& r : w.roots) {
        roots.push_back(format(r, vars));
    }
    json point = json::array();
    for (const auto& p : w.point) {
        point.push_back(p.str());
    }
    return {{"h", format(w.h, vars)}, {"roots", roots}, {"point", point}, {"value", w.value.str()}};
}

json to_json(const MvVerdict& v)
{
    json index = json::array();
    for (const auto& e : v.index) {
        index.push_back(e);
    }
    json gram = json::array();
    for (Eigen::Index i = 0; i < v.gram.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < v.gram.cols(); ++j) {
            row.push_back(v.gram(i, j).str());
        }
        gram.push_back(row);
    }
    return {
        {"verdict", v.preserves ? "Preserves" : "Violates"},
        {"index", index},
        {"gram", gram},
        {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
    };
}

json to_json(const RecoveredMeasure& r)
{
    json intervals = json::array();
    for (const auto& e : r.atom_intervals.roots) {
        intervals.push_back({e.lo.str(), e.hi.str()});
    }
    json enclosures = json::array();
    for (const auto& [lo, hi] : r.weight_enclosures) {
        enclosures.push_back({lo.str(), hi.str()});
    }
    auto list = [](const std::optional<std::vector<Rational>>& v) {
        if (!v) {
            return json(nullptr);
        }
        json a = json::array();
        for (const auto& x : *v) {
            a.push_back(x.str());
        }
        return a;
    };
    return {
        {"atom_polynomial", format(r.atom_polynomial)},
        {"atom_intervals", intervals},
        {"atoms", list(r.atoms)},
        {"weights", list(r.weights)},
        {"weight_polynomial", format(r.weight_polynomial)},
        {"weight_enclosures", enclosures},
    };
}

std::string text_report(const Witness& w)
{
    std::ostringstream os;
    os << "  h = " << format(w.h) << "\n";
    os << "  h = ";
    bool first = true;
    for (const auto& sq : w.squares) {
        os << (first ? "" : " + ") << sq.weight.str() << "*(" << format(sq.root) << ")^2";
        first = false;
    }
    if (!w.epsilon.is_zero() || first) {
        os << (first ? "" : " + ") << w.epsilon.str();
    }
    os << "\n  degree bound: " << w.degree_bound << "\n";
    if (w.point) {
        os << "  T(h)(" << w.point->str() << ") = " << w.value.str() << "\n";
    } else {
        os << "  T(h) has only irrational zeros (certified by root counting)\n";
    }
    return os.str();
}

std::string text_report(const Verdict& v)
{
    std::ostringstream os;
    os << "cone: " << to_string(v.cone) << "\n";
    os << "degree bound: " << (v.degree_bound ? std::to_string(*v.degree_bound) : "unbounded") << "\n";
    os << "verdict: " << (v.preserves ? "Preserves" : "Violates") << "\n";
    if (v.witness) {
        os << "witness:\n" << text_report(*v.witness);
    }
    for (std::size_t i = 0; i < v.branch_witnesses.size(); ++i) {
        os << (i == 0 ? "T" : "-T") << " branch witness (POS):\n" << text_report(v.branch_witnesses[i]);
    }
    os << "certificate:\n";
    for (const auto& m : v.certificate) {
        os << "  minor " << subset_text(m.subset) << ": " << format(m.minor, "y") << "  "
           << (m.nonneg ? "nonnegative" : "negative at y = " + m.failing_y->str()) << "\n";
    }
    const auto& p = v.predicates;
    os << "predicate_report:\n"
       << "  psd_all_y: " << std::boolalpha << p.psd_all_y << "\n"
       << "  pd_all_y: " << p.pd_all_y << "\n"
       << "  det_positive_all_m: " << p.det_positive_all_m << "\n"
       << "  q0_positive: " << p.q0_positive << "\n"
       << "  q0_nonneg: " << p.q0_nonneg << "\n";
    os << "truncated: " << v.truncated << "\n";
    for (const auto& n : v.notices) {
        os << "notice: " << n << "\n";
    }
    return os.str();
}

std::string text_report(const MvWitness& w)
{
    const auto vars = indexed_variables("x", w.h.arity());
    std::ostringstream os;
    os << "  h = " << format(w.h, vars) << "\n";
    for (const auto& r : w.roots) {
        os << "  square of: " << format(r, vars) << "\n";
    }
    os << "  T(h)" << point_text(w.point) << " = " << w.value.str() << "\n";
    return os.str();
}

std::string text_report(const MvVerdict& v)
{
    std::ostringstream os;
    os << "verdict: " << (v.preserves ? "Preserves" : "Violates") << "\n";
    os << "index:";
    for (const auto& e : v.index) {
        os << " " << format_exponent(e);
    }
    os << "\ngram:\n" << format_matrix(v.gram);
    if (v.witness) {
        os << "witness:\n" << text_report(*v.witness);
    }
    return os.str();
}

std::string text_report(const RecoveredMeasure& r)
{
    std::ostringstream os;
    os << "atom polynomial: " << format(r.atom_polynomial) << "\n";
    if (r.atoms) {
        for (std::size_t k = 0; k < r.atoms->size(); ++k) {
            os << "atom " << (*r.atoms)[k].str() << " weight " << (*r.weights)[k].str() << "\n";
        }
    } else {
        os << "weight at atom t: " << format(r.weight_polynomial, "t") << "\n";
        for (std::size_t k = 0; k < r.atom_intervals.roots.size(); ++k) {
            const auto& e = r.atom_intervals.roots[k];
            const auto& w = r.weight_enclosures[k];
            os << "atom in (" << e.lo.str() << ", " << e.hi.str() << ") weight in [" << w.first.str() << ", "
               << w.second.str() << "]\n";
        }
    }
    return os.str();
}

} // namespace posop
