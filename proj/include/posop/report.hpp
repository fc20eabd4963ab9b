#ifndef POSOP_REPORT_HPP
#define POSOP_REPORT_HPP

#include <string>

#include <json.hpp>

#include "posop/decide.hpp"
#include "posop/moments.hpp"
#include "posop/multivar.hpp"

namespace posop {

/// Polynomials are stored as strings in the polynomial text grammar,
/// rationals as "p" or "p/q".
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const MinorReport& m);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const MvWitness& w);
nlohmann::json to_json(const MvVerdict& v);
nlohmann::json to_json(const RecoveredMeasure& r);

/// Inverse of to_json(Witness). Throws ParseError or nlohmann::json::exception.
Witness witness_from_json(const nlohmann::json& j);

std::string text_report(const Verdict& v);
std::string text_report(const Witness& w);
std::string text_report(const MvVerdict& v);
std::string text_report(const MvWitness& w);
std::string text_report(const RecoveredMeasure& r);

} // namespace posop

#endif
