#ifndef POSOP_TEXT_HPP
#define POSOP_TEXT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posop/matrix.hpp"
#include "posop/moments.hpp"
#include "posop/weyl.hpp"

namespace posop {

/// Malformed input. `line` and `column` are 1-based; line is 0 for single-line input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Polynomial grammar: rational literals p or p/q, the given variable names,
/// + - * ^ (nonnegative integer exponents) and parentheses. No implicit products.
MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables);
UniPoly parse_unipoly(std::string_view text, std::string_view variable = "x");
Rational parse_rational(std::string_view text);

/// x1, ..., xn
std::vector<std::string> indexed_variables(std::string_view stem, std::size_t n);
/// Largest k such that `x<k>` occurs in the text; 0 if none.
std::size_t max_indexed_variable(std::string_view text, char stem = 'x');

std::string format(const UniPoly& p, std::string_view variable = "x");
std::string format(const MultiPoly& p, const std::vector<std::string>& variables);
std::string format_exponent(const Exponent& alpha);

/// Lines `q[i] = <polynomial in x>`; blank lines and `#` comments ignored.
WeylOp parse_operator(std::string_view text);
/// Lines `q[(a1,...,an)] = <polynomial in x1..xn>`.
MultiWeylOp parse_mv_operator(std::string_view text);
std::string format_operator(const WeylOp& t);
std::string format_operator(const MultiWeylOp& t);

/// Lines `atom <rational or (r1,...,rn)> weight <polynomial in y>`.
AtomicMeasureFamily parse_measure(std::string_view text);
std::string format_measure(const AtomicMeasureFamily& m);

MomentSequence parse_moments(const std::vector<std::string>& values);
/// Comma separated nonnegative integers.
Exponent parse_exponent(std::string_view text);
/// Comma separated rationals.
std::vector<Rational> parse_point(std::string_view text);

/// One bracketed row per line.
std::string format_matrix(const RationalMatrix& m);
std::string format_matrix(const PolyMatrix& m, std::string_view variable = "y");

} // namespace posop

#endif
