#include "posop/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace posop {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? "column " + std::to_string(column) + ": " + message
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                         message),
      line_(line), column_(column)
{
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string describe(std::string_view text, std::size_t pos)
{
    if (pos >= text.size()) {
        return "end of input";
    }
    return std::string("'") + text[pos] + "'";
}

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    MultiPoly parse()
    {
        MultiPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected " + describe(text_, pos_) + " (implicit multiplication is not allowed)");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 0, pos_ + 1); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr()
    {
        MultiPoly acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = unary();
        while (accept('*')) {
            acc = acc * unary();
        }
        return acc;
    }

    MultiPoly unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    MultiPoly power()
    {
        MultiPoly base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_digit(text_[pos_])) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected a nonnegative integer exponent, found " + describe(text_, pos_));
            }
            const std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 6) {
                pos_ = start;
                fail("exponent too large");
            }
            return pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    MultiPoly primary()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) {
                fail("expected ')', found " + describe(text_, pos_));
            }
            return inner;
        }
        if (is_digit(c)) {
            return number();
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            const auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) {
                pos_ = start;
                std::string allowed;
                for (const auto& v : vars_) {
                    allowed += (allowed.empty() ? "" : ", ") + v;
                }
                fail("unknown variable '" + name + "' (expected " + (allowed.empty() ? "a constant" : allowed) + ")");
            }
            Exponent e(vars_.size(), 0);
            e[static_cast<std::size_t>(it - vars_.begin())] = 1;
            return MultiPoly::monomial(e);
        }
        fail("unexpected " + describe(text_, pos_));
    }

    MultiPoly number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            ++pos_;
        }
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' && is_digit(text_[pos_ + 1])) {
            ++pos_;
            while (pos_ < text_.size() && is_digit(text_[pos_])) {
                ++pos_;
            }
        } else if (pos_ < text_.size() && text_[pos_] == '/') {
            fail("expected digits after '/' in a rational literal");
        }
        Rational value;
        try {
            value = Rational::parse(text_.substr(start, pos_ - start));
        } catch (const std::exception& e) {
            pos_ = start;
            fail(e.what());
        }
        return MultiPoly(vars_.size(), value);
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

struct Line {
    std::size_t number;
    std::size_t offset;  // column offset of `text` within the raw line
    std::string_view text;
};

/// Non-empty lines with `#` comments removed.
std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        std::size_t offset = 0;
        while (offset < raw.size() && std::isspace(static_cast<unsigned char>(raw[offset]))) {
            ++offset;
        }
        const std::string_view body = trim(raw);
        if (!body.empty()) {
            out.push_back({number, offset, body});
        }
        if (nl == std::string_view::npos) {
            break;
        }
    }
    return out;
}

/// Re-raises a single-line error at its position in a multi-line document.
template <class F>
auto at_line(const Line& line, std::size_t column_offset, F&& f)
{
    try {
        return f();
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        const auto colon = msg.find(": ");
        throw ParseError(colon == std::string::npos ? msg : msg.substr(colon + 2), line.number,
                         line.offset + column_offset + e.column());
    }
}

std::string monomial_text(const Exponent& e, const std::vector<std::string>& vars)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += vars[i];
        if (e[i] > 1) {
            out += '^' + std::to_string(e[i]);
        }
    }
    return out;
}

std::string format_terms(const std::vector<std::pair<std::string, Rational>>& terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [mono, c] : terms) {
        if (out.empty()) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const Rational a = c.abs();
        if (mono.empty()) {
            out += a.str();
        } else if (a == Rational(1)) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

} // namespace

MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables)
{
    return PolyParser(text, variables).parse();
}

UniPoly parse_unipoly(std::string_view text, std::string_view variable)
{
    return parse_polynomial(text, {std::string(variable)}).to_uni(0);
}

Rational parse_rational(std::string_view text)
{
    const MultiPoly p = parse_polynomial(text, {});
    return p.coeff({});
}

std::vector<std::string> indexed_variables(std::string_view stem, std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(std::string(stem) + std::to_string(i));
    }
    return out;
}

std::size_t max_indexed_variable(std::string_view text, char stem)
{
    std::size_t best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != stem || (i > 0 && is_ident_char(text[i - 1]))) {
            continue;
        }
        std::size_t j = i + 1;
        while (j < text.size() && is_digit(text[j])) {
            ++j;
        }
        if (j > i + 1 && (j == text.size() || !is_ident_char(text[j])) && j - i - 1 <= 6) {
            best = std::max<std::size_t>(best, std::stoul(std::string(text.substr(i + 1, j - i - 1))));
        }
    }
    return best;
}

std::string format(const UniPoly& p, std::string_view variable)
{
    std::vector<std::pair<std::string, Rational>> terms;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p.coeff(i);
        if (c.is_zero()) {
            continue;
        }
        std::string mono;
        if (i > 0) {
            mono = std::string(variable) + (i > 1 ? "^" + std::to_string(i) : "");
        }
        terms.emplace_back(std::move(mono), c);
    }
    return format_terms(terms);
}

std::string format(const MultiPoly& p, const std::vector<std::string>& variables)
{
    if (variables.size() < p.arity()) {
        throw std::invalid_argument("format: not enough variable names");
    }
    std::vector<std::pair<std::string, Rational>> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms.emplace_back(monomial_text(it->first, variables), it->second);
    }
    return format_terms(terms);
}

std::string format_exponent(const Exponent& alpha)
{
    std::string out = "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        out += (i ? "," : "") + std::to_string(alpha[i]);
    }
    return out + ")";
}

namespace {

/// Parses `q[<index>] = <rhs>`; returns the index text and the column of the right-hand side.
std::pair<std::string_view, std::size_t> split_assignment(const Line& line)
{
    const std::string_view s = line.text;
    if (s.size() < 2 || s[0] != 'q' || s[1] != '[') {
        throw ParseError("expected 'q[<index>] = <polynomial>'", line.number, line.offset + 1);
    }
    const auto close = s.find(']');
    if (close == std::string_view::npos) {
        throw ParseError("missing ']'", line.number, line.offset + s.size() + 1);
    }
    std::size_t eq = close + 1;
    while (eq < s.size() && std::isspace(static_cast<unsigned char>(s[eq]))) {
        ++eq;
    }
    if (eq >= s.size() || s[eq] != '=') {
        throw ParseError("expected '=' after the index", line.number, line.offset + eq + 1);
    }
    return {s.substr(2, close - 2), eq + 1};
}

unsigned parse_index_number(std::string_view text, const Line& line, std::size_t column)
{
    const std::string_view t = trim(text);
    if (t.empty() || !std::all_of(t.begin(), t.end(), is_digit) || t.size() > 6) {
        throw ParseError("index must be a nonnegative integer, found '" + std::string(t) + "'", line.number,
                         line.offset + column);
    }
    return static_cast<unsigned>(std::stoul(std::string(t)));
}

std::vector<std::string_view> split_commas(std::string_view s)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(s.substr(0, comma));
        if (comma == std::string_view::npos) {
            return out;
        }
        s = s.substr(comma + 1);
    }
}

} // namespace

WeylOp parse_operator(std::string_view text)
{
    std::map<unsigned, UniPoly> coeffs;
    for (const auto& line : content_lines(text)) {
        const auto [index, rhs] = split_assignment(line);
        const unsigned i = parse_index_number(index, line, 3);
        const UniPoly q = at_line(line, rhs, [&] { return parse_unipoly(line.text.substr(rhs)); });
        if (!coeffs.emplace(i, q).second) {
            throw ParseError("duplicate coefficient q[" + std::to_string(i) + "]", line.number, line.offset + 1);
        }
    }
    std::vector<UniPoly> v(coeffs.empty() ? 0 : coeffs.rbegin()->first + 1);
    for (auto& [i, q] : coeffs) {
        v[i] = std::move(q);
    }
    return WeylOp(std::move(v));
}

MultiWeylOp parse_mv_operator(std::string_view text)
{
    std::optional<MultiWeylOp> out;
    std::set<Exponent> seen;
    for (const auto& line : content_lines(text)) {
        const auto [index, rhs] = split_assignment(line);
        const std::string_view idx = trim(index);
        if (idx.size() < 2 || idx.front() != '(' || idx.back() != ')') {
            throw ParseError("multivariate index must be a tuple (a1,...,an)", line.number, line.offset + 3);
        }
        Exponent alpha;
        for (const auto part : split_commas(idx.substr(1, idx.size() - 2))) {
            alpha.push_back(parse_index_number(part, line, 3));
        }
        if (!out) {
            out.emplace(alpha.size());
        } else if (alpha.size() != out->arity()) {
            throw ParseError("index arity " + std::to_string(alpha.size()) + " differs from " +
                                 std::to_string(out->arity()),
                             line.number, line.offset + 3);
        }
        if (!seen.insert(alpha).second) {
            throw ParseError("duplicate coefficient q[" + format_exponent(alpha) + "]", line.number, line.offset + 1);
        }
        const auto vars = indexed_variables("x", alpha.size());
        const MultiPoly q = at_line(line, rhs, [&] { return parse_polynomial(line.text.substr(rhs), vars); });
        out->add_term(alpha, q);
    }
    if (!out) {
        throw ParseError("empty multivariate operator (arity unknown)", 1, 1);
    }
    return *out;
}

std::string format_operator(const WeylOp& t)
{
    std::string out;
    for (int i = 0; i <= t.order(); ++i) {
        if (!t.coeff(i).is_zero()) {
            out += "q[" + std::to_string(i) + "] = " + format(t.coeff(i)) + "\n";
        }
    }
    return out;
}

std::string format_operator(const MultiWeylOp& t)
{
    std::string out;
    const auto vars = indexed_variables("x", t.arity());
    for (const auto& [alpha, q] : t.terms()) {
        out += "q[" + format_exponent(alpha) + "] = " + format(q, vars) + "\n";
    }
    return out;
}

AtomicMeasureFamily parse_measure(std::string_view text)
{
    std::vector<AtomicMeasureFamily::Atom> atoms;
    for (const auto& line : content_lines(text)) {
        const std::string_view s = line.text;
        if (s.substr(0, 4) != "atom" || s.size() == 4 || !std::isspace(static_cast<unsigned char>(s[4]))) {
            throw ParseError("expected 'atom <point> weight <polynomial>'", line.number, line.offset + 1);
        }
        const auto w = s.find(" weight ");
        if (w == std::string_view::npos) {
            throw ParseError("missing 'weight'", line.number, line.offset + s.size() + 1);
        }
        const std::string_view point_text = trim(s.substr(4, w - 4));
        std::vector<Rational> point;
        if (!point_text.empty() && point_text.front() == '(') {
            if (point_text.back() != ')') {
                throw ParseError("unterminated atom tuple", line.number, line.offset + 6);
            }
            for (const auto part : split_commas(point_text.substr(1, point_text.size() - 2))) {
                point.push_back(at_line(line, 5, [&] { return parse_rational(part); }));
            }
        } else {
            point.push_back(at_line(line, 5, [&] { return parse_rational(point_text); }));
        }
        const std::size_t rhs = w + 8;
        const UniPoly weight = at_line(line, rhs, [&] { return parse_unipoly(s.substr(rhs), "y"); });
        atoms.push_back({std::move(point), weight});
    }
    try {
        return AtomicMeasureFamily(std::move(atoms));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

std::string format_measure(const AtomicMeasureFamily& m)
{
    std::string out;
    for (const auto& a : m.atoms()) {
        out += "atom ";
        if (a.point.size() == 1) {
            out += a.point[0].str();
        } else {
            out += "(";
            for (std::size_t i = 0; i < a.point.size(); ++i) {
                out += (i ? "," : "") + a.point[i].str();
            }
            out += ")";
        }
        out += " weight " + format(a.weight, "y") + "\n";
    }
    return out;
}

MomentSequence parse_moments(const std::vector<std::string>& values)
{
    MomentSequence out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        try {
            out.values.push_back(parse_rational(values[i]));
        } catch (const ParseError& e) {
            throw ParseError("moment a_" + std::to_string(i) + ": " + e.what(), 0, e.column());
        }
    }
    return out;
}

Exponent parse_exponent(std::string_view text)
{
    std::string_view t = trim(text);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        t = t.substr(1, t.size() - 2);
    }
    Exponent out;
    for (const auto part : split_commas(t)) {
        const auto p = trim(part);
        if (p.empty() || !std::all_of(p.begin(), p.end(), is_digit) || p.size() > 6) {
            throw ParseError("expected nonnegative integers separated by commas", 0, 1);
        }
        out.push_back(static_cast<unsigned>(std::stoul(std::string(p))));
    }
    return out;
}

std::vector<Rational> parse_point(std::string_view text)
{
    std::string_view t = trim(text);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        t = t.substr(1, t.size() - 2);
    }
    std::vector<Rational> out;
    for (const auto part : split_commas(t)) {
        out.push_back(parse_rational(part));
    }
    return out;
}

std::string format_matrix(const RationalMatrix& m)
{
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << '[';
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            os << (j ? ", " : "") << m(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

std::string format_matrix(const PolyMatrix& m, std::string_view variable)
{
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << '[';
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            os << (j ? ", " : "") << format(m(i, j), variable);
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace posop
