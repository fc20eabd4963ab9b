// posop: decide cone preservation for differential operators from the command line.
//
// Exit status: 0 on success (including a Violates verdict), 2 for malformed
// input or invalid options, 3 when a produced certificate fails re-verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posop/decide.hpp"
#include "posop/moments.hpp"
#include "posop/multivar.hpp"
#include "posop/oracle.hpp"
#include "posop/report.hpp"
#include "posop/text.hpp"

namespace {

using namespace posop;
using nlohmann::json;

constexpr int kExitInvalid = 2;
constexpr int kExitCertificate = 3;

/// A certificate produced by this run did not survive re-verification.
class CertificateFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

std::string read_input(const std::string& path, bool inline_text)
{
    if (inline_text) {
        return path;
    }
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("POSOP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("POSOP_SEED must be a nonnegative integer");
        }
    }
    return 1;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// Preserves: every minor must be nonnegative on R and match a fresh computation.
void reverify(const WeylOp& t, const Verdict& v)
{
    if (v.preserves) {
        const int d = v.degree_bound.value_or(0);
        const auto h = build_param_hankel(t, static_cast<unsigned>(d / 2));
        for (const auto& m : v.certificate) {
            if (!nonneg_on_R(m.minor).holds || principal_minor(h, m.subset) != m.minor) {
                throw CertificateFailure("certificate minor failed re-verification");
            }
        }
        return;
    }
    if (!v.witness || !verify_witness(t, *v.witness, v.cone)) {
        throw CertificateFailure("witness failed re-verification");
    }
}

struct Options {
    std::string input;
    std::string second;
    bool inline_text = false;
    bool as_json = false;
    std::string cone = "sos";
    std::optional<int> degree;
    unsigned m = 1;
    std::optional<std::string> at;
    unsigned order = 4;
    unsigned count = 5;
    std::vector<std::string> values;
    std::string alpha;
    unsigned points = 100;
    unsigned radius = 2;
    unsigned denominator = 1;
    unsigned trials = 100;
    unsigned squares = 2;
    unsigned height = 5;
    std::optional<std::uint64_t> seed;
};

int run_check(const Options& o)
{
    const WeylOp t = parse_operator(read_input(o.input, o.inline_text));
    const Cone cone = parse_cone(o.cone);
    const Verdict v = o.degree ? decide_bounded(t, *o.degree, cone) : decide_unbounded(t, cone);
    reverify(t, v);
    if (o.as_json) {
        print(to_json(v));
    } else {
        std::cout << text_report(v);
    }
    return 0;
}

int run_symbol(const Options& o)
{
    const WeylOp t = parse_operator(read_input(o.input, o.inline_text));
    const MultiPoly p = truncated_symbol(t, o.m);
    if (o.at) {
        std::cout << format(truncated_symbol_at(t, o.m, parse_rational(*o.at))) << "\n";
    } else if (o.as_json) {
        print({{"m", o.m}, {"symbol", format(p, {"x", "y"})}});
    } else {
        std::cout << format(p, {"x", "y"}) << "\n";
    }
    return 0;
}

int run_hankel(const Options& o)
{
    const WeylOp t = parse_operator(read_input(o.input, o.inline_text));
    const auto h = build_param_hankel(t, o.m);
    if (o.at) {
        std::cout << format_matrix(h.at(parse_rational(*o.at)));
    } else {
        std::cout << format_matrix(h.entries(), "y");
    }
    return 0;
}

int run_ff(const Options& o)
{
    const std::size_t n = std::max(max_indexed_variable(o.input), max_indexed_variable(o.second));
    if (n == 0) {
        std::cout << ff_inner(parse_unipoly(o.input), parse_unipoly(o.second)).str() << "\n";
    } else {
        const auto vars = indexed_variables("x", n);
        std::cout << ff_inner(parse_polynomial(o.input, vars), parse_polynomial(o.second, vars)).str() << "\n";
    }
    return 0;
}

int run_witness_verify(const Options& o)
{
    const WeylOp t = parse_operator(read_input(o.input, o.inline_text));
    json doc;
    try {
        doc = json::parse(read_input(o.second, false));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("witness JSON: ") + e.what());
    }
    Cone cone = parse_cone(o.cone);
    if (doc.contains("witness")) {
        if (doc.at("witness").is_null()) {
            throw std::invalid_argument("report carries no witness");
        }
        if (doc.contains("cone")) {
            cone = parse_cone(doc.at("cone").get<std::string>());
        }
        doc = doc.at("witness");
    }
    Witness w;
    try {
        w = witness_from_json(doc);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("witness JSON: ") + e.what());
    }
    const bool ok = verify_witness(t, w, cone);
    if (o.as_json) {
        print({{"cone", std::string(to_string(cone))}, {"verified", ok}});
    } else {
        std::cout << (ok ? "true" : "false") << "\n";
    }
    return 0;
}

int run_conv_build(const Options& o)
{
    const auto m = parse_measure(read_input(o.input, o.inline_text));
    if (m.dimension() == 1) {
        std::cout << format_operator(conv_operator_from_measure(m, o.order));
    } else {
        std::cout << format_operator(mv_conv_operator_from_measure(m, Exponent(m.dimension(), o.order)));
    }
    return 0;
}

int run_moments_check(const Options& o)
{
    const auto a = parse_moments(o.values);
    const auto r = hamburger_check(a);
    if (o.as_json) {
        json j{{"is_moment_sequence", r.is_moment_sequence}};
        if (!r.is_moment_sequence) {
            j["failing_subset"] = r.failing_subset;
            j["failing_minor"] = r.failing_minor.str();
        }
        print(j);
    } else if (r.is_moment_sequence) {
        std::cout << "moment sequence\n";
    } else {
        std::string s;
        for (const int i : r.failing_subset) {
            s += (s.empty() ? "" : ",") + std::to_string(i);
        }
        std::cout << "not a moment sequence: principal minor {" << s << "} = " << r.failing_minor.str() << "\n";
    }
    return 0;
}

int run_moments_of(const Options& o)
{
    const auto m = parse_measure(read_input(o.input, o.inline_text));
    const Rational y = o.at ? parse_rational(*o.at) : Rational(0);
    const auto a = moments_of_atomic(m, y, o.count);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        std::cout << (i ? " " : "") << a.values[i].str();
    }
    std::cout << "\n";
    return 0;
}

int run_recover(const Options& o)
{
    const auto a = parse_moments(o.values);
    try {
        const auto r = recover_atoms(a);
        if (o.as_json) {
            print(to_json(r));
        } else {
            std::cout << text_report(r);
        }
    } catch (const NotFinitelyAtomic& e) {
        if (o.as_json) {
            print({{"finitely_atomic", false}, {"reason", e.what()}});
        } else {
            std::cout << e.what() << "\n";
        }
    }
    return 0;
}

int run_mv_check(const Options& o)
{
    const MultiWeylOp t = parse_mv_operator(read_input(o.input, o.inline_text));
    const Exponent alpha = parse_exponent(o.alpha);
    if (alpha.size() != t.arity()) {
        throw std::invalid_argument("--alpha has " + std::to_string(alpha.size()) + " entries, operator arity is " +
                                    std::to_string(t.arity()));
    }
    auto check = [&](const MvWitness& w) {
        if (!verify_mv_witness(t, w)) {
            throw CertificateFailure("multivariate witness failed re-verification");
        }
    };
    if (o.at) {
        const auto y0 = parse_point(*o.at);
        if (y0.size() != t.arity()) {
            throw std::invalid_argument("--at point has the wrong dimension");
        }
        const auto gram = gram_kernel_at(t, alpha, y0);
        const auto k = psd_kernel_at(t, alpha, y0);
        MvVerdict v{k.psd, gram, exponents_below(alpha), std::nullopt};
        if (!k.psd) {
            v.witness = extract_mv_witness(t, alpha, y0, k.direction);
            check(*v.witness);
        }
        if (o.as_json) {
            print(to_json(v));
        } else {
            std::cout << "kernel Gram at " << *o.at << ": " << (k.psd ? "PSD" : "not PSD") << "\n"
                      << text_report(v);
        }
        return 0;
    }
    if (t.has_constant_coefficients()) {
        const auto v = constant_coeff_decide(t, alpha);
        if (v.witness) {
            check(*v.witness);
        }
        if (o.as_json) {
            print(to_json(v));
        } else {
            std::cout << "constant coefficients: exact decision on SOS inputs of multidegree <= 2*alpha\n"
                      << text_report(v);
        }
        return 0;
    }
    FalsifyBudget budget;
    budget.grid_radius = o.radius;
    budget.grid_denominator = o.denominator;
    budget.random_points = o.points;
    budget.seed = o.seed.value_or(default_seed());
    const auto r = falsify_mv(t, alpha, budget);
    if (r.witness) {
        check(*r.witness);
    }
    if (o.as_json) {
        print({{"seed", r.seed},
               {"points_scanned", r.points_scanned},
               {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}});
    } else {
        std::cout << "seed: " << r.seed << "\npoints scanned: " << r.points_scanned << "\n";
        if (r.witness) {
            std::cout << "verdict: Violates\nwitness:\n" << text_report(*r.witness);
        } else {
            std::cout << "no counterexample within budget (kernel PSD at every scanned point)\n";
        }
    }
    return 0;
}

int run_oracle(const Options& o)
{
    const WeylOp t = parse_operator(read_input(o.input, o.inline_text));
    const Cone cone = parse_cone(o.cone);
    SampleSpec sampling;
    sampling.degree_bound = o.degree.value_or(2);
    sampling.squares = o.squares;
    sampling.height = o.height;
    sampling.trials = o.trials;
    sampling.seed = o.seed.value_or(default_seed());
    const auto w = falsify_preservation(t, sampling.degree_bound, cone, sampling);
    if (w && !verify_witness(t, *w, cone)) {
        throw CertificateFailure("oracle witness failed re-verification");
    }
    if (o.as_json) {
        print({{"seed", sampling.seed},
               {"trials", sampling.trials},
               {"cone", std::string(to_string(cone))},
               {"degree_bound", sampling.degree_bound},
               {"witness", w ? to_json(*w) : json(nullptr)}});
    } else {
        std::cout << "seed: " << sampling.seed << "\ntrials: " << sampling.trials << "\n";
        if (w) {
            std::cout << "counterexample found:\n" << text_report(*w);
        } else {
            std::cout << "no counterexample found\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact decisions for cone preservation by differential operators"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("input", o.input, what + " (file path, '-' for stdin)")->required();
        sub->add_flag("--inline", o.inline_text, "treat the input argument as the text itself");
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.as_json, "machine-readable output"); };

    auto* check = app.add_subcommand("check", "decide whether the operator preserves a cone");
    add_input(check, "operator");
    check->add_option("--cone", o.cone, "sos, pos or ell")->capture_default_str();
    check->add_option("--degree", o.degree, "degree bound d (omit for all degrees)");
    add_json(check);

    auto* symbol = app.add_subcommand("symbol", "print the truncated symbol p_{y,m}");
    add_input(symbol, "operator");
    symbol->add_option("--m", o.m, "truncation order")->required();
    symbol->add_option("--at", o.at, "fix y");
    add_json(symbol);

    auto* hankel = app.add_subcommand("hankel", "print the Hankel matrix H_{y,m}");
    add_input(hankel, "operator");
    hankel->add_option("--m", o.m, "matrix index bound")->required();
    hankel->add_option("--at", o.at, "evaluate at y");

    auto* ff = app.add_subcommand("ff", "Fischer-Fock pairing of two polynomials");
    ff->add_option("f", o.input, "first polynomial")->required();
    ff->add_option("g", o.second, "second polynomial")->required();

    auto* wv = app.add_subcommand("witness-verify", "re-check a witness exactly");
    add_input(wv, "operator");
    wv->add_option("witness", o.second, "witness or verdict JSON file")->required();
    wv->add_option("--cone", o.cone, "cone (taken from a verdict document when present)");
    add_json(wv);

    auto* conv = app.add_subcommand("conv-build", "convolution operator of an atomic measure family");
    add_input(conv, "measure");
    conv->add_option("--order", o.order, "largest order (per variable)")->capture_default_str();

    auto* moments = app.add_subcommand("moments", "moment sequence utilities");
    moments->require_subcommand(1);
    auto* mcheck = moments->add_subcommand("check", "Hamburger test of a_0 .. a_2m");
    mcheck->add_option("values", o.values, "moments")->required();
    add_json(mcheck);
    auto* mof = moments->add_subcommand("of", "moments of an atomic measure family at y");
    add_input(mof, "measure");
    mof->add_option("--at", o.at, "parameter y (default 0)");
    mof->add_option("--count", o.count, "number of moments")->capture_default_str();

    auto* recover = app.add_subcommand("recover", "atoms and weights from a_0 .. a_2m");
    recover->add_option("values", o.values, "moments")->required();
    add_json(recover);

    auto* mv = app.add_subcommand("mv-check", "multivariate kernel checks");
    add_input(mv, "multivariate operator");
    mv->add_option("--alpha", o.alpha, "multi-index bound, e.g. 1,1")->required();
    mv->add_option("--at", o.at, "exact check at one point, e.g. 0,0");
    mv->add_option("--budget", o.points, "random points after the grid")->capture_default_str();
    mv->add_option("--radius", o.radius, "grid radius R")->capture_default_str();
    mv->add_option("--denominator", o.denominator, "grid denominator q")->capture_default_str();
    mv->add_option("--seed", o.seed, "random seed (default: POSOP_SEED or 1)");
    add_json(mv);

    auto* oracle = app.add_subcommand("oracle", "random falsification of preservation");
    add_input(oracle, "operator");
    oracle->add_option("--cone", o.cone, "sos, pos or ell")->capture_default_str();
    oracle->add_option("--degree", o.degree, "degree bound d (default 2)");
    oracle->add_option("--trials", o.trials, "number of samples")->capture_default_str();
    oracle->add_option("--squares", o.squares, "squares per sample")->capture_default_str();
    oracle->add_option("--height", o.height, "coefficient height")->capture_default_str();
    oracle->add_option("--seed", o.seed, "random seed (default: POSOP_SEED or 1)");
    add_json(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (check->parsed()) {
            return run_check(o);
        }
        if (symbol->parsed()) {
            return run_symbol(o);
        }
        if (hankel->parsed()) {
            return run_hankel(o);
        }
        if (ff->parsed()) {
            return run_ff(o);
        }
        if (wv->parsed()) {
            return run_witness_verify(o);
        }
        if (conv->parsed()) {
            return run_conv_build(o);
        }
        if (mcheck->parsed()) {
            return run_moments_check(o);
        }
        if (mof->parsed()) {
            return run_moments_of(o);
        }
        if (recover->parsed()) {
            return run_recover(o);
        }
        if (mv->parsed()) {
            return run_mv_check(o);
        }
        if (oracle->parsed()) {
            return run_oracle(o);
        }
    } catch (const CertificateFailure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCertificate;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCertificate;
    }
    return kExitInvalid;
}
