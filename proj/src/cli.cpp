#include "creal/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "creal/reals.hpp"

namespace cauchy::cli {

Fuel default_witness_fuel(std::uint64_t prec)
{
    return std::max<Fuel>(64, prec + 8);
}

std::uint64_t decimal_digits(std::uint64_t prec)
{
    if (prec == 0) {
        return 0;
    }
    // prec * log10(2) is irrational for prec > 0, so the floor is stable.
    return static_cast<std::uint64_t>(std::floor(static_cast<double>(prec) * std::log10(2.0))) + 1;
}

Enclosure cmd_eval(std::string_view expr, std::uint64_t prec, Fuel witness_fuel)
{
    CReal x = evaluate(*parse(expr), witness_fuel);
    QPos eps = dyadic(prec);
    Rat m = x.approximate(eps);
    return {m - eps.value(), m + eps.value()};
}

SignVerdict cmd_sign(std::string_view expr, Fuel fuel, Fuel witness_fuel)
{
    auto outcome = is_positive(evaluate(*parse(expr), witness_fuel)).run(fuel);
    if (outcome.is_pending()) {
        return SignVerdict::unknown;
    }
    return outcome.value() ? SignVerdict::positive : SignVerdict::negative;
}

CompareVerdict cmd_compare(std::string_view a, std::string_view b, Fuel fuel, Fuel witness_fuel)
{
    CReal x = evaluate(*parse(a), witness_fuel);
    CReal y = evaluate(*parse(b), witness_fuel);
    auto outcome = compare_partial(x, y).run(fuel);
    if (outcome.is_pending()) {
        return CompareVerdict::unknown;
    }
    return outcome.value() ? CompareVerdict::lt : CompareVerdict::gt;
}

namespace {

const char* to_string(SignVerdict v)
{
    switch (v) {
    case SignVerdict::positive: return "positive";
    case SignVerdict::negative: return "negative";
    case SignVerdict::unknown: return "unknown";
    }
    return "?";
}

const char* to_string(CompareVerdict v)
{
    switch (v) {
    case CompareVerdict::lt: return "lt";
    case CompareVerdict::gt: return "gt";
    case CompareVerdict::unknown: return "unknown";
    }
    return "?";
}

void print_enclosure(std::ostream& out, const Enclosure& e, std::uint64_t prec, OutputFormat format)
{
    if (format != OutputFormat::decimal) {
        out << "lo=" << e.lo << '\n' << "hi=" << e.hi << '\n';
    }
    if (format != OutputFormat::rational) {
        // Outward rounding keeps the decimal interval an enclosure too.
        auto digits = decimal_digits(prec);
        out << "lo_decimal=" << to_decimal(e.lo, digits, Rounding::down) << '\n'
            << "hi_decimal=" << to_decimal(e.hi, digits, Rounding::up) << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact real arithmetic: evaluate expressions to a guaranteed precision", "creal"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<Fuel> witness_fuel;
    std::string format_name = "both";
    app.add_option("--witness-fuel", witness_fuel, "Stages searched for a division witness");
    app.add_option("--format", format_name, "Enclosure output: rational, decimal or both")
        ->check(CLI::IsMember({"rational", "decimal", "both"}));

    std::string expr_a;
    std::string expr_b;
    std::uint64_t prec = default_prec;
    Fuel fuel = default_fuel;

    auto* eval = app.add_subcommand("eval", "Enclose an expression within 2^-prec");
    eval->add_option("expr", expr_a, "Expression")->required();
    eval->add_option("--prec", prec, "Precision exponent k (eps = 2^-k)");

    auto* sign = app.add_subcommand("sign", "Semi-decide the sign of an expression");
    sign->add_option("expr", expr_a, "Expression")->required();
    sign->add_option("--fuel", fuel, "Fuel budget");

    auto* compare = app.add_subcommand("compare", "Semi-decide the order of two expressions");
    compare->add_option("a", expr_a, "Left expression")->required();
    compare->add_option("b", expr_b, "Right expression")->required();
    compare->add_option("--fuel", fuel, "Fuel budget");

    std::vector<const char*> argv;
    argv.push_back("creal");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // Help and version requests succeed; any other usage error counts as
        // a syntax error of the command line.
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_syntax;
    }

    Fuel wfuel = witness_fuel.value_or(default_witness_fuel(prec));
    OutputFormat format = format_name == "rational"  ? OutputFormat::rational
                          : format_name == "decimal" ? OutputFormat::decimal
                                                     : OutputFormat::both;
    try {
        if (eval->parsed()) {
            Enclosure e = cmd_eval(expr_a, prec, wfuel);
            out << "expr=" << print(*parse(expr_a)) << '\n' << "prec=" << prec << '\n';
            print_enclosure(out, e, prec, format);
        } else if (sign->parsed()) {
            const char* verdict = to_string(cmd_sign(expr_a, fuel, wfuel));
            out << "verdict=" << verdict << '\n' << "fuel=" << fuel << '\n';
        } else if (compare->parsed()) {
            const char* verdict = to_string(cmd_compare(expr_a, expr_b, fuel, wfuel));
            out << "verdict=" << verdict << '\n' << "fuel=" << fuel << '\n';
        }
    } catch (const SyntaxError& e) {
        err << "error=syntax\n"
            << "position=" << e.position() << '\n'
            << "token=" << e.token() << '\n'
            << "message=" << e.what() << '\n';
        return exit_syntax;
    } catch (const WitnessFailure& e) {
        err << "error=witness\n"
            << "message=" << e.what() << '\n';
        return exit_witness;
    }
    return exit_ok;
}

}  // namespace cauchy::cli
