#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "creal/expr.hpp"
#include "creal/rational.hpp"

namespace cauchy::cli {

/// Exact rational interval containing the evaluated value.
struct Enclosure {
    Rat lo;
    Rat hi;
};

enum class SignVerdict { positive, negative, unknown };
enum class CompareVerdict { lt, gt, unknown };

enum class OutputFormat { rational, decimal, both };

enum ExitCode : int { exit_ok = 0, exit_syntax = 1, exit_witness = 2 };

inline constexpr std::uint64_t default_prec = 64;
inline constexpr Fuel default_fuel = 256;

/// max(64, prec + 8).
Fuel default_witness_fuel(std::uint64_t prec);

/// Smallest d with 10^d >= 2^prec, the number of decimal places printed.
std::uint64_t decimal_digits(std::uint64_t prec);

/// [m - eps, m + eps] for m = approximate(expr, eps), eps = 2^-prec.
Enclosure cmd_eval(std::string_view expr, std::uint64_t prec, Fuel witness_fuel);

SignVerdict cmd_sign(std::string_view expr, Fuel fuel, Fuel witness_fuel);

/// lt when a < b, gt when b < a; unknown when the budget cannot separate them.
CompareVerdict cmd_compare(std::string_view a, std::string_view b, Fuel fuel, Fuel witness_fuel);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cauchy::cli
