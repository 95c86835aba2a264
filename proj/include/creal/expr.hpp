#pragma once

// Expression language of the command-line evaluator.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | primary
//   primary := literal | '(' expr ')' | max(expr, expr) | min(expr, expr)
//            | abs(expr) | below(['-'] literal)
//
// Literals are integers, exact decimals (`3.14`) and fractions `p/q`
// written without spaces around the slash.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "creal/partiality.hpp"
#include "creal/rational.hpp"
#include "creal/reals.hpp"

namespace cauchy::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinaryOp { add, sub, mul, max, min };

struct RatLit {
    Rat value;
};

struct Neg {
    ExprPtr arg;
};

struct Abs {
    ExprPtr arg;
};

struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

/// Division; the denominator needs an apartness witness at evaluation time,
/// searched with `witness_fuel` stages when set.
struct Div {
    ExprPtr num;
    ExprPtr den;
    std::optional<Fuel> witness_fuel;
};

/// below(q): the limit of q - eps, denoting q.
struct FromBelow {
    Rat value;
};

struct Expr {
    std::variant<RatLit, Neg, Abs, Binary, Div, FromBelow> node;
};

bool operator==(const Expr& a, const Expr& b);

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t position, std::string token, const std::string& what)
    : std::runtime_error(what), position_(position), token_(std::move(token))
    {}

    /// Zero-based offset of the offending token.
    std::size_t position() const { return position_; }
    const std::string& token() const { return token_; }

private:
    std::size_t position_;
    std::string token_;
};

class WitnessFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParseOptions {
    std::optional<Fuel> witness_fuel;
};

ExprPtr parse(std::string_view input, const ParseOptions& options = {});

/// Fully parenthesized rendering that parses back to an equal tree.
std::string print(const Expr& e);

/// Builds the real denoted by `e`. Division nodes without their own budget
/// use `default_witness_fuel`; throws WitnessFailure when no witness is found.
CReal evaluate(const Expr& e, Fuel default_witness_fuel);

}  // namespace cauchy::cli
