#include "creal/expr.hpp"

#include <cctype>
#include <vector>

namespace cauchy::cli {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, lparen, rparen, comma, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

std::vector<Token> tokenize(std::string_view in)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < in.size()) {
        char c = in[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (is_digit(c)) {
            while (i < in.size() && is_digit(in[i])) {
                ++i;
            }
            if (i + 1 < in.size() && in[i] == '.' && is_digit(in[i + 1])) {
                ++i;
                while (i < in.size() && is_digit(in[i])) {
                    ++i;
                }
            } else if (i + 1 < in.size() && in[i] == '/' && is_digit(in[i + 1])) {
                // p/q folds into one literal unless q is zero, which is left
                // to evaluation as a division.
                std::size_t j = i + 1;
                bool nonzero = false;
                while (j < in.size() && is_digit(in[j])) {
                    nonzero = nonzero || in[j] != '0';
                    ++j;
                }
                if (nonzero) {
                    i = j;
                }
            }
            out.push_back({Tok::number, std::string(in.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < in.size() && std::isalpha(static_cast<unsigned char>(in[i]))) {
                ++i;
            }
            out.push_back({Tok::ident, std::string(in.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case ',': kind = Tok::comma; break;
        default:
            throw SyntaxError(start, std::string(1, c),
                              "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(start));
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::end, "", in.size()});
    return out;
}

ExprPtr make(Expr e)
{
    return std::make_shared<const Expr>(std::move(e));
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const ParseOptions& options) : toks_(std::move(tokens)), options_(options) {}

    ExprPtr parse_all()
    {
        ExprPtr e = expr();
        if (peek().kind != Tok::end) {
            unexpected();
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    Token take() { return toks_[pos_++]; }

    [[noreturn]] void unexpected() const
    {
        const Token& t = peek();
        if (t.kind == Tok::end) {
            throw SyntaxError(t.pos, "", "unexpected end of input at position " + std::to_string(t.pos));
        }
        throw SyntaxError(t.pos, t.text, "unexpected token '" + t.text + "' at position " + std::to_string(t.pos));
    }

    void expect(Tok kind)
    {
        if (peek().kind != kind) {
            unexpected();
        }
        ++pos_;
    }

    ExprPtr expr()
    {
        ExprPtr lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            BinaryOp op = take().kind == Tok::plus ? BinaryOp::add : BinaryOp::sub;
            lhs = make({Binary{op, lhs, term()}});
        }
        return lhs;
    }

    ExprPtr term()
    {
        ExprPtr lhs = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            if (take().kind == Tok::star) {
                lhs = make({Binary{BinaryOp::mul, lhs, unary()}});
            } else {
                lhs = make({Div{lhs, unary(), options_.witness_fuel}});
            }
        }
        return lhs;
    }

    ExprPtr unary()
    {
        if (peek().kind == Tok::minus) {
            ++pos_;
            return make({Neg{unary()}});
        }
        return primary();
    }

    Rat literal()
    {
        if (peek().kind != Tok::number) {
            unexpected();
        }
        return Rat::parse(take().text);
    }

    ExprPtr primary()
    {
        switch (peek().kind) {
        case Tok::number:
            return make({RatLit{literal()}});
        case Tok::lparen: {
            ++pos_;
            ExprPtr e = expr();
            expect(Tok::rparen);
            return e;
        }
        case Tok::ident:
            return call();
        default:
            unexpected();
        }
    }

    ExprPtr call()
    {
        const Token& name = peek();
        if (name.text == "below") {
            ++pos_;
            expect(Tok::lparen);
            bool negative = false;
            if (peek().kind == Tok::minus || peek().kind == Tok::plus) {
                negative = take().kind == Tok::minus;
            }
            Rat q = literal();
            expect(Tok::rparen);
            return make({FromBelow{negative ? -q : q}});
        }
        if (name.text == "abs") {
            ++pos_;
            expect(Tok::lparen);
            ExprPtr arg = expr();
            expect(Tok::rparen);
            return make({Abs{arg}});
        }
        if (name.text == "max" || name.text == "min") {
            BinaryOp op = name.text == "max" ? BinaryOp::max : BinaryOp::min;
            ++pos_;
            expect(Tok::lparen);
            ExprPtr a = expr();
            expect(Tok::comma);
            ExprPtr b = expr();
            expect(Tok::rparen);
            return make({Binary{op, a, b}});
        }
        throw SyntaxError(name.pos, name.text,
                          "unknown function '" + name.text + "' at position " + std::to_string(name.pos));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const ParseOptions& options_;
};

const char* infix(BinaryOp op)
{
    switch (op) {
    case BinaryOp::add: return " + ";
    case BinaryOp::sub: return " - ";
    case BinaryOp::mul: return " * ";
    default: return nullptr;
    }
}

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

bool operator==(const Expr& a, const Expr& b)
{
    if (a.node.index() != b.node.index()) {
        return false;
    }
    return std::visit(
        overloaded{
            [&](const RatLit& x) { return x.value == std::get<RatLit>(b.node).value; },
            [&](const FromBelow& x) { return x.value == std::get<FromBelow>(b.node).value; },
            [&](const Neg& x) { return *x.arg == *std::get<Neg>(b.node).arg; },
            [&](const Abs& x) { return *x.arg == *std::get<Abs>(b.node).arg; },
            [&](const Binary& x) {
                const auto& y = std::get<Binary>(b.node);
                return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
            },
            [&](const Div& x) {
                const auto& y = std::get<Div>(b.node);
                return x.witness_fuel == y.witness_fuel && *x.num == *y.num && *x.den == *y.den;
            },
        },
        a.node);
}

ExprPtr parse(std::string_view input, const ParseOptions& options)
{
    try {
        return Parser(tokenize(input), options).parse_all();
    } catch (const std::invalid_argument& e) {
        // Rat::parse rejected a literal the tokenizer accepted.
        throw SyntaxError(0, std::string(input), e.what());
    }
}

std::string print(const Expr& e)
{
    return std::visit(
        overloaded{
            [](const RatLit& x) { return x.value.sign() < 0 ? "(-" + abs(x.value).str() + ")" : x.value.str(); },
            [](const FromBelow& x) { return "below(" + x.value.str() + ")"; },
            [](const Neg& x) { return "-" + print(*x.arg); },
            [](const Abs& x) { return "abs(" + print(*x.arg) + ")"; },
            [](const Binary& x) {
                if (const char* op = infix(x.op)) {
                    return "(" + print(*x.lhs) + op + print(*x.rhs) + ")";
                }
                std::string name = x.op == BinaryOp::max ? "max" : "min";
                return name + "(" + print(*x.lhs) + ", " + print(*x.rhs) + ")";
            },
            [](const Div& x) { return "(" + print(*x.num) + " / " + print(*x.den) + ")"; },
        },
        e.node);
}

CReal evaluate(const Expr& e, Fuel default_witness_fuel)
{
    return std::visit(
        overloaded{
            [](const RatLit& x) { return from_rat(x.value); },
            [](const FromBelow& x) { return from_below(x.value); },
            [&](const Neg& x) { return neg(evaluate(*x.arg, default_witness_fuel)); },
            [&](const Abs& x) { return abs(evaluate(*x.arg, default_witness_fuel)); },
            [&](const Binary& x) {
                CReal a = evaluate(*x.lhs, default_witness_fuel);
                CReal b = evaluate(*x.rhs, default_witness_fuel);
                switch (x.op) {
                case BinaryOp::add: return add(a, b);
                case BinaryOp::sub: return sub(a, b);
                case BinaryOp::mul: return mul(a, b);
                case BinaryOp::max: return join(a, b);
                case BinaryOp::min: return meet(a, b);
                }
                throw std::logic_error("unhandled binary operator");
            },
            [&](const Div& x) {
                CReal num = evaluate(*x.num, default_witness_fuel);
                CReal den = evaluate(*x.den, default_witness_fuel);
                Fuel fuel = x.witness_fuel.value_or(default_witness_fuel);
                auto w = find_apart_witness(den, fuel);
                if (!w) {
                    throw WitnessFailure("witness search failed: denominator " + print(*x.den) +
                                         " not shown apart from zero within " + std::to_string(fuel) + " stages");
                }
                return mul(num, recip_witnessed(den, *w));
            },
        },
        e.node);
}

}  // namespace cauchy::cli
