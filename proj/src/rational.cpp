#include "creal/rational.hpp"

#include <cctype>
#include <ostream>

namespace cauchy {

Rat::Rat(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d))
{
    if (sgn(den_) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    normalize();
}

void Rat::normalize()
{
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (sgn(num_) == 0) {
        den_ = 1;
        return;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rat operator+(const Rat& a, const Rat& b)
{
    if (a.den_ == b.den_) {
        return Rat(a.num_ + b.num_, a.den_);
    }
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b)
{
    if (a.den_ == b.den_) {
        return Rat(a.num_ - b.num_, a.den_);
    }
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b)
{
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b)
{
    if (b.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

Rat operator-(const Rat& a)
{
    return Rat(-a.num_, a.den_, Rat::Normalized{});
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b)
{
    int c = (a.den_ == b.den_) ? cmp(a.num_, b.num_) : cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Rat Rat::mul_pow2(std::uint64_t k) const
{
    // Only the power of two shared with the denominator cancels.
    auto twos = static_cast<std::uint64_t>(mpz_scan1(den_.get_mpz_t(), 0));
    auto cancel = std::min(twos, k);
    Integer n = num_;
    Integer d = den_;
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), cancel);
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), k - cancel);
    return Rat(std::move(n), std::move(d), Normalized{});
}

Rat Rat::div_pow2(std::uint64_t k) const
{
    if (is_zero()) {
        return *this;
    }
    auto twos = static_cast<std::uint64_t>(mpz_scan1(num_.get_mpz_t(), 0));
    auto cancel = std::min(twos, k);
    Integer n = num_;
    Integer d = den_;
    mpz_tdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), cancel);
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), k - cancel);
    return Rat(std::move(n), std::move(d), Normalized{});
}

Integer Rat::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

Integer Rat::ceil() const
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

std::string Rat::str() const
{
    if (den_ == 1) {
        return num_.get_str();
    }
    return num_.get_str() + "/" + den_.get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

[[noreturn]] void bad_literal(std::string_view text)
{
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

Rat Rat::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rat value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto p = body.substr(0, slash);
        auto q = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) {
            bad_literal(text);
        }
        Integer den(std::string(q), 10);
        if (sgn(den) == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        value = Rat(Integer(std::string(p), 10), den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp)) {
            bad_literal(text);
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        value = Rat(Integer(std::string(ip) + std::string(fp), 10), scale);
    } else {
        if (!all_digits(body)) {
            bad_literal(text);
        }
        value = Rat(Integer(std::string(body), 10));
    }
    return negative ? -value : value;
}

Rat abs(const Rat& q)
{
    return q.sign() < 0 ? -q : q;
}

Rat max(const Rat& a, const Rat& b)
{
    return a < b ? b : a;
}

Rat min(const Rat& a, const Rat& b)
{
    return b < a ? b : a;
}

std::string to_decimal(const Rat& q, std::uint64_t digits, Rounding mode)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rat scaled = q * Rat(scale);
    Integer n = mode == Rounding::down ? scaled.floor() : scaled.ceil();

    bool negative = sgn(n) < 0;
    std::string s = Integer(abs(n)).get_str();
    if (digits > 0) {
        if (s.size() <= digits) {
            s.insert(0, digits + 1 - s.size(), '0');
        }
        s.insert(s.size() - digits, 1, '.');
    }
    return negative ? "-" + s : s;
}

std::ostream& operator<<(std::ostream& os, const Rat& q)
{
    return os << q.str();
}

QPos::QPos(Rat value) : value_(std::move(value))
{
    if (value_.sign() <= 0) {
        throw std::domain_error("QPos requires a strictly positive value, got " + value_.str());
    }
}

QPos min(const QPos& a, const QPos& b)
{
    return b < a ? b : a;
}

QPos dyadic(std::uint64_t k)
{
    return QPos(Rat(1).div_pow2(k), QPos::Trusted{});
}

bool close_q(const QPos& eps, const Rat& q, const Rat& r)
{
    return abs(q - r) < eps.value();
}

}  // namespace cauchy
