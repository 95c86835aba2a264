#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cauchy {

using Integer = mpz_class;

/**
 * Exact rational number over arbitrary-precision integers.
 *
 * The fraction is always kept in lowest terms with a strictly positive
 * denominator, so equal values have equal representations and can be used
 * directly as ordered map keys.
 */
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Rat(Integer n) : num_(std::move(n)), den_(1) {}
    Rat(Integer n, Integer d);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    int sign() const { return sgn(num_); }
    bool is_zero() const { return sgn(num_) == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a);

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    // Multiplication / division by 2^k without a gcd pass.
    Rat mul_pow2(std::uint64_t k) const;
    Rat div_pow2(std::uint64_t k) const;

    Integer floor() const;
    Integer ceil() const;

    /// Canonical `p/q` form (or `p` when the denominator is one).
    std::string str() const;

    /// Accepts `p`, `p/q` and exact decimals like `-3.14`, each with an
    /// optional sign. Throws std::invalid_argument on malformed input or a
    /// zero denominator.
    static Rat parse(std::string_view text);

private:
    struct Normalized {};
    Rat(Integer n, Integer d, Normalized) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    Integer num_;
    Integer den_;
};

Rat abs(const Rat& q);
Rat max(const Rat& a, const Rat& b);
Rat min(const Rat& a, const Rat& b);

/// Decimal rendering with `digits` fractional digits, rounded toward -inf
/// (`Rounding::down`) or +inf (`Rounding::up`).
enum class Rounding { down, up };
std::string to_decimal(const Rat& q, std::uint64_t digits, Rounding mode);

std::ostream& operator<<(std::ostream& os, const Rat& q);

/// Strictly positive rational; the currency of every precision parameter.
class QPos {
public:
    explicit QPos(Rat value);
    QPos(long n) : QPos(Rat(n)) {}  // NOLINT(google-explicit-constructor)

    const Rat& value() const { return value_; }
    operator const Rat&() const { return value_; }  // NOLINT(google-explicit-constructor)

    QPos half() const { return QPos(value_.div_pow2(1), Trusted{}); }

    friend QPos operator+(const QPos& a, const QPos& b) { return QPos(a.value_ + b.value_, Trusted{}); }
    friend QPos operator*(const QPos& a, const QPos& b) { return QPos(a.value_ * b.value_, Trusted{}); }
    friend QPos operator/(const QPos& a, const QPos& b) { return QPos(a.value_ / b.value_, Trusted{}); }

    friend bool operator==(const QPos& a, const QPos& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const QPos& a, const QPos& b) { return a.value_ <=> b.value_; }

private:
    struct Trusted {};
    QPos(Rat value, Trusted) : value_(std::move(value)) {}
    friend QPos min(const QPos& a, const QPos& b);
    friend QPos dyadic(std::uint64_t k);

    Rat value_;
};

QPos min(const QPos& a, const QPos& b);

/// 2^-k.
QPos dyadic(std::uint64_t k);

/// |q - r| < eps, strictly.
bool close_q(const QPos& eps, const Rat& q, const Rat& r);

}  // namespace cauchy
