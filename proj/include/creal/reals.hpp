#pragma once

// Cauchy reals: the completion of the rationals, with a rational fast path.

#include <optional>

#include "creal/completion.hpp"
#include "creal/partiality.hpp"
#include "creal/rational.hpp"

namespace cauchy {

class CReal {
public:
    /// Zero.
    CReal() : CReal(Rat(0)) {}
    CReal(Rat q) : point_(eta(q)), exact_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
    explicit CReal(CompletionPoint<Rat> point) : point_(std::move(point)) {}

    Rat approximate(const QPos& eps) const { return point_.approximate(eps); }

    const CompletionPoint<Rat>& point() const { return point_; }

    /// Set when the value is known to be the rational eta(q).
    const std::optional<Rat>& exact() const { return exact_; }

private:
    CompletionPoint<Rat> point_;
    std::optional<Rat> exact_;
};

inline Rat approximate(const CReal& x, const QPos& eps)
{
    return x.approximate(eps);
}

CReal from_rat(Rat q);

/// The same point with the rational tag dropped, forcing generic paths.
CReal without_fast_path(const CReal& x);

/// limit(lambda e. q - e); the canonical limit that denotes q.
CReal from_below(const Rat& q);

CReal add(const CReal& x, const CReal& y);
CReal neg(const CReal& x);
CReal sub(const CReal& x, const CReal& y);

CReal join(const CReal& x, const CReal& y);
CReal meet(const CReal& x, const CReal& y);
CReal abs(const CReal& x);

/// q * x, extended with constant |q| + 1.
CReal scale(const Rat& q, const CReal& x);

/// join(a, meet(x, b)); throws std::invalid_argument when a > b.
CReal clamp(const CReal& x, const Rat& a, const Rat& b);

/// |approximate(x, 1)| + 2, strictly above |x|.
QPos bound(const CReal& x);

CReal mul(const CReal& x, const CReal& y);

/// Multiplication with caller-supplied bounds |x| < bound_x, |y| < bound_y.
/// Any valid bounds denote the same product.
CReal mul_bounded(const CReal& x, const CReal& y, const QPos& bound_x, const QPos& bound_y);

enum class Sign { positive, negative };

/// Certifies gap <= |x| with x on the side given by `sign`.
struct ApartnessWitness {
    Sign sign;
    QPos gap;
};

/// 1/x given a valid apartness witness. Throws std::domain_error when x is a
/// rational zero.
CReal recip_witnessed(const CReal& x, const ApartnessWitness& w);

/// Semi-decides x < q: stage k fires when approximate(x, 2^-k) < q - 2^(1-k).
Sier lt_rat_semidecide(const CReal& x, const Rat& q);

/// Done(true) iff 0 < x, Done(false) iff x < 0, Pending forever on zero.
Partial<bool> is_positive(const CReal& x);

/// Done(true) iff x < y, Done(false) iff y < x.
Partial<bool> compare_partial(const CReal& x, const CReal& y);

/// Scans k = 0..fuel for |approximate(x, 2^-k)| > 2^(1-k); the first hit
/// yields gap 2^-k with the sign of that approximation.
std::optional<ApartnessWitness> find_apart_witness(const CReal& x, Fuel fuel);

inline CReal operator+(const CReal& x, const CReal& y) { return add(x, y); }
inline CReal operator-(const CReal& x, const CReal& y) { return sub(x, y); }
inline CReal operator-(const CReal& x) { return neg(x); }
inline CReal operator*(const CReal& x, const CReal& y) { return mul(x, y); }

}  // namespace cauchy
