#include "creal/reals.hpp"

#include <stdexcept>

namespace cauchy {

namespace {

using Point = CompletionPoint<Rat>;
using BinaryOp = std::function<Point(const Point&, const Point&)>;

// Rational operations lifted as non-expanding in each argument.
const BinaryOp& lifted_add()
{
    static const BinaryOp op = extend_lipschitz2<Rat, Rat, Rat>(
        [](const Rat& q, const Rat& r) { return eta(q + r); }, QPos(1), QPos(1));
    return op;
}

const BinaryOp& lifted_max()
{
    static const BinaryOp op = extend_lipschitz2<Rat, Rat, Rat>(
        [](const Rat& q, const Rat& r) { return eta(max(q, r)); }, QPos(1), QPos(1));
    return op;
}

const BinaryOp& lifted_min()
{
    static const BinaryOp op = extend_lipschitz2<Rat, Rat, Rat>(
        [](const Rat& q, const Rat& r) { return eta(min(q, r)); }, QPos(1), QPos(1));
    return op;
}

const LipschitzFn<Point, Point>& lifted_neg()
{
    static const auto op = extend_lipschitz(LipschitzFn<Rat, Point>{[](const Rat& q) { return eta(-q); }, QPos(1)});
    return op;
}

bool both_exact(const CReal& x, const CReal& y)
{
    return x.exact().has_value() && y.exact().has_value();
}

Rat clamp_rat(const Rat& q, const Rat& lo, const Rat& hi)
{
    return max(lo, min(q, hi));
}

CReal recip_positive(const CReal& x, const QPos& gap)
{
    QPos gap_sq = gap * gap;
    Rat floor_value = gap.value();
    return CReal(Point::from_procedure([x, gap_sq, floor_value](const QPos& eps) {
        return Rat(1) / max(floor_value, x.approximate(eps * gap_sq));
    }));
}

}  // namespace

CReal from_rat(Rat q)
{
    return CReal(std::move(q));
}

CReal without_fast_path(const CReal& x)
{
    return CReal(x.point());
}

CReal from_below(const Rat& q)
{
    return CReal(limit(CauchyApproximation<Point>([q](const QPos& eps) { return eta(q - eps.value()); })));
}

CReal add(const CReal& x, const CReal& y)
{
    if (both_exact(x, y)) {
        return from_rat(*x.exact() + *y.exact());
    }
    return CReal(lifted_add()(x.point(), y.point()));
}

CReal neg(const CReal& x)
{
    if (x.exact()) {
        return from_rat(-*x.exact());
    }
    return CReal(lifted_neg()(x.point()));
}

CReal sub(const CReal& x, const CReal& y)
{
    return add(x, neg(y));
}

CReal join(const CReal& x, const CReal& y)
{
    if (both_exact(x, y)) {
        return from_rat(max(*x.exact(), *y.exact()));
    }
    return CReal(lifted_max()(x.point(), y.point()));
}

CReal meet(const CReal& x, const CReal& y)
{
    if (both_exact(x, y)) {
        return from_rat(min(*x.exact(), *y.exact()));
    }
    return CReal(lifted_min()(x.point(), y.point()));
}

CReal abs(const CReal& x)
{
    if (x.exact()) {
        return from_rat(abs(*x.exact()));
    }
    return join(x, neg(x));
}

CReal scale(const Rat& q, const CReal& x)
{
    if (x.exact()) {
        return from_rat(q * *x.exact());
    }
    auto lifted = extend_lipschitz(
        LipschitzFn<Rat, Point>{[q](const Rat& r) { return eta(q * r); }, QPos(abs(q) + Rat(1))});
    return CReal(lifted(x.point()));
}

CReal clamp(const CReal& x, const Rat& a, const Rat& b)
{
    if (b < a) {
        throw std::invalid_argument("clamp requires a <= b, got [" + a.str() + ", " + b.str() + "]");
    }
    return join(from_rat(a), meet(x, from_rat(b)));
}

QPos bound(const CReal& x)
{
    return QPos(abs(x.approximate(QPos(1))) + Rat(2));
}

CReal mul(const CReal& x, const CReal& y)
{
    if (both_exact(x, y)) {
        return from_rat(*x.exact() * *y.exact());
    }
    return mul_bounded(x, y, bound(x), bound(y));
}

CReal mul_bounded(const CReal& x, const CReal& y, const QPos& bound_x, const QPos& bound_y)
{
    // |xy - pq| <= |x||y - q| + |x - p||q| with |q| <= bound_y after clamping.
    QPos twice_bx = bound_x * QPos(2);
    QPos twice_by = bound_y * QPos(2);
    Rat hi = bound_y.value();
    Rat lo = -hi;
    return CReal(Point::from_procedure([x, y, twice_bx, twice_by, lo, hi](const QPos& eps) {
        Rat p = x.approximate(eps / twice_by);
        Rat q = clamp_rat(y.approximate(eps / twice_bx), lo, hi);
        return p * q;
    }));
}

CReal recip_witnessed(const CReal& x, const ApartnessWitness& w)
{
    if (x.exact()) {
        if (x.exact()->is_zero()) {
            throw std::domain_error("reciprocal of zero");
        }
        return from_rat(Rat(1) / *x.exact());
    }
    if (w.sign == Sign::positive) {
        return recip_positive(x, w.gap);
    }
    return neg(recip_positive(neg(x), w.gap));
}

Sier lt_rat_semidecide(const CReal& x, const Rat& q)
{
    return countable_sup([x, q](std::uint64_t k) {
        QPos delta = dyadic(k);
        return x.approximate(delta) < q - delta.value().mul_pow2(1) ? top() : bottom();
    });
}

Partial<bool> is_positive(const CReal& x)
{
    return interleave(lt_rat_semidecide(neg(x), Rat(0)), lt_rat_semidecide(x, Rat(0)));
}

Partial<bool> compare_partial(const CReal& x, const CReal& y)
{
    return is_positive(sub(y, x));
}

std::optional<ApartnessWitness> find_apart_witness(const CReal& x, Fuel fuel)
{
    for (Fuel k = 0; k <= fuel; ++k) {
        QPos delta = dyadic(k);
        Rat a = x.approximate(delta);
        if (abs(a) > delta.value().mul_pow2(1)) {
            return ApartnessWitness{a.sign() > 0 ? Sign::positive : Sign::negative, delta};
        }
    }
    return std::nullopt;
}

}  // namespace cauchy
