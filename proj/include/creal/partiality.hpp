#pragma once

// Step-indexed partiality monad and the Sierpinski space of semi-decisions.
//
// A Partial<A> is observed by running it with a fuel budget. Every value
// must be monotone in fuel: once Done(v) at fuel n, Done(v) at every m >= n.

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace cauchy {

using Fuel = std::uint64_t;

struct Unit {
    friend bool operator==(Unit, Unit) { return true; }
};

template <class A>
class Outcome {
public:
    static Outcome done(A value) { return Outcome(std::move(value)); }
    static Outcome pending() { return Outcome(); }

    bool is_done() const { return value_.has_value(); }
    bool is_pending() const { return !value_.has_value(); }
    const A& value() const { return *value_; }

    friend bool operator==(const Outcome&, const Outcome&) = default;

private:
    Outcome() = default;
    explicit Outcome(A value) : value_(std::move(value)) {}

    std::optional<A> value_;
};

template <class A>
class Partial {
public:
    using Step = std::function<Outcome<A>(Fuel)>;

    explicit Partial(Step step) : step_(std::make_shared<const Step>(std::move(step))) {}

    Outcome<A> run(Fuel fuel) const { return (*step_)(fuel); }

private:
    std::shared_ptr<const Step> step_;
};

/// Semi-decisions: a Sier "fires" when it reaches Done.
using Sier = Partial<Unit>;

template <class A>
Outcome<A> run(const Partial<A>& p, Fuel fuel)
{
    return p.run(fuel);
}

template <class A>
Partial<A> now(A value)
{
    return Partial<A>([value = std::move(value)](Fuel) { return Outcome<A>::done(value); });
}

template <class A>
Partial<A> never()
{
    return Partial<A>([](Fuel) { return Outcome<A>::pending(); });
}

inline Sier top()
{
    return now(Unit{});
}

inline Sier bottom()
{
    return never<Unit>();
}

/// Fires exactly from fuel `n` on.
inline Sier fires_at(Fuel n)
{
    return Sier([n](Fuel fuel) { return fuel >= n ? Outcome<Unit>::done({}) : Outcome<Unit>::pending(); });
}

/// Observational form of an increasing sequence: if at(n) is Done at some
/// fuel, at(n + 1) is Done with the same value at some fuel.
template <class A>
struct IncreasingSeq {
    std::function<Partial<A>(std::uint64_t)> at;
};

/// Supremum of an increasing sequence, observed along the diagonal.
template <class A>
Partial<A> sup_seq(IncreasingSeq<A> s)
{
    return Partial<A>([s = std::move(s)](Fuel fuel) { return s.at(fuel).run(fuel); });
}

template <class A, class F>
auto map_partial(F f, Partial<A> p) -> Partial<std::invoke_result_t<F, const A&>>
{
    using B = std::invoke_result_t<F, const A&>;
    return Partial<B>([f = std::move(f), p = std::move(p)](Fuel fuel) {
        auto o = p.run(fuel);
        return o.is_done() ? Outcome<B>::done(f(o.value())) : Outcome<B>::pending();
    });
}

/// Binary join: fires when either side fires.
inline Sier join_sier(Sier a, Sier b)
{
    return Sier([a = std::move(a), b = std::move(b)](Fuel fuel) {
        if (a.run(fuel).is_done() || b.run(fuel).is_done()) {
            return Outcome<Unit>::done({});
        }
        return Outcome<Unit>::pending();
    });
}

namespace detail {

// Shared state of a countable join. f(m) is built at most once per index,
// and the observed boundary between Pending and Done fuels is cached, which
// is sound by monotonicity.
class CountableSupState {
public:
    explicit CountableSupState(std::function<Sier(std::uint64_t)> f) : f_(std::move(f)) {}

    Outcome<Unit> run(Fuel fuel)
    {
        {
            std::lock_guard lock(mu_);
            if (fired_at_ && fuel >= *fired_at_) {
                return Outcome<Unit>::done({});
            }
            if (pending_through_ && fuel <= *pending_through_) {
                return Outcome<Unit>::pending();
            }
        }
        for (std::uint64_t m = 0; m <= fuel; ++m) {
            if (member(m).run(fuel).is_done()) {
                std::lock_guard lock(mu_);
                if (!fired_at_ || fuel < *fired_at_) {
                    fired_at_ = fuel;
                }
                return Outcome<Unit>::done({});
            }
        }
        std::lock_guard lock(mu_);
        if (!pending_through_ || fuel > *pending_through_) {
            pending_through_ = fuel;
        }
        return Outcome<Unit>::pending();
    }

private:
    Sier member(std::uint64_t m)
    {
        {
            std::lock_guard lock(mu_);
            if (m < members_.size()) {
                return members_[m];
            }
        }
        // Built outside the lock: f may be expensive. Members are appended in
        // index order, so a concurrent builder of the same index just loses.
        Sier s = f_(m);
        std::lock_guard lock(mu_);
        if (m == members_.size()) {
            members_.push_back(s);
        }
        return s;
    }

    std::function<Sier(std::uint64_t)> f_;
    std::mutex mu_;
    std::vector<Sier> members_;
    std::optional<Fuel> fired_at_;
    std::optional<Fuel> pending_through_;
};

}  // namespace detail

/// Least upper bound of an arbitrary (not necessarily increasing) family:
/// at fuel n, fires iff some f(m) with m <= n fires at fuel n. Semi-decides
/// "exists m, f(m)".
inline Sier countable_sup(std::function<Sier(std::uint64_t)> f)
{
    auto state = std::make_shared<detail::CountableSupState>(std::move(f));
    return Sier([state](Fuel fuel) { return state->run(fuel); });
}

/// Runs two disjoint semi-decisions in lockstep: Done(true) when `a` fires,
/// Done(false) when `b` fires. If both fire at the same fuel (a broken
/// disjointness contract) `a` wins.
inline Partial<bool> interleave(Sier a, Sier b)
{
    return Partial<bool>([a = std::move(a), b = std::move(b)](Fuel fuel) {
        if (a.run(fuel).is_done()) {
            return Outcome<bool>::done(true);
        }
        if (b.run(fuel).is_done()) {
            return Outcome<bool>::done(false);
        }
        return Outcome<bool>::pending();
    });
}

/// Smallest fuel in [0, limit] at which `p` is Done, found by bisection
/// (valid because Partial values are monotone).
template <class A>
std::optional<Fuel> first_done(const Partial<A>& p, Fuel limit)
{
    if (p.run(limit).is_pending()) {
        return std::nullopt;
    }
    Fuel lo = 0;
    Fuel hi = limit;
    while (lo < hi) {
        Fuel mid = lo + (hi - lo) / 2;
        if (p.run(mid).is_done()) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

}  // namespace cauchy
