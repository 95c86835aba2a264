#pragma once

// Cauchy completion of a premetric space, represented operationally: every
// point is a procedure answering "give me an element of T within eps of
// you". eta and limit are smart constructors over that representation and
// Lipschitz functions extend along it, which makes the completion a monad.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <variant>

#include "creal/partiality.hpp"
#include "creal/premetric.hpp"
#include "creal/rational.hpp"

namespace cauchy {

template <class T>
class CompletionPoint {
public:
    using value_type = T;
    using Approximator = std::function<T(const QPos&)>;

    /// Upper bound on cached precisions per point. The finest entry is never
    /// evicted, since it answers every coarser request.
    static constexpr std::size_t memo_capacity = 32;

    static CompletionPoint constant(T value) { return CompletionPoint(std::move(value)); }

    /// `fn` must be a Cauchy approximation: fn(e) and fn(d) are (e + d)-close.
    static CompletionPoint from_procedure(Approximator fn, bool memoize = true)
    {
        auto proc = std::make_shared<Procedure>();
        proc->fn = std::move(fn);
        proc->memoize = memoize;
        return CompletionPoint(std::move(proc));
    }

    /// An element of T at distance at most eps from this point. A value
    /// cached for a finer precision may be returned.
    T approximate(const QPos& eps) const
    {
        if (const T* c = std::get_if<T>(&rep_)) {
            return *c;
        }
        const auto& proc = std::get<std::shared_ptr<Procedure>>(rep_);
        if (!proc->memoize) {
            return proc->fn(eps);
        }
        {
            std::lock_guard lock(proc->mu);
            auto it = proc->memo.upper_bound(eps.value());
            if (it != proc->memo.begin()) {
                return std::prev(it)->second;
            }
        }
        T value = proc->fn(eps);
        std::lock_guard lock(proc->mu);
        proc->memo.insert_or_assign(eps.value(), value);
        while (proc->memo.size() > memo_capacity) {
            proc->memo.erase(std::prev(proc->memo.end()));
        }
        return value;
    }

    /// The base element when this point was built by eta, else null.
    const T* constant_value() const { return std::get_if<T>(&rep_); }

    CauchyApproximation<T> as_approximation() const
    {
        return CauchyApproximation<T>([self = *this](const QPos& eps) { return self.approximate(eps); });
    }

private:
    struct Procedure {
        Approximator fn;
        bool memoize = true;
        std::mutex mu;
        std::map<Rat, T> memo;
    };

    explicit CompletionPoint(T value) : rep_(std::move(value)) {}
    explicit CompletionPoint(std::shared_ptr<Procedure> proc) : rep_(std::move(proc)) {}

    std::variant<T, std::shared_ptr<Procedure>> rep_;
};

template <class T>
CompletionPoint<T> eta(T value)
{
    return CompletionPoint<T>::constant(std::move(value));
}

template <class T>
T approximate(const CompletionPoint<T>& x, const QPos& eps)
{
    return x.approximate(eps);
}

/// Limit of a Cauchy approximation of completed points, split evenly:
/// approximate(limit(x), e) = approximate(x(e/2), e/2).
template <class T>
CompletionPoint<T> limit(CauchyApproximation<CompletionPoint<T>> x)
{
    return CompletionPoint<T>::from_procedure([x = std::move(x)](const QPos& eps) {
        QPos h = eps.half();
        return x(h).approximate(h);
    });
}

/// Semi-decides x ~eps y. Stage k compares both points at delta = 2^-k in
/// the base space with the remaining budget eps - 2 delta.
template <class T, PremetricCarrier Space = default_space_t<T>>
Sier close_semidecide(const QPos& eps, const CompletionPoint<T>& x, const CompletionPoint<T>& y)
{
    return countable_sup([eps, x, y](std::uint64_t k) {
        QPos delta = dyadic(k);
        Rat slack = eps.value() - delta.value().mul_pow2(1);
        if (slack.sign() <= 0) {
            return bottom();
        }
        return Space::close(QPos(slack), x.approximate(delta), y.approximate(delta)) ? top() : bottom();
    });
}

/// Unary Lipschitz extension. With constant L:
/// extend(f)(x).approximate(e) = f(approximate(x, e / 2L)).approximate(e / 2).
template <class T, class U>
LipschitzFn<CompletionPoint<T>, CompletionPoint<U>> extend_lipschitz(LipschitzFn<T, CompletionPoint<U>> f)
{
    QPos constant = f.constant;
    return {[f = std::move(f)](const CompletionPoint<T>& x) {
                return CompletionPoint<U>::from_procedure([f, x](const QPos& eps) {
                    QPos inner = eps / (f.constant * QPos(2));
                    return f(x.approximate(inner)).approximate(eps.half());
                });
            },
            constant};
}

/// Binary Lipschitz extension for f Lipschitz `lip_second` in its second
/// argument and `lip_first` in its first:
/// result(x, y).approximate(e) =
///     f(approximate(x, e / 4 lip_first), approximate(y, e / 4 lip_second)).approximate(e / 2).
template <class T, class U, class V>
std::function<CompletionPoint<V>(const CompletionPoint<T>&, const CompletionPoint<U>&)>
extend_lipschitz2(std::function<CompletionPoint<V>(const T&, const U&)> f, QPos lip_second, QPos lip_first)
{
    return [f = std::move(f), lip_second = std::move(lip_second), lip_first = std::move(lip_first)](
               const CompletionPoint<T>& x, const CompletionPoint<U>& y) {
        return CompletionPoint<V>::from_procedure([f, lip_second, lip_first, x, y](const QPos& eps) {
            QPos quarter = eps.half().half();
            return f(x.approximate(quarter / lip_first), y.approximate(quarter / lip_second))
                .approximate(eps.half());
        });
    };
}

/// Functor action: the extension of eta . f, with f's constant.
template <class T, class U>
LipschitzFn<CompletionPoint<T>, CompletionPoint<U>> monad_map(LipschitzFn<T, U> f)
{
    QPos constant = f.constant;
    return extend_lipschitz(LipschitzFn<T, CompletionPoint<U>>{
        [f = std::move(f)](const T& t) { return eta(f(t)); }, constant});
}

/// Flattens a completed completion:
/// approximate(join(x), e) = approximate(approximate(x, e/2), e/2).
template <class T>
CompletionPoint<T> monad_join(CompletionPoint<CompletionPoint<T>> x)
{
    return CompletionPoint<T>::from_procedure([x = std::move(x)](const QPos& eps) {
        QPos h = eps.half();
        return x.approximate(h).approximate(h);
    });
}

/// Pointwise limit of a Cauchy approximation of functions (closeness of
/// functions being uniform over the domain).
template <class A, class U>
std::function<CompletionPoint<U>(const A&)> lim_pointwise(
    CauchyApproximation<std::function<CompletionPoint<U>(const A&)>> s)
{
    return [s = std::move(s)](const A& a) {
        return limit(CauchyApproximation<CompletionPoint<U>>([s, a](const QPos& eps) { return s(eps)(a); }));
    };
}

}  // namespace cauchy
