#pragma once

// Vocabulary of premetric spaces: decidable closeness on base carriers,
// Cauchy approximations, Lipschitz packaging, and the sampled checkers the
// test suites use to witness those properties.

#include <concepts>
#include <cstdint>
#include <functional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "creal/rational.hpp"

namespace cauchy {

/// A base space with a decidable closeness test `close(eps, a, b)`, read as
/// d(a, b) < eps. Reflexivity, symmetry, triangularity and roundedness are
/// not enforced by the type; the sampled checkers below test them.
template <class S>
concept PremetricCarrier = requires(const QPos& eps, const typename S::value_type& a,
                                    const typename S::value_type& b) {
    { S::close(eps, a, b) } -> std::convertible_to<bool>;
};

struct RationalSpace {
    using value_type = Rat;
    static bool close(const QPos& eps, const Rat& a, const Rat& b) { return close_q(eps, a, b); }
};

/// Maps a value type to its canonical base space.
template <class T>
struct default_space;

template <>
struct default_space<Rat> {
    using type = RationalSpace;
};

template <class T>
using default_space_t = typename default_space<T>::type;

/// A procedure producing, for each precision eps, a value at distance at
/// most eps from an intended limit. Callers guarantee that at(eps) and
/// at(delta) are (eps + delta)-close.
template <class A>
class CauchyApproximation {
public:
    using Fn = std::function<A(const QPos&)>;

    explicit CauchyApproximation(Fn fn) : fn_(std::move(fn)) {}

    A at(const QPos& eps) const { return fn_(eps); }
    A operator()(const QPos& eps) const { return fn_(eps); }

private:
    Fn fn_;
};

template <class A, class B>
struct LipschitzFn {
    std::function<B(const A&)> fn;
    QPos constant;

    B operator()(const A& a) const { return fn(a); }
};

template <class A>
LipschitzFn<A, A> identity_fn()
{
    return {[](const A& a) { return a; }, QPos(1)};
}

/// Composition; constants multiply.
template <class A, class B, class C>
LipschitzFn<A, C> compose(LipschitzFn<B, C> g, LipschitzFn<A, B> f)
{
    QPos constant = g.constant * f.constant;
    return {[g = std::move(g), f = std::move(f)](const A& a) { return g(f(a)); }, constant};
}

/// Maps a target precision to an input precision that suffices for it.
struct ContinuityModulus {
    std::function<QPos(const QPos&)> modulus;

    QPos operator()(const QPos& eps) const { return modulus(eps); }
};

/// A Lipschitz function with constant L is continuous with modulus eps / L.
inline ContinuityModulus lipschitz_modulus(QPos constant)
{
    return {[constant = std::move(constant)](const QPos& eps) { return eps / constant; }};
}

using PrecisionPair = std::pair<QPos, QPos>;

template <class A>
using ClosenessSample = std::tuple<QPos, A, A>;

template <PremetricCarrier Space>
bool check_cauchy(const CauchyApproximation<typename Space::value_type>& x,
                  const std::vector<PrecisionPair>& samples)
{
    for (const auto& [eps, delta] : samples) {
        if (!Space::close(eps + delta, x(eps), x(delta))) {
            return false;
        }
    }
    return true;
}

/// Samples whose pair is not eps-close in the domain are skipped, since the
/// implication holds vacuously there.
template <PremetricCarrier SpaceA, PremetricCarrier SpaceB>
bool check_lipschitz(
    const std::function<typename SpaceB::value_type(const typename SpaceA::value_type&)>& f,
    const QPos& constant,
    const std::vector<ClosenessSample<typename SpaceA::value_type>>& samples)
{
    for (const auto& [eps, x, y] : samples) {
        if (!SpaceA::close(eps, x, y)) {
            continue;
        }
        if (!SpaceB::close(constant * eps, f(x), f(y))) {
            return false;
        }
    }
    return true;
}

template <PremetricCarrier SpaceA, PremetricCarrier SpaceB>
bool check_modulus(
    const std::function<typename SpaceB::value_type(const typename SpaceA::value_type&)>& f,
    const ContinuityModulus& modulus,
    const std::vector<ClosenessSample<typename SpaceA::value_type>>& samples)
{
    for (const auto& [eps, x, y] : samples) {
        if (SpaceA::close(modulus(eps), x, y) && !SpaceB::close(eps, f(x), f(y))) {
            return false;
        }
    }
    return true;
}

/// Reproducible dyadic precision pairs (2^-i, 2^-j) with i, j <= max_exponent.
inline std::vector<PrecisionPair> dyadic_pairs(std::mt19937_64& rng, std::size_t count,
                                               std::uint64_t max_exponent = 32)
{
    std::uniform_int_distribution<std::uint64_t> exponent(0, max_exponent);
    std::vector<PrecisionPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.emplace_back(dyadic(exponent(rng)), dyadic(exponent(rng)));
    }
    return out;
}

}  // namespace cauchy
