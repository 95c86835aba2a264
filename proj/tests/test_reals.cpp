#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "corpus.hpp"
#include "creal/reals.hpp"
#include "oracle.hpp"

using namespace cauchy;
using cauchy::test::BRat;
using cauchy::test::corpus;
using cauchy::test::make_sample;
using cauchy::test::oracle_abs;
using cauchy::test::random_rat;
using cauchy::test::Sample;
using cauchy::test::to_oracle;
using cauchy::test::within;

namespace {

Rat frac(long p, long q = 1)
{
    return Rat(Integer(p), Integer(q));
}

const std::vector<std::uint64_t> precisions{0, 2, 8, 32, 128};

bool agree(const CReal& a, const CReal& b, const QPos& eps, long factor = 2)
{
    return within(a.approximate(eps), b.approximate(eps), eps.value() * Rat(factor));
}

bool denotes(const CReal& x, const BRat& v, const QPos& eps)
{
    return within(x.approximate(eps), v, to_oracle(eps.value()));
}

Fuel log2_ceil(const Rat& r)
{
    // Smallest n with 2^n >= r, for r > 0.
    Fuel n = 0;
    Rat p(1);
    while (p < r) {
        p = p.mul_pow2(1);
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("from_rat and the rational fast path")
{
    CHECK(from_rat(Rat(0)).exact() == Rat(0));
    CHECK(from_rat(frac(3, 4)).approximate(dyadic(50)) == frac(3, 4));
    CHECK(add(from_rat(Rat(1)), from_rat(Rat(2))).exact() == Rat(3));
    CHECK(join(from_rat(Rat(1)), from_rat(Rat(2))).exact() == Rat(2));
    CHECK(abs(from_rat(Rat(-3))).exact() == Rat(3));
    CHECK(scale(Rat(3), from_rat(frac(1, 3))).exact() == Rat(1));
    CHECK(clamp(from_rat(Rat(5)), Rat(0), Rat(1)).exact() == Rat(1));
    CHECK(mul(from_rat(Rat(2)), from_rat(Rat(3))).exact() == Rat(6));
    CHECK(recip_witnessed(from_rat(Rat(2)), {Sign::positive, QPos(1)}).exact() == frac(1, 2));
    CHECK(recip_witnessed(from_rat(Rat(-2)), {Sign::negative, QPos(1)}).exact() == frac(-1, 2));
    CHECK_THROWS_AS(recip_witnessed(from_rat(Rat(0)), {Sign::positive, QPos(1)}), std::domain_error);
    CHECK_FALSE(without_fast_path(from_rat(Rat(1))).exact().has_value());
    CHECK_FALSE(from_below(Rat(1)).exact().has_value());
}

TEST_CASE("fast paths agree with generic paths")
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        Rat q = random_rat(rng);
        Rat r = random_rat(rng);
        CReal fq = from_rat(q);
        CReal fr = from_rat(r);
        CReal gq = without_fast_path(fq);
        CReal gr = without_fast_path(fr);
        for (auto k : precisions) {
            QPos eps = dyadic(k);
            CHECK(within(add(gq, gr).approximate(eps), q + r, eps.value()));
            CHECK(within(mul(gq, gr).approximate(eps), q * r, eps.value()));
            CHECK(within(neg(gq).approximate(eps), -q, eps.value()));
            CHECK(within(join(gq, gr).approximate(eps), max(q, r), eps.value()));
            CHECK(within(meet(gq, gr).approximate(eps), min(q, r), eps.value()));
            CHECK(within(abs(gq).approximate(eps), abs(q), eps.value()));
            CHECK(within(scale(r, gq).approximate(eps), r * q, eps.value()));
        }
    }
}

TEST_CASE("operation examples on limits")
{
    for (auto k : precisions) {
        QPos eps = dyadic(k);
        CHECK(denotes(add(from_below(Rat(1)), from_below(Rat(2))), BRat(3), eps));
        CHECK(denotes(mul(from_below(Rat(2)), from_below(Rat(3))), BRat(6), eps));
        CHECK(denotes(scale(Rat(0), from_below(Rat(4))), BRat(0), eps));
        CHECK(denotes(scale(frac(-2, 3), from_below(Rat(6))), BRat(-4), eps));
        CHECK(denotes(clamp(from_below(frac(1, 2)), Rat(0), Rat(1)), BRat(1) / 2, eps));
        CHECK(denotes(mul(from_below(Rat(7)), from_rat(Rat(0))), BRat(0), eps));
        CHECK(denotes(recip_witnessed(without_fast_path(from_rat(Rat(2))), {Sign::positive, QPos(frac(1, 4))}),
                      BRat(1) / 2, eps));
        CHECK(denotes(recip_witnessed(from_below(Rat(-4)), {Sign::negative, QPos(Rat(1))}), BRat(-1) / 4, eps));
    }
    CHECK_THROWS_AS(clamp(from_rat(Rat(0)), Rat(1), Rat(0)), std::invalid_argument);
}

TEST_CASE("clamp approximations stay inside the interval")
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        CReal x = from_below(random_rat(rng));
        Rat a = random_rat(rng, 20);
        Rat b = a + frac(static_cast<long>(rng() % 10), 3);
        for (auto k : precisions) {
            Rat v = clamp(x, a, b).approximate(dyadic(k));
            CHECK(a <= v);
            CHECK(v <= b);
        }
    }
}

TEST_CASE("bound follows its formula")
{
    CHECK(bound(from_rat(Rat(3))).value() == Rat(5));
    CHECK(bound(from_rat(Rat(0))).value() == Rat(2));
    CHECK(bound(from_below(Rat(10))).value() == frac(23, 2));
    for (const auto& s : corpus(40)) {
        CHECK(oracle_abs(s.value) < to_oracle(bound(s.x).value()));
    }
}

TEST_CASE("semi-decision examples")
{
    CHECK(first_done(lt_rat_semidecide(from_rat(frac(1, 2)), Rat(1)), 64) == Fuel(3));
    CHECK(lt_rat_semidecide(from_rat(Rat(1)), Rat(1)).run(300).is_pending());
    CHECK(lt_rat_semidecide(from_below(Rat(0)), Rat(0)).run(300).is_pending());

    CHECK(is_positive(from_rat(Rat(1))).run(8) == Outcome<bool>::done(true));
    CHECK(is_positive(from_rat(Rat(-1))).run(8) == Outcome<bool>::done(false));
    CHECK(is_positive(from_rat(Rat(0))).run(500).is_pending());

    CHECK(compare_partial(from_rat(frac(22, 7)), from_rat(frac(355, 113))).run(64) == Outcome<bool>::done(false));
    CReal x = from_below(frac(1, 3));
    CHECK(compare_partial(x, x).run(300).is_pending());
    CHECK(compare_partial(from_below(Rat(1)), from_rat(Rat(2))).run(16) == Outcome<bool>::done(true));
}

TEST_CASE("find_apart_witness")
{
    auto w = find_apart_witness(from_rat(Rat(1)), 8);
    REQUIRE(w);
    CHECK(w->sign == Sign::positive);
    CHECK(w->gap.value() == frac(1, 4));
    CHECK_FALSE(find_apart_witness(from_rat(Rat(0)), 300));
    CHECK_FALSE(find_apart_witness(from_below(Rat(0)), 300));
    for (const auto& s : corpus(60)) {
        if (auto v = find_apart_witness(s.x, 200)) {
            CHECK(to_oracle(v->gap.value()) <= oracle_abs(s.value));
            CHECK((v->sign == Sign::positive) == (s.value > 0));
        } else {
            CHECK(oracle_abs(s.value) < cauchy::test::oracle_pow2_neg(198));
        }
    }
}

TEST_CASE("every corpus point is a Cauchy approximation")
{
    std::mt19937_64 rng(3);
    auto pairs = dyadic_pairs(rng, 200, 64);
    for (const auto& s : corpus(60)) {
        INFO(s.label);
        CHECK(check_cauchy<RationalSpace>(s.x.point().as_approximation(), pairs));
        for (auto k : precisions) {
            CHECK(denotes(s.x, s.value, dyadic(k)));
        }
    }
}

TEST_CASE("ring and lattice identities across the corpus")
{
    auto c = corpus(24, 4);
    std::mt19937_64 rng(4);
    CReal one = from_rat(Rat(1));
    for (std::size_t i = 0; i < c.size(); ++i) {
        const CReal& x = c[i].x;
        const CReal& y = c[(i * 7 + 3) % c.size()].x;
        const CReal& z = c[(i * 13 + 5) % c.size()].x;
        INFO(c[i].label);
        for (std::uint64_t k : {8, 32}) {
            QPos eps = dyadic(k);
            CHECK(agree(x + y, y + x, eps));
            CHECK(agree((x + y) + z, x + (y + z), eps));
            CHECK(agree(x * y, y * x, eps));
            CHECK(agree((x * y) * z, x * (y * z), eps));
            CHECK(agree(x * (y + z), x * y + x * z, eps));
            CHECK(agree(x + neg(x), from_rat(Rat(0)), eps));
            CHECK(agree(x * one, x, eps));
            CHECK(agree(join(x, meet(x, y)), x, eps));
            CHECK(agree(meet(x, join(x, y)), x, eps));
            CHECK(agree(join(x, join(join(x, y), z)), join(join(x, y), z), eps));
            CHECK(agree(abs(x * y - x * z), abs(x) * abs(y - z), eps, 4));
        }
    }
}

TEST_CASE("inverse law for witnessed corpus entries")
{
    int witnessed = 0;
    for (const auto& s : corpus(60)) {
        auto w = find_apart_witness(s.x, 200);
        if (!w) {
            continue;
        }
        ++witnessed;
        CReal inv = recip_witnessed(s.x, *w);
        for (auto k : precisions) {
            QPos eps = dyadic(k);
            CHECK(within(mul(s.x, inv).approximate(eps), Rat(1), (eps + eps).value()));
            CHECK(denotes(inv, BRat(1) / s.value, eps));
        }
    }
    CHECK(witnessed > 30);
}

TEST_CASE("products of positives are positive")
{
    for (const auto& s : corpus(60)) {
        if (s.value <= 0) {
            continue;
        }
        auto w = find_apart_witness(s.x, 200);
        REQUIRE(w);
        CReal sq = mul(s.x, s.x);
        // x^2 >= gap^2, so the stage bound is log2(8 / gap^2) + 4.
        Fuel fuel = log2_ceil(Rat(8) / (w->gap * w->gap).value()) + 4;
        CHECK(is_positive(sq).run(fuel) == Outcome<bool>::done(true));
    }
}

TEST_CASE("order soundness, cotransitivity and x < x + eps")
{
    auto c = corpus(40, 4);
    std::mt19937_64 rng(5);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Sample& a = c[i];
        const Sample& b = c[(i * 5 + 1) % c.size()];
        Rat q = random_rat(rng, 30);
        auto lt = lt_rat_semidecide(a.x, q);
        for (Fuel n : {0, 3, 10, 40, 100}) {
            if (lt.run(n).is_done()) {
                CHECK(a.value < to_oracle(q));
            }
        }
        if (a.value < b.value) {
            BRat gap = b.value - a.value;
            for (int j = 0; j < 5; ++j) {
                Rat z = random_rat(rng, 30);
                auto x_lt_z = lt_rat_semidecide(a.x, z);
                auto z_lt_y = lt_rat_semidecide(neg(b.x), -z);
                Rat g = cauchy::test::from_oracle(gap);
                Fuel fuel = log2_ceil(Rat(8) / g) + 4;
                CHECK(join_sier(x_lt_z, z_lt_y).run(fuel).is_done());
            }
        }
        for (std::uint64_t k : {0, 4, 12}) {
            QPos eps = dyadic(k);
            Fuel fuel = log2_ceil(Rat(8) / eps.value()) + 4;
            CHECK(compare_partial(a.x, add(a.x, from_rat(eps.value()))).run(fuel) == Outcome<bool>::done(true));
        }
    }
}

TEST_CASE("multiplication is jointly continuous")
{
    std::mt19937_64 rng(6);
    for (int i = 0; i < 60; ++i) {
        Rat p = random_rat(rng, 50);
        Rat q = random_rat(rng, 50);
        CReal x = from_below(p);
        CReal y = from_below(q);
        for (std::uint64_t k : {2, 10, 30}) {
            QPos eps = dyadic(k);
            Rat b = max(bound(x).value(), bound(y).value());
            Rat delta = min(Rat(1), eps.value() / (Rat(2) * (b + Rat(1))));
            CReal xp = from_below(p + delta);
            CReal yp = from_below(q - delta);
            CHECK(within(mul(x, y).approximate(eps), mul(xp, yp).approximate(eps), Rat(3) * eps.value()));
        }
    }
}

TEST_CASE("bounds and witnesses do not change the value")
{
    for (const auto& s : corpus(60)) {
        QPos b1 = bound(s.x);
        CReal y = make_sample(999).x;
        QPos b2 = bound(y);
        CReal m1 = mul_bounded(s.x, y, b1, b2);
        CReal m2 = mul_bounded(s.x, y, b1 + QPos(7), b2 + QPos(7));
        auto w = find_apart_witness(s.x, 200);
        for (auto k : precisions) {
            QPos eps = dyadic(k);
            CHECK(agree(m1, m2, eps));
            if (w) {
                ApartnessWitness quarter{w->sign, w->gap / QPos(4)};
                CHECK(agree(recip_witnessed(s.x, *w), recip_witnessed(s.x, quarter), eps));
            }
        }
    }
}

TEST_CASE("lifted values are safe to share across threads")
{
    CReal x = mul(from_below(frac(1, 3)), add(from_below(Rat(2)), from_below(frac(1, 7))));
    BRat v = BRat(1) / 3 * (BRat(2) + BRat(1) / 7);
    std::vector<std::thread> workers;
    std::atomic<int> bad{0};
    for (int t = 0; t < 6; ++t) {
        workers.emplace_back([&, t] {
            for (std::uint64_t k = 0; k < 60; ++k) {
                QPos eps = dyadic((k * 11 + static_cast<std::uint64_t>(t) * 3) % 90);
                if (!denotes(x, v, eps)) {
                    ++bad;
                }
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    CHECK(bad == 0);
}
