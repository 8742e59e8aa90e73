#include <random>

#include "doctest.h"

#include "brute.hpp"
#include "frobenius/coins.hpp"
#include "frobenius/error.hpp"
#include "frobenius/stability.hpp"

using namespace frobenius;

TEST_CASE("coin system validation")
{
    CHECK_THROWS_AS(CoinSystem(std::vector<Amount>{}), PreconditionError);
    CHECK_THROWS_AS(CoinSystem({1, 1, 3}), PreconditionError);
    CHECK_THROWS_AS(CoinSystem({3, 2}), PreconditionError);
    CHECK_THROWS_AS(CoinSystem({0, 2}), PreconditionError);
    CHECK(CoinSystem({4, 6}).gcd() == 2);
    CHECK_FALSE(CoinSystem({4, 6}).coprime());
    CHECK(CoinSystem::parse("1,11,14") == CoinSystem({1, 11, 14}));
    CHECK(CoinSystem::parse(" 1, 5 ,9") == CoinSystem({1, 5, 9}));
    CHECK_THROWS_AS(CoinSystem::parse("1,,3"), PreconditionError);
    CHECK_THROWS_AS(CoinSystem::parse("1,x"), PreconditionError);
    CHECK(CoinSystem({1, 11, 14}).to_string() == "1,11,14");
}

TEST_CASE("opt_count examples")
{
    CHECK(opt_count({1, 6, 13}, 18) == Count(3));
    CHECK(opt_count({1, 11, 14}, 130) == Count(11));
    CHECK(opt_count({1, 11, 14}, 0) == Count(0));
    CHECK(opt_count({4, 8, 15, 17}, 0) == Count(0));
    CHECK_FALSE(opt_count({4, 8, 15, 17}, 18).representable());
    CHECK_THROWS(opt_count({4, 8, 15, 17}, 18).value());
    CHECK(opt_count({4, 8, 15, 17}, 18).value_or(-7) == -7);
}

TEST_CASE("greedy_count examples")
{
    CHECK(greedy_count({1, 6, 13}, 18) == 6);
    CHECK(greedy_count({1}, 37) == 37);
    CHECK(greedy_count({1, 5, 9}, 26) == 6);
    CHECK_THROWS_AS(greedy_count({2, 3}, 5), PreconditionError);
}

TEST_CASE("orderliness verdicts")
{
    const OrderlinessVerdict v = is_orderly({1, 6, 13});
    REQUIRE(v.counterexample);
    CHECK(*v.counterexample == 18);
    CHECK(v.optimal_at_counterexample == 3);
    CHECK(v.greedy_at_counterexample == 6);

    CHECK(is_orderly({1, 2, 6, 7, 12}).orderly());
    CHECK(is_orderly({1, 5, 9}).orderly());
    CHECK(is_orderly({1, 2, 5, 6}).counterexample == 10);
    for (Amount b = 4; b <= 9; b++) {
        CHECK(is_orderly({1, 2, b, b + 1, 2 * b}).orderly());
        CHECK(is_orderly({1, 2, b, b + 1}).counterexample == 2 * b);
    }
    for (Amount b = 3; b <= 9; b++) {
        CHECK(is_orderly({1, b, 2 * b - 1}).orderly());
    }
    CHECK_THROWS_AS(is_orderly({2, 3}), PreconditionError);
}

TEST_CASE("orderly systems stay greedy-optimal well past the decision bound")
{
    for (const CoinSystem& system : {CoinSystem{1, 5, 9}, CoinSystem{1, 2, 6, 7, 12}, CoinSystem{1, 2, 3, 4, 5}}) {
        REQUIRE(is_orderly(system).orderly());
        const OptTable table = build_table(system, 10 * system.largest());
        for (Amount m = 0; m <= table.limit(); m++) {
            CHECK(table[m].value() == greedy_count(system, m));
        }
    }
}

TEST_CASE("smallest counterexample is really the smallest")
{
    // Against a full scan far beyond b_{k-1} + b_k.
    std::mt19937_64 rng(20261017);
    for (int trial = 0; trial < 60; trial++) {
        std::vector<Amount> b{1};
        std::uniform_int_distribution<Amount> step(1, 9);
        const int k = 2 + trial % 4;
        for (int i = 1; i < k; i++) {
            b.push_back(b.back() + step(rng));
        }
        const CoinSystem system(b);
        const OptTable table = build_table(system, 6 * system.largest());
        std::optional<Amount> first;
        for (Amount m = 0; m <= table.limit() && !first; m++) {
            if (table[m].value() < greedy_count(system, m)) {
                first = m;
            }
        }
        CHECK(is_orderly(system).counterexample == first);
    }
}

TEST_CASE("opt_count matches exhaustive enumeration")
{
    const std::vector<std::vector<Amount>> systems{
        {1, 6, 13}, {1, 5, 9}, {1, 11, 14}, {1, 4, 11, 17}, {4, 8, 15, 17}, {2, 3}, {3, 5, 7}, {1, 2, 5, 6}, {5, 7},
    };
    for (const auto& b : systems) {
        const OptTable table = build_table(CoinSystem(b), 200);
        for (Amount m = 0; m <= 200; m++) {
            const std::optional<Amount> expected = brute::min_coins(b, m);
            CAPTURE(m);
            if (expected) {
                CHECK(table[m] == Count(*expected));
            } else {
                CHECK_FALSE(table[m].representable());
            }
        }
    }
}

TEST_CASE("opt never exceeds greedy and is 1-Lipschitz along each coin")
{
    for (const CoinSystem& system : {CoinSystem{1, 6, 13}, CoinSystem{1, 11, 14}, CoinSystem{1, 4, 11, 17}}) {
        const OptTable table = build_table(system, 400);
        for (Amount m = 0; m <= 400; m++) {
            CHECK(table[m].value() <= greedy_count(system, m));
            for (Amount b : system.denoms()) {
                if (m + b <= 400) {
                    CHECK(table[m + b].value() <= table[m].value() + 1);
                }
            }
        }
    }
    const OptTable t = build_table({4, 8, 15, 17}, 300);
    for (Amount m = 0; m <= 300; m++) {
        if (!t[m].representable()) {
            continue;
        }
        for (Amount b : t.system().denoms()) {
            if (m + b <= 300) {
                CHECK(t[m + b].value() <= t[m].value() + 1);
            }
        }
    }
}
