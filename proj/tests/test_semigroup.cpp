#include <numeric>
#include <random>

#include "doctest.h"

#include "brute.hpp"
#include "frobenius/error.hpp"
#include "frobenius/semigroup.hpp"
#include "frobenius/stability.hpp"

using namespace frobenius;

namespace {

Amount max_of(const AperySet& s) { return *std::max_element(s.values.begin(), s.values.end()); }

} // namespace

TEST_CASE("instance validation")
{
    CHECK_THROWS_AS(Instance(1, 1, 1, {1, 5, 9}), PreconditionError);
    CHECK_THROWS_AS(Instance(10, 1, 2, {1, 5, 9}), NotCoprimeError);
    CHECK_THROWS_AS(Instance(10, 0, 1, {1, 5, 9}), PreconditionError);
    CHECK_THROWS_AS(Instance(10, 1, 0, {1, 5, 9}), PreconditionError);
    const Instance inst(27, 1, 1, {1, 5, 9});
    const std::vector<Amount> gens(inst.generators().begin(), inst.generators().end());
    CHECK(gens == std::vector<Amount>{27, 28, 32, 36});
}

TEST_CASE("apery examples")
{
    const std::vector<Amount> mcnugget{6, 9, 20};
    const AperySet s = apery(mcnugget);
    CHECK(s.modulus == 6);
    CHECK(max_of(s) == 49);
    CHECK(frobenius_number(mcnugget) == 43);

    const Instance two(2, 1, 1, {1});
    const AperySet t = apery(two);
    REQUIRE(t.values.size() == 2);
    CHECK(t.values[0] == 0);
    CHECK(t.values[1] == 3);

    const Instance inst(27, 1, 1, {1, 5, 9});
    CHECK(max_of(apery(inst)) == 188);
    CHECK(frobenius_oracle(inst) == 161);
    CHECK(frobenius_number(std::vector<Amount>{3, 7}) == 11);
}

TEST_CASE("apery values are least class representatives and subadditive")
{
    const std::vector<std::vector<Amount>> cases{{6, 9, 20}, {27, 28, 32, 36}, {11, 13, 19, 24}, {17, 22, 31}, {30, 47, 59, 61}};
    for (const auto& gens : cases) {
        const AperySet s = apery(gens);
        const Amount a = gens.front();
        REQUIRE(static_cast<Amount>(s.values.size()) == a);
        CHECK(s.values[0] == 0);
        for (Amount r = 0; r < a; r++) {
            CHECK(s.values[r] % a == r);
            for (Amount q = 0; q < a; q++) {
                CHECK(s.values[(r + q) % a] <= s.values[r] + s.values[q]);
            }
        }
        // Least: nothing smaller in the class is representable.
        const Amount bound = max_of(s);
        std::vector<char> rep(static_cast<std::size_t>(bound) + 1, 0);
        rep[0] = 1;
        for (Amount n = 1; n <= bound; n++) {
            for (Amount g : gens) {
                if (g <= n && rep[n - g]) {
                    rep[n] = 1;
                }
            }
        }
        for (Amount r = 0; r < a; r++) {
            CHECK(rep[s.values[r]]);
            for (Amount n = r; n < s.values[r]; n += a) {
                CHECK_FALSE(rep[n]);
            }
        }
    }
}

TEST_CASE("oracle agrees with an independent sieve")
{
    for (const std::vector<Amount>& b : {std::vector<Amount>{1, 5, 9}, {1, 11, 14}, {1, 6, 13}, {4, 8, 15, 17}, {1, 2, 3}}) {
        for (Amount a = 2; a <= 40; a++) {
            for (Amount h = 1; h <= 2; h++) {
                for (Amount d = 1; d <= 3; d++) {
                    if (std::gcd(a, d) != 1 || std::gcd(std::gcd(a, h * a + d * b.front()), d) != 1) {
                        continue;
                    }
                    std::optional<Instance> inst;
                    try {
                        inst.emplace(a, h, d, CoinSystem(b));
                    } catch (const PreconditionError&) {
                        continue;
                    }
                    const Amount bound = brute::sieve_bound(a, h, d, b);
                    CHECK(frobenius_oracle(*inst) == brute::frobenius(brute::generators(a, h, d, b), bound));
                }
            }
        }
    }
}

TEST_CASE("sieve helpers")
{
    const std::vector<Amount> gens{6, 9, 20};
    CHECK(sieve_frobenius(gens, 100) == 43);
    CHECK(sieve_frobenius(gens, 20) == 19);
    CHECK(sieve_frobenius(std::vector<Amount>{1, 2}, 10) == -1);
    CHECK(frobenius_cross_checked(gens) == 43);
}

TEST_CASE("Sylvester formula for twenty coprime pairs")
{
    int pairs = 0;
    for (Amount p = 2; pairs < 20; p++) {
        for (Amount q = p + 1; q <= p + 9 && pairs < 20; q++) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            const std::vector<Amount> gens{p, q};
            CHECK(frobenius_number(gens) == p * q - p - q);
            pairs++;
        }
    }
    CHECK(pairs == 20);
}

TEST_CASE("non_representables")
{
    const NonRepresentable nr = non_representables({4, 8, 15, 17});
    CHECK(nr.values == std::vector<Amount>{1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 18, 22, 26});
    CHECK(nr.frobenius == 26);
    const NonRepresentable unit = non_representables({1, 7});
    CHECK(unit.values.empty());
    CHECK(unit.frobenius == -1);
    const NonRepresentable small = non_representables({2, 3});
    CHECK(small.values == std::vector<Amount>{1});
    CHECK(small.frobenius == 1);
    CHECK_THROWS_AS(non_representables({2, 4}), NotCoprimeError);
}

TEST_CASE("n_dr matches Apery values and recovers the Frobenius number")
{
    for (const std::vector<Amount>& b : {std::vector<Amount>{1, 5, 9}, {1, 11, 14}, {1, 4, 11, 17}, {4, 8, 15, 17}}) {
        for (Amount a = 2; a <= 60; a++) {
            for (Amount d = 1; d <= 3; d++) {
                if (std::gcd(a, d) != 1) {
                    continue;
                }
                std::optional<Instance> inst;
                try {
                    inst.emplace(a, 1, d, CoinSystem(b));
                } catch (const PreconditionError&) {
                    continue;
                }
                const AperySet s = apery(*inst);
                Amount best = 0;
                for (Amount r = 0; r < a; r++) {
                    const Amount v = n_dr(*inst, r);
                    CHECK(v == s.values[(r * d) % a]);
                    best = std::max(best, v);
                }
                CHECK(best - a == frobenius_oracle(*inst));
            }
        }
    }
    CHECK(n_dr(Instance(27, 1, 1, {1, 5, 9}), 0) == 0);
}

TEST_CASE("n_dr localizes at m = 0 for large a, and at m = 1 in the b_1 > 1 example")
{
    const CoinSystem system{1, 11, 14};
    const OptTable t = build_table(system, 2000);
    for (Amount a = 9 * 14; a <= 9 * 14 + 30; a++) {
        const Instance inst(a, 1, 1, system);
        for (Amount r = 0; r < a; r++) {
            CHECK(n_dr(inst, r, t) == t[r].value() * a + r);
        }
    }
    const Instance inst(136, 1, 1, {4, 8, 15, 17});
    CHECK(n_dr(inst, 26) == opt_count({4, 8, 15, 17}, 162).value() * 136 + 162);
}
