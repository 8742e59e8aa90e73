#include <numeric>

#include "doctest.h"

#include "frobenius/error.hpp"
#include "frobenius/families.hpp"
#include "frobenius/semigroup.hpp"
#include "frobenius/synth.hpp"

using namespace frobenius;

namespace {

Amount oracle(const FamilyFormula& f, Amount a, Amount h, Amount d)
{
    return frobenius_oracle(Instance(a, h, d, f.system()));
}

FamilyGrid two_periods(const FamilyFormula& f, std::vector<Amount> ds) { return FamilyGrid::periods(f, 2, std::move(ds)); }

} // namespace

TEST_CASE("family ids round trip")
{
    for (FamilyId id : {FamilyId::selmer_1k, FamilyId::f_12b_b1, FamilyId::f_12b_b1_2b, FamilyId::f_1b_2bm1,
                        FamilyId::f_12k_k, FamilyId::f_4_8_15_17, FamilyId::ref_1_11_14, FamilyId::ref_1_4_11_17,
                        FamilyId::ref_1_5_9}) {
        CHECK(parse_family_id(to_string(id)) == id);
    }
    CHECK_THROWS(parse_family_id("F_NOPE"));
}

TEST_CASE("constructors check their hypotheses")
{
    CHECK_THROWS_AS(FamilyFormula::selmer(1), FamilyDomainError);
    CHECK_THROWS_AS(FamilyFormula::one_two_b_b1(3), FamilyDomainError);
    CHECK_THROWS_AS(FamilyFormula::one_two_b_b1_2b(3), FamilyDomainError);
    CHECK_THROWS_AS(FamilyFormula::one_b_2bm1(2), FamilyDomainError);
    CHECK_THROWS_AS(FamilyFormula::one_to_k_plus(3, 4), FamilyDomainError);
    CHECK(FamilyFormula::one_to_k_plus(3, 8).system() == CoinSystem({1, 2, 3, 8}));
    CHECK(FamilyFormula::one_to_k_plus(3, 8).s() == 2);
    CHECK(FamilyFormula::one_to_k_plus(3, 8).t() == 2);
    CHECK(FamilyFormula::one_two_b_b1_2b(6).system() == CoinSystem({1, 2, 6, 7, 12}));
}

TEST_CASE("family evaluation examples")
{
    CHECK(family_eval(FamilyFormula::selmer(3), 10, 1, 1) == 29);
    CHECK(oracle(FamilyFormula::selmer(3), 10, 1, 1) == 29);

    const FamilyFormula f = FamilyFormula::one_b_2bm1(5);
    for (Amount a = f.a_min(); a < f.a_min() + 4 * 9; a += 9) {
        if (a % 9 == 0) {
            const Amount q = a / 9;
            CHECK(family_eval(f, a, 1, 1) == (q + 3) * a + 9 * q - a - 1);
        }
    }

    CHECK(family_eval(FamilyFormula::four_8_15_17(), 90, 1, 1) == 746);
    CHECK(oracle(FamilyFormula::four_8_15_17(), 90, 1, 1) == 746);
    CHECK_THROWS_AS(family_eval(FamilyFormula::four_8_15_17(), 89, 1, 1), FamilyDomainError);
    CHECK(FamilyFormula::four_8_15_17().domain_violation(89, 1, 1).has_value());
    CHECK_FALSE(FamilyFormula::four_8_15_17().domain_violation(90, 1, 1).has_value());
}

TEST_CASE("reference tables equal the synthesized formulas")
{
    const std::vector<std::pair<FamilyId, CoinSystem>> refs{
        {FamilyId::ref_1_11_14, {1, 11, 14}}, {FamilyId::ref_1_4_11_17, {1, 4, 11, 17}}, {FamilyId::ref_1_5_9, {1, 5, 9}}};
    for (const auto& [id, system] : refs) {
        const FamilyFormula f = FamilyFormula::reference(id);
        const std::optional<CongruenceFormula> table = f.reference_table();
        REQUIRE(table);
        const CongruenceFormula synth = synthesize(system);
        CHECK(table->entries == synth.entries);
        CHECK(table->offset == synth.offset);
        CHECK(f.a_min() == synth.a_min_paper);
    }
    CHECK_FALSE(FamilyFormula::selmer(4).reference_table().has_value());
}

TEST_CASE("SELMER_1K triple agreement")
{
    for (Amount k = 2; k <= 6; k++) {
        const FamilyFormula f = FamilyFormula::selmer(k);
        FamilyGrid grid{.a_lo = 2, .a_hi = 120, .h_values = {1, 2, 3}, .d_values = {1, 2, 3}, .h_relative = false};
        const CrossCheckReport r = cross_check(f, grid);
        CHECK(r.mismatches.empty());
        CHECK(r.in_domain > 0);
        CHECK(r.synth_compared > 0);
    }
}

TEST_CASE("F_12B_B1 and F_12B_B1_2B triple agreement")
{
    for (Amount b = 4; b <= 9; b++) {
        CAPTURE(b);
        const CrossCheckReport r1 = cross_check(FamilyFormula::one_two_b_b1(b), two_periods(FamilyFormula::one_two_b_b1(b), {1, 2}));
        CHECK(r1.mismatches.empty());
        CHECK(r1.in_domain > 0);
        const CrossCheckReport r2 =
            cross_check(FamilyFormula::one_two_b_b1_2b(b), two_periods(FamilyFormula::one_two_b_b1_2b(b), {1, 2}));
        CHECK(r2.mismatches.empty());
        CHECK(r2.in_domain > 0);
    }
}

TEST_CASE("F_1B_2BM1 triple agreement")
{
    for (Amount b = 3; b <= 8; b++) {
        const FamilyFormula f = FamilyFormula::one_b_2bm1(b);
        const CrossCheckReport r = cross_check(f, two_periods(f, {1, 2}));
        CHECK(r.mismatches.empty());
        CHECK(r.in_domain > 0);
    }
}

TEST_CASE("F_12K_K triple agreement and branch selection")
{
    for (Amount k = 2; k <= 4; k++) {
        for (Amount big_k = k + 2; big_k <= 3 * k + 2; big_k++) {
            CAPTURE(k);
            CAPTURE(big_k);
            const FamilyFormula f = FamilyFormula::one_to_k_plus(k, big_k);
            const CrossCheckReport r = cross_check(f, two_periods(f, {1, 2}));
            CHECK(r.mismatches.empty());
            CHECK(r.in_domain > 0);

            // The selected body always matches; the other body fails somewhere on the same points.
            const KBranch chosen = f.t() >= 2 ? KBranch::t_at_least_2 : KBranch::t_below_2;
            const KBranch other = f.t() >= 2 ? KBranch::t_below_2 : KBranch::t_at_least_2;
            bool other_failed = false;
            for (Amount a = f.a_min(); a < f.a_min() + 2 * f.period(); a++) {
                const Amount h = f.h_min(1);
                const Amount truth = oracle(f, a, h, 1);
                CHECK(family_eval_branch(f, chosen, a, h, 1) == truth);
                CHECK(family_eval_branch(f, KBranch::automatic, a, h, 1) == truth);
                other_failed = other_failed || family_eval_branch(f, other, a, h, 1) != truth;
            }
            CHECK(other_failed);
        }
    }
}

TEST_CASE("F_4_8_15_17 fails only at 93 on [90, 135]")
{
    const FamilyFormula f = FamilyFormula::four_8_15_17();
    FamilyGrid grid{.a_lo = 90, .a_hi = 135, .h_values = {1}, .d_values = {1}, .h_relative = false};
    const CrossCheckReport r = cross_check(f, grid);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(r.mismatches[0].a == 93);
    CHECK(r.synth_compared == 0);
}

TEST_CASE("reference families agree with the oracle")
{
    for (FamilyId id : {FamilyId::ref_1_11_14, FamilyId::ref_1_4_11_17, FamilyId::ref_1_5_9}) {
        const FamilyFormula f = FamilyFormula::reference(id);
        const CrossCheckReport r = cross_check(f, two_periods(f, {1, 2, 5}));
        CHECK(r.mismatches.empty());
        CHECK(r.synth_compared == r.in_domain);
    }
}

TEST_CASE("cross_check edge cases and serial equality")
{
    const FamilyFormula f = FamilyFormula::selmer(4);
    const CrossCheckReport empty = cross_check(f, FamilyGrid{});
    CHECK(empty.points == 0);
    CHECK(empty.in_domain == 0);
    CHECK(empty.mismatches.empty());

    const FamilyFormula g = FamilyFormula::one_to_k_plus(3, 10);
    const FamilyGrid grid = FamilyGrid::periods(g, 3, {1, 2, 3});
    const CrossCheckReport par = cross_check(g, grid);
    const CrossCheckReport ser = cross_check_serial(g, grid);
    CHECK(par.points == ser.points);
    CHECK(par.in_domain == ser.in_domain);
    CHECK(par.synth_compared == ser.synth_compared);
    CHECK(par.mismatches.size() == ser.mismatches.size());
}
