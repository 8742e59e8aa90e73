#include "doctest.h"

#include "frobenius/families.hpp"
#include "frobenius/io.hpp"
#include "frobenius/semigroup.hpp"
#include "frobenius/stability.hpp"
#include "frobenius/synth.hpp"

using namespace frobenius;

TEST_CASE("formula documents round trip")
{
    for (const CongruenceFormula& f :
         {synthesize({1, 11, 14}), synthesize({1, 5, 9}), synthesize({1, 2, 3, 4}),
          with_certification(synthesize({1, 4, 11, 17}), certify(synthesize({1, 4, 11, 17}), 1, 1, 221)),
          synthesize_general({4, 8, 15, 17}, 4), synthesize_general({2, 3}, 0)}) {
        const std::string doc = serialize(f);
        const CongruenceFormula back = parse_formula(doc);
        CHECK(back == f);
        CHECK(serialize(back) == doc);
    }
}

TEST_CASE("formula document field order is canonical")
{
    const std::string doc = serialize(synthesize({1, 5, 9}));
    const std::vector<std::string> fields{"\"denoms\"", "\"modulus\"", "\"offset\"", "\"path\"", "\"h_min_rule\"",
                                          "\"a_min_paper\"", "\"a_min_empirical\"", "\"exceptional\"", "\"entries\""};
    std::size_t last = 0;
    for (const std::string& field : fields) {
        const std::size_t at = doc.find(field);
        REQUIRE(at != std::string::npos);
        CHECK(at >= last);
        last = at;
    }
}

TEST_CASE("profile, table and report documents round trip")
{
    for (const CoinSystem& s : {CoinSystem{1, 11, 14}, CoinSystem{1, 5, 9}, CoinSystem{4, 8, 15, 17}}) {
        const StabilityProfile p = profile(s);
        const std::string doc = serialize(p);
        CHECK(parse_profile(doc) == p);
        CHECK(serialize(parse_profile(doc)) == doc);

        const OptTable t = build_table(s, 60);
        const std::string tdoc = serialize(t);
        const OptTable tb = parse_table(tdoc);
        CHECK(tb.values() == t.values());
        CHECK(tb.system() == t.system());
        CHECK(serialize(tb) == tdoc);
    }
    const CertifyReport r = certify(synthesize({1, 11, 14}), 1, 1, 650);
    const std::string rdoc = serialize(r);
    CHECK(parse_certify_report(rdoc) == r);
    CHECK(serialize(parse_certify_report(rdoc)) == rdoc);
}

TEST_CASE("malformed documents are rejected")
{
    CHECK_THROWS_AS(parse_formula("not json"), ParseError);
    CHECK_THROWS_AS(parse_formula("{}"), ParseError);
    CHECK_THROWS_AS(parse_profile("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_certify_report("{\"h\": 1}"), ParseError);

    std::string doc = serialize(build_table({1, 5, 9}, 10));
    const std::size_t at = doc.find("\"values\"");
    REQUIRE(at != std::string::npos);
    // Tamper with the first value after O(0) = 0.
    const std::size_t one = doc.find('1', at);
    doc[one] = '7';
    CHECK_THROWS_AS(parse_table(doc), ParseError);
}

TEST_CASE("other documents serialize")
{
    CHECK(serialize(non_representables({4, 8, 15, 17})).find("26") != std::string::npos);
    CHECK(serialize(residue_view(build_table({1, 5, 9}, 20))).find("\"rows\"") != std::string::npos);
    const FamilyFormula f = FamilyFormula::selmer(3);
    CHECK(serialize(cross_check(f, FamilyGrid::periods(f, 2, {1}))).find("\"mismatches\"") != std::string::npos);
}
