#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qseries/bivariate.hpp"
#include "qseries/parser.hpp"
#include "qseries/verify.hpp"

using namespace qseries;
using oracle::series;

namespace {

std::vector<std::string> keys(const nlohmann::ordered_json& doc)
{
    std::vector<std::string> out;
    for (const auto& [k, v] : doc.items()) {
        out.push_back(k);
    }
    return out;
}

} // namespace

TEST(VerifyIdentity, PhiProductForm)
{
    const auto r = verify_identity(*parse_expr("phi(1)"), *parse_expr("P(2,2,5)*P(1,1,-2)*P(4,4,-2)"), 200);
    EXPECT_EQ(r.status, Status::verified);
    EXPECT_EQ(r.order, 200u);
    EXPECT_FALSE(r.counterexample);
}

TEST(VerifyIdentity, Reflexive)
{
    const auto a = parse_expr("P(1,1,-4)*(phi(2)^3 + 12*q^1*phi(2)*psi(4)^2)");
    EXPECT_TRUE(verify_identity(*a, *a, 60).ok());
}

TEST(VerifyIdentity, PerturbationIsLocated)
{
    const auto lhs = parse_expr("phi(1)");
    const auto rhs = parse_expr("P(2,2,5)*P(1,1,-2)*P(4,4,-2) + q^37");
    const auto r = verify_identity(*lhs, *rhs, 200);
    EXPECT_EQ(r.status, Status::violated);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->exponent, 37u);
    EXPECT_EQ(r.counterexample->coefficient, -1);

    const auto swapped = verify_identity(*rhs, *lhs, 200);
    EXPECT_EQ(swapped.status, r.status);
    EXPECT_EQ(swapped.counterexample->exponent, 37u);
    EXPECT_EQ(swapped.counterexample->coefficient, 1);

    // below the perturbation the two sides agree
    EXPECT_TRUE(verify_identity(*lhs, *rhs, 36).ok());
}

TEST(VerifyIdentity, ErrorsBecomeErrorStatus)
{
    const auto r = verify_identity(*parse_expr("inv(q^1)"), *parse_expr("1"), 10);
    EXPECT_EQ(r.status, Status::error);
    EXPECT_FALSE(r.counterexample);
    EXPECT_NE(r.message.find("constant term"), std::string::npos);
    EXPECT_EQ(verify_identity(*parse_expr("$nope"), *parse_expr("1"), 10).status, Status::error);
}

TEST(CompareSeries, ModularSides)
{
    const Series a = reduce_mod(series({1, 2, 3}), 5);
    const Series b = reduce_mod(series({1, 2, 4}), 5);
    const auto r = compare_series("c", a, b);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->exponent, 2u);
    EXPECT_EQ(r.counterexample->coefficient, 4); // (3 - 4) mod 5
    EXPECT_EQ(compare_series("c", a, series({1, 2, 3})).status, Status::error);
}

TEST(VerifyCongruence, TwoColorOracleOnFivePlusThree)
{
    Environment env;
    env.bind("cphi2", [](std::size_t n) { return cphi_oracle(2, n); });
    const CongruenceClaim claim{parse_expr("$cphi2"), 5, {5, 3}, 40};
    const auto r = verify_congruence(claim, env);
    EXPECT_EQ(r.status, Status::verified) << r.message;
    EXPECT_EQ(r.progression, (Progression{5, 3}));
    EXPECT_EQ(r.modulus, Integer(5));
}

TEST(VerifyCongruence, ConstantOneFailsAtZero)
{
    const auto r = verify_congruence({parse_expr("1"), 5, {5, 0}, 10});
    EXPECT_EQ(r.status, Status::violated);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->exponent, 0u);
    EXPECT_EQ(r.counterexample->coefficient, 1);
}

TEST(VerifyCongruence, PartitionsOnFivePlusThreeAndFour)
{
    const auto bad = verify_congruence({parse_expr("P(1,1,-1)"), 5, {5, 3}, 30});
    EXPECT_EQ(bad.status, Status::violated);
    EXPECT_EQ(bad.counterexample->exponent, 3u);
    EXPECT_EQ(bad.counterexample->coefficient, 3);
    EXPECT_TRUE(verify_congruence({parse_expr("P(1,1,-1)"), 5, {5, 4}, 300}).ok());
    EXPECT_TRUE(verify_congruence({parse_expr("P(1,1,-1)"), 7, {7, 5}, 300}).ok());
}

TEST(VerifyCongruence, TrivialProgressionMatchesReduction)
{
    const char* exprs[] = {"P(1,1,5) - sub(P(1,1,1),5)", "5*phi(3)", "P(1,1,-1)", "psi(1)^5 - sub(psi(1),5)"};
    for (const char* text : exprs) {
        const auto e = parse_expr(text);
        const bool vanishes = reduce_mod(evaluate(*e, 80), 5).is_zero();
        EXPECT_EQ(verify_congruence({e, 5, {1, 0}, 80}).ok(), vanishes) << text;
    }
}

TEST(VerifyCongruence, InvalidClaimsAreErrors)
{
    EXPECT_EQ(verify_congruence({parse_expr("1"), 1, {5, 0}, 10}).status, Status::error);
    EXPECT_EQ(verify_congruence({parse_expr("1"), 5, {5, 5}, 10}).status, Status::error);
    EXPECT_EQ(verify_congruence({parse_expr("1"), 5, {0, 0}, 10}).status, Status::error);
    EXPECT_EQ(verify_congruence({nullptr, 5, {5, 0}, 10}).status, Status::error);
}

TEST(CheckProgression, ReducedSeriesModuli)
{
    const Series s = reduce_mod(series({0, 10, 0, 10}), 10);
    EXPECT_TRUE(s.is_zero());
    EXPECT_TRUE(check_progression("x", reduce_mod(series({3, 5, 0, 5}), 10), 5, {2, 1}).ok());
    EXPECT_EQ(check_progression("x", reduce_mod(series({3, 5}), 10), 3, {2, 1}).status, Status::error);
}

TEST(ReportFormats, JsonFieldSet)
{
    const auto ok = verify_congruence({parse_expr("5*P(1,1,1)"), 5, {2, 1}, 10});
    EXPECT_EQ(keys(to_json(ok)),
              (std::vector<std::string>{"claim", "status", "order", "progression", "modulus", "counterexample",
                                        "elapsed_ms"}));
    EXPECT_TRUE(to_json(ok)["counterexample"].is_null());
    EXPECT_EQ(to_json(ok)["status"], "verified");
    EXPECT_EQ(to_json(ok)["modulus"], "5");

    const auto id = verify_identity(*parse_expr("1"), *parse_expr("1 + q^2"), 4);
    const auto doc = to_json(id);
    EXPECT_EQ(keys(doc), (std::vector<std::string>{"claim", "status", "order", "counterexample", "elapsed_ms"}));
    EXPECT_EQ(doc["counterexample"]["exponent"], 2);
    EXPECT_EQ(doc["counterexample"]["coefficient"], "-1");
    EXPECT_EQ(doc["claim"], "1 = 1 + q^2");
}

TEST(ReportFormats, TextLineMentionsStatusAndCounterexample)
{
    const auto id = verify_identity(*parse_expr("1"), *parse_expr("1 + q^2"), 4);
    const std::string line = to_text(id);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    EXPECT_EQ(line.rfind("violated", 0), 0u);
    EXPECT_NE(line.find("2"), std::string::npos);
}

TEST(StatusNames, RoundTrip)
{
    EXPECT_EQ(to_string(Status::verified), "verified");
    EXPECT_EQ(to_string(Status::violated), "violated");
    EXPECT_EQ(to_string(Status::error), "error");
}
