#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qseries/error.hpp"
#include "qseries/parser.hpp"

using namespace qseries;
using oracle::series;

namespace {

std::size_t parse_error_offset(const std::string& text)
{
    try {
        parse_expr(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    ADD_FAILURE() << "no ParseError for " << text;
    return 0;
}

} // namespace

TEST(Parser, PochhammerAtom)
{
    const auto e = parse_expr("P(1,1,-4)");
    EXPECT_TRUE(same_tree(*e, *pochhammer(1, 1, 1, -4)));
    EXPECT_EQ(evaluate(*e, 30), expand_pochhammer({1, 1, 1, -4}, 30));
    EXPECT_TRUE(same_tree(*parse_expr(" Pneg( 1 , 2 , 3 ) "), *pochhammer(-1, 1, 2, 3)));
}

TEST(Parser, NumeratorOfFourColorGeneratingFunction)
{
    const auto e = parse_expr("phi(2)^3 + 12*q^1*phi(2)*psi(4)^2");
    const auto built = power(phi(2), 3) + monomial(12, 0) * monomial(1, 1) * phi(2) * power(psi(4), 2);
    EXPECT_TRUE(same_tree(*e, *built));
}

TEST(Parser, UnbalancedParenthesis)
{
    try {
        parse_expr("P(1,1,4");
        FAIL() << "expected ParseError";
    } catch (const ParseError& err) {
        EXPECT_EQ(err.offset(), 8u);
        EXPECT_NE(std::string(err.what()).find("at offset 8"), std::string::npos);
    }
}

TEST(Parser, SyntaxErrorsCarryPositions)
{
    EXPECT_EQ(parse_error_offset(""), 1u);
    EXPECT_EQ(parse_error_offset("P(1,1,4) +"), 11u);
    EXPECT_EQ(parse_error_offset("phi(2) # 3"), 8u);
    EXPECT_EQ(parse_error_offset("foo(1)"), 1u);
    EXPECT_EQ(parse_error_offset("P(1,1,0)"), 7u);
    EXPECT_EQ(parse_error_offset("P(0,1,1)"), 3u);
    EXPECT_EQ(parse_error_offset("dissect(phi(1),2,2)"), 18u);
    EXPECT_EQ(parse_error_offset("mod(phi(1),1)"), 12u);
    EXPECT_EQ(parse_error_offset("$"), 2u);
    EXPECT_EQ(parse_error_offset("q^-1"), 3u);
}

TEST(Parser, PrecedenceAndAssociativity)
{
    EXPECT_TRUE(same_tree(*parse_expr("1 + 2*3"), *(monomial(1, 0) + monomial(2, 0) * monomial(3, 0))));
    EXPECT_TRUE(same_tree(*parse_expr("1 - 2 - 3"), *((monomial(1, 0) - monomial(2, 0)) - monomial(3, 0))));
    EXPECT_TRUE(same_tree(*parse_expr("2*phi(1)^2"), *(monomial(2, 0) * power(phi(1), 2))));
    EXPECT_TRUE(same_tree(*parse_expr("(1 + q^1)^2"), *power(monomial(1, 0) + monomial(1, 1), 2)));
    EXPECT_EQ(evaluate(*parse_expr("1 - 2 - 3"), 0), series({-4}));
    EXPECT_EQ(evaluate(*parse_expr("(1 + q^1)^2"), 3), series({1, 2, 1, 0}));
}

TEST(Parser, PrintThenReparseGivesSameTree)
{
    const char* inputs[] = {
        "phi(2)^3 + 12*q^1*phi(2)*psi(4)^2",
        "(phi(2)^3 + 12*q^1*phi(2)*psi(4)^2)*P(1,1,-4)",
        "1 - (2 - 3)",
        "1 - 2 + 3",
        "(1*2)*3 + 1*(2*3)",
        "dissect(P(1,1,-1), 5, 4) - mod(Pneg(1,2,3), 7)",
        "inv(sub(psi(1)^2, 3))^-2",
        "$cphi4 - $phi4*(1 + q^3)",
        "((P(2,2,5)))",
    };
    for (const char* text : inputs) {
        const auto e = parse_expr(text);
        const std::string printed = to_string(*e);
        EXPECT_TRUE(same_tree(*e, *parse_expr(printed))) << text << " -> " << printed;
    }
    EXPECT_EQ(to_string(*parse_expr("1 - (2 - 3)")), "1 - (2 - 3)");
    EXPECT_EQ(to_string(*parse_expr("((P(2,2,5)))")), "P(2,2,5)");
}

TEST(Builders, RejectInvalidArguments)
{
    EXPECT_THROW(pochhammer(1, 1, 1, 0), ContractViolation);
    EXPECT_THROW(phi(0), ContractViolation);
    EXPECT_THROW(substitute(phi(1), 0), ContractViolation);
    EXPECT_THROW(dissect(phi(1), 3, 3), ContractViolation);
    EXPECT_THROW(reduce(phi(1), 1), ContractViolation);
}

TEST(Evaluate, Monomial)
{
    EXPECT_EQ(evaluate(*parse_expr("48*q^1"), 3), series({0, 48, 0, 0}));
    EXPECT_EQ(evaluate(*monomial(48, 1), 3), series({0, 48, 0, 0}));
}

TEST(Evaluate, NumeratorMatchesItsParts)
{
    const std::size_t n = 6;
    const Series first = pow(theta_phi(2, n), 3);
    const Series second = scale(shift(mul(theta_phi(2, n), pow(theta_psi(4, n), 2)), 1), 12);
    EXPECT_EQ(evaluate(*parse_expr("phi(2)^3 + 12*q^1*phi(2)*psi(4)^2"), n), first + second);
    // hand expansion: phi(q^2)^3 = 1 + 6q^2 + 12q^4 + 8q^6, 12 q phi(q^2) psi(q^4)^2 = 12q + 24q^3 + 24q^5
    EXPECT_EQ(first + second, series({1, 12, 6, 24, 12, 24, 8}));
}

TEST(Evaluate, BarredEvenPartVanishesOnFivePlusThree)
{
    const auto e = parse_expr("64*q^1*P(20,20,1)*P(4,4,1)*P(10,10,1)*P(1,1,3)");
    const Series s = evaluate(*e, 20);
    const auto direct = oracle::brute_mul(oracle::coeffs_of(expand_pochhammer({1, 1, 1, 3}, 20)),
                               oracle::coeffs_of(mul(expand_pochhammer({1, 4, 4, 1}, 20),
                                                     mul(expand_pochhammer({1, 10, 10, 1}, 20),
                                                         expand_pochhammer({1, 20, 20, 1}, 20)))),
                               20);
    EXPECT_EQ(s, scale(shift(Series(direct), 1), 64));
    for (std::size_t k = 3; k <= 20; k += 5) {
        EXPECT_TRUE(mpz_divisible_ui_p(s[k].get_mpz_t(), 5)) << k;
    }
}

TEST(Evaluate, DissectUsesEnlargedOrder)
{
    // dissect((q;q)^-1, 5, 4) at order 3 needs p(4), p(9), p(14), p(19)
    const Series d = evaluate(*parse_expr("dissect(P(1,1,-1),5,4)"), 3);
    EXPECT_EQ(d, series({5, 30, 135, 490}));
    EXPECT_EQ(evaluate(*parse_expr("dissect(q^7,5,2)"), 1), series({0, 1}));
}

TEST(Evaluate, SubstituteUsesReducedOrder)
{
    EXPECT_EQ(evaluate(*parse_expr("sub(P(1,1,1),5)"), 12), series({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0}));
    EXPECT_EQ(evaluate(*parse_expr("sub(psi(1),4)"), 300), theta_psi(4, 300));
    EXPECT_EQ(evaluate(*parse_expr("sub(dissect(phi(1), 2, 0), 2)"), 50), theta_phi(4, 50));
}

TEST(Evaluate, ReduceAndMixedModuli)
{
    EXPECT_EQ(evaluate(*parse_expr("mod(P(1,1,5) - sub(P(1,1,1),5), 5)"), 100).is_zero(), true);
    EXPECT_THROW(evaluate(*parse_expr("mod(phi(1),5) + phi(1)"), 5), ContractViolation);
    EXPECT_THROW(evaluate(*parse_expr("inv(q^1)"), 5), InversionError);
}

TEST(Evaluate, NamedSeries)
{
    Environment env;
    env.bind_series("a", series({1, 2, 3, 4}));
    env.bind("ones", [](std::size_t n) { return Series(std::vector<Integer>(n + 1, 1)); });
    EXPECT_TRUE(env.contains("a"));
    EXPECT_EQ(evaluate(*parse_expr("$a*$ones"), 2, env), series({1, 3, 6}));
    EXPECT_THROW(evaluate(*parse_expr("$a"), 4, env), EvaluationError);
    EXPECT_THROW(evaluate(*parse_expr("$missing"), 4, env), EvaluationError);
    EXPECT_THROW(env.lookup("missing", 1), EvaluationError);
}
