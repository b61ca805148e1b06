#include <gtest/gtest.h>

#include "qseries/error.hpp"
#include "qseries/residues.hpp"

using namespace qseries;

namespace {

// Direct enumeration over k, m in [0, p) written independently of the library.
std::vector<ResiduePair> enumerate(long alpha, long beta, long p, long rho)
{
    std::vector<ResiduePair> out;
    for (long k = 0; k < p; ++k) {
        for (long m = 0; m < p; ++m) {
            const long e = alpha * k * (k + 1) / 2 + beta * m * (3 * m - 1) / 2;
            if (((e % p) + p) % p == rho) {
                out.emplace_back(k, m);
            }
        }
    }
    return out;
}

const CompletedSquareForm form_a{3, 2, 1, 1, 6, -1};
const CompletedSquareForm form_b{1, 2, 1, 8, 1, -1};

} // namespace

TEST(Residues, FirstTermClass)
{
    const auto a = residue_solutions({{2, 2}, 5, 3});
    EXPECT_EQ(a.solutions, (std::vector<ResiduePair>{{2, 1}}));
    EXPECT_EQ(a.solutions, enumerate(2, 2, 5, 3));
    EXPECT_TRUE(a.weight_vanishes);
}

TEST(Residues, SecondTermClass)
{
    const auto a = residue_solutions({{1, 4}, 5, 2});
    EXPECT_EQ(a.solutions, (std::vector<ResiduePair>{{2, 1}}));
    EXPECT_EQ(a.solutions, enumerate(1, 4, 5, 2));
    EXPECT_TRUE(a.weight_vanishes);
}

TEST(Residues, ZeroClassContainsOrigin)
{
    const auto a = residue_solutions({{2, 2}, 5, 0});
    EXPECT_NE(std::find(a.solutions.begin(), a.solutions.end(), ResiduePair{0, 0}), a.solutions.end());
    EXPECT_FALSE(a.weight_vanishes);
    EXPECT_EQ(a.solutions, enumerate(2, 2, 5, 0));
}

TEST(Residues, AgreesWithEnumerationForSmallPrimes)
{
    for (long p : {3L, 5L, 7L, 11L}) {
        for (long alpha = 1; alpha <= 4; ++alpha) {
            for (long beta = 1; beta <= 4; ++beta) {
                for (long rho = 0; rho < p; ++rho) {
                    EXPECT_EQ(residue_solutions({{alpha, beta}, p, rho}).solutions, enumerate(alpha, beta, p, rho));
                }
            }
        }
    }
}

TEST(Residues, QueryValidation)
{
    EXPECT_THROW(residue_solutions({{2, 2}, 6, 1}), ContractViolation);
    EXPECT_THROW(residue_solutions({{2, 2}, 5, 5}), ContractViolation);
    EXPECT_THROW(residue_solutions({{2, 2}, 5, -1}), ContractViolation);
    EXPECT_THROW(residue_solutions({{1, 2}, 2, 0}), ContractViolation);
    EXPECT_NO_THROW(residue_solutions({{2, 2}, 2, 0}));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
}

TEST(CompletedSquare, PublishedFormsAreEquivalent)
{
    const auto a = completed_square_equivalence({{2, 2}, 5, 3}, form_a);
    EXPECT_EQ(a.status, Status::verified) << a.message;
    EXPECT_FALSE(a.witness);
    const auto b = completed_square_equivalence({{1, 4}, 5, 2}, form_b);
    EXPECT_EQ(b.status, Status::verified) << b.message;
}

TEST(CompletedSquare, WrongFormHasWitness)
{
    const CompletedSquareForm wrong{1, 2, 1, 1, 6, -1};
    const auto r = completed_square_equivalence({{2, 2}, 5, 3}, wrong);
    EXPECT_EQ(r.status, Status::violated);
    ASSERT_TRUE(r.witness);
    // the witness really is a disagreement
    const auto [k, m] = *r.witness;
    const long e = (2 * k * (k + 1) / 2 + 2 * m * (3 * m - 1) / 2) % 5;
    const long sq = ((2 * k + 1) * (2 * k + 1) + (6 * m - 1) * (6 * m - 1)) % 5;
    EXPECT_NE(e == 3, (sq + 5) % 5 == 0);
    EXPECT_EQ(to_json(r)["witness"], nlohmann::json::array({k, m}));
}

TEST(Weights, VanishOnActualTerms)
{
    EXPECT_TRUE(check_weights_on_terms({{2, 2}, 5, 3}, 500).ok());
    EXPECT_TRUE(check_weights_on_terms({{1, 4}, 5, 2}, 500).ok());
    const auto r = check_weights_on_terms({{2, 2}, 5, 0}, 50);
    EXPECT_EQ(r.status, Status::violated);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->exponent, 0u);
    EXPECT_EQ(r.counterexample->coefficient, 1);
}

TEST(Describe, MentionsParameters)
{
    const QuadraticFormQuery q{{2, 2}, 5, 3};
    EXPECT_NE(q.describe().find("5"), std::string::npos);
    EXPECT_FALSE(form_a.describe().empty());
}
