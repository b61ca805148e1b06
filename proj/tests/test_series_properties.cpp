#include <gtest/gtest.h>

#include "property_checks.hpp"

TEST(SeriesProperties, RingAxioms)
{
    EXPECT_EQ(property::ring_axioms(200, 1), 0);
}

TEST(SeriesProperties, InverseLaw)
{
    EXPECT_EQ(property::inverse_law(200, 2), 0);
}

TEST(SeriesProperties, DissectReassembly)
{
    EXPECT_EQ(property::dissect_reassembly(200, 3), 0);
}

TEST(SeriesProperties, SubstitutionComposition)
{
    EXPECT_EQ(property::substitution_composition(200, 4), 0);
}

TEST(SeriesProperties, FreshmansDreamModFive)
{
    EXPECT_EQ(property::freshmans_dream_mod5(200, 5), 0);
}
