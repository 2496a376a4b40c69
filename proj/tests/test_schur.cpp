#include <gtest/gtest.h>

#include "schubert/schur.hpp"

using namespace schubert;

TEST(Schur, TwoByTwo) {
    EXPECT_EQ(to_string(multiply_schur({1}, {1}, 2, 4)), "s(2) + s(1,1)");
    EXPECT_EQ(to_string(multiply_schur({1}, {1}, 2, 4, Mode::KTheory)), "O(2) + O(1,1) - O(2,1)");
    EXPECT_EQ(to_string(multiply_schur({2}, {2}, 2, 4)), "s(2,2)");
    EXPECT_EQ(to_string(multiply_schur({2, 2}, {1}, 2, 4)), "0");
    EXPECT_EQ(to_string(multiply_schur({}, {}, 2, 4)), "s()");
}

TEST(Schur, StableProduct) {
    EXPECT_EQ(to_string(multiply_schur_stable({2, 1}, {2, 1})),
              "s(4,2) + s(4,1,1) + s(3,3) + 2 s(3,2,1) + s(3,1,1,1) + s(2,2,2) + s(2,2,1,1)");
    EXPECT_EQ(to_string(multiply_schur_stable({}, {3})), "s(3)");
    const auto e = multiply_schur_stable({2, 1}, {1});
    EXPECT_TRUE(e.stable);
    EXPECT_EQ(to_string(e), "s(3,1) + s(2,2) + s(2,1,1)");
}

TEST(Schur, RectangleIsTruncationOfStable) {
    for (const auto& a : partitions_in_rect(2, 3))
        for (const auto& b : partitions_in_rect(2, 3)) {
            const auto st = multiply_schur_stable(a, b);
            for (int k = 2; k <= 4; ++k)
                for (int w = 3; w <= 5; ++w) {
                    const auto r = multiply_schur(a, b, k, k + w);
                    for (const auto& [g, c] : st.terms) EXPECT_EQ(r.coefficient(g), g.fits(k, w) ? c : 0);
                    for (const auto& [g, c] : r.terms) EXPECT_EQ(st.coefficient(g), c);
                }
        }
}

TEST(Schur, Pieri) {
    for (const auto& a : partitions_in_rect(3, 3))
        for (int p = 0; p <= 3; ++p) EXPECT_TRUE(pieri_check(a, p, 3, 6)) << to_string(a) << " p=" << p;
    EXPECT_EQ(horizontal_strips({1}, 1, 2, 2), (std::vector<Partition>{{2}, {1, 1}}));
}

TEST(Schur, Parsing) {
    EXPECT_EQ(parse_partition("3,1"), (Partition{3, 1}));
    EXPECT_EQ(parse_partition("0"), Partition{});
    EXPECT_EQ(parse_partition(""), Partition{});
    EXPECT_EQ(parse_subset("2,4,6"), (SubsetK{2, 4, 6}));
    EXPECT_THROW(parse_partition("1,3"), std::invalid_argument);
    EXPECT_THROW(parse_partition("a"), std::invalid_argument);
    EXPECT_THROW(parse_subset("3,3"), std::invalid_argument);
    EXPECT_THROW(multiply_schur({3}, {1}, 2, 4), OutOfRectangle);
}
