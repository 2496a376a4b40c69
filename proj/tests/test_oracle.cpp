#include <gtest/gtest.h>

#include <set>

#include "schubert/oracle.hpp"

using namespace schubert;

namespace {

void for_each_triple(int max_n, auto&& f) {
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto P = partitions_in_rect(k, n - k);
            for (const auto& a : P)
                for (const auto& b : P)
                    for (const auto& g : P) f(k, n, a, b, g);
        }
}

}  // namespace

TEST(LRTableaux, Examples) {
    EXPECT_EQ(oracle::count_lr_tableaux({3, 2, 1}, {2, 1}, {2, 1}), 2);
    EXPECT_EQ(oracle::count_lr_tableaux({2}, {1}, {1}), 1);
    EXPECT_EQ(oracle::count_lr_tableaux({2, 1}, {1}, {1}), 0);
    EXPECT_EQ(oracle::count_lr_tableaux({4, 2, 2}, {2, 1}, {3, 2}), 1);
    EXPECT_EQ(oracle::count_lr_tableaux({3}, {}, {3}), 1);
    EXPECT_EQ(oracle::count_lr_tableaux({1}, {2}, {}), 0);
}

TEST(LRTableaux, AgreesWithBruteForce) {
    for_each_triple(5, [](int, int, const Partition& a, const Partition& b, const Partition& g) {
        EXPECT_EQ(oracle::count_lr_tableaux(g, a, b), oracle::brute_force_lr_count(g, a, b))
            << to_string(g) << "/" << to_string(a) << " " << to_string(b);
    });
}

TEST(LRTableaux, CompanionsAreDistinct) {
    const auto ts = oracle::lr_tableaux({3, 2, 1}, {2, 1}, {2, 1});
    std::set<Tableau> c;
    for (const auto& t : ts) c.insert(oracle::companion(t));
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(oracle::companion(oracle::lr_tableaux({2}, {1}, {1}).at(0)).rows,
              (std::vector<std::vector<int>>{{1}}));
}

TEST(SetValued, G24) {
    const auto ts = oracle::set_valued_lr_tableaux({2, 1}, {1}, {1});
    ASSERT_EQ(ts.size(), 1u);
    EXPECT_EQ(ts[0].rows, (std::vector<std::vector<std::vector<int>>>{{{1, 2}}}));
    EXPECT_EQ(oracle::count_set_valued({2, 1}, {1}, {1}), -1);
    EXPECT_EQ(oracle::count_set_valued({2}, {1}, {1}), 1);
}

TEST(SetValued, AgreesWithGrothendieckPolynomials) {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto P = partitions_in_rect(k, n - k);
            for (const auto& a : P)
                for (const auto& b : P) {
                    const auto prod = oracle::grothendieck_product(a, b, k, n);
                    for (const auto& g : P) {
                        auto it = prod.find(g);
                        EXPECT_EQ(oracle::count_set_valued(g, a, b), it == prod.end() ? 0 : it->second)
                            << k << "," << n << " " << to_string(a) << "*" << to_string(b) << "->" << to_string(g);
                    }
                }
        }
}

TEST(SetValued, ReducesToLRInLowestDegree) {
    for_each_triple(5, [](int, int, const Partition& a, const Partition& b, const Partition& g) {
        if (g.size() != a.size() + b.size()) return;
        EXPECT_EQ(oracle::count_set_valued(g, a, b), oracle::count_lr_tableaux(g, a, b));
    });
}

TEST(Grothendieck, SingleBox) {
    // G_1(x1,x2) = x1 + x2 - x1 x2
    const auto p = oracle::grothendieck_polynomial({1}, 2);
    EXPECT_EQ(p, (oracle::Polynomial{{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, -1}}));
}
