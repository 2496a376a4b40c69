#include <gtest/gtest.h>

#include <set>

#include "schubert/oracle.hpp"
#include "schubert/puzzles.hpp"

using namespace schubert;

TEST(Puzzles, Boundaries) {
    EXPECT_EQ(subset_to_boundary({2, 4}, 4), "0101");
    EXPECT_EQ(subset_to_boundary({}, 3), "000");
    EXPECT_THROW(enumerate_puzzles("01", "011", "010"), std::invalid_argument);
    EXPECT_THROW(enumerate_puzzles("0a", "01", "01"), std::invalid_argument);
    EXPECT_EQ(enumerate_puzzles("01", "10", "11").count, 0);
}

TEST(Puzzles, G24) {
    EXPECT_EQ(enumerate_puzzles("0101", "0101", "1001").count, 1);
    EXPECT_EQ(enumerate_puzzles("0101", "0101", "0110").count, 1);
    const auto k = enumerate_puzzles("0101", "0101", "1010", Mode::KTheory);
    EXPECT_EQ(k.count, 1);
    EXPECT_EQ(k.signed_count, -1);
    EXPECT_EQ(k.puzzles.at(0).k_pieces(), 1);
    EXPECT_EQ(enumerate_puzzles("0101", "0101", "1010").count, 0);
}

TEST(Puzzles, Mult2) {
    EXPECT_EQ(puzzle_coefficient({2, 1}, {2, 1}, {3, 2, 1}, 3, 6), 2);
    const auto r = enumerate_puzzles(subset_to_boundary({2, 4, 6}, 6), subset_to_boundary({2, 4, 6}, 6),
                                     subset_to_boundary({1, 3, 5}, 6));
    ASSERT_EQ(r.puzzles.size(), 2u);
    EXPECT_NE(serialize(r.puzzles[0]), serialize(r.puzzles[1]));
}

TEST(Puzzles, AgreeWithLROracle) {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto P = partitions_in_rect(k, n - k);
            for (const auto& a : P)
                for (const auto& b : P)
                    for (const auto& g : P) {
                        EXPECT_EQ(puzzle_coefficient(a, b, g, k, n), oracle::count_lr_tableaux(g, a, b));
                        EXPECT_EQ(puzzle_coefficient(a, b, g, k, n, Mode::KTheory), oracle::count_set_valued(g, a, b));
                    }
        }
}

TEST(Puzzles, Triality) {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            EXPECT_TRUE(triality_check(k, n, Mode::Cohomology)) << k << "," << n;
            EXPECT_TRUE(triality_check(k, n, Mode::KTheory)) << k << "," << n;
        }
}

TEST(Puzzles, EveryEdgeLabelled) {
    const auto r = enumerate_puzzles("010101", "010101", "101010", Mode::KTheory);
    for (const auto& p : r.puzzles) {
        for (int v : p.h) EXPECT_TRUE(v >= 0 && v <= kInternal);
        EXPECT_EQ(p.h.size(), 21u);
    }
}

TEST(GameToPuzzle, G24) {
    std::set<Puzzle> seen;
    for (const auto& g : play_all_games({2, 4}, {2, 4}, 2, 4)) {
        const auto p = game_to_puzzle(g, 2, 4);
        EXPECT_EQ(p.gamma, subset_to_boundary(g.output, 4));
        EXPECT_EQ(p.alpha, "0101");
        EXPECT_EQ(p.beta, "0101");
        const auto all = enumerate_puzzles(p.alpha, p.beta, p.gamma);
        EXPECT_EQ(all.puzzles, (std::vector<Puzzle>{p}));
        seen.insert(p);
    }
    EXPECT_EQ(seen.size(), 2u);
}

TEST(GameToPuzzle, Mult2IsInjectiveAndOnto) {
    std::set<Puzzle> seen;
    const auto games = play_all_games({2, 4, 6}, {2, 4, 6}, 3, 6);
    for (const auto& g : games) seen.insert(game_to_puzzle(g, 3, 6));
    EXPECT_EQ(seen.size(), games.size());
    const auto b = subset_to_boundary({1, 3, 5}, 6);
    const auto r = enumerate_puzzles("010101", "010101", b);
    for (const auto& p : r.puzzles) EXPECT_TRUE(seen.count(p));
}

TEST(PuzzleSvg, Writes) {
    const auto r = enumerate_puzzles("0101", "0101", "1001");
    const auto svg = puzzle_svg(r.puzzles.at(0));
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}
