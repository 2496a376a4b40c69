#include <gtest/gtest.h>

#include <set>

#include "schubert/game.hpp"
#include "schubert/oracle.hpp"

using namespace schubert;

namespace {

std::multiset<SubsetK> outputs(const std::vector<Game>& games) {
    std::multiset<SubsetK> m;
    for (const auto& g : games) m.insert(g.output);
    return m;
}

}  // namespace

TEST(Games, G24) {
    const auto games = play_all_games({2, 4}, {2, 4}, 2, 4);
    ASSERT_EQ(games.size(), 2u);
    EXPECT_EQ(outputs(games), (std::multiset<SubsetK>{{1, 4}, {2, 3}}));
    for (const auto& g : games) {
        EXPECT_EQ(g.sign, 1);
        EXPECT_EQ(g.trace.size(), 6u);
    }
}

TEST(Games, Mult2) {
    const auto games = play_all_games({2, 4, 6}, {2, 4, 6}, 3, 6);
    EXPECT_EQ(outputs(games), (std::multiset<SubsetK>{{2, 3, 4}, {1, 3, 5}, {1, 3, 5}, {1, 2, 6}}));
    EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}, 3, 6), 2);
}

TEST(Games, NoGame) {
    EXPECT_TRUE(play_all_games({1}, {1}, 1, 2).empty());
    EXPECT_TRUE(play_all_games({1}, {1}, 1, 2, Mode::KTheory).empty());
}

TEST(Games, EmptyAndTrivialGrassmannians) {
    EXPECT_EQ(play_all_games({}, {}, 0, 3).size(), 1u);
    EXPECT_EQ(play_all_games({1, 2}, {1, 2}, 2, 2).size(), 1u);
    EXPECT_THROW(play_all_games({1, 2}, {1}, 2, 4), OutOfRectangle);
}

TEST(Games, KTheoryG24) {
    const auto e = k_expansion({1}, {1}, 2, 4);
    EXPECT_EQ(e.terms.size(), 3u);
    EXPECT_EQ(e.coefficient(partition_to_subset({2}, 2, 4)), 1);
    EXPECT_EQ(e.coefficient(partition_to_subset({1, 1}, 2, 4)), 1);
    EXPECT_EQ(e.coefficient(partition_to_subset({2, 1}, 2, 4)), -1);
}

TEST(Games, KTheoryLiteralPolicyDiffersSomewhere) {
    // the unlocked rule overcounts; the locked rule is the default
    bool differs = false;
    for (const auto& a : partitions_in_rect(3, 3))
        for (const auto& b : partitions_in_rect(3, 3))
            if (k_expansion(a, b, 3, 6, SubswapPolicy::Literal) != k_expansion(a, b, 3, 6)) differs = true;
    EXPECT_TRUE(differs);
}

TEST(Games, DimYStartsAtExpectedDimension) {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& a : subsets_of_size(k, n))
                for (const auto& b : subsets_of_size(k, n)) {
                    const auto w = initial_white(a, b, n);
                    if (!w) continue;
                    const int expected = k * (n - k) - subset_to_partition(a, k, n).size() -
                                         subset_to_partition(b, k, n).size();
                    EXPECT_EQ(dimY(*w, BlackConfig::initial(n)), expected);
                }
}

TEST(Games, InvariantsHoldForSmallBoards) {
    for (Mode mode : {Mode::Cohomology, Mode::KTheory}) {
        PlayOptions opt;
        opt.mode = mode;
        opt.check_invariants = true;
        opt.keep_traces = false;
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k)
                for (const auto& a : subsets_of_size(k, n))
                    for (const auto& b : subsets_of_size(k, n))
                        EXPECT_NO_THROW(for_each_game(a, b, n, opt, [](const auto&, int, const auto&) {}));
    }
}

TEST(Tournament, Examples) {
    EXPECT_EQ(tournament({{1}, {1}, {1}, {1}}, 2, 4), 2);
    for (const auto& a : partitions_in_rect(2, 2)) EXPECT_EQ(tournament({a, a.complement(2, 2)}, 2, 4), 1);
    EXPECT_EQ(tournament({{2, 2}}, 2, 4), 1);
    EXPECT_THROW(tournament({{1}, {1}}, 2, 4), DimensionMismatch);
    EXPECT_THROW(tournament({{3}, {1}}, 2, 4), OutOfRectangle);
}

TEST(Tournament, MatchesIteratedOracleProducts) {
    // s_1^6 in G(3,6): number of standard tableaux of the 3x3 square is 42
    EXPECT_EQ(tournament(std::vector<Partition>(9, Partition{1}), 3, 6), 42);
    long long s = 0;
    for (const auto& g : partitions_in_rect(3, 3))
        s += oracle::count_lr_tableaux(g, {2, 1}, {2, 1}) * oracle::count_lr_tableaux({3, 3, 3}, g, {2, 1});
    EXPECT_EQ(tournament({{2, 1}, {2, 1}, {2, 1}}, 3, 6), s);
}

TEST(Recorders, G24Tableaux) {
    std::set<Tableau> got;
    for (const auto& g : play_all_games({2, 4}, {2, 4}, 2, 4)) got.insert(game_to_tableau(g.trace));
    EXPECT_EQ(got, (std::set<Tableau>{Tableau{{{1}}}, Tableau{{{2}}}}));
}

TEST(Recorders, G24SetValuedCell) {
    int doubles = 0;
    for (const auto& g : play_all_games({2, 4}, {2, 4}, 2, 4, Mode::KTheory)) {
        const auto t = game_to_set_valued_tableau(g.trace);
        if (t.entry_count() == 2) {
            ++doubles;
            EXPECT_EQ(t.rows, (std::vector<std::vector<std::vector<int>>>{{{1, 2}}}));
            EXPECT_EQ(g.sign, -1);
        }
    }
    EXPECT_EQ(doubles, 1);
}

TEST(Recorders, Mult2TableauxAreDistinct) {
    std::set<Tableau> got;
    const auto games = play_all_games({2, 4, 6}, {2, 4, 6}, 3, 6);
    for (const auto& g : games) got.insert(game_to_tableau(g.trace));
    EXPECT_EQ(got.size(), games.size());
}
