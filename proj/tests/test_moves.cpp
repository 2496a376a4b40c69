#include <gtest/gtest.h>

#include "schubert/game.hpp"
#include "schubert/moves.hpp"

using namespace schubert;

namespace {

// n = 4 while column 3 descends: columns 1,2 on rows 3,4.
const BlackConfig kBoard({3, 4, 2, 1});
const BlackMove kMove = describe_move(kBoard, 2);  // descending (2,3), rising (3,1)

GameState branch_state_g24() {
    const auto order = specialization_sequence(4);
    GameState s = initial_state(*initial_white({2, 4}, {2, 4}, 4), 4);
    while (true) {
        auto next = successors(order, s, Mode::Cohomology);
        if (next.size() > 1) return s;
        s = next.front().state;
    }
}

}  // namespace

TEST(Phase1, BoardSetup) {
    EXPECT_EQ(kMove.descending, (Square{2, 3}));
    EXPECT_EQ(kMove.rising, (Square{3, 1}));
    EXPECT_EQ(kMove.critical_diagonal, (std::vector<Square>{{3, 1}, {4, 2}}));
}

TEST(Phase1, TableCells) {
    auto kind = [](WhiteConfig w) { return phase1_decision(w, kMove); };

    auto d = kind(WhiteConfig{{4, 4}});
    EXPECT_EQ(d.kind, Phase1Kind::StayOnly);
    EXPECT_FALSE(d.dagger);

    d = kind(WhiteConfig{{3, 1}});
    EXPECT_EQ(d.kind, Phase1Kind::StayOnly);
    EXPECT_TRUE(d.dagger);

    d = kind(WhiteConfig{{3, 1}, {2, 4}});
    EXPECT_EQ(d.kind, Phase1Kind::SwapOnly);
    EXPECT_FALSE(d.dagger);

    d = kind(WhiteConfig{{3, 1}, {2, 3}});
    EXPECT_EQ(d.kind, Phase1Kind::SwapOnly);

    d = kind(WhiteConfig{{4, 2}, {2, 3}});
    EXPECT_EQ(d.kind, Phase1Kind::SwapOnly);

    d = kind(WhiteConfig{{4, 2}, {2, 4}});
    EXPECT_EQ(d.kind, Phase1Kind::StayOrSwap);
    EXPECT_EQ(d.critical_row_white, (Square{2, 4}));
    EXPECT_EQ(d.top_diagonal_white, (Square{4, 2}));

    d = kind(WhiteConfig{{4, 2}});
    EXPECT_EQ(d.kind, Phase1Kind::StayOnly);

    d = kind(WhiteConfig{{2, 4}});
    EXPECT_EQ(d.kind, Phase1Kind::StayOnly);
}

TEST(Phase1, Blocker) {
    const WhiteConfig w{{4, 2}, {3, 3}, {2, 4}};
    EXPECT_TRUE(has_blocker(w, {2, 4}, {4, 2}));
    const auto d = phase1_decision(w, kMove);
    EXPECT_EQ(d.kind, Phase1Kind::StayOnly);
    EXPECT_TRUE(d.blocked);
    EXPECT_FALSE(has_blocker(WhiteConfig{{4, 2}, {2, 4}}, {2, 4}, {4, 2}));
}

TEST(Phase1, BlockerRectangleIsOpen) {
    // rectangle between (3,5) and (6,2): rows 4..5, columns 3..4
    EXPECT_TRUE(has_blocker(WhiteConfig{{6, 2}, {3, 5}, {4, 3}}, {3, 5}, {6, 2}));
    EXPECT_TRUE(has_blocker(WhiteConfig{{6, 2}, {3, 5}, {5, 4}}, {3, 5}, {6, 2}));
    EXPECT_FALSE(has_blocker(WhiteConfig{{6, 2}, {3, 5}, {4, 6}}, {3, 5}, {6, 2}));
    EXPECT_FALSE(has_blocker(WhiteConfig{{6, 2}, {3, 5}, {4, 1}}, {3, 5}, {6, 2}));
    EXPECT_FALSE(has_blocker(WhiteConfig{{6, 2}, {3, 5}, {1, 4}}, {3, 5}, {6, 2}));
}

TEST(Moves, StaySwapSubswap) {
    const WhiteConfig w{{4, 2}, {2, 4}};
    EXPECT_EQ(apply_stay(w, kMove), w);
    EXPECT_EQ(apply_swap(w, kMove), (WhiteConfig{{2, 2}, {4, 4}}));
    EXPECT_EQ(apply_subswap(w, kMove), (WhiteConfig{{2, 2}, {3, 4}}));
    EXPECT_THROW(apply_subswap(WhiteConfig{{3, 1}, {2, 4}}, kMove), InvariantViolation);
    EXPECT_THROW(apply_swap(WhiteConfig{{4, 4}}, kMove), InvariantViolation);
}

TEST(Moves, SwapExchangesRowsOnly) {
    const WhiteConfig w{{3, 1}, {2, 4}};
    const auto s = apply_swap(w, kMove);
    EXPECT_EQ(s, (WhiteConfig{{2, 1}, {3, 4}}));
    std::vector<int> rows_before = w.sorted_rows(), rows_after = s.sorted_rows();
    EXPECT_EQ(rows_before, rows_after);
}

TEST(Phase2, DaggerSlidesUpOntoRisenChecker) {
    const auto after = kBoard.with_rows_exchanged(2);
    EXPECT_EQ(apply_phase2(WhiteConfig{{3, 1}}, after), (WhiteConfig{{2, 1}}));
}

TEST(Phase2, IdentityWhenHappyAndIdempotent) {
    const auto b = BlackConfig::initial(4);
    const WhiteConfig w{{2, 4}, {4, 2}};
    EXPECT_EQ(apply_phase2(w, b), w);
    const auto order = specialization_sequence(5);
    for (std::size_t m = 0; m < order.length(); ++m)
        for (int r = 1; r <= 5; ++r)
            for (int c = 1; c <= 5; ++c) {
                const WhiteConfig one{{r, c}};
                try {
                    const auto p = apply_phase2(one, order.states[m + 1]);
                    EXPECT_EQ(apply_phase2(p, order.states[m + 1]), p);
                    EXPECT_TRUE(all_happy(p, order.states[m + 1]));
                } catch (const UniquenessViolation&) {
                }
            }
}

TEST(Phase2, NoTargetIsReported) {
    EXPECT_THROW(apply_phase2(WhiteConfig{{1, 1}}, BlackConfig::initial(2)), UniquenessViolation);
}

TEST(Successors, G24BranchState) {
    const auto s = branch_state_g24();
    const auto order = specialization_sequence(4);
    const auto mv = describe_move(s.black, order.letters[s.stage]);
    EXPECT_EQ(phase1_decision(s.white, mv).kind, Phase1Kind::StayOrSwap);

    const auto co = successors(order, s, Mode::Cohomology);
    ASSERT_EQ(co.size(), 2u);
    EXPECT_EQ(co[0].state.trace.back().action, WhiteAction::Stay);
    EXPECT_EQ(co[1].state.trace.back().action, WhiteAction::Swap);
    for (const auto& x : co) EXPECT_EQ(x.sign, 1);

    const auto k = successors(order, s, Mode::KTheory);
    ASSERT_EQ(k.size(), 3u);
    EXPECT_EQ(k[2].state.trace.back().action, WhiteAction::Subswap);
    EXPECT_EQ(k[2].sign, -1);
    EXPECT_EQ(dimY(k[2].state.white, k[2].state.black), dimY(s.white, s.black) - 1);
    EXPECT_EQ(dimY(k[0].state.white, k[0].state.black), dimY(s.white, s.black));
    EXPECT_EQ(dimY(k[1].state.white, k[1].state.black), dimY(s.white, s.black));
}

TEST(Successors, ForcedStateHasOne) {
    const auto order = specialization_sequence(4);
    const GameState s = initial_state(*initial_white({2, 4}, {2, 4}, 4), 4);
    const auto next = successors(order, s, Mode::KTheory);
    ASSERT_EQ(next.size(), 1u);
    EXPECT_TRUE(next[0].state.trace.back().forced);
    EXPECT_THROW(successors(order, GameState{6, BlackConfig::final_state(4), {}, 1, {}, {}}, Mode::Cohomology),
                 std::invalid_argument);
}

TEST(Successors, StatesStayValidAlongOneWalk) {
    const auto order = specialization_sequence(6);
    GameState s = initial_state(*initial_white({2, 4, 6}, {2, 4, 6}, 6), 6);
    while (s.stage < static_cast<int>(order.length())) {
        EXPECT_TRUE(is_mid_sort(s.white, order.sorted_about(s.stage)));
        auto next = successors(order, s, Mode::KTheory);
        s = next.back().state;
        EXPECT_TRUE(all_happy(s.white, s.black));
    }
    EXPECT_TRUE(is_mid_sort(s.white, order.sorted_about(s.stage)));
    EXPECT_EQ(s.trace.size(), order.length());
}
