#include <gtest/gtest.h>

#include "schubert/render.hpp"
#include "schubert/trace_io.hpp"

using namespace schubert;

TEST(TraceIO, RoundTrip) {
    for (Mode mode : {Mode::Cohomology, Mode::KTheory}) {
        const auto games = play_all_games({2, 4, 6}, {2, 4, 6}, 3, 6, mode);
        const auto doc = games_to_json(games, {2, 4, 6}, {2, 4, 6}, 6, mode);
        const auto again = json::parse(doc.dump());
        const auto rep = replay_document(again);
        EXPECT_EQ(rep.games, games.size());
        EXPECT_EQ(rep.mismatches, 0u);
        EXPECT_EQ(doc.dump(), games_to_json(play_all_games({2, 4, 6}, {2, 4, 6}, 3, 6, mode), {2, 4, 6},
                                            {2, 4, 6}, 6, mode).dump());
    }
}

TEST(TraceIO, Fields) {
    const auto games = play_all_games({2, 4}, {2, 4}, 2, 4);
    const auto t = trace_to_json(games[0].trace);
    ASSERT_EQ(t.size(), 6u);
    for (const char* key : {"stage", "letter", "decision", "dagger", "daggerRow", "daggerCol", "whiteAfter", "sign"})
        EXPECT_TRUE(t[0].contains(key)) << key;
    EXPECT_EQ(t[0]["decision"], "forced");
    EXPECT_EQ(t[0]["letter"], 3);
}

TEST(TraceIO, TamperedTraceIsRejected) {
    const auto games = play_all_games({2, 4}, {2, 4}, 2, 4);
    auto t = trace_to_json(games[0].trace);
    t[2]["whiteAfter"][0][0] = 1;
    EXPECT_THROW(replay_trace({2, 4}, {2, 4}, 4, Mode::Cohomology, t), std::exception);
    auto u = trace_to_json(games[0].trace);
    u.erase(u.size() - 1);
    EXPECT_THROW(replay_trace({2, 4}, {2, 4}, 4, Mode::Cohomology, u), InvariantViolation);
}

TEST(Render, AsciiBoard) {
    const auto s = ascii_board(BlackConfig::initial(2), WhiteConfig{{2, 1}});
    EXPECT_NE(s.find("◉"), std::string::npos);
    EXPECT_NE(s.find("●"), std::string::npos);
    const auto g = play_all_games({2, 4}, {2, 4}, 2, 4);
    EXPECT_EQ(ascii_game(g[0]), ascii_game(g[0]));
    EXPECT_NE(svg_game(g[0]).find("<svg"), std::string::npos);
}
