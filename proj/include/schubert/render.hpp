#pragma once

#include <sstream>
#include <string>

#include "game.hpp"

namespace schubert {

inline std::string ascii_board(const BlackConfig& black, const WhiteConfig& white) {
    std::string out;
    for (int r = 1; r <= black.n(); ++r) {
        for (int c = 1; c <= black.n(); ++c) {
            const bool b = black.occupied({r, c});
            const bool w = white.occupied({r, c});
            out += b && w ? "◉" : b ? "●" : w ? "○" : "·";
            if (c < black.n()) out += ' ';
        }
        out += '\n';
    }
    return out;
}

inline std::string decision_string(const MoveRecord& r) {
    return r.forced ? "forced" : to_string(r.action);
}

/// One frame per state: the start, then one after each move.
inline std::string ascii_game(const Game& g) {
    const auto order = specialization_sequence(g.n);
    std::ostringstream o;
    o << "A=" << to_string(g.a) << " B=" << to_string(g.b) << " -> " << to_string(g.output)
      << (g.sign < 0 ? " (sign -1)" : "") << "\n\n";
    const auto start = initial_white(g.a, g.b, g.n);
    o << "start\n" << ascii_board(order.states[0], start ? *start : WhiteConfig{}) << "\n";
    for (const auto& r : g.trace) {
        o << "stage " << r.stage + 1 << ": e" << r.letter << " " << decision_string(r);
        if (r.dagger) o << " dagger r=" << r.dagger->row_rank << " c=" << r.dagger->col_rank;
        o << "\n" << ascii_board(order.states[r.stage + 1], r.white_after) << "\n";
    }
    return o.str();
}

inline std::string svg_game(const Game& g, int cell = 18) {
    const auto order = specialization_sequence(g.n);
    const int n = g.n;
    const int frames = static_cast<int>(g.trace.size()) + 1;
    const int per_row = 8;
    const int fw = n * cell + 2 * cell;
    const int fh = n * cell + 2 * cell;
    const int rows = (frames + per_row - 1) / per_row;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << std::min(frames, per_row) * fw
      << "\" height=\"" << rows * fh << "\">\n";
    const auto start = initial_white(g.a, g.b, n);
    for (int f = 0; f < frames; ++f) {
        const auto& black = order.states[f];
        const WhiteConfig& white = f == 0 ? (start ? *start : WhiteConfig{}) : g.trace[f - 1].white_after;
        const int ox = (f % per_row) * fw + cell / 2;
        const int oy = (f / per_row) * fh + cell;
        o << "<text x=\"" << ox << "\" y=\"" << oy - 4 << "\" font-size=\"10\">";
        if (f == 0) o << "start";
        else o << f << ": e" << g.trace[f - 1].letter << " " << decision_string(g.trace[f - 1]);
        o << "</text>\n";
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c) {
                const int x = ox + (c - 1) * cell, y = oy + (r - 1) * cell;
                o << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
                  << "\" fill=\"" << ((r + c) % 2 ? "#f0e0c0" : "#fff8e8") << "\" stroke=\"#aaaaaa\"/>\n";
                const double cx = x + cell / 2.0, cy = y + cell / 2.0;
                if (black.occupied({r, c}))
                    o << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << cell * 0.38 << "\" fill=\"#000000\"/>\n";
                if (white.occupied({r, c}))
                    o << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << cell * 0.24
                      << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
            }
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace schubert
