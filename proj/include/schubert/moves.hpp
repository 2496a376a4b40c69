#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "board.hpp"
#include "specialization.hpp"

namespace schubert {

enum class Mode { Cohomology, KTheory };

// How a white checker displaced by a sub-swap is treated for the rest of its pass.
// Literal: no restriction. LockDisplaced: it may not take part in another
// stay/swap/sub-swap choice as the critical-row checker until the pass ends.
enum class SubswapPolicy { Literal, LockDisplaced };

enum class Phase1Kind { StayOnly, SwapOnly, StayOrSwap };
enum class WhiteAction { Stay, Swap, Subswap };

inline const char* to_string(WhiteAction a) {
    switch (a) {
        case WhiteAction::Stay: return "stay";
        case WhiteAction::Swap: return "swap";
        case WhiteAction::Subswap: return "subswap";
    }
    return "?";
}

struct Phase1Decision {
    Phase1Kind kind = Phase1Kind::StayOnly;
    std::optional<Square> critical_row_white;
    std::optional<Square> top_diagonal_white;
    bool dagger = false;
    bool blocked = false;
};

/// Some third white strictly inside the rectangle spanned by w1 (critical row) and w2 (diagonal).
inline bool has_blocker(const WhiteConfig& white, Square w1, Square w2) {
    for (auto w : white)
        if (w.row > w1.row && w.row < w2.row && w.col > w2.col && w.col < w1.col) return true;
    return false;
}

inline Phase1Decision phase1_decision(const WhiteConfig& white, const BlackMove& move) {
    Phase1Decision d;
    if (auto r = white.in_row(move.descending.row)) {
        if (r->col < move.descending.col)
            throw InvariantViolation("white checker left of the critical row " + to_string(*r));
        d.critical_row_white = r;
    }
    for (auto sq : move.critical_diagonal)
        if (white.occupied(sq)) {
            d.top_diagonal_white = sq;
            break;
        }
    const auto& R = d.critical_row_white;
    const auto& T = d.top_diagonal_white;
    if (!T) {
        d.kind = Phase1Kind::StayOnly;
    } else if (*T == move.rising) {
        d.kind = R ? Phase1Kind::SwapOnly : Phase1Kind::StayOnly;
        d.dagger = !R;
    } else if (!R) {
        d.kind = Phase1Kind::StayOnly;
    } else if (*R == move.descending) {
        d.kind = Phase1Kind::SwapOnly;
    } else {
        d.blocked = has_blocker(white, *R, *T);
        d.kind = d.blocked ? Phase1Kind::StayOnly : Phase1Kind::StayOrSwap;
    }
    return d;
}

namespace detail {

// Positions indexed by the pre-move column order, so checker identity survives a move.
using Positions = std::vector<Square>;

inline std::size_t index_of(const WhiteConfig& white, Square s) {
    for (std::size_t i = 0; i < white.size(); ++i)
        if (white[i] == s) return i;
    throw InvariantViolation("no white checker at " + to_string(s));
}

inline Positions swapped(const WhiteConfig& white, const Phase1Decision& d) {
    Positions p = white.checkers();
    const Square r = *d.critical_row_white, t = *d.top_diagonal_white;
    p[index_of(white, r)] = {t.row, r.col};
    p[index_of(white, t)] = {r.row, t.col};
    return p;
}

inline Positions subswapped(const WhiteConfig& white, const Phase1Decision& d) {
    Positions p = white.checkers();
    const Square r = *d.critical_row_white, t = *d.top_diagonal_white;
    if (t.row - 1 == r.row) throw InvariantViolation("sub-swap would collide rows");
    p[index_of(white, t)] = {r.row, t.col};
    p[index_of(white, r)] = {t.row - 1, r.col};
    return p;
}

inline Square phase2_target(Square w, const BlackConfig& black) {
    if (is_happy(w, black)) return w;
    std::optional<Square> left, up;
    for (int c = w.col - 1; c >= 1 && !left; --c)
        if (is_happy({w.row, c}, black)) left = Square{w.row, c};
    for (int r = w.row - 1; r >= 1 && !up; --r)
        if (is_happy({r, w.col}, black)) up = Square{r, w.col};
    if (left.has_value() == up.has_value())
        throw UniquenessViolation("phase 2 target for " + to_string(w) + " is " +
                                  (left ? "ambiguous" : "missing"));
    return left ? *left : *up;
}

inline Positions phase2(Positions p, const BlackConfig& black) {
    for (auto& w : p) w = phase2_target(w, black);
    return p;
}

// Builds the canonical config and, for each of its checkers, the index it had in p.
inline WhiteConfig canonical(const Positions& p, std::vector<int>& origin) {
    WhiteConfig w(p);
    origin.assign(w.size(), 0);
    for (std::size_t j = 0; j < w.size(); ++j)
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] == w[j]) origin[j] = static_cast<int>(i);
    return w;
}

}  // namespace detail

inline WhiteConfig apply_stay(const WhiteConfig& white, const BlackMove&) { return white; }

inline WhiteConfig apply_swap(const WhiteConfig& white, const BlackMove& move) {
    const auto d = phase1_decision(white, move);
    if (d.kind == Phase1Kind::StayOnly) throw InvariantViolation("swap not permitted here");
    return WhiteConfig(detail::swapped(white, d));
}

inline WhiteConfig apply_subswap(const WhiteConfig& white, const BlackMove& move) {
    const auto d = phase1_decision(white, move);
    if (d.kind != Phase1Kind::StayOrSwap) throw InvariantViolation("sub-swap not permitted here");
    return WhiteConfig(detail::subswapped(white, d));
}

inline WhiteConfig apply_phase2(const WhiteConfig& white, const BlackConfig& black_after) {
    return WhiteConfig(detail::phase2(white.checkers(), black_after));
}

struct DaggerInfo {
    int row_rank = 0;  // by-row rank of the rising-square white, before the move
    int col_rank = 0;
};

/// One permitted white response to a black move, after Phase 2.
struct StepOption {
    WhiteAction action = WhiteAction::Stay;
    bool forced = true;
    int sign = 1;
    std::optional<DaggerInfo> dagger;
    int mover = -1;  // pre-move index of the diagonal white, if any
    int displaced = -1;  // pre-move index of the critical-row white, if any
    WhiteConfig white;
    std::vector<int> origin;  // origin[j] = pre-move index of checker j of `white`
};

/**
 * Enumerates the white responses to `move` in the order stay, swap, sub-swap.
 * `locked` flags (pre-move column order) are consulted only for sub-swap in K mode.
 */
inline std::vector<StepOption> step_options(const WhiteConfig& white, const BlackMove& move,
                                            const BlackConfig& after, Mode mode,
                                            const std::vector<bool>* locked = nullptr) {
    auto d = phase1_decision(white, move);
    const int ri = d.critical_row_white ? static_cast<int>(detail::index_of(white, *d.critical_row_white)) : -1;
    const int ti = d.top_diagonal_white ? static_cast<int>(detail::index_of(white, *d.top_diagonal_white)) : -1;
    if (mode == Mode::KTheory && d.kind == Phase1Kind::StayOrSwap && locked && (*locked)[ri])
        d.kind = Phase1Kind::StayOnly;

    std::vector<WhiteAction> acts;
    switch (d.kind) {
        case Phase1Kind::StayOnly: acts = {WhiteAction::Stay}; break;
        case Phase1Kind::SwapOnly: acts = {WhiteAction::Swap}; break;
        case Phase1Kind::StayOrSwap:
            acts = {WhiteAction::Stay, WhiteAction::Swap};
            if (mode == Mode::KTheory) acts.push_back(WhiteAction::Subswap);
            break;
    }

    std::vector<StepOption> out;
    for (auto a : acts) {
        StepOption o;
        o.action = a;
        o.forced = acts.size() == 1;
        o.mover = ti;
        o.displaced = ri;
        detail::Positions p = white.checkers();
        if (a == WhiteAction::Swap) p = detail::swapped(white, d);
        if (a == WhiteAction::Subswap) {
            p = detail::subswapped(white, d);
            o.sign = -1;
        }
        if (d.dagger) o.dagger = DaggerInfo{white.row_rank(*d.top_diagonal_white),
                                            white.col_rank(*d.top_diagonal_white)};
        o.white = detail::canonical(detail::phase2(std::move(p), after), o.origin);
        out.push_back(std::move(o));
    }
    return out;
}

struct MoveRecord {
    int stage = 0;
    int letter = 0;
    WhiteAction action = WhiteAction::Stay;
    bool forced = true;
    std::optional<DaggerInfo> dagger;
    WhiteConfig white_before;
    WhiteConfig white_after;
    int sign = 1;  // sign of this move alone
    int mover = -1;
    int displaced = -1;
    std::vector<int> origin;
};

struct GameState {
    int stage = 0;
    BlackConfig black;
    WhiteConfig white;
    int sign = 1;
    std::vector<MoveRecord> trace;
    std::vector<bool> locked;  // per white checker, column order
};

inline GameState initial_state(const WhiteConfig& white, int n) {
    GameState s;
    s.black = BlackConfig::initial(n);
    s.white = white;
    s.locked.assign(white.size(), false);
    return s;
}

inline MoveRecord make_record(int stage, int letter, const WhiteConfig& before, StepOption&& o) {
    MoveRecord r;
    r.stage = stage;
    r.letter = letter;
    r.action = o.action;
    r.forced = o.forced;
    r.dagger = o.dagger;
    r.white_before = before;
    r.white_after = std::move(o.white);
    r.sign = o.sign;
    r.mover = o.mover;
    r.displaced = o.displaced;
    r.origin = std::move(o.origin);
    return r;
}

// Lock flags after a move, in the new column order.
inline std::vector<bool> next_locks(const std::vector<bool>& locked, const MoveRecord& r,
                                    bool pass_ends, SubswapPolicy policy) {
    std::vector<bool> out(r.origin.size(), false);
    if (pass_ends || policy == SubswapPolicy::Literal) return out;
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = locked[r.origin[j]];
        if (r.action == WhiteAction::Subswap && r.origin[j] == r.displaced) out[j] = true;
    }
    return out;
}

struct Successor {
    GameState state;
    int sign = 1;
    std::optional<DaggerInfo> dagger;
};

inline std::vector<Successor> successors(const SpecializationOrder& order, const GameState& state,
                                         Mode mode,
                                         SubswapPolicy policy = SubswapPolicy::LockDisplaced) {
    if (state.stage >= static_cast<int>(order.length()))
        throw std::invalid_argument("game already complete");
    const int letter = order.letters[state.stage];
    const BlackMove move = describe_move(state.black, letter);
    const BlackConfig after = state.black.with_rows_exchanged(letter);
    std::vector<Successor> out;
    for (auto& o : step_options(state.white, move, after, mode, &state.locked)) {
        Successor s;
        s.sign = o.sign;
        s.dagger = o.dagger;
        s.state.stage = state.stage + 1;
        s.state.black = after;
        s.state.sign = state.sign * o.sign;
        auto rec = make_record(state.stage, letter, state.white, std::move(o));
        s.state.white = rec.white_after;
        s.state.locked = next_locks(state.locked, rec, order.ends_pass(state.stage), policy);
        s.state.trace = state.trace;
        s.state.trace.push_back(std::move(rec));
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<Successor> successors(const GameState& state, Mode mode,
                                         SubswapPolicy policy = SubswapPolicy::LockDisplaced) {
    return successors(specialization_sequence(state.black.n()), state, mode, policy);
}

}  // namespace schubert
