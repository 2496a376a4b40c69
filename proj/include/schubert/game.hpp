#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "board.hpp"
#include "moves.hpp"
#include "specialization.hpp"

namespace schubert {

struct Game {
    SubsetK a, b;
    int n = 0;
    SubsetK output;
    int sign = 1;
    std::vector<MoveRecord> trace;
};

struct PlayOptions {
    Mode mode = Mode::Cohomology;
    SubswapPolicy policy = SubswapPolicy::LockDisplaced;
    bool check_invariants = false;
    bool keep_traces = true;
};

/// Sum over whites of (#black dominated - #white dominated, itself included).
inline int dimY(const WhiteConfig& white, const BlackConfig& black) {
    int d = 0;
    for (auto w : white) {
        for (int c = 1; c <= w.col; ++c) d += black.row_of_col(c) <= w.row;
        for (auto v : white) d -= dominates(w, v);
    }
    return d;
}

namespace detail {

inline std::string game_context(const SubsetK& a, const SubsetK& b, int n, int stage) {
    return " [A=" + to_string(a) + " B=" + to_string(b) + " n=" + std::to_string(n) +
           " stage=" + std::to_string(stage) + "]";
}

inline void check_state(const SpecializationOrder& order, int stage, const BlackConfig& black,
                        const WhiteConfig& white, const SubsetK& a, const SubsetK& b) {
    const int n = order.n;
    auto fail = [&](const std::string& what) {
        throw InvariantViolation(what + game_context(a, b, n, stage) + " white=" + to_string(white));
    };
    if (black != order.states[stage]) fail("black configuration off the specialization order");
    if (!all_happy(white, black)) fail("unhappy white checker");
    if (!is_mid_sort(white, order.sorted_about(stage)))
        fail("white configuration is not mid-sort");
}

inline void check_move(const SpecializationOrder& order, const MoveRecord& rec,
                       const SubsetK& a, const SubsetK& b) {
    const int n = order.n;
    const auto& before = order.states[rec.stage];
    const auto& after = order.states[rec.stage + 1];
    auto fail = [&](const std::string& what) {
        throw InvariantViolation(what + game_context(a, b, n, rec.stage) + " " +
                                 to_string(rec.white_before) + " -> " + to_string(rec.white_after));
    };
    if (black_codim(after) != black_codim(before) + 1) fail("black codimension did not increase by one");
    const int expect = dimY(rec.white_before, before) - (rec.action == WhiteAction::Subswap ? 1 : 0);
    if (dimY(rec.white_after, after) != expect) fail("dimension count changed unexpectedly");
}

}  // namespace detail

/**
 * Depth-first enumeration of all games from the initial position for (A,B).
 * The visitor receives (output subset, sign, trace); with keep_traces off the
 * trace passed is empty.
 */
template <class Visitor>
void for_each_game(const SubsetK& a, const SubsetK& b, int n, const PlayOptions& opt, Visitor&& visit) {
    const auto start = initial_white(a, b, n);
    if (!start) return;
    const auto order = specialization_sequence(n);
    const int len = static_cast<int>(order.length());
    const int k = a.k();
    if (opt.check_invariants && dimY(*start, order.states[0]) !=
            k * (n - k) - subset_to_partition(a, k, n).size() - subset_to_partition(b, k, n).size())
        throw InvariantViolation("initial dimension count" + detail::game_context(a, b, n, 0));

    std::vector<MoveRecord> trace;
    auto rec = [&](auto&& self, int stage, const WhiteConfig& white, int sign,
                   const std::vector<bool>& locked) -> void {
        if (opt.check_invariants) detail::check_state(order, stage, order.states[stage], white, a, b);
        if (stage == len) {
            const auto& fin = order.states[len];
            for (auto w : white)
                if (!fin.occupied(w))
                    throw InvariantViolation("final white off the black diagonal" +
                                             detail::game_context(a, b, n, stage));
            visit(SubsetK(white.sorted_rows()), sign, trace);
            return;
        }
        const int letter = order.letters[stage];
        const auto move = describe_move(order.states[stage], letter);
        for (auto& o : step_options(white, move, order.states[stage + 1], opt.mode, &locked)) {
            MoveRecord r = make_record(stage, letter, white, std::move(o));
            if (opt.check_invariants) detail::check_move(order, r, a, b);
            auto nl = next_locks(locked, r, order.ends_pass(stage), opt.policy);
            const WhiteConfig next = r.white_after;
            const int s = sign * r.sign;
            if (opt.keep_traces) trace.push_back(std::move(r));
            self(self, stage + 1, next, s, nl);
            if (opt.keep_traces) trace.pop_back();
        }
    };
    rec(rec, 0, *start, 1, std::vector<bool>(start->size(), false));
}

inline std::vector<Game> play_all_games(const SubsetK& a, const SubsetK& b, int k, int n,
                                        Mode mode = Mode::Cohomology,
                                        SubswapPolicy policy = SubswapPolicy::LockDisplaced) {
    if (a.k() != k || b.k() != k || k > n) throw OutOfRectangle("subsets must be k-subsets of 1..n");
    std::vector<Game> out;
    PlayOptions opt;
    opt.mode = mode;
    opt.policy = policy;
    for_each_game(a, b, n, opt, [&](const SubsetK& s, int sign, const std::vector<MoveRecord>& t) {
        out.push_back(Game{a, b, n, s, sign, t});
    });
    return out;
}

struct Expansion {
    int k = 0;
    int n = 0;
    std::map<SubsetK, long long> terms;

    void add(const SubsetK& s, long long c) {
        auto& v = terms[s];
        v = checked_add(v, c);
        if (v == 0) terms.erase(s);
    }
    long long coefficient(const SubsetK& s) const {
        auto it = terms.find(s);
        return it == terms.end() ? 0 : it->second;
    }
    friend bool operator==(const Expansion&, const Expansion&) = default;
};

inline Expansion game_expansion(const SubsetK& a, const SubsetK& b, int k, int n, const PlayOptions& opt) {
    if (a.k() != k || b.k() != k || k > n) throw OutOfRectangle("subsets must be k-subsets of 1..n");
    Expansion e{k, n, {}};
    PlayOptions o = opt;
    o.keep_traces = false;
    for_each_game(a, b, n, o, [&](const SubsetK& s, int sign, const auto&) { e.add(s, sign); });
    return e;
}

inline long long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                int k, int n) {
    const auto a = partition_to_subset(alpha, k, n);
    const auto b = partition_to_subset(beta, k, n);
    const auto g = partition_to_subset(gamma, k, n);
    return game_expansion(a, b, k, n, PlayOptions{}).coefficient(g);
}

inline Expansion k_expansion(const Partition& alpha, const Partition& beta, int k, int n,
                             SubswapPolicy policy = SubswapPolicy::LockDisplaced) {
    PlayOptions opt;
    opt.mode = Mode::KTheory;
    opt.policy = policy;
    return game_expansion(partition_to_subset(alpha, k, n), partition_to_subset(beta, k, n), k, n, opt);
}

/// Number of complete checker tournaments for the classes, i.e. the point-class coefficient.
inline long long tournament(const std::vector<Partition>& classes, int k, int n) {
    int total = 0;
    for (const auto& c : classes) {
        if (!c.fits(k, n - k)) throw OutOfRectangle("class (" + to_string(c) + ") does not fit");
        total += c.size();
    }
    if (total != k * (n - k))
        throw DimensionMismatch("codimensions sum to " + std::to_string(total) + ", expected " +
                                std::to_string(k * (n - k)));
    const Partition point = Partition(std::vector<int>(k, n - k));
    if (classes.empty()) return point.empty() ? 1 : 0;

    std::map<std::pair<Partition, Partition>, Expansion> memo;
    std::map<Partition, long long> cur{{classes[0], 1}};
    for (std::size_t i = 1; i < classes.size(); ++i) {
        std::map<Partition, long long> next;
        for (const auto& [gamma, mult] : cur) {
            auto key = std::make_pair(gamma, classes[i]);
            auto it = memo.find(key);
            if (it == memo.end())
                it = memo.emplace(key, game_expansion(partition_to_subset(gamma, k, n),
                                                      partition_to_subset(classes[i], k, n), k, n,
                                                      PlayOptions{})).first;
            for (const auto& [s, c] : it->second.terms) {
                auto& v = next[subset_to_partition(s, k, n)];
                v = checked_add(v, checked_mul(mult, c));
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(point);
    return it == cur.end() ? 0 : it->second;
}

// Row c lists the entries placed in row c, sorted.
struct Tableau {
    std::vector<std::vector<int>> rows;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

struct SetValuedTableau {
    std::vector<std::vector<std::vector<int>>> rows;
    friend auto operator<=>(const SetValuedTableau&, const SetValuedTableau&) = default;

    int entry_count() const {
        int s = 0;
        for (const auto& r : rows)
            for (const auto& cell : r) s += static_cast<int>(cell.size());
        return s;
    }
};

inline Tableau game_to_tableau(const std::vector<MoveRecord>& trace) {
    Tableau t;
    for (const auto& r : trace) {
        if (!r.dagger) continue;
        const int c = r.dagger->col_rank;
        if (static_cast<int>(t.rows.size()) < c) t.rows.resize(c);
        t.rows[c - 1].push_back(r.dagger->row_rank);
    }
    for (auto& row : t.rows) std::sort(row.begin(), row.end());
    return t;
}

/**
 * Each white carries a memory. A sub-swap raising a checker from by-row rank r
 * appends r; at a dagger move the set {r} plus memory lands in row c.
 */
inline SetValuedTableau game_to_set_valued_tableau(const std::vector<MoveRecord>& trace) {
    SetValuedTableau t;
    if (trace.empty()) return t;
    std::vector<std::vector<int>> memory(trace.front().white_before.size());
    for (const auto& r : trace) {
        if (r.action == WhiteAction::Subswap)
            memory[r.mover].push_back(r.white_before.row_rank(r.white_before[r.mover]));
        if (r.dagger) {
            std::vector<int> cell = memory[r.mover];
            cell.push_back(r.dagger->row_rank);
            std::sort(cell.begin(), cell.end());
            cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
            const int c = r.dagger->col_rank;
            if (static_cast<int>(t.rows.size()) < c) t.rows.resize(c);
            t.rows[c - 1].push_back(std::move(cell));
            memory[r.mover].clear();
        }
        std::vector<std::vector<int>> next(r.origin.size());
        for (std::size_t j = 0; j < r.origin.size(); ++j) next[j] = std::move(memory[r.origin[j]]);
        memory = std::move(next);
    }
    for (auto& row : t.rows) std::sort(row.begin(), row.end());
    return t;
}

inline std::string to_string(const Tableau& t) {
    std::string s;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i) s += "/";
        for (int v : t.rows[i]) s += std::to_string(v);
    }
    return s;
}

inline std::string to_string(const SetValuedTableau& t) {
    std::string s;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i) s += "/";
        for (const auto& cell : t.rows[i]) {
            if (cell.size() == 1) {
                s += std::to_string(cell[0]);
                continue;
            }
            s += "{";
            for (std::size_t j = 0; j < cell.size(); ++j) s += (j ? "," : "") + std::to_string(cell[j]);
            s += "}";
        }
    }
    return s;
}

}  // namespace schubert
