#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "game.hpp"
#include "oracle.hpp"
#include "puzzles.hpp"
#include "schur.hpp"

namespace schubert::verify {

struct Report {
    std::string name;
    long long checked = 0;
    long long violations = 0;
    std::vector<std::string> samples;
    double seconds = 0;

    bool ok() const { return violations == 0; }

    void fail(std::string what) {
        ++violations;
        if (samples.size() < 10) samples.push_back(std::move(what));
    }
    void merge(const Report& o) {
        checked += o.checked;
        violations += o.violations;
        for (const auto& s : o.samples)
            if (samples.size() < 10) samples.push_back(s);
    }
};

inline std::string triple_name(int k, int n, const Partition& a, const Partition& b, const Partition& c) {
    return "G(" + std::to_string(k) + "," + std::to_string(n) + ") (" + to_string(a) + ")*(" + to_string(b) +
           ")->(" + to_string(c) + ")";
}

// Runs task(i) for i in [0, count) on up to `jobs` threads and merges the reports.
inline Report parallel_sweep(std::string name, std::size_t count, int jobs,
                             const std::function<void(std::size_t, Report&)>& task) {
    const auto t0 = std::chrono::steady_clock::now();
    Report total;
    total.name = std::move(name);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr err;
    auto worker = [&] {
        Report local;
        try {
            for (std::size_t i = next++; i < count; i = next++) task(i, local);
        } catch (...) {
            std::lock_guard lock(mu);
            if (!err) err = std::current_exception();
        }
        std::lock_guard lock(mu);
        total.merge(local);
    };
    const int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return total;
}

struct Pair {
    int k, n;
    Partition a, b;
};

// Every (k, n, alpha, beta) with 0 <= k <= n <= max_n, smallest boards first.
inline std::vector<Pair> all_pairs(int max_n, int min_n = 0) {
    std::vector<Pair> out;
    for (int n = min_n; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto P = partitions_in_rect(k, n - k);
            for (const auto& a : P)
                for (const auto& b : P) out.push_back({k, n, a, b});
        }
    return out;
}

inline int default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

inline std::map<Partition, long long> partition_terms(const Expansion& e) {
    std::map<Partition, long long> m;
    for (const auto& [s, c] : e.terms) m[subset_to_partition(s, e.k, e.n)] = c;
    return m;
}

inline Expansion checker_expansion(const Pair& p, Mode mode) {
    PlayOptions o;
    o.mode = mode;
    return game_expansion(partition_to_subset(p.a, p.k, p.n), partition_to_subset(p.b, p.k, p.n), p.k, p.n, o);
}

/// Checker counts, LR tableaux and puzzles agree on every triple.
inline Report oracle_suite(int max_n, int jobs = default_jobs()) {
    const auto pairs = all_pairs(max_n);
    return parallel_sweep("oracle", pairs.size(), jobs, [&](std::size_t i, Report& r) {
        const auto& p = pairs[i];
        const auto games = partition_terms(checker_expansion(p, Mode::Cohomology));
        for (const auto& g : partitions_in_rect(p.k, p.n - p.k)) {
            ++r.checked;
            const long long c = games.count(g) ? games.at(g) : 0;
            const long long t = oracle::count_lr_tableaux(g, p.a, p.b);
            const long long z = puzzle_coefficient(p.a, p.b, g, p.k, p.n, Mode::Cohomology);
            if (c != t || c != z)
                r.fail(triple_name(p.k, p.n, p.a, p.b, g) + ": games " + std::to_string(c) + ", tableaux " +
                       std::to_string(t) + ", puzzles " + std::to_string(z));
        }
    });
}

/// Signed K-checker counts, set-valued tableaux, K-puzzles and Grothendieck polynomials agree.
inline Report ktheory_suite(int max_n, int jobs = default_jobs(), bool polynomials = true) {
    const auto pairs = all_pairs(max_n);
    return parallel_sweep("ktheory", pairs.size(), jobs, [&](std::size_t i, Report& r) {
        const auto& p = pairs[i];
        const auto games = partition_terms(checker_expansion(p, Mode::KTheory));
        std::map<Partition, long long> poly;
        if (polynomials) poly = oracle::grothendieck_product(p.a, p.b, p.k, p.n);
        for (const auto& g : partitions_in_rect(p.k, p.n - p.k)) {
            ++r.checked;
            const long long c = games.count(g) ? games.at(g) : 0;
            const long long s = g.contains(p.a) ? oracle::count_set_valued(g, p.a, p.b) : 0;
            const long long z = puzzle_coefficient(p.a, p.b, g, p.k, p.n, Mode::KTheory);
            const long long y = polynomials ? (poly.count(g) ? poly.at(g) : 0) : c;
            if (c != s || c != z || c != y)
                r.fail(triple_name(p.k, p.n, p.a, p.b, g) + ": games " + std::to_string(c) + ", set-valued " +
                       std::to_string(s) + ", puzzles " + std::to_string(z) +
                       (polynomials ? ", polynomials " + std::to_string(y) : ""));
            const int excess = g.size() - p.a.size() - p.b.size();
            if (c != 0 && (excess < 0 || (c < 0) != (excess % 2 == 1)))
                r.fail(triple_name(p.k, p.n, p.a, p.b, g) + ": sign law");
        }
    });
}

/// c_{ab}^c = c_{ba}^c for games in both modes.
inline Report commutativity_suite(int max_n, int jobs = default_jobs()) {
    const auto pairs = all_pairs(max_n);
    return parallel_sweep("commutativity", pairs.size(), jobs, [&](std::size_t i, Report& r) {
        const auto& p = pairs[i];
        if (p.b < p.a) return;
        for (Mode mode : {Mode::Cohomology, Mode::KTheory}) {
            ++r.checked;
            const auto x = checker_expansion(p, mode);
            const auto y = checker_expansion(Pair{p.k, p.n, p.b, p.a}, mode);
            if (x.terms != y.terms)
                r.fail(triple_name(p.k, p.n, p.a, p.b, {}) + (mode == Mode::KTheory ? " (K)" : ""));
        }
    });
}

/// Cohomology: c_{ab}^c = c_{b,c^}^{a^}. Both modes: C_{ab}^{c^} = C_{bc}^{a^} = C_{ca}^{b^}, games and puzzles.
inline Report triality_suite(int max_n, int jobs = default_jobs()) {
    std::vector<std::pair<int, int>> boards;
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k) boards.push_back({k, n});
    return parallel_sweep("triality", boards.size(), jobs, [&](std::size_t i, Report& r) {
        const auto [k, n] = boards[i];
        const auto P = partitions_in_rect(k, n - k);
        for (Mode mode : {Mode::Cohomology, Mode::KTheory}) {
            std::map<std::pair<Partition, Partition>, std::map<Partition, long long>> E;
            for (const auto& a : P)
                for (const auto& b : P) E[{a, b}] = partition_terms(checker_expansion(Pair{k, n, a, b}, mode));
            auto C = [&](const Partition& a, const Partition& b, const Partition& c) {
                const auto& m = E.at({a, b});
                auto it = m.find(c);
                return it == m.end() ? 0LL : it->second;
            };
            auto dual = [&](const Partition& p) { return p.complement(k, n - k); };
            for (const auto& a : P)
                for (const auto& b : P)
                    for (const auto& c : P) {
                        ++r.checked;
                        const auto x = C(a, b, dual(c)), y = C(b, c, dual(a)), z = C(c, a, dual(b));
                        if (x != y || y != z)
                            r.fail(triple_name(k, n, a, b, c) + (mode == Mode::KTheory ? " (K)" : "") +
                                   " cyclic triality");
                        if (mode == Mode::Cohomology && C(a, b, c) != C(b, dual(c), dual(a)))
                            r.fail(triple_name(k, n, a, b, c) + " triality");
                    }
            ++r.checked;
            if (!triality_check(k, n, mode))
                r.fail("puzzle triality G(" + std::to_string(k) + "," + std::to_string(n) + ")" +
                       (mode == Mode::KTheory ? " (K)" : ""));
        }
    });
}

/// Coefficients agree across every pair of nested rectangles on boards up to max_n.
inline Report stability_suite(int max_n, int jobs = default_jobs()) {
    std::vector<std::pair<int, int>> boards;
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k) boards.push_back({k, n});
    std::vector<std::map<std::pair<Partition, Partition>, std::map<Partition, long long>>> E(boards.size());
    auto build = parallel_sweep("stability", boards.size(), jobs, [&](std::size_t i, Report&) {
        const auto [k, n] = boards[i];
        const auto P = partitions_in_rect(k, n - k);
        for (const auto& a : P)
            for (const auto& b : P) E[i][{a, b}] = partition_terms(checker_expansion(Pair{k, n, a, b}, Mode::Cohomology));
    });
    Report r = parallel_sweep("stability", boards.size(), jobs, [&](std::size_t i, Report& r) {
        const auto [k, n] = boards[i];
        for (std::size_t j = 0; j < boards.size(); ++j) {
            const auto [k2, n2] = boards[j];
            if (j == i || k2 < k || n2 - k2 < n - k) continue;
            for (const auto& [ab, terms] : E[i]) {
                ++r.checked;
                std::map<Partition, long long> restricted;
                for (const auto& [g, c] : E[j].at(ab))
                    if (g.fits(k, n - k)) restricted[g] = c;
                if (restricted != terms)
                    r.fail(triple_name(k, n, ab.first, ab.second, {}) + " vs G(" + std::to_string(k2) + "," +
                           std::to_string(n2) + ")");
            }
        }
    });
    r.seconds += build.seconds;
    return r;
}

/// Pieri rule for every alpha and every p that fits, boards up to max_n.
inline Report pieri_suite(int max_n, int jobs = default_jobs()) {
    std::vector<std::pair<int, int>> boards;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k < n; ++k) boards.push_back({k, n});
    return parallel_sweep("pieri", boards.size(), jobs, [&](std::size_t i, Report& r) {
        const auto [k, n] = boards[i];
        for (const auto& a : partitions_in_rect(k, n - k))
            for (int p = 1; p <= n - k; ++p) {
                ++r.checked;
                if (!pieri_check(a, p, k, n))
                    r.fail("G(" + std::to_string(k) + "," + std::to_string(n) + ") (" + to_string(a) + ") p=" +
                           std::to_string(p));
            }
    });
}

/// game->tableau and game->puzzle (cohomology), game->set-valued tableau (K).
inline Report bijection_suite(int max_n, int jobs = default_jobs(), bool puzzles = true, bool ktheory = true) {
    const auto pairs = all_pairs(max_n);
    return parallel_sweep("bijection", pairs.size(), jobs, [&](std::size_t i, Report& r) {
        const auto& p = pairs[i];
        const auto A = partition_to_subset(p.a, p.k, p.n), B = partition_to_subset(p.b, p.k, p.n);
        std::map<Partition, std::vector<Game>> by_out;
        for (auto& g : play_all_games(A, B, p.k, p.n)) by_out[subset_to_partition(g.output, p.k, p.n)].push_back(std::move(g));
        std::map<Partition, std::vector<Game>> k_by_out;
        if (ktheory)
            for (auto& g : play_all_games(A, B, p.k, p.n, Mode::KTheory))
                k_by_out[subset_to_partition(g.output, p.k, p.n)].push_back(std::move(g));
        for (const auto& c : partitions_in_rect(p.k, p.n - p.k)) {
            const std::string name = triple_name(p.k, p.n, p.a, p.b, c);
            static const std::vector<Game> none;
            const auto& games = by_out.count(c) ? by_out.at(c) : none;

            ++r.checked;
            std::vector<Tableau> mine, theirs;
            for (const auto& g : games) mine.push_back(game_to_tableau(g.trace));
            for (const auto& t : oracle::lr_tableaux(c, p.a, p.b)) theirs.push_back(oracle::companion(t));
            std::sort(mine.begin(), mine.end());
            std::sort(theirs.begin(), theirs.end());
            if (std::adjacent_find(mine.begin(), mine.end()) != mine.end()) r.fail(name + ": tableau map not injective");
            if (mine != theirs) r.fail(name + ": tableau image differs from the oracle set");

            if (puzzles) {
                ++r.checked;
                const auto S = partition_to_subset(c, p.k, p.n);
                const auto all = enumerate_puzzles(subset_to_boundary(A, p.n), subset_to_boundary(B, p.n),
                                                   subset_to_boundary(S, p.n));
                std::vector<Puzzle> img;
                try {
                    for (const auto& g : games) img.push_back(game_to_puzzle(g, p.k, p.n));
                } catch (const TranslationGap& e) {
                    r.fail(name + ": " + e.what());
                    img.clear();
                }
                std::sort(img.begin(), img.end());
                if (std::adjacent_find(img.begin(), img.end()) != img.end()) r.fail(name + ": puzzle map not injective");
                if (img != all.puzzles) r.fail(name + ": puzzle image differs from the enumerated puzzles");
            }

            if (ktheory) {
                ++r.checked;
                const auto& kg = k_by_out.count(c) ? k_by_out.at(c) : none;
                std::vector<SetValuedTableau> km, kt;
                for (const auto& g : kg) km.push_back(game_to_set_valued_tableau(g.trace));
                for (auto& t : oracle::set_valued_lr_tableaux(c, p.a, p.b)) kt.push_back(std::move(t));
                std::sort(km.begin(), km.end());
                std::sort(kt.begin(), kt.end());
                if (km != kt) r.fail(name + ": set-valued image differs from the oracle set");
                for (const auto& g : kg)
                    if (g.sign != ((game_to_set_valued_tableau(g.trace).entry_count() - p.b.size()) % 2 ? -1 : 1))
                        r.fail(name + ": sign disagrees with the set-valued tableau");
            }
        }
    });
}

/// Structural checks on every state of every game, both modes.
inline Report invariants_suite(int max_n, int jobs = default_jobs()) {
    const auto pairs = all_pairs(max_n);
    return parallel_sweep("midsort", pairs.size(), jobs, [&](std::size_t i, Report& r) {
        const auto& p = pairs[i];
        const auto A = partition_to_subset(p.a, p.k, p.n), B = partition_to_subset(p.b, p.k, p.n);
        const std::size_t len = static_cast<std::size_t>(p.n * (p.n - 1) / 2);
        for (Mode mode : {Mode::Cohomology, Mode::KTheory}) {
            PlayOptions o;
            o.mode = mode;
            o.check_invariants = true;
            try {
                for_each_game(A, B, p.n, o, [&](const SubsetK&, int sign, const std::vector<MoveRecord>& t) {
                    ++r.checked;
                    if (t.size() != len) r.fail(triple_name(p.k, p.n, p.a, p.b, {}) + ": game length");
                    if (mode == Mode::Cohomology && sign != 1) r.fail(triple_name(p.k, p.n, p.a, p.b, {}) + ": sign");
                    const bool full = p.a.size() + p.b.size() == p.k * (p.n - p.k);
                    if (mode == Mode::Cohomology && full &&
                        dimY(t.empty() ? *initial_white(A, B, p.n) : t.back().white_after,
                             BlackConfig::final_state(p.n)) != 0)
                        r.fail(triple_name(p.k, p.n, p.a, p.b, {}) + ": final dimension");
                });
            } catch (const InvariantViolation& e) {
                r.fail(e.what());
            }
        }
    });
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"oracle",    "triality", "commutativity", "stability",
                                                "pieri",     "bijection", "midsort",      "ktheory"};
    return names;
}

inline Report run_suite(const std::string& name, int max_n, int jobs = default_jobs()) {
    if (name == "oracle") return oracle_suite(max_n, jobs);
    if (name == "triality") return triality_suite(max_n, jobs);
    if (name == "commutativity") return commutativity_suite(max_n, jobs);
    if (name == "stability") return stability_suite(max_n, jobs);
    if (name == "pieri") return pieri_suite(max_n, jobs);
    if (name == "bijection") return bijection_suite(max_n, jobs);
    if (name == "midsort") return invariants_suite(max_n, jobs);
    if (name == "ktheory") return ktheory_suite(max_n, jobs);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace schubert::verify
