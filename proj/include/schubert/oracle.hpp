#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "board.hpp"
#include "game.hpp"

namespace schubert::oracle {

// Filling of gamma/alpha; rows[i] holds the entries of row i+1, left to right.
struct SkewTableau {
    Partition outer, inner;
    std::vector<std::vector<int>> rows;
};

namespace detail {

inline bool skew_ok(const Partition& gamma, const Partition& alpha) { return gamma.contains(alpha); }

}  // namespace detail

/**
 * Semistandard fillings of gamma/alpha with content beta whose reading word
 * (rows top to bottom, each right to left) is a lattice word.
 */
inline std::vector<SkewTableau> lr_tableaux(const Partition& gamma, const Partition& alpha,
                                            const Partition& beta) {
    std::vector<SkewTableau> out;
    if (!detail::skew_ok(gamma, alpha) || gamma.size() != alpha.size() + beta.size()) return out;
    const int L = gamma.length();
    const int m = beta.length();
    std::vector<std::vector<int>> t(L);
    for (int i = 1; i <= L; ++i) t[i - 1].assign(gamma.part(i), 0);

    std::vector<std::pair<int, int>> order;  // (row, col), 1-based
    for (int i = 1; i <= L; ++i)
        for (int j = gamma.part(i); j > alpha.part(i); --j) order.push_back({i, j});
    std::vector<int> cnt(m + 1, 0);

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            SkewTableau s{gamma, alpha, {}};
            for (int i = 1; i <= L; ++i)
                s.rows.emplace_back(t[i - 1].begin() + alpha.part(i), t[i - 1].end());
            out.push_back(std::move(s));
            return;
        }
        const auto [i, j] = order[idx];
        for (int v = 1; v <= m; ++v) {
            if (cnt[v] >= beta.part(v)) continue;
            if (v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;
            if (j < gamma.part(i) && t[i - 1][j] < v) continue;
            if (i > 1 && j > alpha.part(i - 1) && t[i - 2][j - 1] >= v) continue;
            t[i - 1][j - 1] = v;
            ++cnt[v];
            self(self, idx + 1);
            --cnt[v];
            t[i - 1][j - 1] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

inline long long count_lr_tableaux(const Partition& gamma, const Partition& alpha, const Partition& beta) {
    return static_cast<long long>(lr_tableaux(gamma, alpha, beta).size());
}

/// Every filling with values 1..len(beta), then filtered; slow on purpose.
inline long long brute_force_lr_count(const Partition& gamma, const Partition& alpha,
                                      const Partition& beta) {
    if (!detail::skew_ok(gamma, alpha) || gamma.size() != alpha.size() + beta.size()) return 0;
    const int L = gamma.length(), m = beta.length();
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= L; ++i)
        for (int j = alpha.part(i) + 1; j <= gamma.part(i); ++j) cells.push_back({i, j});
    if (cells.empty()) return 1;
    if (m == 0) return 0;
    std::map<std::pair<int, int>, int> t;
    std::vector<int> vals(cells.size(), 1);
    long long count = 0;
    while (true) {
        for (std::size_t c = 0; c < cells.size(); ++c) t[cells[c]] = vals[c];
        bool ok = true;
        std::vector<int> content(m + 1, 0);
        for (auto& [cell, v] : t) ++content[v];
        for (int v = 1; v <= m && ok; ++v) ok = content[v] == beta.part(v);
        for (auto& [cell, v] : t) {
            if (!ok) break;
            auto right = t.find({cell.first, cell.second + 1});
            auto below = t.find({cell.first + 1, cell.second});
            if (right != t.end() && right->second < v) ok = false;
            if (below != t.end() && below->second <= v) ok = false;
        }
        if (ok) {
            std::vector<int> seen(m + 2, 0);
            for (int i = 1; i <= L && ok; ++i)
                for (int j = gamma.part(i); j > alpha.part(i) && ok; --j) {
                    const int v = t[{i, j}];
                    ++seen[v];
                    if (v > 1 && seen[v] > seen[v - 1]) ok = false;
                }
        }
        count += ok;
        std::size_t p = 0;
        while (p < vals.size() && vals[p] == m) vals[p++] = 1;
        if (p == vals.size()) break;
        ++vals[p];
    }
    return count;
}

/// Tableau of shape beta: row c lists the rows of gamma/alpha holding label c.
inline Tableau companion(const SkewTableau& s) {
    Tableau t;
    for (std::size_t i = 0; i < s.rows.size(); ++i)
        for (int v : s.rows[i]) {
            if (static_cast<int>(t.rows.size()) < v) t.rows.resize(v);
            t.rows[v - 1].push_back(static_cast<int>(i) + 1);
        }
    for (auto& row : t.rows) std::sort(row.begin(), row.end());
    return t;
}

namespace detail {

inline std::vector<std::vector<int>> nonempty_subsets(int m) {
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

// Set-valued semistandard tableaux of shape lambda with entries in 1..m.
template <class F>
void for_each_set_valued_sstyt(const Partition& lambda, int m, F&& f) {
    const auto subs = nonempty_subsets(m);
    std::vector<std::vector<const std::vector<int>*>> t(lambda.length());
    for (int i = 1; i <= lambda.length(); ++i) t[i - 1].assign(lambda.part(i), nullptr);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) cells.push_back({i, j});
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            f(t);
            return;
        }
        const auto [i, j] = cells[idx];
        for (const auto& s : subs) {
            if (j > 1 && t[i - 1][j - 2]->back() > s.front()) continue;
            if (i > 1 && t[i - 2][j - 1]->back() >= s.front()) continue;
            t[i - 1][j - 1] = &s;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace detail

/**
 * Set-valued tableaux of shape beta whose entries are rows of gamma/alpha,
 * content gamma - alpha. Reading word: rows bottom to top, cells left to
 * right, each cell increasing; alpha plus the content of every suffix must be
 * a partition.
 */
inline std::vector<SetValuedTableau> set_valued_lr_tableaux(const Partition& gamma, const Partition& alpha,
                                                            const Partition& beta) {
    std::vector<SetValuedTableau> out;
    if (!detail::skew_ok(gamma, alpha) || gamma.size() < alpha.size() + beta.size()) return out;
    const int L = std::max(gamma.length(), 1);
    std::vector<int> need(L + 1, 0);
    for (int v = 1; v <= L; ++v) need[v] = gamma.part(v) - alpha.part(v);
    detail::for_each_set_valued_sstyt(beta, L, [&](const auto& t) {
        std::vector<int> cnt(L + 1, 0);
        for (const auto& row : t)
            for (auto* cell : row)
                for (int v : *cell) ++cnt[v];
        if (cnt != need) return;
        std::vector<int> word;
        for (auto r = t.rbegin(); r != t.rend(); ++r)
            for (auto* cell : *r) word.insert(word.end(), cell->begin(), cell->end());
        std::vector<int> cur(L + 1, 0);
        for (int v = 1; v <= L; ++v) cur[v] = alpha.part(v);
        for (auto w = word.rbegin(); w != word.rend(); ++w) {
            ++cur[*w];
            if (*w > 1 && cur[*w] > cur[*w - 1]) return;
        }
        SetValuedTableau s;
        for (const auto& row : t) {
            s.rows.emplace_back();
            for (auto* cell : row) s.rows.back().push_back(*cell);
        }
        out.push_back(std::move(s));
    });
    return out;
}

inline long long count_set_valued(const Partition& gamma, const Partition& alpha, const Partition& beta) {
    const long long c = static_cast<long long>(set_valued_lr_tableaux(gamma, alpha, beta).size());
    return (gamma.size() - alpha.size() - beta.size()) % 2 ? -c : c;
}

using Polynomial = std::map<std::vector<int>, long long>;  // exponent vector -> coefficient

/// Stable Grothendieck polynomial G_lambda in m variables, from set-valued tableaux.
inline Polynomial grothendieck_polynomial(const Partition& lambda, int m) {
    Polynomial p;
    if (lambda.length() > m) return p;
    detail::for_each_set_valued_sstyt(lambda, m, [&](const auto& t) {
        std::vector<int> e(m, 0);
        int sz = 0;
        for (const auto& row : t)
            for (auto* cell : row)
                for (int v : *cell) ++e[v - 1], ++sz;
        p[e] += (sz - lambda.size()) % 2 ? -1 : 1;
    });
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
    return p;
}

/**
 * Products of structure sheaves in G(k,n) by multiplying Grothendieck
 * polynomials in k variables and peeling off leading terms.
 */
inline std::map<Partition, long long> grothendieck_product(const Partition& alpha, const Partition& beta,
                                                           int k, int n) {
    std::map<Partition, long long> res;
    if (k == 0) {
        res[Partition{}] = 1;
        return res;
    }
    std::map<Partition, Polynomial> cache;
    auto G = [&](const Partition& l) -> const Polynomial& {
        auto it = cache.find(l);
        if (it == cache.end()) it = cache.emplace(l, grothendieck_polynomial(l, k)).first;
        return it->second;
    };
    Polynomial p;
    for (const auto& [ea, ca] : G(alpha))
        for (const auto& [eb, cb] : G(beta)) {
            std::vector<int> e(k);
            for (int i = 0; i < k; ++i) e[i] = ea[i] + eb[i];
            p[e] += ca * cb;
        }
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
    auto degree = [](const std::vector<int>& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    };
    while (!p.empty()) {
        const std::vector<int>* lead = nullptr;
        for (const auto& [e, c] : p)
            if (!lead || degree(e) < degree(*lead) || (degree(e) == degree(*lead) && e > *lead)) lead = &e;
        const std::vector<int> lam = *lead;
        const long long c = p[lam];
        if (!std::is_sorted(lam.rbegin(), lam.rend()))
            throw InvariantViolation("leading monomial is not a partition");
        const Partition part(lam);
        res[part] = c;
        for (const auto& [e, v] : G(part)) {
            auto& x = p[e];
            x -= c * v;
            if (x == 0) p.erase(e);
        }
    }
    std::erase_if(res, [&](const auto& kv) { return !kv.first.fits(k, n - k); });
    return res;
}

}  // namespace schubert::oracle
