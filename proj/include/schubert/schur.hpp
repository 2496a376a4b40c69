#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "board.hpp"
#include "game.hpp"

namespace schubert {

struct SchurExpansion {
    bool stable = false;
    int k = 0;
    int n = 0;
    Mode mode = Mode::Cohomology;
    std::map<Partition, long long, DisplayOrder> terms;

    long long coefficient(const Partition& p) const {
        auto it = terms.find(p);
        return it == terms.end() ? 0 : it->second;
    }
};

inline SchurExpansion relabel(const Expansion& e, Mode mode) {
    SchurExpansion s;
    s.k = e.k;
    s.n = e.n;
    s.mode = mode;
    for (const auto& [sub, c] : e.terms) s.terms[subset_to_partition(sub, e.k, e.n)] = c;
    return s;
}

inline SchurExpansion multiply_schur(const Partition& alpha, const Partition& beta, int k, int n,
                                     Mode mode = Mode::Cohomology) {
    PlayOptions opt;
    opt.mode = mode;
    return relabel(game_expansion(partition_to_subset(alpha, k, n), partition_to_subset(beta, k, n), k, n, opt),
                   mode);
}

// Smallest rectangle holding every term: k = len(alpha)+len(beta), width = alpha_1+beta_1.
inline SchurExpansion multiply_schur_stable(const Partition& alpha, const Partition& beta) {
    const int k = alpha.length() + beta.length();
    const int n = k + alpha.part(1) + beta.part(1);
    auto s = multiply_schur(alpha, beta, k, n);
    s.stable = true;
    return s;
}

inline std::vector<Partition> horizontal_strips(const Partition& alpha, int p, int k, int width) {
    std::vector<Partition> out;
    for (const auto& g : partitions_in_rect(k, width)) {
        if (g.size() != alpha.size() + p || !g.contains(alpha)) continue;
        bool strip = true;
        for (int i = 2; i <= g.length(); ++i) strip = strip && g.part(i) <= alpha.part(i - 1);
        if (strip) out.push_back(g);
    }
    return out;
}

inline bool pieri_check(const Partition& alpha, int p, int k, int n) {
    const auto e = multiply_schur(alpha, Partition{p}, k, n);
    const auto expect = horizontal_strips(alpha, p, k, n - k);
    if (e.terms.size() != expect.size()) return false;
    for (const auto& g : expect)
        if (e.coefficient(g) != 1) return false;
    return true;
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> v;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("empty entry in list '" + std::string(text) + "'");
        std::size_t used = 0;
        const int x = std::stoi(cur, &used);
        if (used != cur.size()) throw std::invalid_argument("bad integer '" + cur + "'");
        v.push_back(x);
        cur.clear();
    };
    bool any = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        any = true;
        if (ch == ',') flush();
        else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') cur += ch;
        else throw std::invalid_argument("unexpected character in list '" + std::string(text) + "'");
    }
    if (any) flush();
    return v;
}

}  // namespace detail

/// "3,2,1"; "0" and "" denote the empty partition.
inline Partition parse_partition(std::string_view text) {
    auto v = detail::parse_int_list(text);
    if (v == std::vector<int>{0}) v.clear();
    return Partition(std::move(v));
}

inline SubsetK parse_subset(std::string_view text) { return SubsetK(detail::parse_int_list(text)); }

// "s(2) + s(1,1)"; K-theory classes print as O(...). The empty partition prints as s().
inline std::string to_string(const SchurExpansion& e) {
    const char* sym = e.mode == Mode::KTheory ? "O" : "s";
    std::string out;
    for (const auto& [p, c] : e.terms) {
        const long long mag = c < 0 ? -c : c;
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        if (mag != 1) out += std::to_string(mag) + " ";
        out += std::string(sym) + "(" + to_string(p) + ")";
    }
    return out.empty() ? "0" : out;
}

}  // namespace schubert
