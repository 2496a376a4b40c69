#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace schubert {

// Squares are 1-based, row 1 at the top, column 1 at the left.
struct Square {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Square&, const Square&) = default;
};

/// True iff p is weakly south-east of q.
constexpr bool dominates(Square p, Square q) noexcept {
    return p.row >= q.row && p.col >= q.col;
}

inline std::string to_string(Square s) {
    return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

/**
 * @brief n black checkers, one per row and column.
 *
 * rowOfCol[c] is the row of the checker in column c (both 1-based).
 */
class BlackConfig {
public:
    BlackConfig() = default;

    explicit BlackConfig(std::vector<int> row_of_col) : row_of_col_(std::move(row_of_col)) {
        const int n = static_cast<int>(row_of_col_.size());
        col_of_row_.assign(n, 0);
        for (int c = 1; c <= n; ++c) {
            const int r = row_of_col_[c - 1];
            if (r < 1 || r > n || col_of_row_[r - 1] != 0)
                throw std::invalid_argument("black checkers must form a permutation");
            col_of_row_[r - 1] = c;
        }
    }

    // Antidiagonal: column c holds row n+1-c.
    static BlackConfig initial(int n) {
        std::vector<int> v(n);
        for (int c = 1; c <= n; ++c) v[c - 1] = n + 1 - c;
        return BlackConfig(std::move(v));
    }

    // Diagonal: column c holds row c.
    static BlackConfig final_state(int n) {
        std::vector<int> v(n);
        for (int c = 1; c <= n; ++c) v[c - 1] = c;
        return BlackConfig(std::move(v));
    }

    int n() const noexcept { return static_cast<int>(row_of_col_.size()); }
    int row_of_col(int c) const { return row_of_col_.at(c - 1); }
    int col_of_row(int r) const { return col_of_row_.at(r - 1); }
    Square in_col(int c) const { return {row_of_col(c), c}; }
    Square in_row(int r) const { return {r, col_of_row(r)}; }
    const std::vector<int>& rows() const noexcept { return row_of_col_; }

    bool occupied(Square s) const { return row_of_col(s.col) == s.row; }

    std::vector<Square> squares() const {
        std::vector<Square> out;
        for (int c = 1; c <= n(); ++c) out.push_back(in_col(c));
        return out;
    }

    // Occupants of rows i and i+1 exchange rows.
    BlackConfig with_rows_exchanged(int i) const {
        std::vector<int> v = row_of_col_;
        std::swap(v[col_of_row(i) - 1], v[col_of_row(i + 1) - 1]);
        return BlackConfig(std::move(v));
    }

    friend bool operator==(const BlackConfig& a, const BlackConfig& b) {
        return a.row_of_col_ == b.row_of_col_;
    }
    friend auto operator<=>(const BlackConfig& a, const BlackConfig& b) {
        return a.row_of_col_ <=> b.row_of_col_;
    }

private:
    std::vector<int> row_of_col_;
    std::vector<int> col_of_row_;
};

/// Black checker weakly above in the same column and weakly left in the same row.
inline bool is_happy(Square w, const BlackConfig& black) {
    return black.row_of_col(w.col) <= w.row && black.col_of_row(w.row) <= w.col;
}

/**
 * @brief White checkers, canonically sorted by column.
 *
 * Distinct rows and columns are enforced here; happiness depends on the
 * black configuration and is checked separately.
 */
class WhiteConfig {
public:
    WhiteConfig() = default;
    WhiteConfig(std::initializer_list<Square> squares) : WhiteConfig(std::vector<Square>(squares)) {}

    explicit WhiteConfig(std::vector<Square> squares) : checkers_(std::move(squares)) {
        std::sort(checkers_.begin(), checkers_.end(),
                  [](Square a, Square b) { return a.col < b.col; });
        for (std::size_t i = 0; i < checkers_.size(); ++i)
            for (std::size_t j = i + 1; j < checkers_.size(); ++j)
                if (checkers_[i].row == checkers_[j].row || checkers_[i].col == checkers_[j].col)
                    throw InvariantViolation("white checkers share a row or column: " +
                                             to_string(checkers_[i]) + " " + to_string(checkers_[j]));
    }

    std::size_t size() const noexcept { return checkers_.size(); }
    bool empty() const noexcept { return checkers_.empty(); }
    const std::vector<Square>& checkers() const noexcept { return checkers_; }
    auto begin() const noexcept { return checkers_.begin(); }
    auto end() const noexcept { return checkers_.end(); }
    const Square& operator[](std::size_t i) const { return checkers_[i]; }

    std::optional<Square> in_row(int r) const {
        for (auto s : checkers_)
            if (s.row == r) return s;
        return std::nullopt;
    }

    std::optional<Square> in_col(int c) const {
        for (auto s : checkers_)
            if (s.col == c) return s;
        return std::nullopt;
    }

    bool occupied(Square s) const {
        return std::find(checkers_.begin(), checkers_.end(), s) != checkers_.end();
    }

    // 1-based rank of s among the checkers, ordered by row / by column.
    int row_rank(Square s) const {
        int r = 1;
        for (auto w : checkers_) r += w.row < s.row;
        return r;
    }
    int col_rank(Square s) const {
        int r = 1;
        for (auto w : checkers_) r += w.col < s.col;
        return r;
    }

    std::vector<int> sorted_rows() const {
        std::vector<int> v;
        for (auto s : checkers_) v.push_back(s.row);
        std::sort(v.begin(), v.end());
        return v;
    }

    friend bool operator==(const WhiteConfig&, const WhiteConfig&) = default;
    friend auto operator<=>(const WhiteConfig& a, const WhiteConfig& b) {
        return a.checkers_ <=> b.checkers_;
    }

private:
    std::vector<Square> checkers_;
};

inline bool all_happy(const WhiteConfig& white, const BlackConfig& black) {
    return std::all_of(white.begin(), white.end(),
                       [&](Square w) { return is_happy(w, black); });
}

inline std::string to_string(const WhiteConfig& w) {
    std::string s = "{";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
    return s + "}";
}

class SubsetK {
public:
    SubsetK() = default;
    SubsetK(std::initializer_list<int> e) : SubsetK(std::vector<int>(e)) {}

    explicit SubsetK(std::vector<int> elems) : elems_(std::move(elems)) {
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (elems_[i] < 1) throw std::invalid_argument("subset elements must be positive");
            if (i && elems_[i] <= elems_[i - 1])
                throw std::invalid_argument("subset elements must be strictly increasing");
        }
    }

    int k() const noexcept { return static_cast<int>(elems_.size()); }
    // a_i, 1-based
    int at(int i) const { return elems_.at(i - 1); }
    const std::vector<int>& elems() const noexcept { return elems_; }
    bool contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
    bool within(int n) const { return elems_.empty() || elems_.back() <= n; }

    friend bool operator==(const SubsetK&, const SubsetK&) = default;
    friend auto operator<=>(const SubsetK&, const SubsetK&) = default;

private:
    std::vector<int> elems_;
};

inline std::string to_string(const SubsetK& s) {
    std::string out = "{";
    for (int i = 1; i <= s.k(); ++i) out += (i > 1 ? "," : "") + std::to_string(s.at(i));
    return out + "}";
}

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
            if (i && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    int length() const noexcept { return static_cast<int>(parts_.size()); }
    // lambda_i, 1-based, zero past the end
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool fits(int k, int width) const {
        return length() <= k && (empty() || parts_[0] <= width);
    }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    // Complement inside the k x width rectangle.
    Partition complement(int k, int width) const {
        if (!fits(k, width)) throw OutOfRectangle("partition does not fit the rectangle");
        std::vector<int> v(k);
        for (int i = 1; i <= k; ++i) v[i - 1] = width - part(k + 1 - i);
        return Partition(std::move(v));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
    std::string s;
    for (int i = 1; i <= p.length(); ++i) s += (i > 1 ? "," : "") + std::to_string(p.part(i));
    return s;
}

// Display order: by size, then lexicographically decreasing, e.g. (2) before (1,1).
struct DisplayOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return b < a;
    }
};

/// All partitions in the k x width rectangle, in display order.
inline std::vector<Partition> partitions_in_rect(int k, int width) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i, int mx) -> void {
        if (i == k) {
            out.emplace_back(cur);
            return;
        }
        for (int p = mx; p >= 0; --p) {
            cur.push_back(p);
            self(self, i + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, width);
    std::sort(out.begin(), out.end(), DisplayOrder{});
    return out;
}

inline std::vector<SubsetK> subsets_of_size(int k, int n) {
    std::vector<SubsetK> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.emplace_back(cur);
            return;
        }
        for (int x = next; x <= n - (k - static_cast<int>(cur.size())) + 1; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// lambda_i = (n-k) + i - s_i.
inline Partition subset_to_partition(const SubsetK& s, int k, int n) {
    if (s.k() != k || !s.within(n)) throw OutOfRectangle("subset " + to_string(s) + " is not a " +
                                                         std::to_string(k) + "-subset of 1.." +
                                                         std::to_string(n));
    std::vector<int> v(k);
    for (int i = 1; i <= k; ++i) v[i - 1] = (n - k) + i - s.at(i);
    return Partition(std::move(v));
}

inline SubsetK partition_to_subset(const Partition& lambda, int k, int n) {
    if (k < 0 || k > n || !lambda.fits(k, n - k))
        throw OutOfRectangle("partition (" + to_string(lambda) + ") does not fit in " +
                             std::to_string(k) + "x" + std::to_string(n - k));
    std::vector<int> v(k);
    for (int i = 1; i <= k; ++i) v[i - 1] = (n - k) + i - lambda.part(i);
    return SubsetK(std::move(v));
}

/// Whites at (a_1,b_k), (a_2,b_{k-1}), ...; nullopt when one is unhappy for the initial black board.
inline std::optional<WhiteConfig> initial_white(const SubsetK& a, const SubsetK& b, int n) {
    const int k = a.k();
    if (b.k() != k) throw std::invalid_argument("subsets must have equal size");
    if (!a.within(n) || !b.within(n)) throw OutOfRectangle("subset exceeds board size");
    std::vector<Square> w;
    for (int i = 1; i <= k; ++i) {
        if (a.at(i) + b.at(k + 1 - i) <= n) return std::nullopt;
        w.push_back({a.at(i), b.at(k + 1 - i)});
    }
    return WhiteConfig(std::move(w));
}

/// Rows increase over columns <= c and decrease over columns >= c.
inline bool is_mid_sort(const WhiteConfig& white, int descending_col) {
    for (std::size_t i = 0; i + 1 < white.size(); ++i) {
        const Square a = white[i], b = white[i + 1];
        if (b.col <= descending_col && a.row >= b.row) return false;
        if (a.col >= descending_col && a.row <= b.row) return false;
    }
    return true;
}

/// One-line notation of pi with pi(n+1-c) = rowOfCol[c].
inline std::vector<int> black_to_permutation(const BlackConfig& black) {
    const int n = black.n();
    std::vector<int> pi(n);
    for (int c = 1; c <= n; ++c) pi[n - c] = black.row_of_col(c);
    return pi;
}

inline std::string permutation_string(const BlackConfig& black) {
    std::string s;
    for (int v : black_to_permutation(black)) s += (black.n() > 9 && !s.empty() ? " " : "") + std::to_string(v);
    return s;
}

class RankTable {
public:
    explicit RankTable(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
    int n() const noexcept { return n_; }
    int operator()(int i, int j) const { return data_[(i - 1) * n_ + (j - 1)]; }
    int& operator()(int i, int j) { return data_[(i - 1) * n_ + (j - 1)]; }

private:
    int n_;
    std::vector<int> data_;
};

/// Entry (i,j) counts black checkers dominated by square (i,j).
inline RankTable rank_table(const BlackConfig& black) {
    const int n = black.n();
    RankTable t(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = 0;
            for (int c = 1; c <= j; ++c) v += black.row_of_col(c) <= i;
            t(i, j) = v;
        }
    return t;
}

inline int black_codim(const BlackConfig& black) {
    const auto sq = black.squares();
    int count = 0;
    for (auto a : sq)
        for (auto b : sq)
            if (a != b && dominates(a, b)) ++count;
    return count;
}

}  // namespace schubert
