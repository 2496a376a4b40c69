#pragma once

#include <vector>

#include "board.hpp"

namespace schubert {

struct BlackMove {
    int letter = 0;  // e_i swaps the occupants of rows i and i+1
    Square descending;
    Square rising;
    std::vector<Square> critical_row;       // (i, c..n)
    std::vector<Square> critical_diagonal;  // (i+1+t, c'+t), t >= 0
};

struct SpecializationOrder {
    int n = 0;
    std::vector<int> letters;
    std::vector<BlackConfig> states;  // letters.size() + 1 entries
    std::vector<int> descending_col;  // per move: the column whose checker is descending

    std::size_t length() const noexcept { return letters.size(); }

    // True iff the move at this stage index is the last one of its pass.
    // Pivot column for the mid-sort property before move `stage`: one left of the
    // descending column, i.e. the pass number; n once the order is exhausted.
    int sorted_about(std::size_t stage) const { return stage < letters.size() ? descending_col[stage] - 1 : n; }
    bool ends_pass(std::size_t stage) const {
        return stage + 1 == letters.size() || descending_col[stage + 1] != descending_col[stage];
    }
};

/// Pass j = 1..n-1 emits e_{n-j}, ..., e_{n-1}; the checker in column j+1 descends.
inline SpecializationOrder specialization_sequence(int n) {
    if (n < 0) throw std::invalid_argument("board size must be nonnegative");
    SpecializationOrder order;
    order.n = n;
    order.states.push_back(BlackConfig::initial(n));
    for (int j = 1; j <= n - 1; ++j)
        for (int i = n - j; i <= n - 1; ++i) {
            order.letters.push_back(i);
            order.descending_col.push_back(j + 1);
            order.states.push_back(order.states.back().with_rows_exchanged(i));
        }
    return order;
}

inline BlackMove describe_move(const BlackConfig& black, int letter) {
    const int n = black.n();
    if (letter < 1 || letter >= n) throw NotInSpecializationOrder("letter out of range");
    BlackMove m;
    m.letter = letter;
    m.descending = black.in_row(letter);
    m.rising = black.in_row(letter + 1);
    if (m.rising.col >= m.descending.col)
        throw NotInSpecializationOrder("rising checker is not left of the descending checker");
    for (int c = m.descending.col; c <= n; ++c) m.critical_row.push_back({letter, c});
    for (int t = 0; letter + 1 + t <= n && m.rising.col + t <= n; ++t)
        m.critical_diagonal.push_back({letter + 1 + t, m.rising.col + t});
    return m;
}

inline BlackConfig apply_black_move(const BlackConfig& black, int letter) {
    describe_move(black, letter);
    return black.with_rows_exchanged(letter);
}

}  // namespace schubert
