// Plays both games for A = B = {2,4} on a 4x4 board and prints every frame.
#include <iostream>

#include "schubert/schubert.hpp"

int main() {
    using namespace schubert;
    const SubsetK a{2, 4}, b{2, 4};
    for (const auto& g : play_all_games(a, b, 2, 4)) {
        std::cout << ascii_game(g);
        std::cout << "tableau: " << to_string(game_to_tableau(g.trace)) << "\n\n";
    }
    std::cout << to_string(multiply_schur({1}, {1}, 2, 4)) << "\n";
    std::cout << to_string(multiply_schur({1}, {1}, 2, 4, Mode::KTheory)) << "\n";
}
