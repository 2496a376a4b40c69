// Lines meeting four general lines in P^3, and a few other counts in G(2,5).
#include <iostream>

#include "schubert/schubert.hpp"

int main() {
    using namespace schubert;
    std::cout << "four lines in P^3: " << tournament({{1}, {1}, {1}, {1}}, 2, 4) << "\n";
    std::cout << "six divisors in G(2,5): " << tournament(std::vector<Partition>(6, Partition{1}), 2, 5) << "\n";
    std::cout << "(1)^4 (2) in G(2,5): " << tournament({{1}, {1}, {1}, {1}, {2}}, 2, 5) << "\n";
}
