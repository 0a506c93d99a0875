// Prints the first rows of T(n,k) by both constructions, side by side.

#include "flick/triangle.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  const unsigned rows = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 10;
  const auto by_extraction = flick::triangle_rows(rows, flick::Method::extraction);
  const auto by_recurrence = flick::triangle_rows(rows, flick::Method::recurrence);

  for (unsigned n = 1; n <= rows; ++n) {
    std::cout << "n=" << n << ":";
    for (unsigned k = 1; k <= n; ++k) std::cout << (k == 1 ? " " : ", ") << by_extraction.at(n, k);
    std::cout << (by_extraction.rows[n - 1] == by_recurrence.rows[n - 1] ? "" : "   <-- methods differ")
              << "\n";
  }
  return by_extraction == by_recurrence ? 0 : 1;
}
