// Sum of M-th powers up to N through the flickering basis, checked against
// direct summation when N is small enough.
//
//   demo_power_sum_report [M] [N]

#include "flick/powersum.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  const unsigned m = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 10;
  const flick::BigInt n = argc > 2 ? flick::parse_bigint(argv[2]) : flick::BigInt(100);

  const auto result = flick::power_sum(m, n);
  std::cout << "Sum of " << m << "-th powers up to " << n << ":\n" << result.value << "\n";

  if (n <= 1000) {
    const bool ok = flick::power_sum_naive(m, n) == result.value;
    std::cout << "\nVerification: " << (ok ? "OK" : "ERROR") << "\n";
    return ok ? 0 : 1;
  }
  return 0;
}
