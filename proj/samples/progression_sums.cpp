// Small tour of the library: a large integer power sum, a complex start
// value, and the polynomial in t behind a sum.

#include <iostream>

#include "apsum/elimination.hpp"
#include "apsum/text.hpp"
#include "apsum/triangular.hpp"

int main() {
  using namespace apsum;

  const PowerSumQuery big{GaussianRational(1), GaussianRational(1), 100, 300, false};
  const auto sum = solve_power_sums(SystemKind::L, big.p, big).back();
  std::cout << "1^300 + ... + 100^300 has " << sum.re().numerator().get_str().size()
            << " digits; matches brute force: " << std::boolalpha << (sum == oracle_L(big)) << '\n';

  const PowerSumQuery complex{parse_scalar("3/2+5/7i"), GaussianRational(1), 6, 4, false};
  std::cout << "sum of (3/2+5/7i + r)^4, r = 0..5: " << render(L_via_elimination(complex)) << '\n';

  const auto polys = solve_symbolic(3, parse_scalar("i"), GaussianRational(1));
  std::cout << "cubes starting at i, as a polynomial in t: " << render(polys[3]) << '\n';
}
