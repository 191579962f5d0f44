// Prints the Möbius table of R(27), the number of regular dessins with that
// automorphism group, and the probability that a random involution and a
// random element of order 3 generate it.

#include <iostream>

#include "reemobius/reemobius.hpp"

int main() {
  using namespace reemobius;
  const unsigned n = 3;
  std::cout << "|R(3^" << n << ")| = " << catalog::group_order(n) << "\n\n";
  for (const auto& inst : catalog::class_instances(n)) {
    const int mu = catalog::mobius_value(inst, n);
    if (mu == 0) continue;
    std::cout << inst.str() << "\t" << catalog::isomorphism_type(inst)
              << "\tmu = " << mu << "\tclasses of size "
              << catalog::class_size(inst, n) << "\n";
  }
  std::cout << "\nd_2 = " << inversion::d_count(TargetGroup::F2, n) << "\n";
  std::cout << "P_{2,3} = "
            << inversion::generation_probability(
                   inversion::ProbabilitySpec::parse("2,3"), n)
            << "\n";
}
