// Q(X) for the B3 arrangement with X = all triple and quadruple points.

#include <iostream>

#include "mnet/mnet.hpp"

int main() {
  const auto arr = mnet::corpus::monomial(2);
  const auto lat = mnet::build_lattice(arr);
  const auto dec = mnet::cartan_decompose(lat, mnet::multiple_points(lat));
  std::cout << "Q =\n" << dec.Q;
  for (const auto& b : dec.blocks) {
    std::cout << "block:";
    for (std::size_t l : b.lines) std::cout << " " << arr.labels()[l];
    std::cout << "  " << mnet::to_string(b.classification.type);
    if (!b.classification.kernel.empty()) {
      std::cout << "  u =";
      for (const auto& x : b.classification.kernel) std::cout << " " << x;
    }
    std::cout << "\n";
  }
  if (auto out = mnet::multinet_from_base(lat, mnet::multiple_points(lat));
      auto* mn = std::get_if<mnet::Multinet>(&out)) {
    std::cout << "multiplicities:";
    for (long m : mn->multiplicity) std::cout << " " << m;
    std::cout << "\n";
  }
}
