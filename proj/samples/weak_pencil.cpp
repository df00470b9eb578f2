// A weak multinet on the Hessian arrangement built by merging two classes,
// refined back to the (4,3)-net, and the pencil test on both.

#include <iostream>

#include "mnet/mnet.hpp"

int main() {
  const auto arr = mnet::corpus::hessian();
  const auto lat = mnet::build_lattice(arr);
  const auto found = mnet::discover(lat);
  const auto& net = found.at(0).multinet;

  // Classes C0 + C1 (multiplicity 1), C2 and C3 (multiplicity 2): a weak (3,6)-multinet.
  std::vector<std::vector<std::size_t>> classes(3);
  std::vector<long> mult(arr.size(), 1);
  for (std::size_t l : net.classes[0]) classes[0].push_back(l);
  for (std::size_t l : net.classes[1]) classes[0].push_back(l);
  for (std::size_t c = 2; c < 4; ++c)
    for (std::size_t l : net.classes[c]) {
      classes[c - 1].push_back(l);
      mult[l] = 2;
    }
  const auto weak = mnet::make_weak(lat, classes, mult);
  const auto rep = mnet::verify(weak, lat);
  std::cout << "weak axioms: " << (rep.weak_ok() ? "pass" : "fail") << ", multinet axioms: " << (rep.ok() ? "pass" : "fail")
            << "\n";
  std::vector<mnet::CurveVec> fibers;
  for (const auto& c : weak.classes) fibers.push_back(mnet::expand_class(arr, c, weak.multiplicity));
  std::cout << "weak fibers collinear: " << (mnet::collinear(fibers).collinear ? "yes" : "no") << "\n";

  const auto refined = mnet::refine_weak(weak, lat);
  std::cout << "refined to a (" << refined.k() << "," << refined.degree << ")-multinet\n";
  std::cout << mnet::ceva_verdict(refined, arr, lat).verdict << "\n";
}
