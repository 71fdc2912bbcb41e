// Prints the Cartan coboundaries on the top face and checks one concrete instance.

#include <iostream>
#include <string>
#include <vector>

#include "cartan/cartan.hpp"

int main() {
  const std::vector<std::string> names{"a", "b"};
  for (int i = 0; i <= 2; ++i) {
    std::cout << "TR(H(x" << i << ")) = " << cartan::io::format_surjections(cartan::zeta_surjections(i)) << '\n';
    std::cout << "zeta_" << i << "(a,b)(id_" << i + 3
              << ") = " << cartan::io::format_monomials(cartan::symbolic_zeta(i, i + 3), names) << "\n\n";
  }

  // Two 1-cocycles on the tetrahedron, each the coboundary of a vertex set.
  const cartan::Cochain a = cartan::delta(cartan::Cochain(3, 0, {cartan::Face{0}, cartan::Face{2}}));
  const cartan::Cochain b = cartan::delta(cartan::Cochain(3, 0, {cartan::Face{0}, cartan::Face{1}}));
  const auto w = cartan::cartan_witness(0, a, b);
  std::cout << "zeta_0 = " << cartan::io::dump(cartan::io::cochain_to_json(w.zeta)) << '\n'
            << "defect = " << cartan::io::dump(cartan::io::cochain_to_json(w.defect)) << '\n';
  return w.defect.is_zero() ? 0 : 1;
}
