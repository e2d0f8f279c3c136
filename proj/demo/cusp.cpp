#include "g25/paperlab/cusp.hpp"
#include "g25/paperlab/example5.hpp"

#include <iostream>

using namespace g25;

int main() {
  for (const auto& p : cusp_points()) {
    const auto mp = derive_data(p.t0, p.t1, p.t6);
    std::cout << "g = " << p.g.str(14) << "  t0 = " << p.t0.str(12) << "  t1 = " << p.t1.str(12) << "  t6 = " << p.t6.str(12)
              << "  XYZ = (" << mp.X.str(10) << ", " << mp.Y.str(10) << ", " << mp.Z.str(10) << ")\n";
  }
  std::cout << "\nplane curve checks:\n";
  for (const auto& c : example5_suite())
    std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.name << "  " << c.computed << '\n';
  std::cout << "\nrounding bound at h = 1e-20: " << error_bound(4, 6, 3, 5, 1e-20, 0.1475, 8.0 / 15) << '\n';
}
