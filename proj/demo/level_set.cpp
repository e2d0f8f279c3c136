#include "g25/moduli/levelset.hpp"

#include <fstream>
#include <iostream>

using namespace g25;

// Writes gnuplot tables for the g = 1 level set and two other levels.
int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : ".";
  for (const auto& [name, g] : {std::pair{"g1", Rational(1)}, std::pair{"g2", Rational(2)}, std::pair{"g3", Rational(3)}}) {
    const auto samples = scan(g, make_rational(1, 4), Rational(4), 60);
    std::ofstream f(dir + "/levelset_" + name + ".dat");
    write_dat(f, samples);
    int two = 0;
    for (const auto& s : samples) two += s.count == 2;
    std::cout << name << ": " << samples.size() << " feasible samples, " << two << " with two curves\n";
  }
  std::cout << "\nclosed-form branches over [1, 11/6]:\n";
  for (int k = 0; k <= 5; ++k) {
    const Rational s = Rational(1) + make_rational(k, 6);
    const auto b = level_set_s1(s);
    std::cout << "  s = " << s.str() << "  F1 = " << b.F1.str(12) << "  F2 = " << b.F2.str(12) << '\n';
  }
}
