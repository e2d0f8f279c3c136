#include "g25/moduli/solve.hpp"

#include <iostream>

using namespace g25;

int main() {
  const auto cc = construct_curve(Rational(1), Rational(1), Rational(1), 0, true);
  std::cout << "pencil rows over Q(sqrt2, sqrt3, sqrt5, i):\n";
  for (int r = 0; r < 2; ++r) {
    std::cout << "  row " << r << ":";
    for (int j = 0; j < 5; ++j) std::cout << "  [" << cc.exact_pencil->rows[r][j].str("z") << "]";
    std::cout << '\n';
  }
  const auto g = gram_and_defect(*cc.exact_curve);
  std::cout << "gram diagonal:";
  for (int k = 0; k < 7; ++k) std::cout << ' ' << g.gram(k, k).str();
  std::cout << "\nreducible: " << std::boolalpha << cc.certificate.reducible << '\n'
            << "W numeric: " << *cc.certificate.w_numeric << "  closed: " << *cc.certificate.w_closed << '\n';

  const auto rmk = construct_curve(Rational(1), make_rational(1, 16), make_rational(1, 4096), 0, true);
  std::cout << "\nsecond diagonal point (1, 1/16, 1/4096): W numeric " << *rmk.certificate.w_numeric << "  closed "
            << *rmk.certificate.w_closed << '\n';
}
