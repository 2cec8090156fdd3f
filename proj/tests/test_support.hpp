#pragma once

#include <random>
#include <vector>

#include "csg/cyclofield.hpp"

namespace csg::testing {

inline Rational random_rational(std::mt19937_64& rng, int bound = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline CycloElement random_element(std::mt19937_64& rng, int order, int bound = 9, int max_den = 5) {
  std::vector<Rational> coeffs(euler_phi(order));
  for (auto& c : coeffs) c = random_rational(rng, bound, max_den);
  return CycloElement(order, coeffs);
}

/// Gaussian rational a + b i in Q(zeta_4).
inline CycloElement gaussian(const Rational& a, const Rational& b) {
  return CycloElement(a) + CycloElement(b) * CycloElement::imaginary_unit();
}

inline CycloElement random_gaussian(std::mt19937_64& rng, int bound = 9, int max_den = 4) {
  return gaussian(random_rational(rng, bound, max_den), random_rational(rng, bound, max_den));
}

inline const CycloElement& I() {
  static const CycloElement i = CycloElement::imaginary_unit();
  return i;
}

}  // namespace csg::testing
