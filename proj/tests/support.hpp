#pragma once

#include <random>

#include "blowade/polynomial.hpp"

namespace blowade::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 4);
  Rational q;
  do {
    q = Rational(num(rng), den(rng));
  } while (q == 0);
  q.canonicalize();
  return q;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, int max_terms,
                                    int min_degree = 1) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> count(1, max_terms);
  Polynomial p;
  const int n = count(rng);
  while (static_cast<int>(p.size()) < n) {
    Exponent e{deg(rng), deg(rng), deg(rng)};
    const int t = total_degree(e);
    if (t < min_degree || t > max_degree) continue;
    p.add_term(e, random_rational(rng));
  }
  return p;
}

}  // namespace blowade::testing
