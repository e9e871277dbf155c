#pragma once

#include <random>
#include <string>

#include "affschur/scalar.hpp"

namespace testing {

inline const affschur::Param& gen() {
  static const affschur::Param p = affschur::Param::generic();
  return p;
}

inline affschur::FieldElem fe(const std::string& text) { return affschur::parse_field_elem(text, gen()); }

inline affschur::FieldElem vp(int k) { return gen().v_pow(k); }

// Random element of Q(v): a ratio of small integer Laurent polynomials.
inline affschur::FieldElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3), shift(-2, 2);
  auto poly = [&](bool nonzero) {
    affschur::FieldElem p;
    do {
      p = affschur::FieldElem();
      int d = deg(rng);
      for (int k = 0; k <= d; ++k) p += affschur::FieldElem(coef(rng)) * vp(k);
    } while (nonzero && p.is_zero());
    return p * vp(shift(rng));
  };
  return poly(false) / poly(true);
}

}  // namespace testing
