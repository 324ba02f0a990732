#pragma once

// Seeded random generators shared by the property suites and the acceptance
// runner.

#include "linkinv/freeword.hpp"

#include <random>

namespace linkinv::testgen {

using Rng = std::mt19937_64;

inline FreeWord random_word(Rng& rng, int num_gens, int len) {
  std::uniform_int_distribution<int> g(0, num_gens - 1);
  std::uniform_int_distribution<int> e(0, 1);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) ls.push_back({g(rng), e(rng) ? 1 : -1});
  return FreeWord(std::move(ls));
}

inline FreeWord random_reduced_nontrivial(Rng& rng, int num_gens, int max_len) {
  for (;;) {
    std::uniform_int_distribution<int> l(1, max_len);
    FreeWord w = random_word(rng, num_gens, l(rng)).reduced();
    if (!w.empty()) return w;
  }
}

}  // namespace linkinv::testgen
