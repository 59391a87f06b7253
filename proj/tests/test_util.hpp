#pragma once

#include <random>

#include "thompson/words.hpp"

namespace thompson::testutil {

inline GroupWord random_word(std::mt19937_64& rng, int maxLen, std::uint32_t maxIndex) {
  std::uniform_int_distribution<int> lenDist(0, maxLen);
  std::uniform_int_distribution<std::uint32_t> idxDist(0, maxIndex);
  std::uniform_int_distribution<int> signDist(0, 1);
  GroupWord w;
  int len = lenDist(rng);
  for (int i = 0; i < len; ++i)
    w.push_back({idxDist(rng), signDist(rng) ? 1 : -1});
  return w;
}

// Word over {x0^±1, x1^±1} with zero exponent sum for both generators.
inline GroupWord random_balanced_word(std::mt19937_64& rng, int maxPairs) {
  std::uniform_int_distribution<int> pairDist(0, maxPairs);
  GroupWord w;
  int p0 = pairDist(rng), p1 = pairDist(rng);
  for (int i = 0; i < p0; ++i) {
    w.push_back(x(0));
    w.push_back(x(0, -1));
  }
  for (int i = 0; i < p1; ++i) {
    w.push_back(x(1));
    w.push_back(x(1, -1));
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

}  // namespace thompson::testutil
