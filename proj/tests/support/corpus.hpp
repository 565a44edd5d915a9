#pragma once

// Seeded random corpora for property tests. Deterministic across runs.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "nsemi/rational.hpp"

namespace corpus {

using nsemi::Int;

// Random coprime generating sets with entries <= 30, suitable for the slow
// oracle (genus stays modest).
inline std::vector<std::vector<Int>> random_semigroups(std::size_t count,
                                                       unsigned seed = 20260823) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Int> size_d(1, 5);
  std::uniform_int_distribution<Int> gen_d(2, 30);
  std::vector<std::vector<Int>> out;
  while (out.size() < count) {
    std::vector<Int> gens;
    Int k = size_d(rng);
    for (Int j = 0; j < k; ++j) gens.push_back(gen_d(rng));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Int g = 0;
    for (Int a : gens) g = std::gcd(g, a);
    if (g != 1) continue;
    out.push_back(std::move(gens));
  }
  return out;
}

// Random telescopic chains. Construction: fix ratios r_2..r_k in {2,3,4},
// a_1 = prod(ratios), intended d_j = a_1 / (r_2 ... r_j). Each new a_j is
// d_j times a positive combination of the scaled previous generators, so the
// defining membership condition holds whenever the gcd chain really descends
// by r_j at step j; chains where an accidental common factor breaks that are
// detected with std::gcd alone and rejected (no library code involved).
inline std::vector<std::vector<Int>> random_telescopic(std::size_t count,
                                                       unsigned seed = 99) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> ratio_d(2, 4);
  std::uniform_int_distribution<int> len_d(2, 5);
  std::uniform_int_distribution<Int> mult_d(0, 3);
  std::vector<std::vector<Int>> out;
  while (out.size() < count) {
    int k = len_d(rng);
    std::vector<Int> ratios(k - 1);
    for (auto& r : ratios) r = ratio_d(rng);
    Int a1 = 1;
    for (Int r : ratios) a1 *= r;

    std::vector<Int> gens{a1};
    Int d_prev = a1;
    bool ok = true;
    for (Int r : ratios) {
      Int d = d_prev / r;
      // positive combination of a_t / d_prev, hence a member of the quotient
      Int member = gens[0] / d_prev;
      for (Int a : gens) member += mult_d(rng) * (a / d_prev);
      Int a_next = d * member;
      if (std::gcd(d_prev, a_next) != d) {  // chain must descend by exactly r
        ok = false;
        break;
      }
      gens.push_back(a_next);
      d_prev = d;
    }
    if (!ok || d_prev != 1) continue;
    auto sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      continue;
    if (sorted.back() > 4000) continue;
    out.push_back(std::move(gens));
  }
  return out;
}

}  // namespace corpus
