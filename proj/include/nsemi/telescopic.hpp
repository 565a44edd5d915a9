#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nsemi/rational.hpp"
#include "nsemi/semigroup.hpp"

namespace nsemi {

// Telescopicity is order-sensitive: the chain d_j = gcd(a_1..a_j) and the
// membership tests a_j/d_j in <a_1/d_{j-1}, ..., a_{j-1}/d_{j-1}> are run in
// the supplied order.
struct TelescopicAnalysis {
  std::vector<Int> generators;
  std::vector<Int> d;  // d_j = gcd(a_1..a_j); d_k = 1
  bool telescopic = false;
  Int failed_index = -1;  // first j (0-based) where the test fails
  std::optional<Int> closed_form_genus;  // present iff telescopic
};

TelescopicAnalysis analyze_telescopic(const std::vector<Int>& gens);

// Closed-form genus of a telescopic chain, via the Frobenius number
// F = sum_{j>=2} (d_{j-1}/d_j - 1) a_j - a_1 and the symmetry g = (F+1)/2.
Int telescopic_genus(const std::vector<Int>& gens);

// The unique coefficients x with lambda = sum x_j a_j, x_j in
// [0, d_{j-1}/d_j) for j >= 2 (strict upper bound) and x_1 >= 0.
std::vector<Int> telescopic_representation(const std::vector<Int>& gens,
                                           Int lambda);

// Searches the permutations of `gens` for a telescopic order; k <= 8.
std::optional<std::vector<Int>> find_telescopic_order(std::vector<Int> gens);

struct TelescopicLevelReport {
  std::vector<Int> generators;
  Int m = 0;        // minimal telescopic description length found
  Int lambda1 = 0;
  Int genus = 0;
  Int lewittes = 0;
  Rational ratio;   // (q*lambda1 + 1) / genus
};

// Per-level diagnostics for a tower whose levels all carry telescopic
// Weierstrass semigroups: the bound/genus ratio collapses as the minimal
// description length grows. Levels of genus 0 are rejected.
std::vector<TelescopicLevelReport> telescopic_tower_diagnostic(
    const std::vector<std::pair<std::vector<Int>, Int>>& levels);

}  // namespace nsemi
