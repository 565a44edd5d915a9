#pragma once

#include <optional>
#include <vector>

#include "nsemi/rational.hpp"
#include "nsemi/semigroup.hpp"

namespace nsemi {

// Pole-number semigroups at infinity along the recursive tower over the
// field of q^2 elements: level 1 is all of N_0, and
// Lambda(i+1) = q * Lambda(i) union [c(i+1), infinity).

// Conductor threshold: q^i - q^{i/2} for even i, q^i - q^{(i+1)/2} for odd.
Int gs_c(Int q, Int i);

// Closed-form genus: (q^{i/2} - 1)^2 for even i,
// (q^{(i+1)/2} - 1)(q^{(i-1)/2} - 1) for odd.
Int gs_genus(Int q, Int i);

// Level-i semigroup, materialized by the recursion on membership bit-sets.
// Bounded by the global bit budget. No generating set is attached; call
// minimal_generators() if one is needed.
NumericalSemigroup gs_semigroup(Int q, Int i);

struct TowerLevel {
  Int q = 0;
  Int i = 0;
  Int c = 0;
  NumericalSemigroup semigroup;
  Int genus_formula = 0;
  Int lambda1 = 0;
  std::optional<Int> lambda2;             // second smallest nonzero element
  std::optional<Rational> ratio;          // lambda1 / genus; absent at genus 0
  bool coincidence_condition = false;     // q^2*l1 + 2g <= q^2*l2
};

TowerLevel gs_level_report(Int q, Int i);

struct TowerAsymptotics {
  Int q = 0;
  Rational corollary_floor;       // (q-1)/q^2, the liminf guarantee
  Rational limit;                 // 1/q
  std::vector<TowerLevel> levels; // i = 1 .. i_max
};

// Ratio table lambda1/g per level, checked against the corollary floor.
TowerAsymptotics tower_asymptotics(Int q, Int i_max);

}  // namespace nsemi
