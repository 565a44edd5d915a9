#pragma once

#include <cstdint>
#include <vector>

#include "nsemi/rational.hpp"

namespace nsemi {

// Global cap on the membership bit-set window. Tower levels grow
// geometrically, so construction refuses windows past this budget.
Int bit_budget();
void set_bit_budget(Int bits);

// A numerical semigroup with finitely many gaps. Immutable after
// construction; membership is materialized as a bit-set over [0, conductor]
// and everything from the conductor on is an element.
class NumericalSemigroup {
 public:
  // The full semigroup of the non-negative integers, generated by 1.
  NumericalSemigroup() : generators_{1}, member_{true} {}

  // Builds the semigroup generated by `gens`. The generating set is kept
  // exactly as supplied (not deduplicated or minimized): the set-difference
  // bound depends on the supplied description.
  static NumericalSemigroup from_generators(std::vector<Int> gens);

  // Builds directly from a membership window. `members` covers [0, conductor]
  // with members[conductor] = true and (conductor == 0 or
  // members[conductor-1] = false). `gens` may be empty when no generating
  // set is known; minimal_generators() works either way.
  static NumericalSemigroup from_membership(std::vector<bool> members,
                                            Int conductor,
                                            std::vector<Int> gens);

  const std::vector<Int>& generators() const { return generators_; }
  Int multiplicity() const { return multiplicity_; }
  Int conductor() const { return conductor_; }
  Int genus() const { return genus_; }
  // Largest gap; -1 for the full semigroup.
  Int frobenius() const { return conductor_ - 1; }

  bool contains(Int n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return member_[static_cast<std::size_t>(n)];
  }

  // All gaps in ascending order; length = genus.
  std::vector<Int> gaps() const;

  // Smallest element in each residue class mod n, indexed by residue.
  // n must be a positive element.
  std::vector<Int> apery_set(Int n) const;

  // The unique minimal generating set, in ascending order.
  std::vector<Int> minimal_generators() const;

  // All lambda in the semigroup lying in none of the shifted copies
  // shift + semigroup. Each shift must be a positive element. The result is
  // finite: everything >= min(shift) + conductor lies in min(shift) + Lambda,
  // so [0, min(shift) + conductor) is a sufficient search window.
  std::vector<Int> residual_set(const std::vector<Int>& shifts) const;
  Int count_residual(const std::vector<Int>& shifts) const;

  // Semigroups are equal iff they have the same elements.
  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.member_ == b.member_;
  }

 private:
  std::vector<Int> generators_;
  std::vector<bool> member_;  // [0, conductor_] inclusive
  Int conductor_ = 0;
  Int multiplicity_ = 1;
  Int genus_ = 0;
};

}  // namespace nsemi
