#pragma once

#include <optional>
#include <vector>

#include "nsemi/semigroup.hpp"

namespace nsemi {

// A node of the genus tree. Children are obtained by removing one minimal
// generator greater than the Frobenius number; every semigroup of genus g+1
// arises exactly once this way.
struct GenusTreeNode {
  NumericalSemigroup semigroup;
  Int frobenius = -1;
  std::vector<Int> removable;  // minimal generators > frobenius
};

GenusTreeNode make_genus_tree_node(const NumericalSemigroup& s);
std::vector<NumericalSemigroup> genus_tree_children(const GenusTreeNode& node);

// Streams every numerical semigroup of genus exactly `genus`, each yielded
// with its minimal generating set, in the canonical order: lexicographic by
// ascending gap set. Memory is bounded by the tree depth, not the output.
class GenusStream {
 public:
  explicit GenusStream(Int genus, Int cap = kDefaultGenusCap);
  std::optional<NumericalSemigroup> next();

  static constexpr Int kDefaultGenusCap = 25;

 private:
  struct Frame {
    std::vector<bool> member;  // window [0, 2*target+1]
    Int genus;
    Int frobenius;
    std::vector<Int> removable;
    std::size_t next_child = 0;
  };
  Int target_;
  std::vector<Frame> stack_;
  NumericalSemigroup materialize(const Frame& f) const;
};

// Convenience: the whole stream, materialized.
std::vector<NumericalSemigroup> semigroups_of_genus(
    Int genus, Int cap = GenusStream::kDefaultGenusCap);

// Independent oracle: tests every candidate gap set G in [1, 2g-1] of size g
// for the semigroup property of its complement. Same canonical order as the
// tree. Guarded at g <= 12.
std::vector<NumericalSemigroup> brute_force_census(Int genus);

enum class BoundMethod { lewittes, geil_matsumoto };

// All genus-g semigroups whose bound (computed on the minimal generating
// set) is strictly below n_target.
std::vector<NumericalSemigroup> excluded_semigroups(Int genus, Int q,
                                                    Int n_target,
                                                    BoundMethod method);

}  // namespace nsemi
