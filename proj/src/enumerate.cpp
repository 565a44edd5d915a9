#include "nsemi/enumerate.hpp"

#include <algorithm>

#include "nsemi/bounds.hpp"
#include "nsemi/errors.hpp"

namespace nsemi {

namespace {

// Minimal generators of a window-backed membership vector that lie in
// (frobenius, limit]. `member` must cover [0, limit].
std::vector<Int> removable_generators(const std::vector<bool>& member,
                                      Int frobenius, Int limit) {
  Int mult = 0;
  for (Int n = 1; n < static_cast<Int>(member.size()); ++n) {
    if (member[static_cast<std::size_t>(n)]) {
      mult = n;
      break;
    }
  }
  std::vector<Int> out;
  for (Int lam = std::max<Int>(frobenius + 1, 1); lam <= limit; ++lam) {
    if (!member[static_cast<std::size_t>(lam)]) continue;
    bool reducible = false;
    for (Int a = mult; a + a <= lam; ++a) {
      if (member[static_cast<std::size_t>(a)] &&
          member[static_cast<std::size_t>(lam - a)]) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(lam);
  }
  return out;
}

NumericalSemigroup from_window(const std::vector<bool>& member, Int conductor) {
  std::vector<bool> slice(member.begin(),
                          member.begin() + static_cast<long>(conductor) + 1);
  slice[static_cast<std::size_t>(conductor)] = true;
  auto bare = NumericalSemigroup::from_membership(slice, conductor, {});
  auto gens = bare.minimal_generators();
  return NumericalSemigroup::from_membership(std::move(slice), conductor,
                                             std::move(gens));
}

}  // namespace

GenusTreeNode make_genus_tree_node(const NumericalSemigroup& s) {
  GenusTreeNode node{s, s.frobenius(), {}};
  for (Int g : s.minimal_generators())
    if (g > node.frobenius) node.removable.push_back(g);
  return node;
}

std::vector<NumericalSemigroup> genus_tree_children(const GenusTreeNode& node) {
  std::vector<NumericalSemigroup> out;
  for (Int lam : node.removable) {
    const Int c = lam + 1;
    std::vector<bool> member(static_cast<std::size_t>(c) + 1, false);
    for (Int n = 0; n <= c; ++n)
      member[static_cast<std::size_t>(n)] = node.semigroup.contains(n);
    member[static_cast<std::size_t>(lam)] = false;
    out.push_back(from_window(member, c));
  }
  return out;
}

GenusStream::GenusStream(Int genus, Int cap) : target_(genus) {
  if (genus < 0 || genus > cap) throw GenusCapExceededError(genus, cap);
  Frame root;
  root.member.assign(static_cast<std::size_t>(2 * genus + 2), true);
  root.genus = 0;
  root.frobenius = -1;
  if (target_ > 0)
    root.removable = removable_generators(root.member, root.frobenius,
                                          2 * (root.genus + 1) - 1);
  stack_.push_back(std::move(root));
}

NumericalSemigroup GenusStream::materialize(const Frame& f) const {
  return from_window(f.member, f.frobenius + 1);
}

std::optional<NumericalSemigroup> GenusStream::next() {
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    if (f.genus == target_) {
      NumericalSemigroup s = materialize(f);
      stack_.pop_back();
      return s;
    }
    if (f.next_child >= f.removable.size()) {
      stack_.pop_back();
      continue;
    }
    const Int lam = f.removable[f.next_child++];
    Frame child;
    child.member = f.member;
    child.member[static_cast<std::size_t>(lam)] = false;
    child.genus = f.genus + 1;
    child.frobenius = lam;
    if (child.genus < target_)
      child.removable = removable_generators(child.member, child.frobenius,
                                             2 * (child.genus + 1) - 1);
    stack_.push_back(std::move(child));
  }
  return std::nullopt;
}

std::vector<NumericalSemigroup> semigroups_of_genus(Int genus, Int cap) {
  GenusStream stream(genus, cap);
  std::vector<NumericalSemigroup> out;
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

std::vector<NumericalSemigroup> brute_force_census(Int genus) {
  if (genus < 0 || genus > 12) throw OracleCapExceededError(genus);
  std::vector<NumericalSemigroup> out;
  if (genus == 0) {
    out.push_back(NumericalSemigroup::from_generators({1}));
    return out;
  }
  // Candidate gap sets: size-genus subsets of [1, 2*genus - 1], visited in
  // lexicographic order. The Frobenius number never exceeds 2g - 1.
  const Int top = 2 * genus - 1;
  std::vector<Int> pick(static_cast<std::size_t>(genus));
  for (Int i = 0; i < genus; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  std::vector<bool> gap(static_cast<std::size_t>(top) + 1, false);
  for (;;) {
    std::fill(gap.begin(), gap.end(), false);
    for (Int x : pick) gap[static_cast<std::size_t>(x)] = true;
    const Int maxgap = pick.back();
    auto member = [&](Int n) {
      return n == 0 || (n <= top && !gap[static_cast<std::size_t>(n)]) ||
             n > top;
    };
    bool closed = true;
    for (Int a = 1; a < maxgap && closed; ++a) {
      if (!member(a)) continue;
      for (Int b = a; a + b <= maxgap; ++b) {
        if (member(b) && gap[static_cast<std::size_t>(a + b)]) {
          closed = false;
          break;
        }
      }
    }
    if (closed) {
      const Int c = maxgap + 1;
      std::vector<bool> window(static_cast<std::size_t>(c) + 1, true);
      for (Int x : pick)
        if (x < c) window[static_cast<std::size_t>(x)] = false;
      out.push_back(from_window(window, c));
    }
    // next lexicographic combination
    Int i = genus - 1;
    while (i >= 0 &&
           pick[static_cast<std::size_t>(i)] == top - (genus - 1 - i))
      --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (Int j = i + 1; j < genus; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(i)] + (j - i);
  }
  return out;
}

std::vector<NumericalSemigroup> excluded_semigroups(Int genus, Int q,
                                                    Int n_target,
                                                    BoundMethod method) {
  std::vector<NumericalSemigroup> out;
  GenusStream stream(genus);
  while (auto s = stream.next()) {
    const Int bound = method == BoundMethod::lewittes
                          ? lewittes_bound(*s, q)
                          : geil_matsumoto_bound(*s, q);
    if (bound < n_target) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace nsemi
