#include "nsemi/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "nsemi/errors.hpp"

namespace nsemi {

namespace {
std::atomic<Int> g_bit_budget{Int{1} << 28};
}

Int bit_budget() { return g_bit_budget.load(); }
void set_bit_budget(Int bits) { g_bit_budget.store(bits); }

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens) {
  if (gens.empty()) throw EmptyGeneratorsError();
  for (Int a : gens)
    if (a < 1) throw ZeroGeneratorError();
  Int g = 0;
  for (Int a : gens) g = std::gcd(g, a);
  if (g != 1) throw NonCoprimeGeneratorsError(g);

  const Int mult = *std::min_element(gens.begin(), gens.end());
  const Int maxgen = *std::max_element(gens.begin(), gens.end());

  // Closure by dynamic programming: n is an element iff n = 0 or some
  // generator a <= n has n - a an element. The window doubles until the top
  // `mult` positions are all elements; from there the tail is closed under
  // adding the multiplicity, so no gap lies beyond.
  Int window = 2 * maxgen + 2;
  std::vector<bool> mem;
  for (;;) {
    if (window > bit_budget()) throw MemoryGuardError(window, bit_budget());
    Int start = static_cast<Int>(mem.size());
    if (start == 0) {
      mem.assign(static_cast<std::size_t>(window), false);
      mem[0] = true;
      start = 1;
    } else {
      mem.resize(static_cast<std::size_t>(window), false);
    }
    for (Int n = start; n < window; ++n) {
      for (Int a : gens) {
        if (a <= n && mem[static_cast<std::size_t>(n - a)]) {
          mem[static_cast<std::size_t>(n)] = true;
          break;
        }
      }
    }
    bool tail_full = true;
    for (Int n = window - mult; n < window; ++n)
      if (!mem[static_cast<std::size_t>(n)]) tail_full = false;
    if (tail_full) break;
    window = checked_mul(window, 2);
  }

  Int conductor = 0;
  for (Int n = window - 1; n >= 0; --n) {
    if (!mem[static_cast<std::size_t>(n)]) {
      conductor = n + 1;
      break;
    }
  }
  mem.resize(static_cast<std::size_t>(conductor) + 1);
  mem[static_cast<std::size_t>(conductor)] = true;
  return from_membership(std::move(mem), conductor, std::move(gens));
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<bool> members,
                                                       Int conductor,
                                                       std::vector<Int> gens) {
  // Normalize: the stored conductor is minimal.
  while (conductor > 0 && members[static_cast<std::size_t>(conductor - 1)]) {
    --conductor;
    members.resize(static_cast<std::size_t>(conductor) + 1);
  }
  NumericalSemigroup s;
  s.generators_ = std::move(gens);
  s.member_ = std::move(members);
  s.conductor_ = conductor;
  s.genus_ = 0;
  for (Int n = 0; n < conductor; ++n)
    if (!s.member_[static_cast<std::size_t>(n)]) ++s.genus_;
  s.multiplicity_ = conductor == 0 ? 1 : 0;
  for (Int n = 1; n <= conductor && s.multiplicity_ == 0; ++n)
    if (s.contains(n)) s.multiplicity_ = n;
  if (s.multiplicity_ == 0) s.multiplicity_ = conductor;  // unreachable
  return s;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (Int n = 1; n < conductor_; ++n)
    if (!member_[static_cast<std::size_t>(n)]) out.push_back(n);
  return out;
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
  if (n <= 0 || !contains(n)) throw NotAnElementError(n);
  std::vector<Int> out(static_cast<std::size_t>(n), -1);
  Int found = 0;
  for (Int x = 0; found < n; ++x) {
    if (!contains(x)) continue;
    Int r = x % n;
    if (out[static_cast<std::size_t>(r)] < 0) {
      out[static_cast<std::size_t>(r)] = x;
      ++found;
    }
  }
  return out;
}

std::vector<Int> NumericalSemigroup::minimal_generators() const {
  // A nonzero element is a minimal generator iff it is not the sum of two
  // nonzero elements. Nothing at or beyond conductor + multiplicity
  // qualifies: n - multiplicity is then an element.
  std::vector<Int> out;
  const Int m = multiplicity_;
  for (Int n = 1; n < std::max<Int>(conductor_, 1) + m; ++n) {
    if (!contains(n)) continue;
    bool reducible = false;
    for (Int a = m; a + a <= n; ++a) {
      if (contains(a) && contains(n - a)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(n);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::residual_set(
    const std::vector<Int>& shifts) const {
  if (shifts.empty()) throw ShiftNotInSemigroupError(0);
  for (Int s : shifts)
    if (s <= 0 || !contains(s)) throw ShiftNotInSemigroupError(s);
  const Int window =
      checked_add(*std::min_element(shifts.begin(), shifts.end()), conductor_);
  if (window > bit_budget()) throw MemoryGuardError(window, bit_budget());
  std::vector<Int> out;
  for (Int lam = 0; lam < window; ++lam) {
    if (!contains(lam)) continue;
    bool covered = false;
    for (Int s : shifts) {
      if (lam >= s && contains(lam - s)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(lam);
  }
  return out;
}

Int NumericalSemigroup::count_residual(const std::vector<Int>& shifts) const {
  return static_cast<Int>(residual_set(shifts).size());
}

}  // namespace nsemi
