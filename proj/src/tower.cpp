#include "nsemi/tower.hpp"

#include "nsemi/errors.hpp"

namespace nsemi {

Int gs_c(Int q, Int i) {
  if (q < 2 || i < 1) throw Error("gs_c needs q >= 2, i >= 1");
  const Int low = i % 2 == 0 ? i / 2 : (i + 1) / 2;
  return checked_pow(q, i) - checked_pow(q, low);
}

Int gs_genus(Int q, Int i) {
  if (q < 2 || i < 1) throw Error("gs_genus needs q >= 2, i >= 1");
  if (i % 2 == 0) {
    const Int h = checked_pow(q, i / 2) - 1;
    return checked_mul(h, h);
  }
  return checked_mul(checked_pow(q, (i + 1) / 2) - 1,
                     checked_pow(q, (i - 1) / 2) - 1);
}

NumericalSemigroup gs_semigroup(Int q, Int i) {
  if (q < 2 || i < 1) throw Error("gs_semigroup needs q >= 2, i >= 1");
  const Int c_final = gs_c(q, i);
  if (c_final + 1 > bit_budget())
    throw MemoryGuardError(c_final + 1, bit_budget());

  // Level by level: scale the previous window by q, then fill the tail from
  // the level's conductor threshold on.
  std::vector<bool> mem{true};  // level 1: N_0, window [0, 0]
  Int c_prev = 0;
  for (Int level = 2; level <= i; ++level) {
    const Int c = gs_c(q, level);
    std::vector<bool> next(static_cast<std::size_t>(c) + 1, false);
    for (Int n = 0; q * n <= c; ++n) {
      const bool in_prev =
          n >= c_prev || mem[static_cast<std::size_t>(n)];
      if (in_prev) next[static_cast<std::size_t>(q * n)] = true;
    }
    for (Int n = c; n < static_cast<Int>(next.size()); ++n)
      next[static_cast<std::size_t>(n)] = true;
    mem = std::move(next);
    c_prev = c;
  }
  return NumericalSemigroup::from_membership(std::move(mem), c_prev, {});
}

TowerLevel gs_level_report(Int q, Int i) {
  TowerLevel lvl;
  lvl.q = q;
  lvl.i = i;
  lvl.c = gs_c(q, i);
  lvl.semigroup = gs_semigroup(q, i);
  lvl.genus_formula = gs_genus(q, i);
  lvl.lambda1 = lvl.semigroup.multiplicity();
  const Int g = lvl.semigroup.genus();
  if (g > 0) lvl.ratio = Rational(lvl.lambda1, g);
  for (Int n = lvl.lambda1 + 1; ; ++n) {
    if (lvl.semigroup.contains(n)) {
      lvl.lambda2 = n;
      break;
    }
  }
  // The tower lives over the field of q^2 elements, so the coincidence
  // test runs at field size q^2.
  const Int q2 = checked_mul(q, q);
  lvl.coincidence_condition =
      checked_add(checked_mul(q2, lvl.lambda1), 2 * g) <=
      checked_mul(q2, *lvl.lambda2);
  return lvl;
}

TowerAsymptotics tower_asymptotics(Int q, Int i_max) {
  TowerAsymptotics out;
  out.q = q;
  out.corollary_floor = Rational(q - 1, checked_mul(q, q));
  out.limit = Rational(1, q);
  for (Int i = 1; i <= i_max; ++i) {
    TowerLevel lvl = gs_level_report(q, i);
    if (lvl.ratio && *lvl.ratio < out.corollary_floor)
      throw Error("tower ratio fell below the corollary floor");
    out.levels.push_back(std::move(lvl));
  }
  return out;
}

}  // namespace nsemi
