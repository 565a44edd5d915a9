#include "nsemi/bounds.hpp"

#include <algorithm>

#include "nsemi/errors.hpp"

namespace nsemi {

namespace {
std::vector<Int> scaled_shifts(const NumericalSemigroup& s, Int q) {
  std::vector<Int> shifts;
  shifts.reserve(s.generators().size());
  for (Int a : s.generators()) shifts.push_back(checked_mul(q, a));
  return shifts;
}
}  // namespace

Int lewittes_bound(const NumericalSemigroup& s, Int q) {
  return checked_add(checked_mul(q, s.multiplicity()), 1);
}

Int geil_matsumoto_bound(const NumericalSemigroup& s, Int q) {
  return s.count_residual(scaled_shifts(s, q)) + 1;
}

std::pair<Int, Int> t_refined_bound(const NumericalSemigroup& s, Int q) {
  const Int l1 = s.multiplicity();
  const Int hi = l1 + ceil_div(l1, q) - 1;
  Int t = 0;
  for (Int lam = l1 + 1; lam <= hi; ++lam)
    if (s.contains(lam)) ++t;
  return {t, checked_mul(q, l1) - t + 1};
}

Int t_lower_estimate(Int lambda1, Int g, Int q) {
  return std::max<Int>(ceil_div(lambda1, q) - 1 - (g - (lambda1 - 1)), 0);
}

Int sharpened_bound(const NumericalSemigroup& s, Int q, Int n_prime) {
  const Int cap = n_prime + 2 * s.genus() - 2;
  Int count = 0;
  for (Int lam : s.residual_set(scaled_shifts(s, q)))
    if (lam <= cap) ++count;
  return count + 1;
}

Int serre_upper(Int g, Int q) {
  return checked_add(checked_mul(g, isqrt(4 * q)), q + 1);
}

Rational proposition_nq(Int g, Int q) {
  return Rational(q * q - 1, q) * g + Rational(q * q + 2 * q - 1, q);
}

Rational oesterle_q2(Int g) { return Rational(83 * g + 535, 100); }

Int ihara_bound(Int g, Int q, bool printed_radicand) {
  const Int lead = printed_radicand ? 8 * g + 1 : 8 * q + 1;
  const Int radicand =
      checked_add(checked_mul(checked_mul(lead, g), g),
                  checked_mul(4 * (q * q - q), g));
  const Int s = isqrt(radicand);
  // floor((sqrt(radicand) - g)/2) = floor((isqrt - g)/2): the fractional part
  // of the square root never pushes the halved difference past an integer.
  return q + 1 + (s - g) / 2;
}

CoincideResult bounds_coincide(const NumericalSemigroup& s, Int q) {
  const auto& gens = s.generators();
  if (gens.size() < 2)
    return {true, "single generator; the shift union is one set"};
  const Int l1 = s.multiplicity();
  const Int l2 = *std::min_element(gens.begin(), gens.end(),
                                   [&](Int a, Int b) {
                                     if (a == l1) return false;
                                     if (b == l1) return true;
                                     return a < b;
                                   });
  if (checked_add(checked_mul(q, l1), s.conductor()) <= checked_mul(q, l2))
    return {true, "q*lambda1 + conductor <= q*lambda2"};
  if (checked_add(checked_mul(q, l1), 2 * s.genus()) <= checked_mul(q, l2))
    return {true, "q*lambda1 + 2*genus <= q*lambda2"};
  return {false, "sufficient condition q*lambda1 + conductor <= q*lambda2 "
                 "does not hold (bounds may still agree)"};
}

Rational min_multiplicity_for_places(Int n, Int q) {
  return Rational(n - 1, q);
}

BoundReport full_report(const NumericalSemigroup& s, Int q,
                        std::optional<Int> n_prime) {
  BoundReport r;
  r.q = q;
  r.semigroup = s;
  r.lewittes = lewittes_bound(s, q);
  r.witness = s.residual_set(scaled_shifts(s, q));
  r.geil_matsumoto = static_cast<Int>(r.witness.size()) + 1;
  std::tie(r.t_value, r.t_bound) = t_refined_bound(s, q);
  r.n_prime = n_prime;
  if (n_prime) r.sharpened = sharpened_bound(s, q, *n_prime);
  r.coincide = bounds_coincide(s, q);
  r.serre = serre_upper(s.genus(), q);
  return r;
}

}  // namespace nsemi
