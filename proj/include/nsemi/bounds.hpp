#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsemi/rational.hpp"
#include "nsemi/semigroup.hpp"

namespace nsemi {

// Lewittes: q * multiplicity + 1.
Int lewittes_bound(const NumericalSemigroup& s, Int q);

// Set-difference bound: #(Lambda \ union over supplied generators of
// (q*gen + Lambda)) + 1. Depends on the supplied generating set.
Int geil_matsumoto_bound(const NumericalSemigroup& s, Int q);

// Refinement of Lewittes by the count t of elements in
// [lambda1 + 1, lambda1 + ceil(lambda1/q) - 1]. Returns (t, q*lambda1 - t + 1).
std::pair<Int, Int> t_refined_bound(const NumericalSemigroup& s, Int q);

// Lower estimate for t from multiplicity and genus alone:
// max(ceil(lambda1/q) - 1 - (g - (lambda1 - 1)), 0). Requires lambda1 <= g+1.
Int t_lower_estimate(Int lambda1, Int g, Int q);

// Set-difference bound with the element window truncated at
// n_prime + 2g - 2, for an a-priori known place-count bound n_prime.
Int sharpened_bound(const NumericalSemigroup& s, Int q, Int n_prime);

// Classical comparators on N_q(g).
Int serre_upper(Int g, Int q);                      // g*floor(2 sqrt q) + q + 1
Rational proposition_nq(Int g, Int q);              // (q - 1/q) g + q + 2 - 1/q
Rational oesterle_q2(Int g);                        // (83 g + 535) / 100

// Ihara: q + 1 + floor((sqrt((8q+1) g^2 + 4(q^2-q) g) - g) / 2), exact
// integer arithmetic. `printed_radicand` switches the leading coefficient to
// (8g+1), a variant that appears in print but grows superlinearly in g.
Int ihara_bound(Int g, Int q, bool printed_radicand = false);

// Sufficient test for the set-difference bound to equal Lewittes:
// q*lambda1 + conductor <= q*lambda2 (second supplied generator). A false
// result does not imply the bounds differ.
struct CoincideResult {
  bool coincide = false;
  std::string reason;
};
CoincideResult bounds_coincide(const NumericalSemigroup& s, Int q);

// Multiplicity floor (N - 1) / q implied by Lewittes for a field with N
// rational places.
Rational min_multiplicity_for_places(Int n, Int q);

struct BoundReport {
  Int q = 0;
  NumericalSemigroup semigroup;
  Int lewittes = 0;
  Int geil_matsumoto = 0;
  Int t_value = 0;
  Int t_bound = 0;
  std::optional<Int> n_prime;
  std::optional<Int> sharpened;
  std::vector<Int> witness;  // the residual set behind geil_matsumoto
  CoincideResult coincide;
  Int serre = 0;
};

BoundReport full_report(const NumericalSemigroup& s, Int q,
                        std::optional<Int> n_prime = std::nullopt);

}  // namespace nsemi
