#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "nsemi/errors.hpp"
#include "nsemi/semigroup.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using nsemi::Int;
using nsemi::NumericalSemigroup;

TEST_CASE("construction basics") {
  auto full = NumericalSemigroup::from_generators({1});
  CHECK(full.genus() == 0);
  CHECK(full.conductor() == 0);
  CHECK(full.multiplicity() == 1);
  CHECK(full.gaps().empty());

  auto s = NumericalSemigroup::from_generators({3, 5});
  CHECK(s.multiplicity() == 3);
  CHECK(s.genus() == 4);
  CHECK(s.conductor() == 8);
  CHECK(s.gaps() == std::vector<Int>{1, 2, 4, 7});
  CHECK(!s.contains(7));
  CHECK(s.contains(8));
  CHECK(s.contains(0));
  CHECK(!s.contains(-3));

  CHECK(NumericalSemigroup::from_generators({4, 6, 13}).genus() == 8);
  // generating set preserved exactly as supplied
  auto redundant = NumericalSemigroup::from_generators({3, 5, 8});
  CHECK(redundant.generators() == std::vector<Int>{3, 5, 8});
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}),
                  nsemi::EmptyGeneratorsError);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}),
                  nsemi::ZeroGeneratorError);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}),
                  nsemi::NonCoprimeGeneratorsError);
}

TEST_CASE("gaps") {
  CHECK(NumericalSemigroup::from_generators({2, 17}).gaps() ==
        std::vector<Int>{1, 3, 5, 7, 9, 11, 13, 15});
}

TEST_CASE("apery sets") {
  auto s = NumericalSemigroup::from_generators({3, 5});
  CHECK(s.apery_set(3) == std::vector<Int>{0, 10, 5});
  CHECK(NumericalSemigroup::from_generators({1}).apery_set(1) ==
        std::vector<Int>{0});
  CHECK(NumericalSemigroup::from_generators({2, 17}).apery_set(2) ==
        std::vector<Int>{0, 17});
  CHECK_THROWS_AS(s.apery_set(4), nsemi::NotAnElementError);
}

TEST_CASE("minimal generators") {
  CHECK(NumericalSemigroup::from_generators({3, 5, 8}).minimal_generators() ==
        std::vector<Int>{3, 5});
  CHECK(NumericalSemigroup::from_generators({4, 6, 13}).minimal_generators() ==
        std::vector<Int>{4, 6, 13});
  std::vector<Int> nine_up{9, 10, 11, 12, 13, 14, 15, 16, 17};
  CHECK(NumericalSemigroup::from_generators(nine_up).minimal_generators() ==
        nine_up);
  CHECK(NumericalSemigroup::from_generators({1}).minimal_generators() ==
        std::vector<Int>{1});
}

TEST_CASE("residual sets") {
  auto s = NumericalSemigroup::from_generators({3, 5});
  CHECK(s.residual_set({6}) == std::vector<Int>{0, 3, 5, 8, 10, 13});
  CHECK(s.residual_set({6, 10}) == std::vector<Int>{0, 3, 5, 8});
  CHECK(s.count_residual({6, 10}) == 4);
  auto t = NumericalSemigroup::from_generators({8, 9, 20});
  CHECK(t.count_residual({16, 18, 40}) == 8);
  auto full = NumericalSemigroup::from_generators({1});
  CHECK(full.count_residual({5}) == 5);
  CHECK_THROWS_AS(s.residual_set({4}), nsemi::ShiftNotInSemigroupError);
  CHECK_THROWS_AS(s.residual_set({0}), nsemi::ShiftNotInSemigroupError);
}

TEST_CASE("corpus against the slow oracle") {
  for (const auto& gens : corpus::random_semigroups(60)) {
    CAPTURE(gens);
    auto s = NumericalSemigroup::from_generators(gens);
    CHECK(s.conductor() == oracle::conductor(gens));
    CHECK(s.gaps() == oracle::gaps(gens));
    CHECK(s.conductor() <= 2 * s.genus());

    // Apery consistency at the multiplicity
    auto ap = s.apery_set(s.multiplicity());
    Int m = s.multiplicity();
    Int max_ap = *std::max_element(ap.begin(), ap.end());
    CHECK(s.conductor() == max_ap - m + 1);
    Int sum = std::accumulate(ap.begin(), ap.end(), Int{0});
    CHECK(s.genus() == sum / m - (m - 1) / 2);

    // minimal generators regenerate the same semigroup
    CHECK(NumericalSemigroup::from_generators(s.minimal_generators()) == s);
  }
}

TEST_CASE("lemma: removing one shifted copy leaves exactly shift elements") {
  int checked = 0;
  for (const auto& gens : corpus::random_semigroups(40)) {
    auto s = NumericalSemigroup::from_generators(gens);
    for (Int lambda = 1; lambda <= 50; ++lambda) {
      if (!s.contains(lambda)) continue;
      CAPTURE(gens);
      CAPTURE(lambda);
      CHECK(s.count_residual({lambda}) == lambda);
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("residual count is monotone non-increasing in the shift set") {
  for (const auto& gens : corpus::random_semigroups(25, 7)) {
    auto s = NumericalSemigroup::from_generators(gens);
    Int m = s.multiplicity();
    std::vector<Int> shifts{2 * m};
    Int prev = s.count_residual(shifts);
    for (Int extra : {3 * m, 2 * m + s.conductor()}) {
      shifts.push_back(extra);
      Int cur = s.count_residual(shifts);
      CHECK(cur <= prev);
      prev = cur;
    }
    // oracle agreement on the multi-shift difference
    auto expect = oracle::residual(gens, shifts);
    CHECK(s.residual_set(shifts) == expect);
  }
}

TEST_CASE("membership bit budget guard") {
  Int saved = nsemi::bit_budget();
  nsemi::set_bit_budget(16);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({30, 47}),
                  nsemi::MemoryGuardError);
  nsemi::set_bit_budget(saved);
  CHECK_NOTHROW(NumericalSemigroup::from_generators({30, 47}));
}
