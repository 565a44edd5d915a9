#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>

#include "nsemi/errors.hpp"
#include "nsemi/telescopic.hpp"
#include "support/corpus.hpp"

using nsemi::Int;
using nsemi::NumericalSemigroup;

TEST_CASE("telescopic verdicts") {
  auto a = nsemi::analyze_telescopic({4, 6, 13});
  CHECK(a.telescopic);
  CHECK(a.d == std::vector<Int>{4, 2, 1});
  REQUIRE(a.closed_form_genus.has_value());
  CHECK(*a.closed_form_genus == 8);

  // two coprime generators are always telescopic
  CHECK(nsemi::analyze_telescopic({5, 7}).telescopic);
  CHECK(nsemi::analyze_telescopic({2, 3}).telescopic);

  auto b = nsemi::analyze_telescopic({5, 7, 9});
  CHECK(!b.telescopic);
  CHECK(b.failed_index == 2);  // 9 not in <5,7>
  CHECK(!b.closed_form_genus.has_value());

  CHECK_THROWS_AS(nsemi::analyze_telescopic({4, 6}),
                  nsemi::NonCoprimeGeneratorsError);
}

TEST_CASE("closed-form genus") {
  CHECK(nsemi::telescopic_genus({4, 6, 13}) == 8);
  CHECK(nsemi::telescopic_genus({2, 3}) == 1);
  CHECK(nsemi::telescopic_genus({1}) == 0);
  CHECK_THROWS_AS(nsemi::telescopic_genus({5, 7, 9}),
                  nsemi::NotTelescopicError);
}

TEST_CASE("representation") {
  CHECK(nsemi::telescopic_representation({2, 3}, 6) ==
        std::vector<Int>{3, 0});
  CHECK(nsemi::telescopic_representation({4, 6, 13}, 13) ==
        std::vector<Int>{0, 0, 1});
  CHECK(nsemi::telescopic_representation({4, 6, 13}, 0) ==
        std::vector<Int>{0, 0, 0});
  CHECK_THROWS_AS(nsemi::telescopic_representation({4, 6, 13}, 5),
                  nsemi::NotAnElementError);
  CHECK_THROWS_AS(nsemi::telescopic_representation({5, 7, 9}, 10),
                  nsemi::NotTelescopicError);
}

TEST_CASE("order search") {
  auto found = nsemi::find_telescopic_order({13, 4, 6});
  REQUIRE(found.has_value());
  CHECK(nsemi::analyze_telescopic(*found).telescopic);
  CHECK(!nsemi::find_telescopic_order({5, 7, 9}).has_value());
}

TEST_CASE("random chains: genus agreement and symmetry") {
  for (const auto& gens : corpus::random_telescopic(60)) {
    CAPTURE(gens);
    auto a = nsemi::analyze_telescopic(gens);
    REQUIRE(a.telescopic);
    auto s = NumericalSemigroup::from_generators(gens);
    CHECK(*a.closed_form_genus == s.genus());
    CHECK(s.conductor() == 2 * s.genus());  // telescopic => symmetric
  }
}

TEST_CASE("random chains: representation round-trip and bounds") {
  int pairs = 0;
  for (const auto& gens : corpus::random_telescopic(40, 17)) {
    auto s = NumericalSemigroup::from_generators(gens);
    auto a = nsemi::analyze_telescopic(gens);
    REQUIRE(a.telescopic);
    for (Int lambda = 0; lambda <= s.conductor() + 20 && pairs < 400;
         ++lambda) {
      if (!s.contains(lambda)) continue;
      auto x = nsemi::telescopic_representation(gens, lambda);
      REQUIRE(x.size() == gens.size());
      Int sum = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        CHECK(x[j] >= 0);
        if (j >= 1) CHECK(x[j] < a.d[j - 1] / a.d[j]);
        sum += x[j] * gens[j];
      }
      CHECK(sum == lambda);
      ++pairs;
    }
  }
  CHECK(pairs >= 200);
}

TEST_CASE("representation uniqueness, exhaustively on small chains") {
  int chains = 0;
  for (const auto& gens : corpus::random_telescopic(200, 23)) {
    if (*std::max_element(gens.begin(), gens.end()) > 100) continue;
    if (++chains > 20) break;
    auto a = nsemi::analyze_telescopic(gens);
    REQUIRE(a.telescopic);
    auto s = NumericalSemigroup::from_generators(gens);
    const std::size_t k = gens.size();
    for (Int lambda = 0; lambda <= 100; ++lambda) {
      if (!s.contains(lambda)) continue;
      // count all bounded-coefficient solutions by direct recursion
      int solutions = 0;
      std::vector<Int> best;
      std::function<void(std::size_t, Int, std::vector<Int>&)> walk =
          [&](std::size_t j, Int rest, std::vector<Int>& x) {
            if (j == k) {
              if (rest == 0) {
                ++solutions;
                best = x;
              }
              return;
            }
            Int cap = j == 0 ? rest / gens[0] : a.d[j - 1] / a.d[j] - 1;
            for (Int v = 0; v <= cap && v * gens[j] <= rest; ++v) {
              x.push_back(v);
              walk(j + 1, rest - v * gens[j], x);
              x.pop_back();
            }
          };
      std::vector<Int> x;
      walk(0, lambda, x);
      CAPTURE(gens);
      CAPTURE(lambda);
      REQUIRE(solutions == 1);
      CHECK(nsemi::telescopic_representation(gens, lambda) == best);
    }
  }
  CHECK(chains >= 20);
}

TEST_CASE("tower diagnostic") {
  auto report = nsemi::telescopic_tower_diagnostic({{{2, 3}, 2}});
  REQUIRE(report.size() == 1);
  CHECK(report[0].lewittes == 5);
  CHECK(report[0].genus == 1);
  CHECK(report[0].ratio == nsemi::Rational(5, 1));

  auto r2 = nsemi::telescopic_tower_diagnostic({{{4, 6, 13}, 2}});
  CHECK(r2[0].ratio == nsemi::Rational(9, 8));
  CHECK(r2[0].m == 3);

  CHECK_THROWS_AS(nsemi::telescopic_tower_diagnostic({{{1}, 2}}),
                  nsemi::DegenerateLevelError);
  CHECK_THROWS_AS(nsemi::telescopic_tower_diagnostic({{{5, 7, 9}, 2}}),
                  nsemi::NotTelescopicError);
}

TEST_CASE("ratio decay follows the proof inequality") {
  for (const auto& gens : corpus::random_telescopic(40, 31)) {
    auto s = NumericalSemigroup::from_generators(gens);
    if (s.genus() == 0) continue;
    for (Int q : {2, 3, 4}) {
      auto report = nsemi::telescopic_tower_diagnostic({{gens, q}});
      REQUIRE(report.size() == 1);
      const auto& lvl = report[0];
      if (lvl.m < 2) continue;
      CAPTURE(gens);
      CHECK(2 * lvl.genus >= (lvl.m - 1) * lvl.lambda1);
      CHECK(lvl.ratio <= nsemi::Rational(2 * (q + 1), lvl.m - 1));
    }
  }
}
