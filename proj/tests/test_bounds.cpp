#include <doctest.h>

#include "irum/bounds.hpp"
#include "support/fixtures.hpp"

#include <random>

using namespace irum;
using fixtures::pref;

TEST_SUITE("bounds") {

TEST_CASE("frechet_lower_bound") {
  SUBCASE("paradox data against a>b>c over the full domain") {
    auto rho = fixtures::regularity_violation_scf();
    auto c = rational_choice_function(3, pref({0, 1, 2}));
    std::vector<Menu> domain(enumerate_menus(3).begin(), enumerate_menus(3).end());
    // 1 + 2/3 + 1 + 1 - 3
    CHECK(bounds::frechet_lower_bound(rho, c, domain) == Rational(2, 3));
  }
  SUBCASE("uniform data clamps to zero") {
    auto rho = uniform_scf(fixtures::abc());
    auto c = rational_choice_function(3, pref({0, 1, 2}));
    std::vector<Menu> domain(enumerate_menus(3).begin(), enumerate_menus(3).end());
    CHECK(bounds::frechet_lower_bound(rho, c, domain) == 0);
  }
  SUBCASE("singleton collection returns the raw probability") {
    auto rho = fixtures::split_pair_scf();
    auto c = rational_choice_function(3, pref({0, 1, 2}));
    CHECK(bounds::frechet_lower_bound(rho, c, {make_menu({0, 1})}) == Rational(1, 2));
  }
  SUBCASE("repeated menus are rejected") {
    auto rho = fixtures::split_pair_scf();
    auto c = rational_choice_function(3, pref({0, 1, 2}));
    CHECK_THROWS_AS(
        bounds::frechet_lower_bound(rho, c, {make_menu({0, 1}), make_menu({0, 1})}),
        InputError);
  }
  SUBCASE("necessity: the bound never exceeds the weight actually used") {
    std::mt19937_64 rng(21);
    std::vector<Menu> domain(enumerate_menus(3).begin(), enumerate_menus(3).end());
    for (int trial = 0; trial < 300; ++trial) {
      auto mu = fixtures::random_rcm(3, rng, 1 + trial % 6);
      auto rho = aggregate(fixtures::abc(), mu);
      for (const auto& [c, w] : mu.support()) {
        CHECK(bounds::frechet_lower_bound(rho, c, domain) <= w);
      }
      // also for functions outside the support (their weight is zero)
      auto stranger = fixtures::mistake_cf_1();
      CHECK(bounds::frechet_lower_bound(rho, stranger, domain) <= mu.weight_of(stranger));
    }
  }
  SUBCASE("growing the collection moves the bound by at most the new terms") {
    std::mt19937_64 rng(22);
    const auto& menus = enumerate_menus(3);
    for (int trial = 0; trial < 200; ++trial) {
      auto mu = fixtures::random_rcm(3, rng, 1 + trial % 5);
      auto rho = aggregate(fixtures::abc(), mu);
      auto c = fixtures::random_rcm(3, rng, 1).support()[0].first;
      std::vector<Menu> small{menus[0], menus[3]};
      std::vector<Menu> big{menus[0], menus[1], menus[2], menus[3]};
      auto lo_small = bounds::frechet_lower_bound(rho, c, small);
      auto lo_big = bounds::frechet_lower_bound(rho, c, big);
      CHECK(lo_big >= lo_small - Rational(static_cast<int>(big.size() - small.size())));
    }
  }
}

TEST_CASE("correlation_bound") {
  SUBCASE("two-preference values in closed form") {
    // With support on c>s>f and s>c>f at m : 1-m the value at the first
    // preference is (3m + (1-m))/2.
    for (int num = 1; num <= 9; ++num) {
      Rational m(num, 10);
      auto rho = fixtures::tilted_pair_scf(m);
      CHECK(bounds::correlation_bound(rho, pref({0, 1, 2})) == (3 * m + (1 - m)) / 2);
    }
  }
  SUBCASE("the 2/5-2/5-1/10-1/10 data violates at a>b>c with 6/5") {
    auto rho = fixtures::weak_only_scf();
    CHECK(bounds::correlation_bound(rho, pref({0, 1, 2})) == Rational(6, 5));
  }
  SUBCASE("split pair sits exactly at the bound") {
    auto rho = fixtures::split_pair_scf();
    CHECK(bounds::correlation_bound(rho, pref({0, 1, 2})) == 1);
  }
  SUBCASE("n=2 is rejected") {
    auto alts = AlternativeSet({"a", "b"});
    std::vector<std::vector<Rational>> probs{{Rational(1, 2), Rational(1, 2)}};
    StochasticChoiceFunction rho(alts, std::move(probs));
    CHECK_THROWS_AS(bounds::correlation_bound(rho, pref({0, 1})), InputError);
  }
}

TEST_CASE("satisfies_correlation_bounds") {
  SUBCASE("split pair: no violators") {
    auto report = bounds::satisfies_correlation_bounds(fixtures::split_pair_scf());
    CHECK(report.satisfied);
    CHECK(report.max_value == 1);
  }
  SUBCASE("51/100 tilt: c>s>f violates") {
    auto report = bounds::satisfies_correlation_bounds(fixtures::tilted_pair_scf(Rational(51, 100)));
    CHECK_FALSE(report.satisfied);
    REQUIRE(report.violators.size() >= 1);
    CHECK(report.violators[0] == pref({0, 1, 2}));
  }
  SUBCASE("paradox data: a>b>c violates") {
    auto report = bounds::satisfies_correlation_bounds(fixtures::regularity_violation_scf());
    CHECK_FALSE(report.satisfied);
    bool found = false;
    for (const auto& p : report.violators) found = found || p == pref({0, 1, 2});
    CHECK(found);
    CHECK(report.max_value == Rational(4, 3));  // (8/3) / 2
  }
}

TEST_CASE("agreement counts") {
  SUBCASE("published n=3 values") {
    CHECK(bounds::agreement_count(3, pref({0, 1, 2}), pref({1, 0, 2})) == 1);
    CHECK(bounds::agreement_count(3, pref({0, 1, 2}), pref({2, 1, 0})) == 0);
    CHECK(bounds::agreement_count(3, pref({2, 1, 0}), pref({1, 0, 2})) == 0);
  }
  SUBCASE("the count is ordered, not symmetric") {
    // s>c>f and f>s>c agree on {c,s}, which only the first one's domain
    // keeps.
    CHECK(bounds::agreement_count(3, pref({1, 0, 2}), pref({2, 1, 0})) == 1);
    CHECK(bounds::agreement_count(3, pref({2, 1, 0}), pref({1, 0, 2})) == 0);
  }
  SUBCASE("diagonal and worst-pair swap reach K-1") {
    for (int n = 3; n <= 5; ++n) {
      const int big_k = static_cast<int>(enumerate_menus(n).size());
      for (const auto& p : enumerate_preferences(n)) {
        CHECK(bounds::agreement_count(n, p, p) == big_k - 1);
        Preference swapped = p;
        std::swap(swapped.ranking[n - 2], swapped.ranking[n - 1]);
        CHECK(bounds::agreement_count(n, p, swapped) == big_k - 1);
      }
    }
  }
  SUBCASE("matrix matches the pairwise routine and stays within range") {
    auto matrix = bounds::agreement_matrix(3);
    const auto& prefs = enumerate_preferences(3);
    for (std::size_t i = 0; i < prefs.size(); ++i) {
      for (std::size_t j = 0; j < prefs.size(); ++j) {
        int entry = matrix.at(i, j);
        CHECK(entry == bounds::agreement_count(3, prefs[i], prefs[j]));
        CHECK(entry >= 0);
        CHECK(entry <= 3);
      }
    }
  }
}

TEST_CASE("correlation_from_distribution matches the direct route") {
  SUBCASE("dual at 1/2 gives exactly one") {
    PreferenceDistribution mu{{pref({0, 1, 2}), Rational(1, 2)}, {pref({1, 0, 2}), Rational(1, 2)}};
    CHECK(bounds::correlation_from_distribution(3, mu, pref({0, 1, 2})) == 1);
  }
  SUBCASE("uncorrelated dual at 2/3 also hits one") {
    PreferenceDistribution mu{{pref({0, 1, 2}), Rational(2, 3)}, {pref({2, 1, 0}), Rational(1, 3)}};
    CHECK(bounds::correlation_from_distribution(3, mu, pref({0, 1, 2})) == 1);
  }
  SUBCASE("degenerate distribution reaches (K-1)/(K-2)") {
    PreferenceDistribution mu{{pref({0, 1, 2}), 1}};
    CHECK(bounds::correlation_from_distribution(3, mu, pref({0, 1, 2})) == Rational(3, 2));
  }
  SUBCASE("identity against the aggregate route, fuzzed") {
    std::mt19937_64 rng(31);
    for (int n : {3, 4}) {
      auto alts = n == 3 ? fixtures::abc() : fixtures::abcd();
      for (int trial = 0; trial < 250; ++trial) {
        auto mu = fixtures::random_rum_distribution(n, rng, 1 + trial % 6);
        auto rho = aggregate(alts, rum_from_preferences(n, mu));
        for (const auto& p : enumerate_preferences(n)) {
          CHECK(bounds::correlation_bound(rho, p) ==
                bounds::correlation_from_distribution(n, mu, p));
        }
      }
    }
  }
}

TEST_CASE("corollary screens against the bound sweep") {
  std::mt19937_64 rng(32);
  for (int n : {3, 4}) {
    auto alts = n == 3 ? fixtures::abc() : fixtures::abcd();
    const int big_k = static_cast<int>(enumerate_menus(n).size());
    const Rational cap(big_k - 2, big_k - 1);
    for (int trial = 0; trial < 150; ++trial) {
      auto mu = fixtures::random_rum_distribution(n, rng, 1 + trial % 5);
      auto rho = aggregate(alts, rum_from_preferences(n, mu));
      auto report = bounds::satisfies_correlation_bounds(rho);
      bool heavy = false;
      bool all_light = true;
      for (const auto& [p, w] : mu) {
        heavy = heavy || w > cap;
        all_light = all_light && w <= Rational(1, 4);
      }
      if (heavy) CHECK_FALSE(report.satisfied);
      if (all_light) CHECK(report.satisfied);
    }
  }
}

TEST_CASE("weak correlation bounds") {
  SUBCASE("the 2/5-2/5-1/10-1/10 data passes weakly") {
    auto rho = fixtures::weak_only_scf();
    CHECK(bounds::weak_correlation_value(rho, pref({0, 1, 2})) == Rational(29, 30));
    auto report = bounds::satisfies_weak_correlation_bounds(rho);
    CHECK(report.satisfied);
  }
  SUBCASE("paradox data fails weakly too") {
    auto rho = fixtures::regularity_violation_scf();
    // (8/3 + 1) / 3 > 1
    CHECK(bounds::weak_correlation_value(rho, pref({0, 1, 2})) == Rational(11, 9));
    CHECK_FALSE(bounds::satisfies_weak_correlation_bounds(rho).satisfied);
  }
  SUBCASE("degenerate data always fails weakly") {
    auto rho = aggregate(fixtures::abc(), rum_from_preferences(3, {{pref({0, 1, 2}), 1}}));
    CHECK(bounds::weak_correlation_value(rho, pref({0, 1, 2})) == Rational(4, 3));
    CHECK_FALSE(bounds::satisfies_weak_correlation_bounds(rho).satisfied);
  }
}

TEST_CASE("correlation_decomposition") {
  SUBCASE("split pair against the first mistake function") {
    auto d = bounds::correlation_decomposition(fixtures::split_pair_scf(), fixtures::mistake_cf_1());
    CHECK(d.concordant == 1);
    CHECK(d.discordant == 0);
    CHECK(d.kendall == 1);
    CHECK_FALSE(d.concordant_exceeds_one);
  }
  SUBCASE("uniform data against any table") {
    auto d = bounds::correlation_decomposition(uniform_scf(fixtures::abc()),
                                               rational_choice_function(3, pref({0, 1, 2})));
    CHECK(d.concordant == Rational(11, 18));
    CHECK(d.discordant == Rational(7, 18));
  }
  SUBCASE("degenerate data flags the K/(K-1) overflow") {
    auto c = rational_choice_function(3, pref({0, 1, 2}));
    auto rho = aggregate(fixtures::abc(), RandomChoiceModel::make({{c, 1}}));
    auto d = bounds::correlation_decomposition(rho, c);
    CHECK(d.concordant == Rational(4, 3));
    CHECK(d.concordant_exceeds_one);
  }
}

}  // TEST_SUITE
