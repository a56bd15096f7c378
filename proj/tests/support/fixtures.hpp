#pragma once

#include "irum/core.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using irum::AlternativeSet;
using irum::ChoiceFunction;
using irum::Menu;
using irum::Preference;
using irum::PreferenceDistribution;
using irum::RandomChoiceModel;
using irum::Rational;
using irum::StochasticChoiceFunction;

inline AlternativeSet dinner() { return AlternativeSet({"c", "s", "f"}); }
inline AlternativeSet abc() { return AlternativeSet({"a", "b", "c"}); }
inline AlternativeSet abcd() { return AlternativeSet({"a", "b", "c", "d"}); }

inline Preference pref(std::initializer_list<int> best_first) {
  return irum::make_preference(best_first);
}

// Two preferences c>s>f and s>c>f mixed m1 : 1-m1. At 1/2 this is the
// split pair whose aggregate also has the two-mistake representation.
inline StochasticChoiceFunction tilted_pair_scf(const Rational& m1) {
  PreferenceDistribution mu{{pref({0, 1, 2}), m1}, {pref({1, 0, 2}), 1 - m1}};
  return irum::aggregate(dinner(), irum::rum_from_preferences(3, mu));
}

inline StochasticChoiceFunction split_pair_scf() { return tilted_pair_scf(Rational(1, 2)); }

// The two single-menu mistake functions over {c, s, f}: follow c>s>f
// everywhere except one menu where the roles of c and s swap.
inline ChoiceFunction mistake_cf_1() {
  // cs->c, cf->c, sf->s, csf->s
  ChoiceFunction c;
  c.choice = {0, 0, 1, 1};
  return c;
}
inline ChoiceFunction mistake_cf_2() {
  // cs->s, cf->c, sf->s, csf->c
  ChoiceFunction c;
  c.choice = {1, 0, 1, 0};
  return c;
}

// Not a RUM: a is certain in the grand menu and in ac, b certain in bc,
// but a only gets 2/3 in ab. Violates regularity at (a, ab, abc).
inline StochasticChoiceFunction regularity_violation_scf() {
  AlternativeSet alts = abc();
  // menu order: ab, ac, bc, abc
  std::vector<std::vector<Rational>> probs{
      {Rational(2, 3), Rational(1, 3), 0},
      {1, 0, 0},
      {0, 1, 0},
      {1, 0, 0},
  };
  return {alts, std::move(probs)};
}

// Passes the weak correlation screen yet fails the strong one: mass 2/5 on
// each of a>b>c and a>c>b plus 1/10 on b>c>a and c>b>a.
inline PreferenceDistribution weak_only_distribution() {
  return {
      {pref({0, 1, 2}), Rational(2, 5)},
      {pref({0, 2, 1}), Rational(2, 5)},
      {pref({1, 2, 0}), Rational(1, 10)},
      {pref({2, 1, 0}), Rational(1, 10)},
  };
}

inline StochasticChoiceFunction weak_only_scf() {
  return irum::aggregate(abc(), irum::rum_from_preferences(3, weak_only_distribution()));
}

// All weight compositions of `denominator` into `parts` nonnegative integer
// cells; the n=3 RUM grids are built from these.
inline std::vector<std::vector<int>> compositions(int denominator, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(parts, 0);
  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == parts - 1) {
      current[index] = remaining;
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[index] = v;
      self(self, index + 1, remaining - v);
    }
  };
  recurse(recurse, 0, denominator);
  return out;
}

// Random RUM distribution with the given support size; weights are small
// random integers normalized exactly.
inline PreferenceDistribution random_rum_distribution(int n, std::mt19937_64& rng,
                                                      int support_size) {
  const auto& prefs = irum::enumerate_preferences(n);
  std::vector<std::size_t> indices(prefs.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  std::shuffle(indices.begin(), indices.end(), rng);
  std::uniform_int_distribution<int> weight_dist(1, 9);
  std::vector<int> weights(support_size);
  int total = 0;
  for (int& w : weights) {
    w = weight_dist(rng);
    total += w;
  }
  PreferenceDistribution mu;
  for (int i = 0; i < support_size; ++i) {
    mu.emplace_back(prefs[indices[i]], Rational(weights[i], total));
  }
  return mu;
}

// Random model over arbitrary choice functions (not necessarily rational).
inline RandomChoiceModel random_rcm(int n, std::mt19937_64& rng, int support_size) {
  const auto& menus = irum::enumerate_menus(n);
  std::uniform_int_distribution<int> weight_dist(1, 9);
  std::vector<RandomChoiceModel::Entry> support;
  std::vector<int> weights(support_size);
  int total = 0;
  for (int& w : weights) {
    w = weight_dist(rng);
    total += w;
  }
  for (int i = 0; i < support_size; ++i) {
    ChoiceFunction c;
    for (const Menu& menu : menus) {
      auto members = menu.members();
      std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
      c.choice.push_back(static_cast<std::uint8_t>(members[pick(rng)]));
    }
    support.emplace_back(std::move(c), Rational(weights[i], total));
  }
  return RandomChoiceModel::make(std::move(support));
}

}  // namespace fixtures
