#pragma once

#include "irum/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace irum {

// Malformed input: bad labels, probabilities that do not sum to one,
// violated operation preconditions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size guard tripped (e.g. a sweep over N! preferences requested for an
// alternative set larger than the operation supports).
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxAlternatives = 12;

// The finite set of alternatives, fixed by an ordered list of distinct
// labels. Alternatives are referred to by index everywhere else.
class AlternativeSet {
 public:
  explicit AlternativeSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int alt) const { return labels_.at(alt); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Throws InputError for unknown labels.
  int index_of(std::string_view label) const;

  bool operator==(const AlternativeSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

// A menu is a subset of the alternative indices, encoded as a bitmask.
// Menus in the analysis domain have at least two members; singletons occur
// only inside Block-Marschak sums.
struct Menu {
  std::uint16_t mask = 0;

  int size() const;
  bool contains(int alt) const { return (mask >> alt) & 1u; }
  std::vector<int> members() const;  // ascending

  auto operator<=>(const Menu&) const = default;
};

Menu make_menu(std::initializer_list<int> alts);
std::string menu_to_string(const AlternativeSet& alt_set, Menu menu);

// All menus with >= 2 members, ascending by bitmask; size() == 2^n - n - 1.
// The returned reference is to an immutable table shared per n.
const std::vector<Menu>& enumerate_menus(int n);

// Position of `menu` within enumerate_menus(n). Throws InputError if the
// mask has fewer than two members or stray bits.
std::size_t menu_index(int n, Menu menu);

// A strict linear order given best-first: ranking[0] is the most preferred
// alternative index.
struct Preference {
  std::vector<std::uint8_t> ranking;

  int n() const { return static_cast<int>(ranking.size()); }
  int best_of(Menu menu) const;

  auto operator<=>(const Preference&) const = default;
};

Preference make_preference(std::initializer_list<int> best_first);
std::string preference_to_string(const AlternativeSet& alt_set, const Preference& p);
// Parses "c>s>f" against the labels; every alternative must appear once.
Preference parse_preference(const AlternativeSet& alt_set, std::string_view text);

// All N! preferences in lexicographic ranking order. Guarded at n <= 6;
// nothing in the library sweeps a larger preference space.
const std::vector<Preference>& enumerate_preferences(int n);

// One chosen member per menu, indexed by the canonical menu order of
// enumerate_menus(n).
struct ChoiceFunction {
  std::vector<std::uint8_t> choice;

  std::size_t menu_count() const { return choice.size(); }
  int at(int n, Menu menu) const { return choice.at(menu_index(n, menu)); }

  auto operator<=>(const ChoiceFunction&) const = default;
};

// c_P: the maximizer of P on every menu.
ChoiceFunction rational_choice_function(int n, const Preference& p);

// Returns the unique rationalizing preference if one exists. Builds the
// pairwise tournament from binary menus, accepts iff it is transitive and
// its maximizer agrees with the choice on every menu.
std::optional<Preference> is_rational(int n, const ChoiceFunction& c);

// Every choice function over the menus of n alternatives; mixed-radix
// enumeration, menu-major, members ascending. Guarded at n <= 4 where the
// count is 20736.
std::vector<ChoiceFunction> enumerate_choice_functions(int n);
std::vector<ChoiceFunction> enumerate_irrational_choice_functions(int n);

// Exact per-menu probability vectors. probs[menu_index][alt] is zero for
// every alternative outside the menu and the per-menu sums are exactly one.
class StochasticChoiceFunction {
 public:
  StochasticChoiceFunction(AlternativeSet alt_set,
                           std::vector<std::vector<Rational>> probs);

  const AlternativeSet& alt_set() const { return alt_set_; }
  int n() const { return alt_set_.size(); }
  std::size_t menu_count() const { return probs_.size(); }

  const Rational& prob(Menu menu, int alt) const;
  const Rational& prob_at(std::size_t menu_idx, int alt) const {
    return probs_.at(menu_idx).at(alt);
  }
  const std::vector<std::vector<Rational>>& probs() const { return probs_; }

  bool operator==(const StochasticChoiceFunction&) const = default;

 private:
  AlternativeSet alt_set_;
  std::vector<std::vector<Rational>> probs_;
};

// Uniform choice: prob 1/|A| for every member of every menu.
StochasticChoiceFunction uniform_scf(const AlternativeSet& alt_set);

// An exact probability distribution over choice functions. Built through
// make(), which merges duplicates, drops zero weights, and checks that the
// remaining weights are positive and sum to one. Support is kept sorted for
// reproducible output.
class RandomChoiceModel {
 public:
  using Entry = std::pair<ChoiceFunction, Rational>;

  static RandomChoiceModel make(std::vector<Entry> support);

  const std::vector<Entry>& support() const { return support_; }
  std::size_t support_size() const { return support_.size(); }
  Rational weight_of(const ChoiceFunction& c) const;  // zero if absent

  bool operator==(const RandomChoiceModel&) const = default;

 private:
  RandomChoiceModel() = default;
  std::vector<Entry> support_;
};

// rho_mu(a, A) = total weight of support members choosing a from A.
StochasticChoiceFunction aggregate(const AlternativeSet& alt_set,
                                   const RandomChoiceModel& mu);

// Per-menu probability table of an RCM without labels; same layout as
// StochasticChoiceFunction::probs(). Used for exact reconstruction checks.
std::vector<std::vector<Rational>> aggregate_probs(int n, const RandomChoiceModel& mu);

// A RUM given directly as weights on preferences.
using PreferenceDistribution = std::vector<std::pair<Preference, Rational>>;

RandomChoiceModel rum_from_preferences(int n, const PreferenceDistribution& mu);
// Inverse direction; throws InputError if some support member is irrational.
PreferenceDistribution preference_distribution(int n, const RandomChoiceModel& mu);

// The pair of P's two worst alternatives, and the domain A(P) that excludes
// it (size K-1). The latter requires n >= 3: at n = 2 the excluded pair is
// the only menu.
Menu worst_two(int n, const Preference& p);
std::vector<Menu> menus_excluding_worst_pair(int n, const Preference& p);

}  // namespace irum
