#include "irum/core.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace irum {

namespace {

struct MenuTable {
  std::vector<Menu> menus;              // ascending mask, popcount >= 2
  std::vector<std::int32_t> index_of;   // mask -> position, -1 if absent
};

const MenuTable& menu_table(int n) {
  if (n < 2 || n > kMaxAlternatives) {
    throw InputError("alternative count must be between 2 and 12");
  }
  static const std::array<MenuTable, kMaxAlternatives + 1> tables = [] {
    std::array<MenuTable, kMaxAlternatives + 1> out;
    for (int m = 2; m <= kMaxAlternatives; ++m) {
      MenuTable& t = out[m];
      const std::uint32_t full = (1u << m);
      t.index_of.assign(full, -1);
      for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (std::popcount(mask) >= 2) {
          t.index_of[mask] = static_cast<std::int32_t>(t.menus.size());
          t.menus.push_back(Menu{static_cast<std::uint16_t>(mask)});
        }
      }
    }
    return out;
  }();
  return tables[n];
}

}  // namespace

AlternativeSet::AlternativeSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() < 2 || labels_.size() > static_cast<std::size_t>(kMaxAlternatives)) {
    throw InputError("alternative set must have between 2 and 12 labels");
  }
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InputError("alternative labels must be nonempty");
    if (!seen.insert(label).second) {
      throw InputError("duplicate alternative label: " + label);
    }
  }
}

int AlternativeSet::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw InputError("unknown alternative label: " + std::string(label));
}

int Menu::size() const { return std::popcount(mask); }

std::vector<int> Menu::members() const {
  std::vector<int> out;
  for (int i = 0; i < kMaxAlternatives; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

Menu make_menu(std::initializer_list<int> alts) {
  Menu m;
  for (int a : alts) {
    if (a < 0 || a >= kMaxAlternatives) throw InputError("alternative index out of range");
    m.mask |= static_cast<std::uint16_t>(1u << a);
  }
  return m;
}

std::string menu_to_string(const AlternativeSet& alt_set, Menu menu) {
  std::string out;
  for (int a : menu.members()) {
    if (!out.empty()) out += ',';
    out += alt_set.label(a);
  }
  return "{" + out + "}";
}

const std::vector<Menu>& enumerate_menus(int n) { return menu_table(n).menus; }

std::size_t menu_index(int n, Menu menu) {
  const MenuTable& t = menu_table(n);
  if (menu.mask >= t.index_of.size() || t.index_of[menu.mask] < 0) {
    throw InputError("menu is not part of the analysis domain for this alternative set");
  }
  return static_cast<std::size_t>(t.index_of[menu.mask]);
}

int Preference::best_of(Menu menu) const {
  for (std::uint8_t alt : ranking) {
    if (menu.contains(alt)) return alt;
  }
  throw InputError("menu has no member ranked by this preference");
}

Preference make_preference(std::initializer_list<int> best_first) {
  Preference p;
  for (int a : best_first) p.ranking.push_back(static_cast<std::uint8_t>(a));
  return p;
}

std::string preference_to_string(const AlternativeSet& alt_set, const Preference& p) {
  std::string out;
  for (std::uint8_t alt : p.ranking) {
    if (!out.empty()) out += '>';
    out += alt_set.label(alt);
  }
  return out;
}

Preference parse_preference(const AlternativeSet& alt_set, std::string_view text) {
  Preference p;
  std::vector<bool> seen(alt_set.size(), false);
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('>', begin);
    std::string_view token = text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin);
    int alt = alt_set.index_of(token);
    if (seen[alt]) throw InputError("preference lists an alternative twice: " + std::string(token));
    seen[alt] = true;
    p.ranking.push_back(static_cast<std::uint8_t>(alt));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  if (p.n() != alt_set.size()) {
    throw InputError("preference must rank every alternative exactly once");
  }
  return p;
}

const std::vector<Preference>& enumerate_preferences(int n) {
  if (n < 2) throw InputError("preference enumeration needs n >= 2");
  if (n > 6) throw LimitError("preference enumeration is limited to n <= 6 (N! growth)");
  static const std::array<std::vector<Preference>, 7> tables = [] {
    std::array<std::vector<Preference>, 7> out;
    for (int m = 2; m <= 6; ++m) {
      std::vector<std::uint8_t> ranking(m);
      for (int i = 0; i < m; ++i) ranking[i] = static_cast<std::uint8_t>(i);
      do {
        out[m].push_back(Preference{ranking});
      } while (std::next_permutation(ranking.begin(), ranking.end()));
    }
    return out;
  }();
  return tables[n];
}

ChoiceFunction rational_choice_function(int n, const Preference& p) {
  if (p.n() != n) throw InputError("preference has the wrong number of alternatives");
  const auto& menus = enumerate_menus(n);
  ChoiceFunction c;
  c.choice.reserve(menus.size());
  for (Menu menu : menus) {
    c.choice.push_back(static_cast<std::uint8_t>(p.best_of(menu)));
  }
  return c;
}

std::optional<Preference> is_rational(int n, const ChoiceFunction& c) {
  const auto& menus = enumerate_menus(n);
  if (c.menu_count() != menus.size()) {
    throw InputError("choice function does not cover the menu domain");
  }
  // Tournament from binary menus; transitive iff the out-degrees are a
  // permutation of {0..n-1}.
  std::vector<int> wins(n, 0);
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    if (menus[mi].size() == 2) wins[c.choice[mi]] += 1;
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return wins[a] > wins[b]; });
  for (int i = 0; i < n; ++i) {
    if (wins[order[i]] != n - 1 - i) return std::nullopt;  // cycle somewhere
  }
  Preference p;
  p.ranking.assign(order.begin(), order.end());
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    if (p.best_of(menus[mi]) != c.choice[mi]) return std::nullopt;
  }
  return p;
}

std::vector<ChoiceFunction> enumerate_choice_functions(int n) {
  if (n > 4) {
    throw LimitError("choice-function enumeration is limited to n <= 4 (20736 functions)");
  }
  const auto& menus = enumerate_menus(n);
  std::vector<std::vector<int>> members;
  members.reserve(menus.size());
  for (Menu m : menus) members.push_back(m.members());

  std::vector<ChoiceFunction> out;
  ChoiceFunction current;
  current.choice.assign(menus.size(), 0);
  std::vector<std::size_t> digit(menus.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < menus.size(); ++i) {
      current.choice[i] = static_cast<std::uint8_t>(members[i][digit[i]]);
    }
    out.push_back(current);
    // increment mixed-radix counter, last menu fastest
    std::size_t pos = menus.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < members[pos].size()) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<ChoiceFunction> enumerate_irrational_choice_functions(int n) {
  std::vector<ChoiceFunction> out;
  for (auto& c : enumerate_choice_functions(n)) {
    if (!is_rational(n, c)) out.push_back(std::move(c));
  }
  return out;
}

StochasticChoiceFunction::StochasticChoiceFunction(
    AlternativeSet alt_set, std::vector<std::vector<Rational>> probs)
    : alt_set_(std::move(alt_set)), probs_(std::move(probs)) {
  const auto& menus = enumerate_menus(alt_set_.size());
  if (probs_.size() != menus.size()) {
    throw InputError("stochastic choice function must cover every menu of the domain");
  }
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    const auto& row = probs_[mi];
    if (row.size() != static_cast<std::size_t>(alt_set_.size())) {
      throw InputError("per-menu probability vector has the wrong length");
    }
    Rational sum = 0;
    for (int a = 0; a < alt_set_.size(); ++a) {
      if (row[a] < 0) throw InputError("negative choice probability");
      if (!menus[mi].contains(a)) {
        if (row[a] != 0) throw InputError("positive probability on an alternative outside its menu");
      }
      sum += row[a];
    }
    if (sum != 1) {
      throw InputError("menu probabilities must sum to 1 (menu " +
                       menu_to_string(alt_set_, menus[mi]) + " sums to " + sum.str() + ")");
    }
  }
}

const Rational& StochasticChoiceFunction::prob(Menu menu, int alt) const {
  return probs_.at(menu_index(n(), menu)).at(alt);
}

StochasticChoiceFunction uniform_scf(const AlternativeSet& alt_set) {
  const auto& menus = enumerate_menus(alt_set.size());
  std::vector<std::vector<Rational>> probs(menus.size(),
                                           std::vector<Rational>(alt_set.size(), 0));
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    for (int a : menus[mi].members()) {
      probs[mi][a] = Rational(1, menus[mi].size());
    }
  }
  return {alt_set, std::move(probs)};
}

RandomChoiceModel RandomChoiceModel::make(std::vector<Entry> support) {
  std::map<ChoiceFunction, Rational> merged;
  for (auto& [c, w] : support) {
    if (w < 0) throw InputError("negative weight in random choice model");
    if (w == 0) continue;
    merged[std::move(c)] += w;
  }
  if (merged.empty()) throw InputError("random choice model has empty support");
  std::size_t menu_count = merged.begin()->first.menu_count();
  Rational total = 0;
  RandomChoiceModel mu;
  for (auto& [c, w] : merged) {
    if (c.menu_count() != menu_count) {
      throw InputError("support choice functions cover different menu domains");
    }
    total += w;
    mu.support_.emplace_back(c, w);
  }
  if (total != 1) {
    throw InputError("random choice model weights must sum to 1, got " + total.str());
  }
  return mu;
}

Rational RandomChoiceModel::weight_of(const ChoiceFunction& c) const {
  for (const auto& [f, w] : support_) {
    if (f == c) return w;
  }
  return 0;
}

std::vector<std::vector<Rational>> aggregate_probs(int n, const RandomChoiceModel& mu) {
  const auto& menus = enumerate_menus(n);
  std::vector<std::vector<Rational>> probs(menus.size(), std::vector<Rational>(n, 0));
  for (const auto& [c, w] : mu.support()) {
    if (c.menu_count() != menus.size()) {
      throw InputError("random choice model does not match the alternative set");
    }
    for (std::size_t mi = 0; mi < menus.size(); ++mi) {
      probs[mi][c.choice[mi]] += w;
    }
  }
  return probs;
}

StochasticChoiceFunction aggregate(const AlternativeSet& alt_set,
                                   const RandomChoiceModel& mu) {
  return {alt_set, aggregate_probs(alt_set.size(), mu)};
}

RandomChoiceModel rum_from_preferences(int n, const PreferenceDistribution& mu) {
  std::vector<RandomChoiceModel::Entry> support;
  support.reserve(mu.size());
  for (const auto& [p, w] : mu) {
    support.emplace_back(rational_choice_function(n, p), w);
  }
  return RandomChoiceModel::make(std::move(support));
}

PreferenceDistribution preference_distribution(int n, const RandomChoiceModel& mu) {
  PreferenceDistribution out;
  for (const auto& [c, w] : mu.support()) {
    auto p = is_rational(n, c);
    if (!p) throw InputError("random choice model has irrational support; expected a RUM");
    out.emplace_back(std::move(*p), w);
  }
  return out;
}

Menu worst_two(int n, const Preference& p) {
  if (p.n() != n) throw InputError("preference has the wrong number of alternatives");
  return make_menu({p.ranking[n - 2], p.ranking[n - 1]});
}

std::vector<Menu> menus_excluding_worst_pair(int n, const Preference& p) {
  if (n == 2) {
    throw InputError("the domain excluding the worst pair is empty at n = 2");
  }
  Menu excluded = worst_two(n, p);
  std::vector<Menu> out;
  for (Menu m : enumerate_menus(n)) {
    if (m != excluded) out.push_back(m);
  }
  return out;
}

}  // namespace irum
