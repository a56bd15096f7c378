#include "irum/represent.hpp"

#include "irum/bm.hpp"
#include "irum/bounds.hpp"
#include "irum/lp.hpp"

#include <algorithm>
#include <map>

namespace irum::represent {

namespace {

void validate_distribution(int n, const PreferenceDistribution& mu) {
  if (mu.empty()) throw InputError("preference distribution has empty support");
  Rational total = 0;
  std::vector<Preference> seen;
  for (const auto& [p, w] : mu) {
    if (p.n() != n) throw InputError("preference has the wrong number of alternatives");
    if (w <= 0) throw InputError("preference weights must be strictly positive");
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) {
      throw InputError("duplicate preference in distribution");
    }
    seen.push_back(p);
    total += w;
  }
  if (total != 1) {
    throw InputError("preference weights must sum to 1, got " + total.str());
  }
}

// First n-2 ranking positions; two preferences are equivalent for the
// decomposition when these agree (they then differ at most in the order of
// their two worst alternatives).
std::vector<std::uint8_t> ranking_prefix(const Preference& p) {
  return {p.ranking.begin(), p.ranking.end() - 2};
}

ChoiceFunction with_choice_at(int n, const ChoiceFunction& base, Menu menu, int alt) {
  ChoiceFunction c = base;
  c.choice[menu_index(n, menu)] = static_cast<std::uint8_t>(alt);
  return c;
}

void check_irrational(int n, const ChoiceFunction& c, const char* where) {
  if (is_rational(n, c)) {
    throw std::logic_error(std::string("constructed choice function is rational in ") + where);
  }
}

}  // namespace

IrumVerdict is_irum(const StochasticChoiceFunction& rho) {
  const int n = rho.n();
  IrumVerdict verdict;
  verdict.is_rum = bm::is_rum(rho).is_rum;
  if (n == 2) {
    verdict.bounds_ok = false;
    verdict.is_irum = false;
    verdict.note = "no irrational choice functions exist at n = 2";
    return verdict;
  }
  if (n > 6) {
    throw LimitError("the irrational-representation verdict sweeps N! preferences; limited to n <= 6");
  }
  auto report = bounds::satisfies_correlation_bounds(rho);
  verdict.bounds_ok = report.satisfied;
  verdict.violators = std::move(report.violators);
  verdict.is_irum = verdict.is_rum && verdict.bounds_ok;
  if (!verdict.is_irum) return verdict;

  if (n > 4) {
    verdict.note = "witness construction enumerates all choice functions and is available at n <= 4 only";
    return verdict;
  }
  verdict.witness = lp::find_representation(rho, enumerate_irrational_choice_functions(n));
  if (!verdict.witness) {
    // Should be unreachable when the verdict is positive; reported rather
    // than thrown so the verdict itself stays comparable against oracles.
    verdict.note = "bounds hold but the feasibility solver found no all-irrational model";
  }
  return verdict;
}

RandomChoiceModel dual_irum_construction(int n, const Preference& p1,
                                         const Preference& p2, const Rational& m1,
                                         const Rational& m2) {
  if (p1 == p2) throw InputError("the two preferences must be distinct");
  if (m1 + m2 != 1) throw InputError("weights must sum to 1");
  if (m1 <= 0 || m1 > m2) throw InputError("weights must satisfy 0 < m1 <= m2");
  const int big_k = static_cast<int>(enumerate_menus(n).size());
  const int agreements = bounds::agreement_count(n, p2, p1);
  const int k = big_k - 2 - agreements;
  if (k < 1) {
    throw InputError("the preferences agree everywhere off the worst pair; no swap menus exist");
  }
  if (m1 * agreements + m2 * (big_k - 1) != big_k - 2) {
    throw InputError("weights are not at the correlation-bound equality point for p2");
  }

  const ChoiceFunction c1 = rational_choice_function(n, p1);
  const ChoiceFunction c2 = rational_choice_function(n, p2);
  std::vector<Menu> swap_menus;
  for (Menu menu : menus_excluding_worst_pair(n, p2)) {
    if (c2.at(n, menu) != c1.at(n, menu)) swap_menus.push_back(menu);
  }
  if (static_cast<int>(swap_menus.size()) != k + 1) {
    throw std::logic_error("swap-menu count does not match K-1-n(p2,p1)");
  }

  std::vector<RandomChoiceModel::Entry> support;
  const Rational weight(1, k + 1);
  for (Menu menu : swap_menus) {
    ChoiceFunction swapped = with_choice_at(n, c2, menu, c1.at(n, menu));
    support.emplace_back(std::move(swapped), weight);
  }
  // The excluded menu (p2's worst pair) is outside the swap domain but the
  // two preferences may still disagree there; exactly m1 = 1/(k+1) of the
  // mass must follow p1 on it, so the first swap function carries that
  // choice too. Its rationality violation lives on other menus.
  const Menu excluded = worst_two(n, p2);
  if (c1.at(n, excluded) != c2.at(n, excluded)) {
    support.front().first =
        with_choice_at(n, support.front().first, excluded, c1.at(n, excluded));
  }
  for (const auto& [c, w] : support) {
    check_irrational(n, c, "dual_irum_construction");
  }
  RandomChoiceModel pool = RandomChoiceModel::make(std::move(support));

  RandomChoiceModel dual = RandomChoiceModel::make({{c1, m1}, {c2, m2}});
  if (aggregate_probs(n, pool) != aggregate_probs(n, dual)) {
    throw std::logic_error("swap pool does not aggregate to the two-preference model");
  }
  return pool;
}

DualDecomposition dual_decomposition(int n, const PreferenceDistribution& mu,
                                     const Preference& p0) {
  validate_distribution(n, mu);
  if (p0.n() != n) throw InputError("anchor preference has the wrong number of alternatives");
  if (n > 6) throw LimitError("dual decomposition verifies N! correlation bounds; limited to n <= 6");

  for (const Preference& p : enumerate_preferences(n)) {
    Rational value = bounds::correlation_from_distribution(n, mu, p);
    if (value > 1) {
      throw InputError("distribution violates the correlation bounds; decomposition undefined");
    }
  }
  if (bounds::correlation_from_distribution(n, mu, p0) != 1) {
    throw InputError("correlation bound must hold with equality at the anchor preference");
  }

  const int big_k = static_cast<int>(enumerate_menus(n).size());
  DualDecomposition out;
  out.anchor = p0;
  Rational delta_total = 0;
  for (const auto& [p, w] : mu) {
    if (p == p0) continue;
    const int agreements = bounds::agreement_count(n, p0, p);
    if (agreements == big_k - 2) {
      throw InputError(
          "component for a preference agreeing with the anchor on all but one menu degenerates "
          "to a single preference; decomposition undefined");
    }
    if (agreements == big_k - 1) {
      throw InputError(
          "support preference agrees with the anchor everywhere off the worst pair; its "
          "component weight formula divides by zero and the decomposition cannot carry its mass");
    }
    DualComponent component;
    component.delta = w * (big_k - 1 - agreements);
    component.dual = {
        {p0, Rational(big_k - 2 - agreements, big_k - 1 - agreements)},
        {p, Rational(1, big_k - 1 - agreements)},
    };
    delta_total += component.delta;
    out.components.push_back(std::move(component));
  }
  if (delta_total != 1) {
    throw std::logic_error("component weights do not sum to 1");
  }

  // Exact reconstruction and per-component equality at the anchor.
  std::map<Preference, Rational> mixed;
  for (const auto& component : out.components) {
    if (bounds::correlation_from_distribution(n, component.dual, p0) != 1) {
      throw std::logic_error("component is not at correlation-bound equality at the anchor");
    }
    for (const Preference& p : enumerate_preferences(n)) {
      if (bounds::correlation_from_distribution(n, component.dual, p) > 1) {
        throw std::logic_error("component violates a correlation bound");
      }
    }
    for (const auto& [p, w] : component.dual) {
      mixed[p] += component.delta * w;
    }
  }
  std::map<Preference, Rational> original(mu.begin(), mu.end());
  for (auto& [p, w] : mixed) {
    if (w == 0) continue;
    auto it = original.find(p);
    if (it == original.end() || it->second != w) {
      throw std::logic_error("components do not mix back to the input distribution");
    }
  }
  for (const auto& [p, w] : original) {
    if (mixed.find(p) == mixed.end() || mixed[p] != w) {
      throw std::logic_error("components do not mix back to the input distribution");
    }
  }
  return out;
}

PirumVerdict is_pirum(const StochasticChoiceFunction& rho) {
  const int n = rho.n();
  PirumVerdict verdict;
  verdict.is_rum = bm::is_rum(rho).is_rum;
  const auto& menus = enumerate_menus(n);
  for (std::size_t i = 0; i < menus.size() && !verdict.condition3; ++i) {
    for (std::size_t j = i + 1; j < menus.size() && !verdict.condition3; ++j) {
      const std::uint16_t shared = menus[i].mask & menus[j].mask;
      if (std::popcount(shared) < 2) continue;
      for (int a = 0; a < n && !verdict.condition3; ++a) {
        if (!((shared >> a) & 1u)) continue;
        for (int b = a + 1; b < n; ++b) {
          if (!((shared >> b) & 1u)) continue;
          if (rho.prob_at(i, a) > 0 && rho.prob_at(i, b) > 0 &&
              rho.prob_at(j, a) > 0 && rho.prob_at(j, b) > 0) {
            verdict.condition3 = true;
            verdict.witness_menus = {menus[i], menus[j], a, b};
            break;
          }
        }
      }
    }
  }
  verdict.is_pirum = verdict.is_rum && verdict.condition3;
  return verdict;
}

RandomChoiceModel pirum_representation(const StochasticChoiceFunction& rho,
                                       const PreferenceDistribution& mu) {
  const int n = rho.n();
  validate_distribution(n, mu);
  if (aggregate_probs(n, rum_from_preferences(n, mu)) != rho.probs()) {
    throw InputError("the supplied distribution does not represent rho");
  }
  if (!is_pirum(rho).condition3) {
    throw InputError("no menu pair supports two common alternatives; no partially irrational model exists");
  }

  // A menu of size >= 3 with two supported alternatives always exists when
  // condition3 holds; smallest mask, then smallest alternative pair.
  const auto& menus = enumerate_menus(n);
  Menu chosen{};
  int alt_a = -1;
  int alt_b = -1;
  for (std::size_t mi = 0; mi < menus.size() && alt_a < 0; ++mi) {
    if (menus[mi].size() < 3) continue;
    for (int a = 0; a < n && alt_a < 0; ++a) {
      if (!menus[mi].contains(a) || rho.prob_at(mi, a) == 0) continue;
      for (int b = a + 1; b < n; ++b) {
        if (!menus[mi].contains(b) || rho.prob_at(mi, b) == 0) continue;
        chosen = menus[mi];
        alt_a = a;
        alt_b = b;
        break;
      }
    }
  }
  if (alt_a < 0) {
    throw std::logic_error("condition3 holds but no menu of size >= 3 has two supported alternatives");
  }

  // Lexicographically smallest support preference per alternative.
  PreferenceDistribution sorted = mu;
  std::sort(sorted.begin(), sorted.end());
  const Preference* pref_a = nullptr;
  const Preference* pref_b = nullptr;
  Rational weight_a, weight_b;
  for (const auto& [p, w] : sorted) {
    if (!pref_a && p.best_of(chosen) == alt_a) {
      pref_a = &p;
      weight_a = w;
    }
    if (!pref_b && p.best_of(chosen) == alt_b) {
      pref_b = &p;
      weight_b = w;
    }
  }
  if (!pref_a || !pref_b) {
    throw std::logic_error("supported alternative has no maximizing support preference");
  }

  // Order so the lighter preference is the one whose mass moves onto both
  // swap functions.
  const Preference* light = pref_a;
  const Preference* heavy = pref_b;
  Rational light_w = weight_a, heavy_w = weight_b;
  if (light_w > heavy_w) {
    std::swap(light, heavy);
    std::swap(light_w, heavy_w);
  }

  const ChoiceFunction c_light = rational_choice_function(n, *light);
  const ChoiceFunction c_heavy = rational_choice_function(n, *heavy);
  ChoiceFunction swap_light = with_choice_at(n, c_light, chosen, c_heavy.at(n, chosen));
  ChoiceFunction swap_heavy = with_choice_at(n, c_heavy, chosen, c_light.at(n, chosen));
  check_irrational(n, swap_light, "pirum_representation");
  check_irrational(n, swap_heavy, "pirum_representation");

  std::vector<RandomChoiceModel::Entry> support;
  for (const auto& [p, w] : sorted) {
    if (p == *light || p == *heavy) continue;
    support.emplace_back(rational_choice_function(n, p), w);
  }
  support.emplace_back(std::move(swap_light), light_w);
  support.emplace_back(std::move(swap_heavy), light_w);
  if (heavy_w - light_w > 0) {
    support.emplace_back(c_heavy, heavy_w - light_w);
  }
  RandomChoiceModel result = RandomChoiceModel::make(std::move(support));
  if (aggregate_probs(n, result) != rho.probs()) {
    throw std::logic_error("partially irrational model does not re-aggregate to rho");
  }
  return result;
}

IrumDualSplit rum_decompose_irum_dual(int n, const PreferenceDistribution& mu) {
  validate_distribution(n, mu);

  std::map<Preference, Rational> residual(mu.begin(), mu.end());
  std::map<ChoiceFunction, Rational> pool;

  while (n >= 3 && residual.size() >= 3) {
    // Lightest support preference overall, heaviest one outside its
    // equivalence class; lexicographic tie-breaks come from map order.
    auto lightest = residual.begin();
    for (auto it = residual.begin(); it != residual.end(); ++it) {
      if (it->second < lightest->second) lightest = it;
    }
    const auto prefix = ranking_prefix(lightest->first);
    auto heaviest = residual.end();
    for (auto it = residual.begin(); it != residual.end(); ++it) {
      if (ranking_prefix(it->first) == prefix) continue;
      if (heaviest == residual.end() || it->second > heaviest->second) heaviest = it;
    }
    if (heaviest == residual.end()) {
      // Classes hold at most two preferences (they fix all but the worst
      // two), so three support members always span two classes.
      throw std::logic_error("support of size >= 3 fell into a single equivalence class");
    }

    const Preference p_light = lightest->first;
    const Preference p_heavy = heaviest->first;
    const Rational moved = lightest->second;

    // First position where the rankings differ is above the worst pair;
    // the menu {x, y, z} then separates the two maxima.
    std::size_t pos = 0;
    while (p_light.ranking[pos] == p_heavy.ranking[pos]) ++pos;
    const int x = p_light.ranking[pos];
    const int y = p_heavy.ranking[pos];
    std::uint16_t above = 0;
    for (std::size_t i = 0; i < pos; ++i) above |= 1u << p_light.ranking[i];
    int z = -1;
    for (int alt = 0; alt < n; ++alt) {
      if (alt != x && alt != y && !((above >> alt) & 1u)) {
        z = alt;
        break;
      }
    }
    if (z < 0) throw std::logic_error("no third alternative available for the swap menu");
    const Menu triple = make_menu({x, y, z});

    const ChoiceFunction c_light = rational_choice_function(n, p_light);
    const ChoiceFunction c_heavy = rational_choice_function(n, p_heavy);
    ChoiceFunction swap_light = with_choice_at(n, c_light, triple, y);
    ChoiceFunction swap_heavy = with_choice_at(n, c_heavy, triple, x);
    check_irrational(n, swap_light, "rum_decompose_irum_dual");
    check_irrational(n, swap_heavy, "rum_decompose_irum_dual");

    pool[swap_light] += moved;
    pool[swap_heavy] += moved;
    residual.erase(p_light);
    auto heavy_it = residual.find(p_heavy);
    heavy_it->second -= moved;
    if (heavy_it->second == 0) residual.erase(heavy_it);
  }

  Rational pool_mass = 0;
  for (const auto& [c, w] : pool) pool_mass += w;

  std::vector<RandomChoiceModel::Entry> dual_support;
  for (const auto& [p, w] : residual) {
    dual_support.emplace_back(rational_choice_function(n, p), w / (1 - pool_mass));
  }
  IrumDualSplit split{pool_mass, std::nullopt,
                      RandomChoiceModel::make(std::move(dual_support))};

  if (pool_mass > 0) {
    std::vector<RandomChoiceModel::Entry> pool_support;
    for (const auto& [c, w] : pool) pool_support.emplace_back(c, w / pool_mass);
    split.irrational_pool = RandomChoiceModel::make(std::move(pool_support));

    // Exact reconstruction: w * pool + (1-w) * dual = input, elementwise.
    auto pool_probs = aggregate_probs(n, *split.irrational_pool);
    auto dual_probs = aggregate_probs(n, split.residual_dual);
    auto input_probs = aggregate_probs(n, rum_from_preferences(n, mu));
    for (std::size_t mi = 0; mi < input_probs.size(); ++mi) {
      for (int a = 0; a < n; ++a) {
        if (pool_mass * pool_probs[mi][a] + (1 - pool_mass) * dual_probs[mi][a] !=
            input_probs[mi][a]) {
          throw std::logic_error("split does not mix back to the input model");
        }
      }
    }
  }
  return split;
}

bool sufficient_quarter(int n, const PreferenceDistribution& mu) {
  validate_distribution(n, mu);
  if (n < 3) throw InputError("the quarter screen needs n >= 3");
  const Rational quarter(1, 4);
  for (const auto& [p, w] : mu) {
    if (w > quarter) return false;
  }
  return true;
}

std::optional<Preference> necessary_mass_cap(int n, const PreferenceDistribution& mu) {
  validate_distribution(n, mu);
  if (n < 3) throw InputError("the mass-cap screen needs n >= 3");
  const int big_k = static_cast<int>(enumerate_menus(n).size());
  const Rational cap(big_k - 2, big_k - 1);
  PreferenceDistribution sorted = mu;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [p, w] : sorted) {
    if (w > cap) return p;
  }
  return std::nullopt;
}

}  // namespace irum::represent
