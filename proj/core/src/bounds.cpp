#include "irum/bounds.hpp"

#include <set>

namespace irum::bounds {

namespace {

void require_n_at_least_3(int n, const char* what) {
  if (n < 3) {
    throw InputError(std::string(what) + " is undefined at n = 2 (normalizer vanishes)");
  }
}

}  // namespace

Rational frechet_lower_bound(const StochasticChoiceFunction& rho,
                             const ChoiceFunction& c,
                             const std::vector<Menu>& collection) {
  if (collection.empty()) throw InputError("menu collection must be nonempty");
  std::set<Menu> distinct(collection.begin(), collection.end());
  if (distinct.size() != collection.size()) {
    throw InputError("menu collection must not repeat menus");
  }
  const int n = rho.n();
  Rational sum = 0;
  for (Menu menu : collection) {
    sum += rho.prob(menu, c.at(n, menu));
  }
  sum -= static_cast<int>(collection.size()) - 1;
  return sum > 0 ? sum : Rational(0);
}

Rational correlation_bound(const StochasticChoiceFunction& rho, const Preference& p) {
  const int n = rho.n();
  require_n_at_least_3(n, "the correlation bound");
  const auto domain = menus_excluding_worst_pair(n, p);
  const std::size_t big_k = enumerate_menus(n).size();
  Rational sum = 0;
  for (Menu menu : domain) {
    sum += rho.prob(menu, p.best_of(menu));
  }
  return sum / Rational(big_k - 2);
}

CorrelationReport satisfies_correlation_bounds(const StochasticChoiceFunction& rho) {
  const int n = rho.n();
  require_n_at_least_3(n, "the correlation bound");
  if (n > 6) {
    throw LimitError("the correlation-bound sweep enumerates N! preferences; limited to n <= 6");
  }
  CorrelationReport report;
  const auto& prefs = enumerate_preferences(n);
  report.values.reserve(prefs.size());
  for (const Preference& p : prefs) {
    Rational value = correlation_bound(rho, p);
    if (report.values.empty() || value > report.max_value) {
      report.max_value = value;
      report.argmax = p;
    }
    if (value > 1) report.violators.push_back(p);
    report.values.push_back(std::move(value));
  }
  report.satisfied = report.violators.empty();
  return report;
}

int agreement_count(int n, const Preference& p, const Preference& q) {
  ChoiceFunction cp = rational_choice_function(n, p);
  ChoiceFunction cq = rational_choice_function(n, q);
  const Menu excluded = worst_two(n, p);
  const auto& menus = enumerate_menus(n);
  int count = 0;
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    if (menus[mi] == excluded) continue;
    if (cp.choice[mi] == cq.choice[mi]) ++count;
  }
  return count;
}

AgreementMatrix agreement_matrix(int n) {
  require_n_at_least_3(n, "the agreement matrix");
  if (n > 6) throw LimitError("the agreement matrix enumerates N! preferences; limited to n <= 6");
  const auto& prefs = enumerate_preferences(n);
  AgreementMatrix m;
  m.n = n;
  m.preference_count = prefs.size();
  m.entries.resize(prefs.size() * prefs.size());

  std::vector<ChoiceFunction> cfs;
  cfs.reserve(prefs.size());
  for (const auto& p : prefs) cfs.push_back(rational_choice_function(n, p));
  const auto& menus = enumerate_menus(n);
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    const Menu excluded = worst_two(n, prefs[i]);
    for (std::size_t j = 0; j < prefs.size(); ++j) {
      int count = 0;
      for (std::size_t mi = 0; mi < menus.size(); ++mi) {
        if (menus[mi] == excluded) continue;
        if (cfs[i].choice[mi] == cfs[j].choice[mi]) ++count;
      }
      m.entries[i * prefs.size() + j] = count;
    }
  }
  return m;
}

Rational correlation_from_distribution(int n, const PreferenceDistribution& mu,
                                       const Preference& p) {
  require_n_at_least_3(n, "the correlation bound");
  const std::size_t big_k = enumerate_menus(n).size();
  Rational sum = 0;
  for (const auto& [q, w] : mu) {
    sum += w * agreement_count(n, p, q);
  }
  return sum / Rational(big_k - 2);
}

Rational weak_correlation_value(const StochasticChoiceFunction& rho, const Preference& p) {
  const int n = rho.n();
  require_n_at_least_3(n, "the normalized weak correlation value");
  const auto& menus = enumerate_menus(n);
  Rational sum = 0;
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    sum += rho.prob_at(mi, p.best_of(menus[mi]));
  }
  return sum / Rational(menus.size() - 1);
}

WeakCorrelationReport satisfies_weak_correlation_bounds(const StochasticChoiceFunction& rho) {
  const int n = rho.n();
  const auto& menus = enumerate_menus(n);
  const Rational limit = Rational(menus.size()) - 1;
  WeakCorrelationReport report;
  for (const Preference& p : enumerate_preferences(n)) {
    Rational sum = 0;
    for (std::size_t mi = 0; mi < menus.size(); ++mi) {
      sum += rho.prob_at(mi, p.best_of(menus[mi]));
    }
    if (sum > limit) report.violators.push_back(p);
    report.sums.push_back(std::move(sum));
  }
  report.satisfied = report.violators.empty();
  return report;
}

CorrelationDecomposition correlation_decomposition(const StochasticChoiceFunction& rho,
                                                   const ChoiceFunction& c) {
  const int n = rho.n();
  const auto& menus = enumerate_menus(n);
  if (c.menu_count() != menus.size()) {
    throw InputError("choice function does not cover the menu domain");
  }
  Rational sum = 0;
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    sum += rho.prob_at(mi, c.choice[mi]);
  }
  CorrelationDecomposition out;
  if (menus.size() < 2) {
    // n = 2 has K = 1; the normalizer K-1 vanishes, same guard as above.
    throw InputError("the correlation decomposition is undefined at n = 2");
  }
  out.concordant = sum / Rational(menus.size() - 1);
  out.discordant = Rational(1) - out.concordant;
  out.kendall = out.concordant - out.discordant;
  out.concordant_exceeds_one = out.concordant > 1;
  return out;
}

}  // namespace irum::bounds
