#include "irum/bm.hpp"

#include "irum/lp.hpp"

#include <bit>

namespace irum::bm {

namespace {

// rho with the singleton extension rho(x, {x}) = 1.
Rational rho_extended(const StochasticChoiceFunction& rho, int alt,
                      std::uint16_t subset_mask) {
  if (std::popcount(subset_mask) == 1) {
    return subset_mask == (1u << alt) ? Rational(1) : Rational(0);
  }
  return rho.prob_at(menu_index(rho.n(), Menu{subset_mask}), alt);
}

}  // namespace

const Rational& BMTable::value(std::uint16_t subset_mask, int alt) const {
  if (subset_mask >= values.size() || !((subset_mask >> alt) & 1u)) {
    throw InputError("Block-Marschak value requested for an alternative outside the subset");
  }
  return values[subset_mask][alt];
}

Rational bm_polynomial(const StochasticChoiceFunction& rho, int alt,
                       std::uint16_t subset_mask) {
  const int n = rho.n();
  if (subset_mask == 0 || (subset_mask >> n) != 0 || !((subset_mask >> alt) & 1u)) {
    throw InputError("Block-Marschak polynomial needs a nonempty subset containing the alternative");
  }
  const std::uint16_t full = static_cast<std::uint16_t>((1u << n) - 1);
  const std::uint16_t complement = static_cast<std::uint16_t>(full & ~subset_mask);
  Rational sum = 0;
  // Walk every superset B = A | extra, extra over subsets of the complement.
  std::uint16_t extra = complement;
  for (;;) {
    const std::uint16_t superset = static_cast<std::uint16_t>(subset_mask | extra);
    Rational term = rho_extended(rho, alt, superset);
    if (std::popcount(extra) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    if (extra == 0) break;
    extra = static_cast<std::uint16_t>((extra - 1) & complement);
  }
  return sum;
}

BMTable compute_bm_table(const StochasticChoiceFunction& rho) {
  const int n = rho.n();
  BMTable table;
  table.n = n;
  table.values.assign(1u << n, {});
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    auto& row = table.values[mask];
    row.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      if ((mask >> a) & 1u) {
        row[a] = bm_polynomial(rho, a, static_cast<std::uint16_t>(mask));
      }
    }
  }
  return table;
}

RumVerdict is_rum(const StochasticChoiceFunction& rho) {
  BMTable table = compute_bm_table(rho);
  RumVerdict verdict;
  verdict.is_rum = true;
  for (std::uint32_t mask = 1; mask < table.values.size(); ++mask) {
    for (int a = 0; a < table.n; ++a) {
      if (((mask >> a) & 1u) && table.values[mask][a] < 0) {
        verdict.is_rum = false;
        verdict.violations.push_back(
            {static_cast<std::uint16_t>(mask), a, table.values[mask][a]});
      }
    }
  }
  return verdict;
}

std::optional<RandomChoiceModel> rum_representation(const StochasticChoiceFunction& rho) {
  const int n = rho.n();
  if (n > 6) {
    throw LimitError("representation over rational choice functions is limited to n <= 6");
  }
  std::vector<ChoiceFunction> rational_candidates;
  for (const Preference& p : enumerate_preferences(n)) {
    rational_candidates.push_back(rational_choice_function(n, p));
  }
  return lp::find_representation(rho, rational_candidates);
}

bool is_full_support_rum(const StochasticChoiceFunction& rho) {
  BMTable table = compute_bm_table(rho);
  for (std::uint32_t mask = 1; mask < table.values.size(); ++mask) {
    for (int a = 0; a < table.n; ++a) {
      if (((mask >> a) & 1u) && table.values[mask][a] <= 0) return false;
    }
  }
  return true;
}

std::vector<RegularityViolation> check_regularity(const StochasticChoiceFunction& rho) {
  const int n = rho.n();
  const auto& menus = enumerate_menus(n);
  std::vector<RegularityViolation> out;
  for (std::size_t si = 0; si < menus.size(); ++si) {
    for (std::size_t bi = 0; bi < menus.size(); ++bi) {
      const Menu small = menus[si];
      const Menu big = menus[bi];
      if (small == big || (small.mask & big.mask) != small.mask) continue;
      for (int a : small.members()) {
        if (rho.prob_at(bi, a) > rho.prob_at(si, a)) {
          out.push_back({a, small, big});
        }
      }
    }
  }
  return out;
}

}  // namespace irum::bm
