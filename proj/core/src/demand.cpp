#include "irum/demand.hpp"

#include "irum/core.hpp"

#include <algorithm>

namespace irum::demand {

TwoBudgetData TwoBudgetData::make(Rational pi_1_1, Rational pi_2_1, Rational pi_1_2,
                                  Rational pi_2_2) {
  for (const Rational* share : {&pi_1_1, &pi_2_1, &pi_1_2, &pi_2_2}) {
    if (*share < 0 || *share > 1) throw InputError("patch shares must lie in [0, 1]");
  }
  if (pi_1_1 + pi_2_1 != 1 || pi_1_2 + pi_2_2 != 1) {
    throw InputError("each budget's patch shares must sum to 1");
  }
  return {std::move(pi_1_1), std::move(pi_2_1), std::move(pi_1_2), std::move(pi_2_2)};
}

std::pair<Rational, Rational> irrational_share_bounds(const TwoBudgetData& data) {
  Rational lo = data.pi_1_1 + data.pi_1_2 - 1;
  if (lo < 0) lo = 0;
  Rational hi = std::min(data.pi_1_1, data.pi_1_2);
  return {std::move(lo), std::move(hi)};
}

ContingencyTable extremal_table(const TwoBudgetData& data, ExtremalTarget target) {
  auto [lo, hi] = irrational_share_bounds(data);
  ContingencyTable table;
  table.q11 = target == ExtremalTarget::min_irrational ? lo : hi;
  table.q12 = data.pi_1_2 - table.q11;
  table.q21 = data.pi_1_1 - table.q11;
  table.q22 = Rational(1) - data.pi_1_1 - data.pi_1_2 + table.q11;
  return table;
}

}  // namespace irum::demand
