#pragma once

#include "irum/rational.hpp"

#include <utility>

namespace irum::demand {

// Patch shares for the two-budget setting: pi_i_j is the share choosing
// segment i from budget j. Walras' Law forces each budget's shares to sum
// to one.
struct TwoBudgetData {
  Rational pi_1_1;
  Rational pi_2_1;
  Rational pi_1_2;
  Rational pi_2_2;

  static TwoBudgetData make(Rational pi_1_1, Rational pi_2_1, Rational pi_1_2,
                            Rational pi_2_2);
};

// Joint shares of (choice from budget 1, choice from budget 2) pairs; q11
// is the irrational cell (segment 1 from both budgets).
struct ContingencyTable {
  Rational q11;
  Rational q12;  // pi_1_2 - q11
  Rational q21;  // pi_1_1 - q11
  Rational q22;  // 1 - pi_1_1 - pi_1_2 + q11

  bool operator==(const ContingencyTable&) const = default;
};

// Exact two-event interval for the irrational cell:
// [max{0, pi_1_1 + pi_1_2 - 1}, min{pi_1_1, pi_1_2}].
std::pair<Rational, Rational> irrational_share_bounds(const TwoBudgetData& data);

enum class ExtremalTarget { min_irrational, max_irrational };

// Table with q11 pinned to the chosen interval endpoint; the rest of the
// table is then forced by the marginals.
ContingencyTable extremal_table(const TwoBudgetData& data, ExtremalTarget target);

}  // namespace irum::demand
