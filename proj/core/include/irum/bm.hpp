#pragma once

#include "irum/core.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace irum::bm {

// Block-Marschak values for every nonempty subset (singletons included) and
// every member of it. values[mask] is indexed by alternative, with zeroes
// for non-members.
struct BMTable {
  int n = 0;
  std::vector<std::vector<Rational>> values;  // indexed by subset mask

  const Rational& value(std::uint16_t subset_mask, int alt) const;
};

BMTable compute_bm_table(const StochasticChoiceFunction& rho);

// Alternating superset sum BM(a, A) = sum_{B >= A} (-1)^{|B \ A|} rho(a, B),
// with the internal singleton extension rho(x, {x}) = 1. Requires a in A.
Rational bm_polynomial(const StochasticChoiceFunction& rho, int alt,
                       std::uint16_t subset_mask);

struct BMViolation {
  std::uint16_t subset_mask = 0;
  int alt = 0;
  Rational value;
};

struct RumVerdict {
  bool is_rum = false;
  std::vector<BMViolation> violations;  // every (a, A) with BM < 0
};

// rho is a RUM iff every Block-Marschak value is nonnegative.
RumVerdict is_rum(const StochasticChoiceFunction& rho);

// A representing distribution over rational choice functions, via the exact
// feasibility solver on the N! preference columns. Nonempty iff is_rum.
// Guarded at n <= 6.
std::optional<RandomChoiceModel> rum_representation(const StochasticChoiceFunction& rho);

// Full support iff every Block-Marschak value is strictly positive.
bool is_full_support_rum(const StochasticChoiceFunction& rho);

struct RegularityViolation {
  int alt = 0;
  Menu smaller;
  Menu larger;  // alt chosen more often here than in `smaller`
};

// All nested pairs A < B in the menu domain with rho(a, B) > rho(a, A);
// empty iff rho is regular.
std::vector<RegularityViolation> check_regularity(const StochasticChoiceFunction& rho);

}  // namespace irum::bm
