#pragma once

#include "irum/core.hpp"

#include <utility>
#include <vector>

namespace irum::bounds {

// Correlation values C_P over the full preference space, in lexicographic
// preference order. A preference violates when its value exceeds one.
struct CorrelationReport {
  std::vector<Rational> values;       // aligned with enumerate_preferences(n)
  std::vector<Preference> violators;  // C_P > 1
  Rational max_value;
  Preference argmax;
  bool satisfied = false;
};

// max{0, sum_{A in collection} rho(c(A), A) - (|collection| - 1)}: the exact
// lower bound on the mass any representing model places on the joint
// agreement event. With the full menu domain it lower-bounds mu(c) itself.
Rational frechet_lower_bound(const StochasticChoiceFunction& rho,
                             const ChoiceFunction& c,
                             const std::vector<Menu>& collection);

// C_P = (1/(K-2)) sum over the domain excluding P's worst pair of the mass
// on P's choices. Requires n >= 3.
Rational correlation_bound(const StochasticChoiceFunction& rho, const Preference& p);

// Evaluates C_P for all N! preferences; 3 <= n <= 6.
CorrelationReport satisfies_correlation_bounds(const StochasticChoiceFunction& rho);

// Preference-space form of the same value for a RUM given by its
// distribution: C_P = (1/(K-2)) sum_P' mu(P') n(P, P').
Rational correlation_from_distribution(int n, const PreferenceDistribution& mu,
                                       const Preference& p);

// n(P, P') = number of menus in the row preference's restricted domain on
// which c_P and c_P' agree. The matrix is ordered (rows use the row
// preference's domain), not symmetric in general.
struct AgreementMatrix {
  int n = 0;
  std::size_t preference_count = 0;
  std::vector<int> entries;  // row-major over lexicographic preference indices

  int at(std::size_t row, std::size_t col) const {
    return entries.at(row * preference_count + col);
  }
};

AgreementMatrix agreement_matrix(int n);  // 3 <= n <= 6

// Single n(P, Q) without building the full matrix.
int agreement_count(int n, const Preference& p, const Preference& q);

// Weak form: normalizer K-1, sum over the whole menu domain (worst pair
// included). The normalized value needs K >= 2, hence n >= 3.
Rational weak_correlation_value(const StochasticChoiceFunction& rho, const Preference& p);

struct WeakCorrelationReport {
  std::vector<Rational> sums;         // unnormalized, per preference
  std::vector<Preference> violators;  // sum > K-1
  bool satisfied = false;
};

// Compares the unnormalized sums against K-1, which stays well-defined at
// n = 2 where the normalizer K-1 vanishes.
WeakCorrelationReport satisfies_weak_correlation_bounds(const StochasticChoiceFunction& rho);

// Kendall-style split of the probability mass into the part that agrees
// with c and its complement. Evaluated literally: for a degenerate rho
// concentrated on c the concordant part is K/(K-1) > 1, which is reported
// as-is with the warning flag set rather than clamped.
struct CorrelationDecomposition {
  Rational concordant;
  Rational discordant;  // 1 - concordant
  Rational kendall;     // concordant - discordant
  bool concordant_exceeds_one = false;
};

CorrelationDecomposition correlation_decomposition(const StochasticChoiceFunction& rho,
                                                   const ChoiceFunction& c);

}  // namespace irum::bounds
