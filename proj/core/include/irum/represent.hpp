#pragma once

#include "irum/core.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace irum::represent {

// Verdict on whether rho admits a representation supported entirely on
// irrational choice functions. The decision is is_rum AND bounds_ok; the
// witness is produced by the exact feasibility solver over all irrational
// choice functions (available at n <= 4) and always re-aggregates to rho.
struct IrumVerdict {
  bool is_rum = false;
  bool bounds_ok = false;
  bool is_irum = false;
  std::optional<RandomChoiceModel> witness;
  std::vector<Preference> violators;  // preferences whose correlation value exceeds 1
  std::string note;                   // set when the witness is unavailable or n = 2
};

IrumVerdict is_irum(const StochasticChoiceFunction& rho);

// For a two-preference model at the correlation-bound equality point,
// builds the uniform model on the k+1 single-menu swap functions: each one
// follows p2 except on one disagreement menu where it follows p1. Every
// support member is irrational and the aggregate equals the two-preference
// model exactly. Requires m1 + m2 = 1, 0 < m1 <= m2, the equality
// m1 n(p2,p1) + m2 (K-1) = K-2, and k = K-2-n(p2,p1) >= 1.
RandomChoiceModel dual_irum_construction(int n, const Preference& p1,
                                         const Preference& p2, const Rational& m1,
                                         const Rational& m2);

struct DualComponent {
  Rational delta;                // mixing weight
  PreferenceDistribution dual;   // two-preference model {anchor, partner}
};

// A distribution at correlation-bound equality at the anchor split into
// two-preference components, each again at equality at the anchor, mixing
// back to the input exactly.
struct DualDecomposition {
  Preference anchor;
  std::vector<DualComponent> components;
};

DualDecomposition dual_decomposition(int n, const PreferenceDistribution& mu,
                                     const Preference& p0);

// Condition for a representation with at least one irrational member:
// two menus sharing two alternatives that are both chosen from both with
// positive probability.
struct PirumVerdict {
  bool is_rum = false;
  bool condition3 = false;
  bool is_pirum = false;
  // (menu, menu, alternative, alternative) witnessing condition3
  std::optional<std::tuple<Menu, Menu, int, int>> witness_menus;
};

PirumVerdict is_pirum(const StochasticChoiceFunction& rho);

// Constructive partially-irrational representation: swaps the choices of
// two support preferences on one menu of size >= 3 with two supported
// alternatives. mu must represent rho and condition3 must hold.
RandomChoiceModel pirum_representation(const StochasticChoiceFunction& rho,
                                       const PreferenceDistribution& mu);

// Split of a RUM into an irrational pool and a residual two-preference
// model: w * aggregate(pool) + (1-w) * aggregate(residual) equals the input
// exactly, and the pool aggregate is itself a bounds-satisfying RUM.
struct IrumDualSplit {
  Rational irrational_weight;                    // w
  std::optional<RandomChoiceModel> irrational_pool;  // absent iff w = 0
  RandomChoiceModel residual_dual;               // support size <= 2
};

IrumDualSplit rum_decompose_irum_dual(int n, const PreferenceDistribution& mu);

// Cheap screens. Every weight <= 1/4 is sufficient for an irrational
// representation; any weight above (K-2)/(K-1) rules one out.
bool sufficient_quarter(int n, const PreferenceDistribution& mu);
std::optional<Preference> necessary_mass_cap(int n, const PreferenceDistribution& mu);

}  // namespace irum::represent
