#pragma once

#include "irum/core.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace irum::falsify {

// A collection of random choice models, given either as the full RCM
// simplex (vertices = every deterministic choice function) or as an
// explicit finite vertex list.
struct IrrationalFamily {
  enum class Kind { all_rcms, finite_vertices };

  Kind kind = Kind::all_rcms;
  std::vector<RandomChoiceModel> vertices;  // used when finite

  static IrrationalFamily all() { return {Kind::all_rcms, {}}; }
  static IrrationalFamily finite(std::vector<RandomChoiceModel> v) {
    return {Kind::finite_vertices, std::move(v)};
  }
};

struct AlphaResult {
  Rational alpha_bar;
  // Present when alpha_bar > 0: the vertex and (alternative, menu-or-
  // singleton mask) constraint that pin the threshold.
  std::optional<RandomChoiceModel> worst_vertex;
  std::optional<std::pair<int, std::uint16_t>> binding_constraint;
};

// Pointwise exact convex combination alpha * rho_star + (1-alpha) * rho.
StochasticChoiceFunction mixture(const Rational& alpha,
                                 const StochasticChoiceFunction& rho_star,
                                 const StochasticChoiceFunction& rho);

// Smallest share of the full-support model rho_star such that every mixture
// with a family member stays a RUM. Per vertex and per negative
// Block-Marschak value the exact threshold is BM / (BM - BM*); the maximum
// over a convex family is attained at a vertex because BM is affine in the
// model. Mixtures at exactly alpha_bar are RUMs (zero values allowed).
// Returns 0 when no vertex has a negative value anywhere.
AlphaResult alpha_bar(const StochasticChoiceFunction& rho_star,
                      const IrrationalFamily& family);

// Checks alpha_bar(small) <= alpha_bar(big) after verifying containment:
// the full simplex contains everything, and membership of a finite family's
// vertices in another's convex hull is decided by the exact feasibility
// solver.
bool verify_monotonicity(const StochasticChoiceFunction& rho_star,
                         const IrrationalFamily& small, const IrrationalFamily& big);

}  // namespace irum::falsify
