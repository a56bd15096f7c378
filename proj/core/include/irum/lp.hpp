#pragma once

#include "irum/core.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace irum::lp {

// Equality system A x = rhs with x >= 0 componentwise, all entries exact
// rationals. Feasibility is decided exactly; there is no objective.
struct FeasibilitySystem {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rational>> coefficients;  // one row per equality
  std::vector<Rational> rhs;
};

// Column-compressed form of the same kind of system. The representation
// systems built from stochastic choice data have thousands of 0/1 columns
// with a handful of nonzeros each; the solver prices them without touching
// the zeros.
struct SparseSystem {
  std::size_t num_vars = 0;
  std::size_t num_rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> columns;
  std::vector<Rational> rhs;
};

// Exact Phase-I simplex. Returns the witness on feasibility (it satisfies
// every equality exactly and is componentwise nonnegative; the solver
// re-substitutes it before returning) or nullopt.
std::optional<std::vector<Rational>> solve_feasibility(const FeasibilitySystem& sys);
std::optional<std::vector<Rational>> solve_feasibility(const SparseSystem& sys);

inline constexpr std::size_t kCandidateLimit = 25000;

// A representation search over a fixed candidate list. The equality rows
// and 0/1 columns depend only on the menu domain, so sweeps over many
// stochastic choice functions share one instance; solve() only fills the
// right-hand side and masks out candidates that choose a zero-probability
// member somewhere (their weight is forced to zero by the equalities).
class RepresentationProblem {
 public:
  RepresentationProblem(int n, std::vector<ChoiceFunction> candidates);

  std::optional<RandomChoiceModel> solve(const StochasticChoiceFunction& rho) const;

  std::size_t candidate_count() const { return candidates_.size(); }

 private:
  int n_;
  std::vector<ChoiceFunction> candidates_;
  std::vector<std::vector<std::int32_t>> row_id_;  // (menu, alt) -> row or -1
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> columns_;
  std::size_t num_rows_ = 0;
};

// One-shot convenience wrapper around RepresentationProblem: searches for a
// random choice model supported on `candidates` whose aggregate equals rho
// exactly. Returns nullopt when no such model exists. Throws LimitError
// when the candidate list exceeds kCandidateLimit.
std::optional<RandomChoiceModel> find_representation(
    const StochasticChoiceFunction& rho,
    const std::vector<ChoiceFunction>& candidates);

}  // namespace irum::lp
