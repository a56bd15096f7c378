#pragma once

#include "irum/core.hpp"
#include "irum/lp.hpp"

#include <numeric>

namespace oracles {

using irum::ChoiceFunction;
using irum::Rational;
using irum::StochasticChoiceFunction;

// Decides whether some random choice model represents rho with strictly
// positive total mass on irrational choice functions.
//
// Positive cases are usually settled by one plain feasibility solve over
// all choice functions, irrational columns first: if the witness carries
// irrational mass, done. Otherwise the question is decided exactly by a
// single feasibility check with an explicit positivity row: the maximum
// irrational mass over the representation polytope is attained at a vertex,
// and every vertex coordinate is an integer over D (the common denominator
// of rho) divided by a subdeterminant of a 0/1 matrix, so a positive
// maximum is at least eps = 1 / (D * m^ceil(m/2)) with m the row count.
//
// The candidate list, plain-solve problem, and positivity columns depend
// only on n, so one instance serves a whole sweep. query() is const and
// safe to call from several threads.
class PartialIrrationalityOracle {
 public:
  explicit PartialIrrationalityOracle(int n)
      : n_(n), menus_(irum::enumerate_menus(n)) {
    auto all = irum::enumerate_choice_functions(n);
    std::vector<ChoiceFunction> rational;
    for (auto& c : all) {
      if (irum::is_rational(n, c)) {
        rational.push_back(std::move(c));
      } else {
        candidates_.push_back(std::move(c));
      }
    }
    irrational_count_ = candidates_.size();
    candidates_.insert(candidates_.end(), rational.begin(), rational.end());
    plain_.emplace(n, candidates_);

    // Reduced equality rows (one member row per menu dropped, total-mass
    // row added); same exact polytope, fewer rows.
    row_id_.assign(menus_.size(), std::vector<std::int32_t>(n, -1));
    std::size_t rows = 0;
    for (std::size_t mi = 0; mi < menus_.size(); ++mi) {
      const auto members = menus_[mi].members();
      for (std::size_t k = 0; k + 1 < members.size(); ++k) {
        row_id_[mi][members[k]] = static_cast<std::int32_t>(rows++);
      }
    }
    total_row_ = static_cast<std::uint32_t>(rows++);
    polytope_rows_ = rows;
    positivity_row_ = static_cast<std::uint32_t>(rows++);
    num_rows_ = rows;

    hadamard_ = 1;
    for (std::size_t i = 0; i < (polytope_rows_ + 1) / 2; ++i) {
      hadamard_ *= irum::BigInt(polytope_rows_);
    }

    columns_.resize(candidates_.size() + 1);
    for (std::size_t j = 0; j < candidates_.size(); ++j) {
      const auto& c = candidates_[j];
      auto& col = columns_[j];
      for (std::size_t mi = 0; mi < menus_.size(); ++mi) {
        std::int32_t r = row_id_[mi][c.choice[mi]];
        if (r >= 0) col.emplace_back(static_cast<std::uint32_t>(r), 1);
      }
      col.emplace_back(total_row_, 1);
      if (j < irrational_count_) col.emplace_back(positivity_row_, 1);
    }
    columns_.back().emplace_back(positivity_row_, -1);  // slack
  }

  bool query(const StochasticChoiceFunction& rho) const {
    if (auto witness = plain_->solve(rho)) {
      for (const auto& [c, w] : witness->support()) {
        if (!irum::is_rational(n_, c)) return true;
      }
    } else {
      return false;  // not representable at all
    }

    // The plain solve landed on an all-rational model; decide exactly.
    std::vector<char> allowed(columns_.size(), 1);
    bool any_irrational = false;
    for (std::size_t j = 0; j < candidates_.size(); ++j) {
      const auto& c = candidates_[j];
      for (std::size_t mi = 0; mi < menus_.size(); ++mi) {
        if (!(rho.prob_at(mi, c.choice[mi]) > 0)) {
          allowed[j] = 0;
          break;
        }
      }
      any_irrational = any_irrational || (allowed[j] && j < irrational_count_);
    }
    if (!any_irrational) return false;

    irum::BigInt common_den = 1;
    for (std::size_t mi = 0; mi < menus_.size(); ++mi) {
      for (int a = 0; a < n_; ++a) {
        common_den = boost::multiprecision::lcm(
            common_den,
            irum::BigInt(boost::multiprecision::denominator(rho.prob_at(mi, a))));
      }
    }

    irum::lp::SparseSystem sys;
    sys.num_vars = columns_.size();
    sys.num_rows = num_rows_;
    sys.columns = columns_;
    sys.rhs.assign(num_rows_, 0);
    for (std::size_t mi = 0; mi < menus_.size(); ++mi) {
      for (int a = 0; a < n_; ++a) {
        if (row_id_[mi][a] >= 0) sys.rhs[row_id_[mi][a]] = rho.prob_at(mi, a);
      }
    }
    sys.rhs[total_row_] = 1;
    sys.rhs[positivity_row_] = Rational(irum::BigInt(1), common_den * hadamard_);

    // Masked candidates must stay at zero; emulate by erasing their columns.
    irum::lp::SparseSystem masked;
    masked.num_rows = sys.num_rows;
    masked.rhs = sys.rhs;
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (allowed[j]) {
        masked.columns.push_back(columns_[j]);
        kept.push_back(j);
      }
    }
    masked.num_vars = masked.columns.size();
    return irum::lp::solve_feasibility(masked).has_value();
  }

 private:
  int n_;
  const std::vector<irum::Menu>& menus_;
  std::vector<ChoiceFunction> candidates_;  // irrational first
  std::size_t irrational_count_ = 0;
  std::optional<irum::lp::RepresentationProblem> plain_;
  std::vector<std::vector<std::int32_t>> row_id_;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> columns_;
  std::uint32_t total_row_ = 0;
  std::uint32_t positivity_row_ = 0;
  std::size_t polytope_rows_ = 0;
  std::size_t num_rows_ = 0;
  irum::BigInt hadamard_;
};

inline bool partially_irrational_oracle(const StochasticChoiceFunction& rho) {
  PartialIrrationalityOracle oracle(rho.n());
  return oracle.query(rho);
}

}  // namespace oracles
