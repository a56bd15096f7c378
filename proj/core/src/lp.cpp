#include "irum/lp.hpp"

#include <algorithm>
#include <limits>

namespace irum::lp {

namespace {

using Column = std::vector<std::pair<std::uint32_t, Rational>>;

// Phase-I revised simplex over exact rationals. One artificial variable per
// row forms the starting basis. Pricing is partial Dantzig (best candidate
// within a moving window) for speed, with a permanent switch to Bland's
// rule after a degenerate stall, which restores the termination guarantee.
// The loop stops as soon as the artificial mass reaches zero: feasibility
// needs no optimality certificate.
//
// Columns are borrowed from the caller unless a negative right-hand side
// forces a sign-normalized copy. `allowed` masks out variables that must
// stay at zero.
class PhaseOneSolver {
 public:
  PhaseOneSolver(const std::vector<Column>& columns, std::vector<Rational> rhs,
                 const std::vector<char>* allowed)
      : m_(rhs.size()), n_(columns.size()), rhs_(std::move(rhs)), allowed_(allowed) {
    bool any_negative = false;
    for (const Rational& value : rhs_) any_negative = any_negative || value < 0;
    if (any_negative) {
      std::vector<bool> flip(m_, false);
      for (std::size_t i = 0; i < m_; ++i) {
        if (rhs_[i] < 0) {
          rhs_[i] = -rhs_[i];
          flip[i] = true;
        }
      }
      owned_.resize(n_);
      for (std::size_t j = 0; j < n_; ++j) {
        owned_[j].reserve(columns[j].size());
        for (const auto& [row, coef] : columns[j]) {
          if (coef == 0) continue;
          owned_[j].emplace_back(row, flip[row] ? Rational(-coef) : coef);
        }
      }
      cols_ = &owned_;
    } else {
      cols_ = &columns;
    }
    for (const auto& col : *cols_) {
      for (const auto& [row, coef] : col) {
        if (row >= m_) throw InputError("coefficient row index out of range");
      }
    }
  }

  std::optional<std::vector<Rational>> solve() {
    binv_.assign(m_, std::vector<Rational>(m_, 0));
    for (std::size_t i = 0; i < m_; ++i) binv_[i][i] = 1;
    x_basic_ = rhs_;
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;  // artificials
    in_basis_.assign(n_, false);

    std::vector<Rational> y(m_);
    for (;;) {
      if (artificial_mass() == 0) return extract_witness();

      // y = c_B B^-1 with unit costs on the artificial basics only.
      for (std::size_t k = 0; k < m_; ++k) y[k] = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] >= n_) {
          for (std::size_t k = 0; k < m_; ++k) {
            if (binv_[i][k] != 0) y[k] += binv_[i][k];
          }
        }
      }

      const std::size_t entering = pick_entering(y);
      if (entering == n_) return std::nullopt;  // optimal with artificial mass > 0

      // Direction d = B^-1 A_j.
      std::vector<Rational> d(m_, 0);
      for (const auto& [row, coef] : (*cols_)[entering]) {
        for (std::size_t i = 0; i < m_; ++i) {
          if (binv_[i][row] != 0) d[i] += binv_[i][row] * coef;
        }
      }

      // Ratio test; ties resolved toward the smallest basic variable index
      // (Bland again).
      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (d[i] <= 0) continue;
        Rational ratio = x_basic_[i] / d[i];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) {
        // Phase-I objective is bounded below by zero, so an unbounded ray
        // cannot occur on well-formed input.
        throw std::logic_error("phase-I simplex produced an unbounded direction");
      }

      pivot(entering, leave, d, best_ratio);
    }
  }

 private:
  static constexpr std::size_t kPricingWindow = 64;
  static constexpr int kStallLimit = 50;

  bool usable(std::size_t j) const {
    return !in_basis_[j] && (!allowed_ || (*allowed_)[j]);
  }

  Rational column_price(const std::vector<Rational>& y, std::size_t j) const {
    Rational price = 0;
    for (const auto& [row, coef] : (*cols_)[j]) {
      if (y[row] != 0) price += y[row] * coef;
    }
    return price;
  }

  // Returns the entering column, or n_ when every reduced cost is
  // nonnegative (optimal).
  std::size_t pick_entering(const std::vector<Rational>& y) {
    if (bland_mode_) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (usable(j) && column_price(y, j) > 0) return j;
      }
      return n_;
    }
    std::size_t entering = n_;
    Rational best_price = 0;
    std::size_t examined = 0;
    std::size_t j = cursor_;
    for (std::size_t seen = 0; seen < n_; ++seen, ++j) {
      if (j >= n_) j = 0;
      if (!usable(j)) continue;
      Rational price = column_price(y, j);
      ++examined;
      if (price > best_price) {
        best_price = price;
        entering = j;
      }
      if (entering != n_ && examined >= kPricingWindow) break;
    }
    cursor_ = (j + 1 < n_) ? j + 1 : 0;
    return entering;
  }

  Rational artificial_mass() const {
    Rational z = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) z += x_basic_[i];
    }
    return z;
  }

  void pivot(std::size_t entering, std::size_t leave, const std::vector<Rational>& d,
             const Rational& theta) {
    if (theta == 0) {
      if (++stall_ >= kStallLimit) bland_mode_ = true;
    } else {
      stall_ = 0;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == leave) continue;
      if (d[i] != 0) x_basic_[i] -= theta * d[i];
    }
    x_basic_[leave] = theta;

    const Rational pivot_value = d[leave];
    for (std::size_t k = 0; k < m_; ++k) {
      if (binv_[leave][k] != 0) binv_[leave][k] /= pivot_value;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == leave || d[i] == 0) continue;
      for (std::size_t k = 0; k < m_; ++k) {
        if (binv_[leave][k] != 0) binv_[i][k] -= d[i] * binv_[leave][k];
      }
    }

    if (basis_[leave] < n_) in_basis_[basis_[leave]] = false;
    basis_[leave] = entering;
    in_basis_[entering] = true;
  }

  std::optional<std::vector<Rational>> extract_witness() const {
    std::vector<Rational> x(n_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = x_basic_[i];
    }
    // Internal assertion: substitute the witness back into the system.
    std::vector<Rational> lhs(m_, 0);
    for (std::size_t j = 0; j < n_; ++j) {
      if (x[j] == 0) continue;
      if (x[j] < 0) throw std::logic_error("phase-I witness has a negative component");
      for (const auto& [row, coef] : (*cols_)[j]) lhs[row] += coef * x[j];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (lhs[i] != rhs_[i]) {
        throw std::logic_error("phase-I witness fails an equality on re-substitution");
      }
    }
    return x;
  }

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<Rational> rhs_;
  const std::vector<char>* allowed_ = nullptr;
  const std::vector<Column>* cols_ = nullptr;
  std::vector<Column> owned_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> x_basic_;
  std::vector<std::size_t> basis_;
  std::vector<bool> in_basis_;
  std::size_t cursor_ = 0;
  int stall_ = 0;
  bool bland_mode_ = false;
};

}  // namespace

std::optional<std::vector<Rational>> solve_feasibility(const SparseSystem& sys) {
  if (sys.columns.size() != sys.num_vars) {
    throw InputError("sparse system column count does not match num_vars");
  }
  if (sys.rhs.size() != sys.num_rows) {
    throw InputError("sparse system rhs length does not match num_rows");
  }
  return PhaseOneSolver(sys.columns, sys.rhs, nullptr).solve();
}

std::optional<std::vector<Rational>> solve_feasibility(const FeasibilitySystem& sys) {
  if (sys.coefficients.size() != sys.rhs.size()) {
    throw InputError("row count does not match rhs length");
  }
  SparseSystem sparse;
  sparse.num_vars = sys.num_vars;
  sparse.num_rows = sys.coefficients.size();
  sparse.rhs = sys.rhs;
  sparse.columns.resize(sys.num_vars);
  for (std::size_t i = 0; i < sys.coefficients.size(); ++i) {
    const auto& row = sys.coefficients[i];
    if (row.size() != sys.num_vars) {
      throw InputError("coefficient vector length does not match variable count");
    }
    for (std::size_t j = 0; j < sys.num_vars; ++j) {
      if (row[j] != 0) {
        sparse.columns[j].emplace_back(static_cast<std::uint32_t>(i), row[j]);
      }
    }
  }
  return solve_feasibility(sparse);
}

RepresentationProblem::RepresentationProblem(int n, std::vector<ChoiceFunction> candidates)
    : n_(n), candidates_(std::move(candidates)) {
  if (candidates_.empty()) throw InputError("candidate list must be nonempty");
  if (candidates_.size() > kCandidateLimit) {
    throw LimitError("candidate count exceeds the solver limit of 25000");
  }
  const auto& menus = enumerate_menus(n_);

  // Per-menu member equalities are rank-deficient (each menu's rows sum to
  // the total-mass row), so the last member row of every menu is dropped
  // and one explicit total-mass equality added. The reduced system is
  // equivalent to the full one.
  row_id_.assign(menus.size(), std::vector<std::int32_t>(n_, -1));
  std::size_t rows = 0;
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    const auto members = menus[mi].members();
    for (std::size_t k = 0; k + 1 < members.size(); ++k) {
      row_id_[mi][members[k]] = static_cast<std::int32_t>(rows++);
    }
  }
  const auto total_row = static_cast<std::uint32_t>(rows++);
  num_rows_ = rows;

  columns_.resize(candidates_.size());
  for (std::size_t j = 0; j < candidates_.size(); ++j) {
    const auto& c = candidates_[j];
    if (c.menu_count() != menus.size()) {
      throw InputError("candidate choice function does not match the menu domain");
    }
    auto& col = columns_[j];
    for (std::size_t mi = 0; mi < menus.size(); ++mi) {
      std::int32_t r = row_id_[mi][c.choice[mi]];
      if (r >= 0) col.emplace_back(static_cast<std::uint32_t>(r), 1);
    }
    col.emplace_back(total_row, 1);
  }
}

std::optional<RandomChoiceModel> RepresentationProblem::solve(
    const StochasticChoiceFunction& rho) const {
  if (rho.n() != n_) throw InputError("stochastic choice function does not match the problem");
  const auto& menus = enumerate_menus(n_);

  // A candidate choosing a zero-probability member anywhere is forced to
  // weight zero by the corresponding equality, so it is masked out.
  std::vector<char> allowed(candidates_.size(), 1);
  bool any = false;
  for (std::size_t j = 0; j < candidates_.size(); ++j) {
    const auto& c = candidates_[j];
    for (std::size_t mi = 0; mi < menus.size(); ++mi) {
      if (!(rho.prob_at(mi, c.choice[mi]) > 0)) {
        allowed[j] = 0;
        break;
      }
    }
    any = any || allowed[j];
  }
  if (!any) return std::nullopt;

  std::vector<Rational> rhs(num_rows_);
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    for (int a = 0; a < n_; ++a) {
      if (row_id_[mi][a] >= 0) rhs[row_id_[mi][a]] = rho.prob_at(mi, a);
    }
  }
  rhs[num_rows_ - 1] = 1;

  auto witness = PhaseOneSolver(columns_, std::move(rhs), &allowed).solve();
  if (!witness) return std::nullopt;

  std::vector<RandomChoiceModel::Entry> support;
  for (std::size_t j = 0; j < candidates_.size(); ++j) {
    if ((*witness)[j] > 0) support.emplace_back(candidates_[j], (*witness)[j]);
  }
  RandomChoiceModel mu = RandomChoiceModel::make(std::move(support));
  if (aggregate_probs(n_, mu) != rho.probs()) {
    throw std::logic_error("representation witness does not re-aggregate to the input");
  }
  return mu;
}

std::optional<RandomChoiceModel> find_representation(
    const StochasticChoiceFunction& rho,
    const std::vector<ChoiceFunction>& candidates) {
  return RepresentationProblem(rho.n(), candidates).solve(rho);
}

}  // namespace irum::lp
