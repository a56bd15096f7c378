#include "irum/falsify.hpp"

#include "irum/bm.hpp"
#include "irum/lp.hpp"

#include <map>

namespace irum::falsify {

namespace {

std::vector<RandomChoiceModel> family_vertices(int n, const IrrationalFamily& family) {
  if (family.kind == IrrationalFamily::Kind::all_rcms) {
    if (n > 4) {
      throw LimitError("the full RCM simplex enumerates every choice function; limited to n <= 4");
    }
    std::vector<RandomChoiceModel> out;
    for (auto& c : enumerate_choice_functions(n)) {
      out.push_back(RandomChoiceModel::make({{std::move(c), Rational(1)}}));
    }
    return out;
  }
  if (family.vertices.empty()) throw InputError("finite family has no vertices");
  const std::size_t menu_count = enumerate_menus(n).size();
  for (const auto& vertex : family.vertices) {
    for (const auto& [c, w] : vertex.support()) {
      if (c.menu_count() != menu_count) {
        throw InputError("family vertex does not match the alternative set");
      }
    }
  }
  return family.vertices;
}

// Is `point` a convex combination of `hull`? Membership in distribution
// space, decided exactly.
bool in_convex_hull(int n, const RandomChoiceModel& point,
                    const std::vector<RandomChoiceModel>& hull) {
  std::map<ChoiceFunction, std::uint32_t> row_of;
  auto row_for = [&](const ChoiceFunction& c) {
    auto [it, inserted] = row_of.emplace(c, static_cast<std::uint32_t>(row_of.size()));
    return it->second;
  };
  for (const auto& vertex : hull) {
    for (const auto& [c, w] : vertex.support()) row_for(c);
  }
  for (const auto& [c, w] : point.support()) row_for(c);

  lp::SparseSystem sys;
  sys.num_rows = row_of.size() + 1;  // one per choice function + total mass
  sys.num_vars = hull.size();
  sys.rhs.assign(sys.num_rows, 0);
  for (const auto& [c, w] : point.support()) sys.rhs[row_of[c]] = w;
  sys.rhs.back() = 1;
  sys.columns.resize(hull.size());
  for (std::size_t j = 0; j < hull.size(); ++j) {
    for (const auto& [c, w] : hull[j].support()) {
      sys.columns[j].emplace_back(row_of[c], w);
    }
    sys.columns[j].emplace_back(static_cast<std::uint32_t>(sys.num_rows - 1), 1);
  }
  (void)n;
  return lp::solve_feasibility(sys).has_value();
}

}  // namespace

StochasticChoiceFunction mixture(const Rational& alpha,
                                 const StochasticChoiceFunction& rho_star,
                                 const StochasticChoiceFunction& rho) {
  if (alpha < 0 || alpha > 1) throw InputError("mixture weight must lie in [0, 1]");
  if (rho_star.alt_set() != rho.alt_set()) {
    throw InputError("mixture requires matching alternative sets");
  }
  std::vector<std::vector<Rational>> probs = rho_star.probs();
  for (std::size_t mi = 0; mi < probs.size(); ++mi) {
    for (std::size_t a = 0; a < probs[mi].size(); ++a) {
      probs[mi][a] = alpha * probs[mi][a] + (1 - alpha) * rho.prob_at(mi, static_cast<int>(a));
    }
  }
  return {rho_star.alt_set(), std::move(probs)};
}

AlphaResult alpha_bar(const StochasticChoiceFunction& rho_star,
                      const IrrationalFamily& family) {
  const int n = rho_star.n();
  if (!bm::is_full_support_rum(rho_star)) {
    throw InputError("the rational side must be a full-support model (all Block-Marschak values positive)");
  }
  const bm::BMTable star = bm::compute_bm_table(rho_star);

  AlphaResult result;
  result.alpha_bar = 0;
  for (const auto& vertex : family_vertices(n, family)) {
    StochasticChoiceFunction rho_vertex(rho_star.alt_set(), aggregate_probs(n, vertex));
    const bm::BMTable table = bm::compute_bm_table(rho_vertex);
    for (std::uint32_t mask = 1; mask < table.values.size(); ++mask) {
      for (int a = 0; a < n; ++a) {
        if (!((mask >> a) & 1u)) continue;
        const Rational& value = table.values[mask][a];
        if (value >= 0) continue;
        // alpha * BM* + (1-alpha) * BM >= 0 exactly at this threshold.
        Rational threshold = value / (value - star.values[mask][a]);
        if (threshold > result.alpha_bar) {
          result.alpha_bar = threshold;
          result.worst_vertex = vertex;
          result.binding_constraint = {a, static_cast<std::uint16_t>(mask)};
        }
      }
    }
  }
  return result;
}

bool verify_monotonicity(const StochasticChoiceFunction& rho_star,
                         const IrrationalFamily& small, const IrrationalFamily& big) {
  const int n = rho_star.n();
  if (big.kind != IrrationalFamily::Kind::all_rcms) {
    const auto big_vertices = family_vertices(n, big);
    for (const auto& vertex : family_vertices(n, small)) {
      if (!in_convex_hull(n, vertex, big_vertices)) {
        throw InputError("the smaller family is not contained in the larger one");
      }
    }
  }
  return alpha_bar(rho_star, small).alpha_bar <= alpha_bar(rho_star, big).alpha_bar;
}

}  // namespace irum::falsify
