#include "cli.hpp"

#include "irum/bm.hpp"
#include "irum/bounds.hpp"
#include "irum/dataset.hpp"
#include "irum/demand.hpp"
#include "irum/falsify.hpp"
#include "irum/lp.hpp"
#include "irum/represent.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace irum::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  bool decimals = false;
  int max_n = 0;  // 0 = no user cap
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void check_max_n(const Options& opt, int n, int module_limit, const char* what) {
  if (opt.max_n > module_limit) {
    throw LimitError("--max-n " + std::to_string(opt.max_n) + " exceeds the " + what +
                     " limit of " + std::to_string(module_limit));
  }
  if (opt.max_n > 0 && n > opt.max_n) {
    throw InputError("dataset has " + std::to_string(n) +
                     " alternatives, above the requested --max-n cap");
  }
  if (n > module_limit) {
    throw LimitError("dataset has " + std::to_string(n) + " alternatives; the " +
                     std::string(what) + " limit is " + std::to_string(module_limit));
  }
}

std::string show(const Options& opt, const Rational& value) {
  std::string text = to_string(value);
  if (opt.decimals) {
    std::ostringstream approx;
    approx << " (~" << to_double(value) << ")";
    text += approx.str();
  }
  return text;
}

std::string subset_name(const AlternativeSet& alt_set, std::uint16_t mask) {
  std::string out;
  for (int a = 0; a < alt_set.size(); ++a) {
    if ((mask >> a) & 1u) {
      if (!out.empty()) out += ',';
      out += alt_set.label(a);
    }
  }
  return "{" + out + "}";
}

json rational_json(const Options& opt, const Rational& value) {
  if (!opt.decimals) return to_string(value);
  return json{{"exact", to_string(value)}, {"decimal", to_double(value)}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

AlternativeSet alternatives_from_flag(const std::string& csv) {
  std::vector<std::string> labels;
  std::string current;
  for (char ch : csv) {
    if (ch == ',') {
      labels.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  labels.push_back(current);
  return AlternativeSet(std::move(labels));
}

PreferenceDistribution load_mu(const AlternativeSet& alt_set, const std::string& mu_path) {
  auto rcm = dataset::parse_rcm(alt_set, read_file(mu_path));
  return preference_distribution(alt_set.size(), rcm);
}

// Derives a representing preference distribution from the dataset when no
// model file is given.
PreferenceDistribution derive_mu(const StochasticChoiceFunction& rho) {
  auto rcm = bm::rum_representation(rho);
  if (!rcm) {
    throw InputError("the dataset is not a random utility model; supply --mu explicitly");
  }
  return preference_distribution(rho.n(), *rcm);
}

int cmd_check_rum(const Options& opt, const std::string& dataset_path, std::ostream& out) {
  auto rho = dataset::parse_dataset(read_file(dataset_path));
  check_max_n(opt, rho.n(), kMaxAlternatives, "menu-domain");
  auto verdict = bm::is_rum(rho);
  if (opt.format == "json") {
    json violations = json::array();
    for (const auto& v : verdict.violations) {
      violations.push_back({{"menu", subset_name(rho.alt_set(), v.subset_mask)},
                            {"alternative", rho.alt_set().label(v.alt)},
                            {"value", rational_json(opt, v.value)}});
    }
    emit(out, {{"rum", verdict.is_rum}, {"violations", violations}});
  } else {
    out << "RUM: " << (verdict.is_rum ? "yes" : "no") << "\n";
    for (const auto& v : verdict.violations) {
      out << "  BM(" << rho.alt_set().label(v.alt) << ", "
          << subset_name(rho.alt_set(), v.subset_mask) << ") = " << show(opt, v.value)
          << " < 0\n";
    }
  }
  return 0;
}

int cmd_bm_table(const Options& opt, const std::string& dataset_path, std::ostream& out) {
  auto rho = dataset::parse_dataset(read_file(dataset_path));
  check_max_n(opt, rho.n(), kMaxAlternatives, "menu-domain");
  auto table = bm::compute_bm_table(rho);
  json values = json::array();
  for (std::uint32_t mask = 1; mask < table.values.size(); ++mask) {
    for (int a = 0; a < rho.n(); ++a) {
      if (!((mask >> a) & 1u)) continue;
      if (opt.format == "json") {
        values.push_back({{"menu", subset_name(rho.alt_set(), mask)},
                          {"alternative", rho.alt_set().label(a)},
                          {"value", rational_json(opt, table.values[mask][a])}});
      } else {
        out << "BM(" << rho.alt_set().label(a) << ", " << subset_name(rho.alt_set(), mask)
            << ") = " << show(opt, table.values[mask][a]) << "\n";
      }
    }
  }
  if (opt.format == "json") emit(out, {{"values", values}});
  return 0;
}

int cmd_bounds(const Options& opt, const std::string& dataset_path, std::ostream& out) {
  auto rho = dataset::parse_dataset(read_file(dataset_path));
  check_max_n(opt, rho.n(), 6, "preference-sweep");
  auto report = bounds::satisfies_correlation_bounds(rho);
  auto weak = bounds::satisfies_weak_correlation_bounds(rho);
  const auto& prefs = enumerate_preferences(rho.n());
  if (opt.format == "json") {
    json values = json::array();
    for (std::size_t i = 0; i < prefs.size(); ++i) {
      values.push_back({{"preference", preference_to_string(rho.alt_set(), prefs[i])},
                        {"value", rational_json(opt, report.values[i])}});
    }
    json violators = json::array();
    for (const auto& p : report.violators) {
      violators.push_back(preference_to_string(rho.alt_set(), p));
    }
    emit(out, {{"satisfied", report.satisfied},
               {"max", rational_json(opt, report.max_value)},
               {"argmax", preference_to_string(rho.alt_set(), report.argmax)},
               {"values", values},
               {"weak_satisfied", weak.satisfied},
               {"violators", violators}});
  } else {
    out << "correlation bounds: " << (report.satisfied ? "satisfied" : "violated") << "\n";
    for (std::size_t i = 0; i < prefs.size(); ++i) {
      out << "  C[" << preference_to_string(rho.alt_set(), prefs[i])
          << "] = " << show(opt, report.values[i]) << "\n";
    }
    out << "weak correlation bounds: " << (weak.satisfied ? "satisfied" : "violated") << "\n";
  }
  return 0;
}

int cmd_irum(const Options& opt, const std::string& dataset_path, bool with_witness,
             std::ostream& out) {
  auto rho = dataset::parse_dataset(read_file(dataset_path));
  check_max_n(opt, rho.n(), with_witness ? 4 : 6, with_witness ? "witness" : "preference-sweep");
  auto verdict = represent::is_irum(rho);
  if (opt.format == "json") {
    json doc{{"rum", verdict.is_rum},
             {"bounds_satisfied", verdict.bounds_ok},
             {"irum", verdict.is_irum}};
    json violators = json::array();
    for (const auto& p : verdict.violators) {
      violators.push_back(preference_to_string(rho.alt_set(), p));
    }
    doc["violators"] = violators;
    if (!verdict.note.empty()) doc["note"] = verdict.note;
    if (with_witness && verdict.witness) {
      doc["witness"] = json::parse(dataset::rcm_to_json(rho.alt_set(), *verdict.witness));
    }
    emit(out, doc);
  } else {
    out << "RUM: " << (verdict.is_rum ? "yes" : "no")
        << "; correlation bounds: " << (verdict.bounds_ok ? "satisfied" : "violated")
        << "; I-RUM: " << (verdict.is_irum ? "yes" : "no") << "\n";
    for (const auto& p : verdict.violators) {
      out << "  violated at " << preference_to_string(rho.alt_set(), p) << "\n";
    }
    if (!verdict.note.empty()) out << "note: " << verdict.note << "\n";
    if (with_witness && verdict.witness) {
      out << dataset::rcm_to_json(rho.alt_set(), *verdict.witness) << "\n";
    }
  }
  return 0;
}

int cmd_pirum(const Options& opt, const std::string& dataset_path, std::ostream& out) {
  auto rho = dataset::parse_dataset(read_file(dataset_path));
  check_max_n(opt, rho.n(), kMaxAlternatives, "menu-domain");
  auto verdict = represent::is_pirum(rho);
  if (opt.format == "json") {
    json doc{{"rum", verdict.is_rum},
             {"overlap_condition", verdict.condition3},
             {"pirum", verdict.is_pirum}};
    if (verdict.witness_menus) {
      auto [menu_a, menu_b, alt_a, alt_b] = *verdict.witness_menus;
      doc["witness"] = {{"menus", {subset_name(rho.alt_set(), menu_a.mask),
                                   subset_name(rho.alt_set(), menu_b.mask)}},
                        {"alternatives",
                         {rho.alt_set().label(alt_a), rho.alt_set().label(alt_b)}}};
    }
    emit(out, doc);
  } else {
    out << "RUM: " << (verdict.is_rum ? "yes" : "no") << "; overlap condition: "
        << (verdict.condition3 ? "holds" : "fails")
        << "; pI-RUM: " << (verdict.is_pirum ? "yes" : "no") << "\n";
    if (verdict.witness_menus) {
      auto [menu_a, menu_b, alt_a, alt_b] = *verdict.witness_menus;
      out << "  " << rho.alt_set().label(alt_a) << " and " << rho.alt_set().label(alt_b)
          << " are both chosen from " << subset_name(rho.alt_set(), menu_a.mask) << " and "
          << subset_name(rho.alt_set(), menu_b.mask) << "\n";
    }
  }
  return 0;
}

int cmd_pirum_witness(const Options& opt, const std::string& dataset_path,
                      const std::string& mu_path, std::ostream& out) {
  auto rho = dataset::parse_dataset(read_file(dataset_path));
  check_max_n(opt, rho.n(), 6, "representation");
  PreferenceDistribution mu =
      mu_path.empty() ? derive_mu(rho) : load_mu(rho.alt_set(), mu_path);
  auto witness = represent::pirum_representation(rho, mu);
  out << dataset::rcm_to_json(rho.alt_set(), witness) << "\n";
  return 0;
}

int cmd_decompose(const Options& opt, const std::string& dataset_path,
                  const std::string& mu_path, const std::string& alternatives,
                  std::ostream& out) {
  if (dataset_path.empty() && (mu_path.empty() || alternatives.empty())) {
    throw InputError("decompose needs a dataset, or --mu together with --alternatives");
  }
  AlternativeSet alt_set =
      dataset_path.empty()
          ? alternatives_from_flag(alternatives)
          : dataset::parse_dataset(read_file(dataset_path)).alt_set();
  check_max_n(opt, alt_set.size(), 6, "decomposition");
  PreferenceDistribution mu;
  if (!mu_path.empty()) {
    mu = load_mu(alt_set, mu_path);
  } else {
    mu = derive_mu(dataset::parse_dataset(read_file(dataset_path)));
  }
  auto split = represent::rum_decompose_irum_dual(alt_set.size(), mu);
  if (opt.format == "json") {
    json doc{{"irrational_weight", rational_json(opt, split.irrational_weight)},
             {"residual_dual",
              json::parse(dataset::rcm_to_json(alt_set, split.residual_dual))}};
    if (split.irrational_pool) {
      doc["irrational_pool"] =
          json::parse(dataset::rcm_to_json(alt_set, *split.irrational_pool));
    }
    emit(out, doc);
  } else {
    out << "irrational weight: " << show(opt, split.irrational_weight) << "\n";
    if (split.irrational_pool) {
      out << "irrational pool:\n"
          << dataset::rcm_to_json(alt_set, *split.irrational_pool) << "\n";
    }
    out << "residual dual:\n" << dataset::rcm_to_json(alt_set, split.residual_dual) << "\n";
  }
  return 0;
}

int cmd_dual_construct(const Options& opt, const std::string& alternatives,
                       const std::string& p1_text, const std::string& p2_text,
                       const std::string& m1_text, const std::string& m2_text,
                       std::ostream& out) {
  AlternativeSet alt_set = alternatives_from_flag(alternatives);
  check_max_n(opt, alt_set.size(), kMaxAlternatives, "menu-domain");
  auto pool = represent::dual_irum_construction(
      alt_set.size(), parse_preference(alt_set, p1_text), parse_preference(alt_set, p2_text),
      parse_rational(m1_text), parse_rational(m2_text));
  out << dataset::rcm_to_json(alt_set, pool) << "\n";
  return 0;
}

int cmd_dual_decompose(const Options& opt, const std::string& dataset_path,
                       const std::string& mu_path, const std::string& alternatives,
                       const std::string& p0_text, std::ostream& out) {
  if (dataset_path.empty() && (mu_path.empty() || alternatives.empty())) {
    throw InputError("dual-decompose needs a dataset, or --mu together with --alternatives");
  }
  AlternativeSet alt_set =
      dataset_path.empty()
          ? alternatives_from_flag(alternatives)
          : dataset::parse_dataset(read_file(dataset_path)).alt_set();
  check_max_n(opt, alt_set.size(), 6, "decomposition");
  PreferenceDistribution mu;
  if (!mu_path.empty()) {
    mu = load_mu(alt_set, mu_path);
  } else {
    mu = derive_mu(dataset::parse_dataset(read_file(dataset_path)));
  }
  auto decomposition =
      represent::dual_decomposition(alt_set.size(), mu, parse_preference(alt_set, p0_text));
  if (opt.format == "json") {
    json components = json::array();
    for (const auto& component : decomposition.components) {
      json dual = json::object();
      for (const auto& [p, w] : component.dual) {
        dual[preference_to_string(alt_set, p)] = rational_json(opt, w);
      }
      components.push_back({{"delta", rational_json(opt, component.delta)}, {"dual", dual}});
    }
    emit(out, {{"anchor", preference_to_string(alt_set, decomposition.anchor)},
               {"components", components}});
  } else {
    out << "anchor: " << preference_to_string(alt_set, decomposition.anchor) << "\n";
    for (const auto& component : decomposition.components) {
      out << "  delta " << show(opt, component.delta) << ":";
      for (const auto& [p, w] : component.dual) {
        out << " " << preference_to_string(alt_set, p) << " @ " << show(opt, w);
      }
      out << "\n";
    }
  }
  return 0;
}

int cmd_alpha_bar(const Options& opt, const std::string& rho_star_path,
                  const std::string& family_arg, std::ostream& out) {
  auto rho_star = dataset::parse_dataset(read_file(rho_star_path));
  check_max_n(opt, rho_star.n(), family_arg == "all" ? 4 : 6, "family-vertex");
  falsify::IrrationalFamily family =
      family_arg == "all"
          ? falsify::IrrationalFamily::all()
          : dataset::parse_family(rho_star.alt_set(), read_file(family_arg));
  auto result = falsify::alpha_bar(rho_star, family);
  if (opt.format == "json") {
    json doc{{"alpha_bar", rational_json(opt, result.alpha_bar)}};
    if (result.worst_vertex) {
      doc["worst_vertex"] =
          json::parse(dataset::rcm_to_json(rho_star.alt_set(), *result.worst_vertex));
      doc["binding_constraint"] = {
          {"alternative", rho_star.alt_set().label(result.binding_constraint->first)},
          {"menu", subset_name(rho_star.alt_set(), result.binding_constraint->second)}};
    }
    emit(out, doc);
  } else {
    out << show(opt, result.alpha_bar) << "\n";
    if (result.binding_constraint) {
      out << "binding constraint: BM("
          << rho_star.alt_set().label(result.binding_constraint->first) << ", "
          << subset_name(rho_star.alt_set(), result.binding_constraint->second) << ")\n";
      out << "worst vertex:\n"
          << dataset::rcm_to_json(rho_star.alt_set(), *result.worst_vertex) << "\n";
    } else {
      out << "the family has no stochastic-rationality violation; every mixture works\n";
    }
  }
  return 0;
}

int cmd_demand(const Options& opt, const std::vector<std::string>& pi, std::ostream& out) {
  auto data = demand::TwoBudgetData::make(parse_rational(pi[0]), parse_rational(pi[1]),
                                          parse_rational(pi[2]), parse_rational(pi[3]));
  auto [lo, hi] = demand::irrational_share_bounds(data);
  auto min_table = demand::extremal_table(data, demand::ExtremalTarget::min_irrational);
  auto max_table = demand::extremal_table(data, demand::ExtremalTarget::max_irrational);
  auto table_json = [&](const demand::ContingencyTable& t) {
    return json{{"q11", rational_json(opt, t.q11)},
                {"q12", rational_json(opt, t.q12)},
                {"q21", rational_json(opt, t.q21)},
                {"q22", rational_json(opt, t.q22)}};
  };
  if (opt.format == "json") {
    emit(out, {{"lo", rational_json(opt, lo)},
               {"hi", rational_json(opt, hi)},
               {"min_table", table_json(min_table)},
               {"max_table", table_json(max_table)}});
  } else {
    if (lo == hi) {
      out << "irrational share: exactly " << show(opt, lo) << "\n";
    } else {
      out << "irrational share: between " << show(opt, lo) << " and " << show(opt, hi) << "\n";
    }
    auto print_table = [&](const char* name, const demand::ContingencyTable& t) {
      out << name << ":\n";
      out << "  [" << show(opt, t.q11) << "  " << show(opt, t.q12) << "]\n";
      out << "  [" << show(opt, t.q21) << "  " << show(opt, t.q22) << "]\n";
    };
    print_table("fewest irrational", min_table);
    if (!(min_table == max_table)) print_table("most irrational", max_table);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact rationality analysis of stochastic choice data"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--decimals", opt.decimals, "append decimal approximations");
  app.add_option("--max-n", opt.max_n, "cap on the alternative count (refused above module limits)");

  std::string dataset_path, mu_path, alternatives, p0_text, p1_text, p2_text, m1_text, m2_text;
  std::string rho_star_path, family_arg = "all";
  std::vector<std::string> pi;

  auto* check_rum = app.add_subcommand("check-rum", "Block-Marschak nonnegativity test");
  check_rum->add_option("dataset", dataset_path)->required();

  auto* bm_table = app.add_subcommand("bm-table", "print every Block-Marschak value");
  bm_table->add_option("dataset", dataset_path)->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "correlation and weak correlation bounds");
  bounds_cmd->add_option("dataset", dataset_path)->required();

  auto* irum_cmd = app.add_subcommand("irum", "irrational-representation verdict");
  irum_cmd->add_option("dataset", dataset_path)->required();

  auto* irum_witness = app.add_subcommand("irum-witness", "verdict plus an all-irrational model");
  irum_witness->add_option("dataset", dataset_path)->required();

  auto* pirum_cmd = app.add_subcommand("pirum", "partially-irrational verdict");
  pirum_cmd->add_option("dataset", dataset_path)->required();

  auto* pirum_witness = app.add_subcommand("pirum-witness", "model with two irrational members");
  pirum_witness->add_option("dataset", dataset_path)->required();
  pirum_witness->add_option("--mu", mu_path, "representing model document");

  auto* decompose = app.add_subcommand("decompose", "split into irrational pool and dual residual");
  decompose->add_option("dataset", dataset_path);
  decompose->add_option("--mu", mu_path, "model document");
  decompose->add_option("--alternatives", alternatives, "labels, comma separated");

  auto* dual_construct = app.add_subcommand("dual-construct", "swap pool for a two-preference model");
  dual_construct->add_option("--alternatives", alternatives)->required();
  dual_construct->add_option("--p1", p1_text)->required();
  dual_construct->add_option("--p2", p2_text)->required();
  dual_construct->add_option("--m1", m1_text)->required();
  dual_construct->add_option("--m2", m2_text)->required();

  auto* dual_decompose = app.add_subcommand("dual-decompose", "two-preference components at equality");
  dual_decompose->add_option("dataset", dataset_path);
  dual_decompose->add_option("--mu", mu_path);
  dual_decompose->add_option("--alternatives", alternatives);
  dual_decompose->add_option("--p0", p0_text)->required();

  auto* alpha_bar_cmd = app.add_subcommand("alpha-bar", "falsifiability threshold");
  alpha_bar_cmd->add_option("--rho-star", rho_star_path, "full-support dataset")->required();
  alpha_bar_cmd->add_option("--family", family_arg, "\"all\" or a family document path");

  auto* demand_cmd = app.add_subcommand("demand", "two-budget contingency bounds");
  demand_cmd->add_option("--pi", pi, "four patch shares")->expected(4)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("irum");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (check_rum->parsed()) return cmd_check_rum(opt, dataset_path, out);
    if (bm_table->parsed()) return cmd_bm_table(opt, dataset_path, out);
    if (bounds_cmd->parsed()) return cmd_bounds(opt, dataset_path, out);
    if (irum_cmd->parsed()) return cmd_irum(opt, dataset_path, false, out);
    if (irum_witness->parsed()) return cmd_irum(opt, dataset_path, true, out);
    if (pirum_cmd->parsed()) return cmd_pirum(opt, dataset_path, out);
    if (pirum_witness->parsed()) return cmd_pirum_witness(opt, dataset_path, mu_path, out);
    if (decompose->parsed()) return cmd_decompose(opt, dataset_path, mu_path, alternatives, out);
    if (dual_construct->parsed()) {
      return cmd_dual_construct(opt, alternatives, p1_text, p2_text, m1_text, m2_text, out);
    }
    if (dual_decompose->parsed()) {
      return cmd_dual_decompose(opt, dataset_path, mu_path, alternatives, p0_text, out);
    }
    if (alpha_bar_cmd->parsed()) return cmd_alpha_bar(opt, rho_star_path, family_arg, out);
    if (demand_cmd->parsed()) return cmd_demand(opt, pi, out);
  } catch (const LimitError& e) {
    err << "size error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace irum::cli
