#include "irum/dataset.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace irum::dataset {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw InputError("document is not valid JSON");
  return doc;
}

Rational rational_field(const json& value, const char* where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw InputError(std::string(where) +
                   ": probabilities must be rational strings or integers "
                   "(JSON floats are not exact)");
}

AlternativeSet alternatives_field(const json& doc) {
  if (!doc.contains("alternatives") || !doc["alternatives"].is_array()) {
    throw InputError("document needs an \"alternatives\" array of labels");
  }
  std::vector<std::string> labels;
  for (const auto& item : doc["alternatives"]) {
    if (!item.is_string()) throw InputError("alternative labels must be strings");
    labels.push_back(item.get<std::string>());
  }
  return AlternativeSet(std::move(labels));
}

RandomChoiceModel rcm_from_json(const AlternativeSet& alt_set, const json& doc) {
  if (!doc.contains("support") || !doc["support"].is_array() || doc["support"].empty()) {
    throw InputError("model document needs a nonempty \"support\" array");
  }
  const int n = alt_set.size();
  const auto& menus = enumerate_menus(n);
  std::vector<RandomChoiceModel::Entry> support;
  for (const auto& member : doc["support"]) {
    if (!member.contains("weight") || !member.contains("choice") ||
        !member["choice"].is_object()) {
      throw InputError("each support member needs \"weight\" and a \"choice\" table");
    }
    Rational weight = rational_field(member["weight"], "support weight");
    ChoiceFunction c;
    c.choice.assign(menus.size(), 0);
    std::vector<bool> covered(menus.size(), false);
    for (const auto& [key, label] : member["choice"].items()) {
      Menu menu{};
      std::size_t begin = 0;
      while (begin <= key.size()) {
        std::size_t end = key.find('|', begin);
        std::string token = key.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
        menu.mask |= static_cast<std::uint16_t>(1u << alt_set.index_of(token));
        if (end == std::string::npos) break;
        begin = end + 1;
      }
      std::size_t mi = menu_index(n, menu);
      if (covered[mi]) throw InputError("choice table repeats menu " + key);
      covered[mi] = true;
      if (!label.is_string()) throw InputError("chosen alternatives must be label strings");
      int alt = alt_set.index_of(label.get<std::string>());
      if (!menu.contains(alt)) {
        throw InputError("chosen alternative " + label.get<std::string>() +
                         " is not a member of menu " + key);
      }
      c.choice[mi] = static_cast<std::uint8_t>(alt);
    }
    for (std::size_t mi = 0; mi < menus.size(); ++mi) {
      if (!covered[mi]) {
        throw InputError("choice table is missing menu " + menu_key(alt_set, menus[mi]));
      }
    }
    support.emplace_back(std::move(c), std::move(weight));
  }
  return RandomChoiceModel::make(std::move(support));
}

json rcm_to_json_object(const AlternativeSet& alt_set, const RandomChoiceModel& mu) {
  const int n = alt_set.size();
  const auto& menus = enumerate_menus(n);
  json support = json::array();
  for (const auto& [c, w] : mu.support()) {
    json choice = json::object();
    for (std::size_t mi = 0; mi < menus.size(); ++mi) {
      choice[menu_key(alt_set, menus[mi])] = alt_set.label(c.choice[mi]);
    }
    support.push_back({{"weight", to_string(w)},
                       {"irrational", !is_rational(n, c).has_value()},
                       {"choice", std::move(choice)}});
  }
  return json{{"support", std::move(support)}};
}

}  // namespace

StochasticChoiceFunction parse_dataset(const std::string& text) {
  json doc = parse_document(text);
  AlternativeSet alt_set = alternatives_field(doc);
  const int n = alt_set.size();
  const auto& menus = enumerate_menus(n);

  if (!doc.contains("choices") || !doc["choices"].is_array()) {
    throw InputError("dataset needs a \"choices\" array");
  }
  std::vector<std::vector<Rational>> probs(menus.size(), std::vector<Rational>(n, 0));
  std::vector<bool> covered(menus.size(), false);
  for (const auto& row : doc["choices"]) {
    if (!row.contains("menu") || !row["menu"].is_array()) {
      throw InputError("each choice row needs a \"menu\" array of labels");
    }
    Menu menu{};
    for (const auto& label : row["menu"]) {
      if (!label.is_string()) throw InputError("menu members must be label strings");
      menu.mask |= static_cast<std::uint16_t>(1u << alt_set.index_of(label.get<std::string>()));
    }
    if (menu.size() < 2) throw InputError("menus must have at least two members");
    if (static_cast<std::size_t>(menu.size()) != row["menu"].size()) {
      throw InputError("menu lists a member twice");
    }
    std::size_t mi = menu_index(n, menu);
    if (covered[mi]) {
      throw InputError("duplicate menu " + menu_to_string(alt_set, menu));
    }
    covered[mi] = true;
    if (!row.contains("probs") || !row["probs"].is_object()) {
      throw InputError("each choice row needs a \"probs\" object");
    }
    for (const auto& [label, value] : row["probs"].items()) {
      int alt = alt_set.index_of(label);
      if (!menu.contains(alt)) {
        throw InputError("probability given for " + label + " outside menu " +
                         menu_to_string(alt_set, menu));
      }
      probs[mi][alt] = rational_field(value, "choice probability");
    }
  }
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    if (!covered[mi]) {
      throw InputError("dataset is missing menu " + menu_to_string(alt_set, menus[mi]));
    }
  }
  return {std::move(alt_set), std::move(probs)};
}

std::string dataset_to_json(const StochasticChoiceFunction& rho) {
  const auto& alt_set = rho.alt_set();
  const auto& menus = enumerate_menus(rho.n());
  json choices = json::array();
  for (std::size_t mi = 0; mi < menus.size(); ++mi) {
    json menu = json::array();
    json row = json::object();
    for (int a : menus[mi].members()) {
      menu.push_back(alt_set.label(a));
      row[alt_set.label(a)] = to_string(rho.prob_at(mi, a));
    }
    choices.push_back({{"menu", std::move(menu)}, {"probs", std::move(row)}});
  }
  json doc{{"alternatives", alt_set.labels()}, {"choices", std::move(choices)}};
  return doc.dump(2);
}

std::string menu_key(const AlternativeSet& alt_set, Menu menu) {
  std::vector<std::string> labels;
  for (int a : menu.members()) labels.push_back(alt_set.label(a));
  std::sort(labels.begin(), labels.end());
  std::string key;
  for (const auto& label : labels) {
    if (!key.empty()) key += '|';
    key += label;
  }
  return key;
}

std::string rcm_to_json(const AlternativeSet& alt_set, const RandomChoiceModel& mu) {
  return rcm_to_json_object(alt_set, mu).dump(2);
}

RandomChoiceModel parse_rcm(const AlternativeSet& alt_set, const std::string& text) {
  return rcm_from_json(alt_set, parse_document(text));
}

falsify::IrrationalFamily parse_family(const AlternativeSet& alt_set,
                                       const std::string& text) {
  json doc = parse_document(text);
  if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty()) {
    throw InputError("family document needs a nonempty \"vertices\" array");
  }
  std::vector<RandomChoiceModel> vertices;
  for (const auto& vertex : doc["vertices"]) {
    vertices.push_back(rcm_from_json(alt_set, vertex));
  }
  return falsify::IrrationalFamily::finite(std::move(vertices));
}

std::string family_to_json(const AlternativeSet& alt_set,
                           const falsify::IrrationalFamily& family) {
  if (family.kind != falsify::IrrationalFamily::Kind::finite_vertices) {
    throw InputError("only finite families serialize to a vertex list");
  }
  json vertices = json::array();
  for (const auto& vertex : family.vertices) {
    vertices.push_back(rcm_to_json_object(alt_set, vertex));
  }
  return json{{"vertices", std::move(vertices)}}.dump(2);
}

}  // namespace irum::dataset
