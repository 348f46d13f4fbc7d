#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "treesec/errors.hpp"
#include "treesec/model.hpp"
#include "treesec/rational.hpp"
#include "treesec/tree.hpp"

namespace treesec {

// On-disk form: a tree plus whichever of the per-vertex assignments and the
// bare multisets the file carries.
struct Document {
  RootedTree tree;
  std::optional<CostVector> costs;
  std::optional<PrizeVector> prizes;
  std::optional<std::vector<Rational>> cost_multiset;
  std::optional<std::vector<Rational>> prize_multiset;
};

namespace detail {

// Values are integers or "num/den" strings; floats are rejected so numbers
// stay exact.
inline Rational json_rational(const nlohmann::json& v, const std::string& key) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(BigInt(v.get<std::uint64_t>()));
    return Rational(BigInt(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(key + ": " + e.what());
    }
  }
  if (v.is_number_float())
    throw ParseError(key + ": floating point values are not accepted; use a \"num/den\" string");
  throw ParseError(key + ": expected an integer or a \"num/den\" string");
}

inline nlohmann::json rational_json(const Rational& q) {
  if (is_integer(q)) {
    BigInt n = numerator(q);
    if (n >= (std::numeric_limits<std::int64_t>::min)() && n <= (std::numeric_limits<std::int64_t>::max)())
      return n.convert_to<std::int64_t>();
  }
  return format_rational(q);
}

inline std::vector<Rational> json_assignment(const nlohmann::json& obj, const RootedTree& tree,
                                             const std::string& key) {
  if (!obj.is_object()) throw ParseError(key + ": expected an object keyed by vertex name");
  std::vector<Rational> values(tree.size());
  std::vector<char> seen(tree.size() + 1, 0);
  for (const auto& [name, v] : obj.items()) {
    const int idx = tree.index_of(name);
    if (idx < 1) throw ParseError(key + ": " + name + " is not a non-root vertex");
    values[idx - 1] = json_rational(v, key + "." + name);
    seen[idx] = 1;
  }
  for (int i = 1; i <= tree.size(); ++i)
    if (!seen[i]) throw ParseError(key + ": missing value for vertex " + tree.name(i));
  return values;
}

inline std::vector<Rational> json_multiset(const nlohmann::json& arr, const RootedTree& tree,
                                           const std::string& key) {
  if (!arr.is_array()) throw ParseError(key + ": expected an array");
  if (static_cast<int>(arr.size()) != tree.size())
    throw ParseError(key + ": expected " + std::to_string(tree.size()) + " values");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(json_rational(arr[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline Document document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  if (!j.contains("root") || !j["root"].is_string()) throw ParseError("root: expected a string");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("edges: expected an array of [tail, head] pairs");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError("edges: each entry must be a [tail, head] pair of names");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  Document doc;
  doc.tree = validate_tree(edges, j["root"].get<std::string>());
  if (j.contains("costs")) doc.costs = CostVector(detail::json_assignment(j["costs"], doc.tree, "costs"));
  if (j.contains("prizes")) doc.prizes = PrizeVector(detail::json_assignment(j["prizes"], doc.tree, "prizes"));
  if (j.contains("cost_multiset"))
    doc.cost_multiset = detail::json_multiset(j["cost_multiset"], doc.tree, "cost_multiset");
  if (j.contains("prize_multiset"))
    doc.prize_multiset = detail::json_multiset(j["prize_multiset"], doc.tree, "prize_multiset");
  return doc;
}

inline Document parse_document(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("document: invalid JSON");
  return document_from_json(j);
}

inline Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

inline nlohmann::json emit_document(const Document& doc) {
  nlohmann::json j;
  j["root"] = doc.tree.name(0);
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 1; i <= doc.tree.size(); ++i)
    edges.push_back(nlohmann::json::array({doc.tree.name(doc.tree.parent(i)), doc.tree.name(i)}));
  j["edges"] = std::move(edges);
  const auto emit_assignment = [&](const char* key, const auto& vec) {
    nlohmann::json obj = nlohmann::json::object();
    for (int i = 1; i <= doc.tree.size(); ++i) obj[doc.tree.name(i)] = detail::rational_json(vec[i]);
    j[key] = std::move(obj);
  };
  if (doc.costs) emit_assignment("costs", *doc.costs);
  if (doc.prizes) emit_assignment("prizes", *doc.prizes);
  const auto emit_multiset = [&](const char* key, const std::vector<Rational>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& q : values) arr.push_back(detail::rational_json(q));
    j[key] = std::move(arr);
  };
  if (doc.cost_multiset) emit_multiset("cost_multiset", *doc.cost_multiset);
  if (doc.prize_multiset) emit_multiset("prize_multiset", *doc.prize_multiset);
  return j;
}

inline std::string write_document(const Document& doc) { return emit_document(doc).dump(2) + "\n"; }

inline void write_document_file(const Document& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << write_document(doc);
}

// The fully assigned system a document describes; both assignments must be
// present.
inline SecuritySystem document_ss(const Document& doc) {
  if (!doc.costs) throw ParseError("costs: required");
  if (!doc.prizes) throw ParseError("prizes: required");
  return SecuritySystem(doc.tree, *doc.costs, *doc.prizes);
}

// The unassigned model; explicit multisets win, otherwise the assignments'
// values are used.
inline Model document_model(const Document& doc) {
  std::vector<Rational> costs, prizes;
  if (doc.cost_multiset)
    costs = *doc.cost_multiset;
  else if (doc.costs)
    costs = doc.costs->values();
  else
    throw ParseError("cost_multiset: required when costs is absent");
  if (doc.prize_multiset)
    prizes = *doc.prize_multiset;
  else if (doc.prizes)
    prizes = doc.prizes->values();
  else
    throw ParseError("prize_multiset: required when prizes is absent");
  return Model(doc.tree, std::move(costs), std::move(prizes));
}

inline Document document_of(const SecuritySystem& ss) {
  Document doc;
  doc.tree = ss.tree;
  doc.costs = ss.costs;
  doc.prizes = ss.prizes;
  return doc;
}

inline Document document_of(const Model& model) {
  Document doc;
  doc.tree = model.tree;
  doc.cost_multiset = model.cost_multiset;
  doc.prize_multiset = model.prize_multiset;
  return doc;
}

}  // namespace treesec
