#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "septamer/families.hpp"
#include "septamer/graph.hpp"
#include "septamer/mwis.hpp"
#include "septamer/rational.hpp"

namespace septamer {

/// On-disk graph description: vertex count, sorted edge list, and the two
/// optional blocks — generator labels and per-vertex weights.  Documents are
/// exchanged as JSON objects; DIMACS `p edge` input is converted into the
/// same shape.
struct GraphDocument {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::map<std::string, int> labels;  ///< empty = absent
  std::vector<Rational> weights;      ///< empty = absent, else one per vertex

  bool operator==(const GraphDocument& o) const {
    return n == o.n && edges == o.edges && labels == o.labels &&
           weights == o.weights;
  }
};

namespace detail {

[[noreturn]] inline void bad_doc(const std::string& what) {
  throw std::invalid_argument("graph document: " + what);
}

/// Exact conversion of a binary double: the mantissa over the matching power
/// of two, so 0.5 becomes 1/2 and 0.1 becomes its true 53-bit value.
inline Rational rational_from_double(double d, const std::string& where) {
  if (!std::isfinite(d)) bad_doc(where + ": weight must be finite");
  if (d == 0.0) return Rational{0};
  int exp = 0;
  double m = std::frexp(d, &exp);
  long long mant = static_cast<long long>(std::ldexp(m, 53));  // exact
  exp -= 53;
  if (exp >= 0) {
    if (exp > 10) bad_doc(where + ": weight too large to represent exactly");
    return Rational{mant << exp};
  }
  if (exp < -62) bad_doc(where + ": weight too small to represent exactly");
  return Rational{mant, 1ll << -exp};
}

inline long long parse_int64(const std::string& s, const std::string& where) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    bad_doc(where + ": cannot parse integer '" + s + "'");
  return value;
}

inline Rational rational_from_string(const std::string& s, const std::string& where) {
  std::size_t slash = s.find('/');
  long long num = parse_int64(s.substr(0, slash), where);
  long long den =
      slash == std::string::npos ? 1 : parse_int64(s.substr(slash + 1), where);
  if (den == 0) bad_doc(where + ": zero denominator in '" + s + "'");
  return Rational{num, den};
}

inline Rational rational_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational{j.get<long long>()};
  if (j.is_number_unsigned()) {
    auto u = j.get<unsigned long long>();
    if (u > static_cast<unsigned long long>(INT64_MAX))
      bad_doc(where + ": weight out of range");
    return Rational{static_cast<long long>(u)};
  }
  if (j.is_number_float()) return rational_from_double(j.get<double>(), where);
  if (j.is_string()) return rational_from_string(j.get<std::string>(), where);
  bad_doc(where + ": weight must be a number or a 'p/q' string");
}

}  // namespace detail

/// Enforces the documented invariants: edge endpoints ordered and in range,
/// no duplicate edges, labels resolvable, one weight per vertex when present.
inline void validate_document(const GraphDocument& doc) {
  if (doc.n < 0) detail::bad_doc("field 'n': must be non-negative");
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    auto [u, v] = doc.edges[i];
    std::string where = "field 'edges[" + std::to_string(i) + "]'";
    if (u < 0 || v >= doc.n) detail::bad_doc(where + ": endpoint out of range");
    if (u >= v) detail::bad_doc(where + ": endpoints must satisfy u < v");
    if (!seen.insert({u, v}).second) detail::bad_doc(where + ": duplicate edge");
  }
  for (const auto& [name, v] : doc.labels)
    if (v < 0 || v >= doc.n)
      detail::bad_doc("field 'labels." + name + "': vertex out of range");
  if (!doc.weights.empty()) {
    if (static_cast<int>(doc.weights.size()) != doc.n)
      detail::bad_doc("field 'weights': need exactly one weight per vertex");
    for (std::size_t i = 0; i < doc.weights.size(); ++i)
      if (doc.weights[i].num < 0)
        detail::bad_doc("field 'weights[" + std::to_string(i) +
                        "]': weights must be non-negative");
  }
}

inline GraphDocument parse_json_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::bad_doc(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) detail::bad_doc("top level must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    detail::bad_doc("field 'n': required integer");
  if (!j.contains("edges") || !j["edges"].is_array())
    detail::bad_doc("field 'edges': required array");

  GraphDocument doc;
  doc.n = j["n"].get<int>();
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const nlohmann::json& e = j["edges"][i];
    std::string where = "field 'edges[" + std::to_string(i) + "]'";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      detail::bad_doc(where + ": expected a pair of integers");
    doc.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_object())
      detail::bad_doc("field 'labels': expected an object");
    for (const auto& [name, v] : j["labels"].items()) {
      if (!v.is_number_integer())
        detail::bad_doc("field 'labels." + name + "': expected an integer");
      doc.labels[name] = v.get<int>();
    }
  }
  if (j.contains("weights")) {
    if (!j["weights"].is_array())
      detail::bad_doc("field 'weights': expected an array");
    for (std::size_t i = 0; i < j["weights"].size(); ++i)
      doc.weights.push_back(detail::rational_from_json(
          j["weights"][i], "field 'weights[" + std::to_string(i) + "]'"));
  }
  validate_document(doc);
  return doc;
}

/// DIMACS edge format: `c` comments, one `p edge N M` header, `e u v` lines
/// with 1-indexed endpoints.
inline GraphDocument parse_dimacs_document(const std::string& text) {
  GraphDocument doc;
  bool have_header = false;
  long long declared_edges = 0;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;  // blank line
    std::string where = "line " + std::to_string(line_no);
    if (kind == "c") continue;
    if (kind == "p") {
      std::string format;
      if (have_header) detail::bad_doc(where + ": duplicate 'p' header");
      if (!(ls >> format >> doc.n >> declared_edges) || format != "edge")
        detail::bad_doc(where + ": expected 'p edge N M'");
      have_header = true;
      continue;
    }
    if (kind == "e") {
      if (!have_header)
        detail::bad_doc(where + ": edge before the 'p edge' header");
      int u = 0, v = 0;
      if (!(ls >> u >> v)) detail::bad_doc(where + ": expected 'e u v'");
      if (u < 1 || v < 1 || u > doc.n || v > doc.n)
        detail::bad_doc(where + ": endpoint out of the 1..n range");
      if (u == v) detail::bad_doc(where + ": self-loop");
      doc.edges.emplace_back(std::min(u, v) - 1, std::max(u, v) - 1);
      continue;
    }
    detail::bad_doc(where + ": unrecognized line type '" + kind + "'");
  }
  if (!have_header) detail::bad_doc("missing 'p edge' header");
  if (static_cast<long long>(doc.edges.size()) != declared_edges)
    detail::bad_doc("header declares " + std::to_string(declared_edges) +
                    " edges but " + std::to_string(doc.edges.size()) +
                    " were given");
  std::sort(doc.edges.begin(), doc.edges.end());
  validate_document(doc);
  return doc;
}

/// Format sniffing: a JSON document starts with '{' or '[', DIMACS with one
/// of its line types ('c', 'p', 'e').
inline GraphDocument parse_document(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{' || ch == '[') return parse_json_document(text);
    if (ch == 'c' || ch == 'p' || ch == 'e') return parse_dimacs_document(text);
    detail::bad_doc(std::string("unrecognized format (starts with '") + ch +
                    "'); expected JSON or DIMACS");
  }
  detail::bad_doc("empty input");
}

inline nlohmann::json weight_to_json(const Rational& w) {
  if (w.den == 1) return nlohmann::json(w.num);
  return nlohmann::json(w.to_string());
}

inline std::string serialize_document(const GraphDocument& doc) {
  validate_document(doc);
  nlohmann::json j;
  j["n"] = doc.n;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : doc.edges) j["edges"].push_back({u, v});
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  if (!doc.weights.empty()) {
    j["weights"] = nlohmann::json::array();
    for (const Rational& w : doc.weights) j["weights"].push_back(weight_to_json(w));
  }
  return j.dump();
}

inline GraphDocument document_from(const Graph& g) {
  GraphDocument doc;
  doc.n = g.vertex_count();
  doc.edges = g.edges();
  return doc;
}

inline GraphDocument document_from(const LabeledGraph& lg) {
  GraphDocument doc = document_from(lg.graph);
  doc.labels = lg.labels;
  return doc;
}

inline Graph to_graph(const GraphDocument& doc) {
  validate_document(doc);
  return Graph::from_edges(doc.n, doc.edges);
}

/// Weighted view of a document; absent weights default to unit weight.
inline WeightedGraph to_weighted_graph(const GraphDocument& doc) {
  WeightedGraph wg;
  wg.graph = to_graph(doc);
  if (doc.weights.empty())
    wg.weight.assign(static_cast<std::size_t>(doc.n), Rational{1});
  else
    wg.weight = doc.weights;
  return wg;
}

/// Accepts a raw vertex index or a label from the document.
inline int resolve_vertex(const GraphDocument& doc, const std::string& token) {
  auto it = doc.labels.find(token);
  if (it != doc.labels.end()) return it->second;
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used == token.size() && v >= 0 && v < doc.n) return v;
  } catch (const std::exception&) {
  }
  detail::bad_doc("unknown vertex '" + token + "'");
}

/// Comma-separated vertex list, each item a label or an index.
inline VertexSet resolve_vertex_set(const GraphDocument& doc,
                                    const std::string& list) {
  VertexSet out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    if (a == std::string::npos) detail::bad_doc("empty vertex in list");
    std::size_t b = item.find_last_not_of(" \t");
    out.insert(resolve_vertex(doc, item.substr(a, b - a + 1)));
  }
  return out;
}

}  // namespace septamer
