// septamer — command-line surface for the separator machinery: family
// generation, separator enumeration and counting, trace families, the zeta
// invariant, creature and ladder searches, reconstruction certification, and
// exact maximum-weight independent set.
//
// Exit codes: 0 success, 1 not-found/none/not-clean, 2 input error,
// 3 budget-exceeded/unknown.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "septamer/families.hpp"
#include "septamer/graph.hpp"
#include "septamer/io.hpp"
#include "septamer/mwis.hpp"
#include "septamer/reconstruction.hpp"
#include "septamer/separators.hpp"
#include "septamer/structures.hpp"
#include "septamer/zeta.hpp"

namespace {

using nlohmann::json;
using namespace septamer;

constexpr long long kFallbackBudget = 10'000'000;

long long default_budget() {
  if (const char* env = std::getenv("SEPTAMER_BUDGET_DEFAULT")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(
          "SEPTAMER_BUDGET_DEFAULT: not an integer: " + std::string(env));
    }
  }
  return kFallbackBudget;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

json to_json(const VertexSet& s) {
  json arr = json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

json to_json(const std::vector<VertexSet>& sets) {
  json arr = json::array();
  for (const VertexSet& s : sets) arr.push_back(to_json(s));
  return arr;
}

GraphDocument load_document(const std::string& path) {
  return parse_document(read_input(path));
}

std::vector<MinimalSeparator> separators_for(const Graph& g, bool brute) {
  std::vector<MinimalSeparator> seps =
      brute ? brute_force_separators(g) : enumerate_minimal_separators(g);
  std::sort(seps.begin(), seps.end(),
            [](const MinimalSeparator& a, const MinimalSeparator& b) {
              return a.S < b.S;
            });
  return seps;
}

// ---------------------------------------------------------------- gen

int run_gen(const std::string& family, int k, int path_len, int n,
            std::uint64_t seed, const std::string& out_path) {
  GraphDocument doc;
  if (family == "prism") {
    doc = document_from(prism(k));
  } else if (family == "theta") {
    doc = document_from(theta(k, path_len));
  } else if (family == "skinny-ladder") {
    doc = document_from(skinny_ladder(k));
  } else if (family == "creature") {
    doc = document_from(creature_graph(k, 1, 1));
  } else if (family == "interval") {
    doc = document_from(random_interval_graph(n, seed));
  } else {
    throw std::invalid_argument(
        "unknown family '" + family +
        "' (expected prism, theta, skinny-ladder, creature, interval)");
  }
  write_output(out_path, serialize_document(doc) + "\n");
  return 0;
}

// ---------------------------------------------------------------- sep

int run_sep_enum(const std::string& file, bool brute) {
  Graph g = to_graph(load_document(file));
  for (const MinimalSeparator& ms : separators_for(g, brute))
    std::cout << to_json(ms.S).dump() << "\n";
  return 0;
}

int run_sep_count(const std::string& file, bool brute) {
  Graph g = to_graph(load_document(file));
  std::cout << separators_for(g, brute).size() << "\n";
  return 0;
}

int run_sep_traces(const std::string& file, const std::string& vertex, int k) {
  GraphDocument doc = load_document(file);
  Graph g = to_graph(doc);
  int v = resolve_vertex(doc, vertex);
  std::set<VertexSet> traces =
      separator_traces(g, v, enumerate_minimal_separators(g));
  json out;
  out["vertex"] = v;
  out["count"] = traces.size();
  json arr = json::array();
  for (const VertexSet& t : traces) arr.push_back(to_json(t));
  out["traces"] = arr;
  if (k > 0) {
    // the polynomial bound |S_G^v| <= n^(k+1)
    long double bound = std::pow(static_cast<long double>(g.vertex_count()),
                                 static_cast<long double>(k + 1));
    out["bound"] = static_cast<double>(bound);
    out["bound_ok"] = static_cast<long double>(traces.size()) <= bound;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

// ---------------------------------------------------------------- zeta

int run_zeta(const std::string& file, const std::string& set_expr) {
  GraphDocument doc = load_document(file);
  Graph g = to_graph(doc);
  VertexSet s = resolve_vertex_set(doc, set_expr);
  ZetaCertificate cert = zeta(g, s);
  json out;
  out["set"] = to_json(cert.S);
  out["value"] = cert.value;
  out["witness"] = to_json(cert.I);
  std::cout << out.dump() << "\n";
  return 0;
}

// ---------------------------------------------------------------- creature

json witness_to_json(const CreatureWitness& w) {
  json out;
  out["a"] = to_json(w.A);
  out["b"] = to_json(w.B);
  out["x"] = w.X;
  out["y"] = w.Y;
  return out;
}

CreatureWitness witness_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") ||
      !j.contains("x") || !j.contains("y"))
    throw std::invalid_argument(
        "witness: expected an object with fields a, b, x, y");
  CreatureWitness w;
  for (const json& v : j.at("a")) w.A.insert(v.get<int>());
  for (const json& v : j.at("b")) w.B.insert(v.get<int>());
  w.X = j.at("x").get<std::vector<int>>();
  w.Y = j.at("y").get<std::vector<int>>();
  return w;
}

template <typename Witness, typename Render>
int report_search(const SearchResult<Witness>& result, Render render,
                  const std::string& witness_path) {
  json out;
  out["steps"] = result.steps;
  switch (result.status) {
    case SearchStatus::found: {
      out["status"] = "found";
      json w = render(*result.witness);
      out["witness"] = w;
      if (!witness_path.empty()) write_output(witness_path, w.dump() + "\n");
      std::cout << out.dump() << "\n";
      return 0;
    }
    case SearchStatus::exhausted:
      out["status"] = "none";
      std::cout << out.dump() << "\n";
      return 1;
    case SearchStatus::budget_exceeded:
      out["status"] = "unknown";
      std::cout << out.dump() << "\n";
      return 3;
  }
  throw std::logic_error("report_search: unreachable");
}

int run_creature_find(const std::string& file, int k, long long budget,
                      const std::string& witness_path) {
  Graph g = to_graph(load_document(file));
  return report_search(find_creature(g, k, budget), witness_to_json,
                       witness_path);
}

int run_creature_verify(const std::string& file, int k,
                        const std::string& witness_path) {
  Graph g = to_graph(load_document(file));
  json j;
  try {
    j = json::parse(read_input(witness_path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("witness: invalid JSON: ") +
                                e.what());
  }
  CreatureWitness w = witness_from_json(j);
  json out;
  if (k > 0 && static_cast<int>(w.X.size()) != k) {
    out["ok"] = false;
    out["violation"] = "witness has " + std::to_string(w.X.size()) +
                       " matched pairs, expected " + std::to_string(k);
    std::cout << out.dump() << "\n";
    return 1;
  }
  CreatureCheck check = verify_creature(g, w);
  out["ok"] = check.ok;
  if (!check.ok) out["violation"] = check.violation;
  std::cout << out.dump() << "\n";
  return check.ok ? 0 : 1;
}

// ---------------------------------------------------------------- ladder

int run_ladder_find(const std::string& file, int k, long long budget) {
  Graph g = to_graph(load_document(file));
  auto render = [](const LadderModel& m) {
    json out;
    out["p"] = to_json(m.p);
    out["q"] = to_json(m.q);
    out["r"] = to_json(m.r);
    return out;
  };
  return report_search(find_skinny_ladder_minor(g, k, budget), render, "");
}

// ---------------------------------------------------------------- certify

int run_certify(const std::string& file, int k, int zeta_max) {
  Graph g = to_graph(load_document(file));
  CountBreakdown bd = count_by_reconstruction(g, k, zeta_max);
  json out;
  out["separators"] = bd.separators;
  out["dominated"] = bd.dominated;
  out["certified"] = bd.certified;
  out["degenerate_tb"] = bd.degenerate_tb;
  out["zeta_capped"] = bd.zeta_capped;
  out["max_z"] = bd.max_z;
  out["max_z_a"] = bd.max_z_a;
  out["max_z_d"] = bd.max_z_d;
  out["max_zeta_drop"] = bd.max_zeta_drop;
  json hist = json::object();
  for (const auto& [value, count] : bd.zeta_histogram)
    hist[std::to_string(value)] = count;
  out["zeta_histogram"] = hist;
  out["zeta_violations"] = bd.zeta_violations;
  out["key_collisions"] = bd.key_collisions;
  out["claims_built"] = bd.claims_built;
  out["claim_failures"] = bd.claim_failures;
  out["z_bound_ok"] = bd.z_bound_ok;
  out["dominated_traces_ok"] = bd.dominated_traces_ok;
  bool clean = bd.zeta_violations == 0 && bd.key_collisions == 0 &&
               bd.claim_failures == 0 && bd.degenerate_tb == 0 &&
               bd.z_bound_ok && bd.dominated_traces_ok;
  out["clean"] = clean;
  std::cout << out.dump() << "\n";
  return clean ? 0 : 1;
}

// ---------------------------------------------------------------- mwis

std::vector<Rational> weights_from_file(const std::string& path, int n) {
  std::string text = read_input(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("weights: invalid JSON: ") +
                                e.what());
  }
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("weights"))
      throw std::invalid_argument("weights: document has no weights field");
    arr = &j.at("weights");
  }
  if (!arr->is_array())
    throw std::invalid_argument("weights: expected a JSON array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < arr->size(); ++i)
    out.push_back(detail::rational_from_json(
        (*arr)[i], "weights[" + std::to_string(i) + "]"));
  if (static_cast<int>(out.size()) != n)
    throw std::invalid_argument("weights: need exactly one weight per vertex");
  return out;
}

int run_mwis(const std::string& file, const std::string& weights_path,
             bool brute) {
  GraphDocument doc = load_document(file);
  WeightedGraph wg = to_weighted_graph(doc);
  if (!weights_path.empty())
    wg.weight = weights_from_file(weights_path, wg.graph.vertex_count());
  json out;
  if (brute) {
    out["weight"] = weight_to_json(brute_mwis(wg));
  } else {
    MwisResult result = solve_mwis(wg);
    out["weight"] = weight_to_json(result.weight);
    out["chosen"] = to_json(result.chosen);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal separator toolkit"};
  app.require_subcommand(1);

  // gen
  std::string gen_family;
  int gen_k = 3, gen_path_len = 3, gen_n = 8;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-";
  CLI::App* gen = app.add_subcommand("gen", "generate a named graph family");
  gen->add_option("family", gen_family,
                  "prism | theta | skinny-ladder | creature | interval")
      ->required();
  gen->add_option("--k", gen_k, "family size parameter");
  gen->add_option("--path-len", gen_path_len, "theta: internal path length");
  gen->add_option("--n", gen_n, "interval: vertex count");
  gen->add_option("--seed", gen_seed, "interval: random seed");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // sep
  CLI::App* sep = app.add_subcommand("sep", "minimal separator operations");
  sep->require_subcommand(1);
  std::string sep_file = "-";
  bool sep_brute = false;
  std::string sep_vertex;
  int sep_k = 0;
  CLI::App* sep_enum = sep->add_subcommand("enum", "stream all minimal separators");
  sep_enum->add_option("file", sep_file, "graph document (default stdin)");
  sep_enum->add_flag("--brute", sep_brute, "use the exponential reference enumerator");
  CLI::App* sep_count = sep->add_subcommand("count", "count minimal separators");
  sep_count->add_option("file", sep_file, "graph document (default stdin)");
  sep_count->add_flag("--brute", sep_brute, "use the exponential reference enumerator");
  CLI::App* sep_traces = sep->add_subcommand("traces", "trace family of a vertex");
  sep_traces->add_option("file", sep_file, "graph document (default stdin)");
  sep_traces->add_option("--vertex", sep_vertex, "vertex index or label")->required();
  sep_traces->add_option("--k", sep_k, "check the n^(k+1) trace bound");

  // zeta
  std::string zeta_file = "-", zeta_set;
  CLI::App* zeta_cmd = app.add_subcommand("zeta", "zeta invariant of a vertex set");
  zeta_cmd->add_option("file", zeta_file, "graph document (default stdin)");
  zeta_cmd->add_option("--set", zeta_set, "comma-separated vertices")->required();

  // creature
  CLI::App* creature = app.add_subcommand("creature", "k-creature search/verify");
  creature->require_subcommand(1);
  std::string creature_file = "-", creature_witness;
  int creature_k = 0;
  long long creature_budget = -1;
  CLI::App* creature_find = creature->add_subcommand("find", "search for a k-creature");
  creature_find->add_option("file", creature_file, "graph document (default stdin)");
  creature_find->add_option("--k", creature_k, "creature size")->required();
  creature_find->add_option("--budget", creature_budget, "search step budget");
  creature_find->add_option("--witness", creature_witness, "also write the witness here");
  CLI::App* creature_verify = creature->add_subcommand("verify", "check a claimed witness");
  creature_verify->add_option("file", creature_file, "graph document (default stdin)");
  creature_verify->add_option("--k", creature_k, "expected creature size");
  creature_verify->add_option("--witness", creature_witness, "witness JSON file")
      ->required();

  // ladder
  CLI::App* ladder = app.add_subcommand("ladder", "skinny-ladder induced minor search");
  ladder->require_subcommand(1);
  std::string ladder_file = "-";
  int ladder_k = 0;
  long long ladder_budget = -1;
  CLI::App* ladder_find = ladder->add_subcommand("find", "search for a k-skinny-ladder");
  ladder_find->add_option("file", ladder_file, "graph document (default stdin)");
  ladder_find->add_option("--k", ladder_k, "ladder size")->required();
  ladder_find->add_option("--budget", ladder_budget, "search step budget");

  // certify
  std::string certify_file = "-";
  int certify_k = 0, certify_zeta_max = 1 << 28;
  CLI::App* certify = app.add_subcommand(
      "certify", "run the reconstruction over every minimal separator");
  certify->add_option("file", certify_file, "graph document (default stdin)");
  certify->add_option("--k", certify_k,
                      "enable the |Z| < k^2 bound check (0 = off)");
  certify->add_option("--zeta-max", certify_zeta_max,
                      "skip separators with zeta above this cap");

  // mwis
  std::string mwis_file = "-", mwis_weights;
  bool mwis_brute = false;
  CLI::App* mwis = app.add_subcommand(
      "mwis", "exact maximum weight independent set");
  mwis->add_option("file", mwis_file, "graph document (default stdin)");
  mwis->add_option("--weights", mwis_weights,
                   "weights file (JSON array, overrides document weights)");
  mwis->add_flag("--brute", mwis_brute, "exponential reference solver (value only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen)
      return run_gen(gen_family, gen_k, gen_path_len, gen_n, gen_seed, gen_out);
    if (*sep_enum) return run_sep_enum(sep_file, sep_brute);
    if (*sep_count) return run_sep_count(sep_file, sep_brute);
    if (*sep_traces) return run_sep_traces(sep_file, sep_vertex, sep_k);
    if (*zeta_cmd) return run_zeta(zeta_file, zeta_set);
    if (*creature_find) {
      long long budget =
          creature_budget >= 0 ? creature_budget : default_budget();
      return run_creature_find(creature_file, creature_k, budget,
                               creature_witness);
    }
    if (*creature_verify)
      return run_creature_verify(creature_file, creature_k, creature_witness);
    if (*ladder_find) {
      long long budget = ladder_budget >= 0 ? ladder_budget : default_budget();
      return run_ladder_find(ladder_file, ladder_k, budget);
    }
    if (*certify) return run_certify(certify_file, certify_k, certify_zeta_max);
    if (*mwis) return run_mwis(mwis_file, mwis_weights, mwis_brute);
    throw std::logic_error("no subcommand dispatched");
  } catch (const std::invalid_argument& e) {
    std::cerr << "septamer: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "septamer: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "septamer: " << e.what() << "\n";
    return 3;
  }
}
