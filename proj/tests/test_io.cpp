#include <catch2/catch_amalgamated.hpp>

#include "septamer/families.hpp"
#include "septamer/io.hpp"

using namespace septamer;
using Catch::Matchers::ContainsSubstring;

namespace {

const char* kPrismDimacs =
    "c a triangular prism\n"
    "p edge 6 9\n"
    "e 1 2\n"
    "e 2 3\n"
    "e 1 3\n"
    "e 4 5\n"
    "e 5 6\n"
    "e 4 6\n"
    "e 1 4\n"
    "e 2 5\n"
    "e 3 6\n";

}  // namespace

TEST_CASE("json documents parse with all fields", "[io]") {
  GraphDocument doc = parse_document(R"({
    "n": 4,
    "edges": [[0, 1], [1, 2], [2, 3]],
    "labels": {"left": 0, "right": 3},
    "weights": [1, "3/4", 0.5, "2"]
  })");
  CHECK(doc.n == 4);
  CHECK(doc.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(doc.labels == std::map<std::string, int>{{"left", 0}, {"right", 3}});
  REQUIRE(doc.weights.size() == 4);
  CHECK(doc.weights[0] == Rational{1});
  CHECK(doc.weights[1] == Rational{3, 4});
  CHECK(doc.weights[2] == Rational{1, 2});
  CHECK(doc.weights[3] == Rational{2});
}

TEST_CASE("json documents survive a serialize/parse round trip", "[io]") {
  GraphDocument doc;
  doc.n = 5;
  doc.edges = {{0, 1}, {0, 4}, {2, 3}};
  doc.labels = {{"hub", 0}};
  doc.weights = {Rational{1}, Rational{7, 2}, Rational{0}, Rational{5},
                 Rational{2, 3}};
  CHECK(parse_document(serialize_document(doc)) == doc);

  // Integral weights serialize as plain numbers, fractions as "p/q" strings.
  std::string text = serialize_document(doc);
  CHECK_THAT(text, ContainsSubstring("\"7/2\""));
  CHECK_THAT(text, ContainsSubstring("\"2/3\""));
  CHECK_THAT(text, !ContainsSubstring("\"5\""));

  GraphDocument plain = document_from(prism(4).graph);
  CHECK(parse_document(serialize_document(plain)) == plain);

  GraphDocument labeled = document_from(skinny_ladder(3));
  CHECK(parse_document(serialize_document(labeled)) == labeled);
}

TEST_CASE("dimacs documents parse and normalize", "[io]") {
  GraphDocument doc = parse_document(kPrismDimacs);
  CHECK(doc.n == 6);
  CHECK(to_graph(doc).edges() == prism(3).graph.edges());

  SECTION("edge order and endpoint order do not matter") {
    GraphDocument flipped = parse_document(
        "p edge 3 2\n"
        "e 3 1\n"
        "e 2 1\n");
    CHECK(flipped.edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  }
  SECTION("diagnostics carry line numbers") {
    CHECK_THROWS_WITH(parse_document("p edge 2 1\ne 1 5\n"),
                      ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_document("p edge 2 1\nq 1 2\n"),
                      ContainsSubstring("unrecognized line type"));
    CHECK_THROWS_WITH(parse_document("p edge 2 1\ne 1 1\n"),
                      ContainsSubstring("self-loop"));
    CHECK_THROWS_WITH(parse_document("c only a comment\n"),
                      ContainsSubstring("missing 'p edge' header"));
    CHECK_THROWS_WITH(parse_document("p edge 2 2\ne 1 2\n"),
                      ContainsSubstring("declares 2 edges"));
    CHECK_THROWS_WITH(parse_document("p edge 3 2\ne 1 2\ne 2 1\n"),
                      ContainsSubstring("duplicate edge"));
    CHECK_THROWS_WITH(parse_document("e 1 2\np edge 2 1\n"),
                      ContainsSubstring("before the 'p edge' header"));
  }
}

TEST_CASE("format sniffing picks the right parser", "[io]") {
  CHECK(parse_document("  \n {\"n\": 1, \"edges\": []}").n == 1);
  CHECK(parse_document("\nc hi\np edge 1 0\n").n == 1);
  CHECK_THROWS_WITH(parse_document("graph G {}"),
                    ContainsSubstring("unrecognized format"));
  CHECK_THROWS_WITH(parse_document("   \n\t"), ContainsSubstring("empty input"));
}

TEST_CASE("invalid documents are rejected with field diagnostics", "[io]") {
  auto reject = [](const std::string& text, const std::string& needle) {
    CHECK_THROWS_MATCHES(parse_document(text), std::invalid_argument,
                         Catch::Matchers::MessageMatches(ContainsSubstring(needle)));
  };
  reject("{\"n\": 2}", "field 'edges'");
  reject("{\"edges\": []}", "field 'n'");
  reject("{\"n\": 2, \"edges\": [[0]]}", "edges[0]");
  reject("{\"n\": 2, \"edges\": [[1, 0]]}", "u < v");
  reject("{\"n\": 2, \"edges\": [[0, 2]]}", "out of range");
  reject("{\"n\": 2, \"edges\": [[0, 1], [0, 1]]}", "duplicate edge");
  reject("{\"n\": -1, \"edges\": []}", "non-negative");
  reject("{\"n\": 2, \"edges\": [], \"labels\": {\"a\": 9}}", "labels.a");
  reject("{\"n\": 2, \"edges\": [], \"weights\": [1]}", "one weight per vertex");
  reject("{\"n\": 1, \"edges\": [], \"weights\": [-2]}", "non-negative");
  reject("{\"n\": 1, \"edges\": [], \"weights\": [\"1/0\"]}", "zero denominator");
  reject("{\"n\": 1, \"edges\": [], \"weights\": [\"abc\"]}", "cannot parse");
  reject("{\"n\": 1, \"edges\": [], \"weights\": [true]}", "weights[0]");
  reject("{\"n\": 1, \"edges\": [", "invalid JSON");
  reject("[1, 2]", "top level");
}

TEST_CASE("floating point weights convert exactly", "[io]") {
  GraphDocument doc =
      parse_document("{\"n\": 3, \"edges\": [], \"weights\": [0.25, 0.1, 2.5]}");
  CHECK(doc.weights[0] == Rational{1, 4});
  // 0.1 is not a binary fraction; the stored double is kept bit-exactly.
  CHECK(doc.weights[1] == Rational{3602879701896397ll, 36028797018963968ll});
  CHECK(doc.weights[2] == Rational{5, 2});
}

TEST_CASE("vertex tokens resolve through labels or indices", "[io]") {
  GraphDocument doc = document_from(skinny_ladder(3));
  const LabeledGraph lg = skinny_ladder(3);
  CHECK(resolve_vertex(doc, "r2") == lg.vertex("r2"));
  CHECK(resolve_vertex(doc, "0") == 0);
  CHECK(resolve_vertex_set(doc, "r1, r2 ,r3") ==
        lg.set_of({"r1", "r2", "r3"}));
  CHECK_THROWS_WITH(resolve_vertex(doc, "bogus"),
                    ContainsSubstring("unknown vertex"));
  CHECK_THROWS_WITH(resolve_vertex(doc, "99"),
                    ContainsSubstring("unknown vertex"));
  CHECK_THROWS_WITH(resolve_vertex_set(doc, "r1,,r2"),
                    ContainsSubstring("empty vertex"));
}

TEST_CASE("documents convert to weighted graphs", "[io]") {
  GraphDocument doc = parse_document(
      "{\"n\": 3, \"edges\": [[0, 1]], \"weights\": [1, \"1/2\", 4]}");
  WeightedGraph wg = to_weighted_graph(doc);
  CHECK(wg.graph.vertex_count() == 3);
  CHECK(wg.weight == std::vector<Rational>{Rational{1}, Rational{1, 2}, Rational{4}});

  GraphDocument unweighted = document_from(prism(3).graph);
  WeightedGraph unit = to_weighted_graph(unweighted);
  CHECK(unit.weight == std::vector<Rational>(6, Rational{1}));
}
