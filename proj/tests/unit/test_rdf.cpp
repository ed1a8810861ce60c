#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "rsvocab/rdf/formats.hpp"
#include "rsvocab/rdf/namespaces.hpp"
#include "support/fixtures.hpp"
#include "support/jsonld_oracle.hpp"
#include "support/paper_oracle.hpp"

using namespace rsvocab;
using namespace rsvocab::rdf;
using rsvocab::testing::fixture_graph;
using rsvocab::testing::hand_counted_ic_edu;

namespace {

const std::string kSkos = "http://www.w3.org/2004/02/skos/core#";
const std::string kOdrl = "http://www.w3c.org/ns/odrl/2/";

Graph relabel(const Graph& g, const std::string& prefix) {
  std::map<std::string, std::string> names;
  auto map = [&](const Term& t) -> Term {
    if (const auto* b = std::get_if<BlankNode>(&t)) {
      auto [it, fresh] = names.emplace(b->label(), "");
      if (fresh) it->second = prefix + std::to_string(names.size() * 7);
      return BlankNode(it->second);
    }
    return t;
  };
  Graph out;
  for (const auto& t : g) out.insert(Triple(map(t.subject()), t.predicate(), map(t.object())));
  return out;
}

}  // namespace

// --- terms ---------------------------------------------------------------

TEST(Term, IriValidation) {
  EXPECT_NO_THROW(Iri("http://example.org/x"));
  EXPECT_THROW(Iri("no-scheme"), std::invalid_argument);
  EXPECT_THROW(Iri("http://exa mple.org/"), std::invalid_argument);
  EXPECT_THROW(Iri("http://example.org/<x>"), std::invalid_argument);
}

TEST(Term, LanguageTagNormalization) {
  EXPECT_EQ(normalize_language_tag("EN"), "en");
  EXPECT_EQ(normalize_language_tag("nl-be"), "nl-BE");
  EXPECT_EQ(normalize_language_tag("eng"), "eng");
  EXPECT_FALSE(normalize_language_tag(""));
  EXPECT_FALSE(normalize_language_tag("english"));
  EXPECT_FALSE(normalize_language_tag("e1"));
  EXPECT_EQ(Literal::with_language("x", "EN").language(), "en");
}

TEST(Term, SortOrderIrisBlankNodesLiterals) {
  std::vector<Term> terms{Literal("a"), BlankNode("b"), Iri("http://z")};
  std::sort(terms.begin(), terms.end());
  EXPECT_TRUE(is_iri(terms[0]));
  EXPECT_TRUE(is_blank(terms[1]));
  EXPECT_TRUE(is_literal(terms[2]));
}

TEST(Graph, LiteralSubjectRejected) {
  EXPECT_THROW(Triple(Literal("x"), Iri("http://p"), Literal("y")), std::invalid_argument);
}

TEST(Graph, DuplicatesCollapse) {
  Graph g;
  EXPECT_TRUE(g.insert({Iri("http://s"), Iri("http://p"), Literal("o")}));
  EXPECT_FALSE(g.insert({Iri("http://s"), Iri("http://p"), Literal("o")}));
  EXPECT_EQ(g.size(), 1u);
}

TEST(Namespaces, CompactUsesTable) {
  auto c = compact(kSkos + "prefLabel");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->first, "skos");
  EXPECT_EQ(c->second, "prefLabel");
  EXPECT_EQ(compact_or_full("http://example.org/x"), "http://example.org/x");
}

// --- parser --------------------------------------------------------------

TEST(TurtleParser, PaperIcEduBlockHasThirteenTriples) {
  Graph g = fixture_graph("ic_edu.ttl");
  Graph oracle = hand_counted_ic_edu();
  ASSERT_EQ(oracle.size(), 13u);
  EXPECT_EQ(g.size(), 13u);
  EXPECT_TRUE(graphs_isomorphic(g, oracle));
  EXPECT_TRUE(g.contains(Triple(Iri("http://rightsstatements.org/rs/ic-edu"), Iri(kSkos + "prefLabel"),
                                Literal::with_language("In Copyright - Educational Use Only", "en"))));
}

TEST(TurtleParser, EmptyDocument) {
  EXPECT_TRUE(parse_turtle("").empty());
  EXPECT_TRUE(parse_turtle("# only a comment\n\n").empty());
}

TEST(TurtleParser, ObjectListsAndDatatypes) {
  auto g = parse_turtle(
      "@prefix ex: <http://example.org/> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      "ex:s ex:p ex:a, ex:b ; ex:q \"1\"^^xsd:integer ; ex:r \"x\\ty\\\"\" .\n");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.contains(Triple(Iri("http://example.org/s"), Iri("http://example.org/q"),
                                Literal::with_datatype("1", Iri("http://www.w3.org/2001/XMLSchema#integer")))));
  EXPECT_TRUE(g.contains(
      Triple(Iri("http://example.org/s"), Iri("http://example.org/r"), Literal("x\ty\""))));
}

TEST(TurtleParser, BlankNodeLabelsAreDocumentScoped) {
  auto g = parse_turtle("_:x <http://p> _:y . _:y <http://p> _:x .");
  EXPECT_EQ(g.blank_nodes().size(), 2u);
  auto h = parse_turtle("_:m <http://p> _:n . _:n <http://p> _:m .");
  EXPECT_TRUE(graphs_isomorphic(g, h));
}

TEST(TurtleParser, RelativeIriNeedsBase) {
  EXPECT_THROW(parse_turtle("<obj> <http://p> <http://o> ."), SyntaxError);
  auto g = parse_turtle("<obj> <http://p> <http://o> .", "file:///data/x.ttl");
  EXPECT_EQ(to_string(g.begin()->subject()), "<file:///data/obj>");
}

TEST(TurtleParser, ErrorsCarryPosition) {
  try {
    parse_turtle("@prefix ex: <http://e/> .\nfoo:s ex:p ex:o .");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("unknown prefix"), std::string::npos);
  }
  EXPECT_THROW(parse_turtle("<http://s> <http://p> \"open ."), SyntaxError);
  EXPECT_THROW(parse_turtle("<http://s> <http://p> <http://o>"), SyntaxError);
  EXPECT_THROW(parse_turtle("<http://s> <http://p> 42 ."), SyntaxError);
  EXPECT_THROW(parse_turtle("<http://s> <http://p> \"\"\"long\"\"\" ."), SyntaxError);
  EXPECT_THROW(parse_turtle("<http://s> <http://p> ( <http://a> ) ."), SyntaxError);
  EXPECT_THROW(parse_turtle("\"lit\" <http://p> <http://o> ."), SyntaxError);
}

TEST(TurtleParser, InvalidUtf8) {
  std::string bad = "<http://s> <http://p> \"\xC3\x28\" .";
  EXPECT_THROW(parse_turtle(bad), EncodingError);
}

// --- serializer ----------------------------------------------------------

TEST(TurtleWriter, EmptyGraphIsPrefixHeaderOnly) {
  auto text = serialize_turtle(Graph{});
  EXPECT_NE(text.find("@prefix skos:"), std::string::npos);
  EXPECT_TRUE(parse_turtle(text).empty());
}

TEST(TurtleWriter, IcEduRoundTrip) {
  Graph g = fixture_graph("ic_edu.ttl");
  auto text = serialize_turtle(g);
  EXPECT_TRUE(graphs_isomorphic(parse_turtle(text), g)) << text;
}

TEST(TurtleWriter, TypeWrittenFirst) {
  auto text = serialize_turtle(fixture_graph("ic_edu.ttl"));
  auto a = text.find(" a dcterms:RightsStatement");
  ASSERT_NE(a, std::string::npos);
  EXPECT_LT(a, text.find("skos:prefLabel"));
}

TEST(TurtleWriter, DeterministicAcrossInsertionOrder) {
  Graph g = fixture_graph("vocabulary.ttl");
  std::vector<Triple> triples(g.begin(), g.end());
  std::mt19937 rng(7);
  std::shuffle(triples.begin(), triples.end(), rng);
  Graph h;
  for (const auto& t : triples) h.insert(t);
  EXPECT_EQ(serialize_turtle(g), serialize_turtle(h));
  // Relabelled blank nodes must not change the output either.
  EXPECT_EQ(serialize_turtle(g), serialize_turtle(relabel(g, "zz")));
}

TEST(TurtleWriter, SharedAndCyclicBlankNodes) {
  auto g = parse_turtle(
      "_:a <http://p> _:b . _:b <http://p> _:a .\n"
      "<http://s> <http://q> _:c . <http://t> <http://q> _:c . _:c <http://r> \"x\" .\n"
      "_:self <http://p> _:self .");
  auto text = serialize_turtle(g);
  EXPECT_TRUE(graphs_isomorphic(parse_turtle(text), g)) << text;
}

TEST(TurtleWriter, EscapesRoundTrip) {
  Graph g{{Iri("http://s"), Iri("http://p"), Literal("quote \" back \\ nl \n tab \t cr \r ü €")}};
  EXPECT_EQ(parse_turtle(serialize_turtle(g)), g);
}

// --- JSON-LD -------------------------------------------------------------

TEST(JsonLd, EmptyGraphHasOnlyContext) {
  auto doc = nlohmann::json::parse(serialize_jsonld(Graph{}));
  ASSERT_TRUE(doc.is_object());
  EXPECT_EQ(doc.size(), 1u);
  EXPECT_TRUE(doc.contains("@context"));
}

TEST(JsonLd, IcEduNodeCarriesEnglishLabel) {
  auto doc = nlohmann::json::parse(serialize_jsonld(fixture_graph("ic_edu.ttl")));
  bool found = false;
  for (const auto& node : doc["@graph"]) {
    if (node["@id"] != "http://rightsstatements.org/rs/ic-edu") continue;
    for (const auto& v : node["skos:prefLabel"]) {
      found |= v["@value"] == "In Copyright - Educational Use Only" && v["@language"] == "en";
    }
  }
  EXPECT_TRUE(found);
}

TEST(JsonLd, JsonWalkOracleRebuildsGraph) {
  for (const char* name : {"ic_edu.ttl", "vocabulary.ttl", "europeana.ttl", "dpla.ttl"}) {
    Graph g = fixture_graph(name);
    Graph rebuilt = rsvocab::testing::JsonLdOracle().read(serialize_jsonld(g));
    EXPECT_TRUE(graphs_isomorphic(rebuilt, g)) << name;
  }
}

TEST(JsonLd, Deterministic) {
  Graph g = fixture_graph("vocabulary.ttl");
  EXPECT_EQ(serialize_jsonld(g), serialize_jsonld(relabel(g, "q")));
}

// --- RDFa ----------------------------------------------------------------

TEST(Rdfa, NoAttributesNoTriples) {
  EXPECT_TRUE(extract_rdfa("<html><body><p>Hello</p></body></html>").empty());
}

TEST(Rdfa, LanguageTaggedLabel) {
  auto g = extract_rdfa(
      "<div prefix=\"skos: http://www.w3.org/2004/02/skos/core#\" "
      "about=\"http://rightsstatements.org/rs/ic/1.0/\">"
      "<span property=\"skos:prefLabel\" lang=\"en\">In Copyright</span></div>");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.begin()->object(), Term(Literal::with_language("In Copyright", "en")));
}

TEST(Rdfa, EntitiesResourcesAndEmptyLang) {
  auto g = extract_rdfa(
      "<html lang=\"nl\" prefix=\"ex: http://example.org/\"><body about=\"http://example.org/s\">"
      "<p property=\"ex:a\">A &amp; B &#8364; &lt;</p>"
      "<p property=\"ex:b\" lang=\"\">plain</p>"
      "<a property=\"ex:c\" resource=\"http://example.org/o\" href=\"x\">ignored</a>"
      "<br><img src=\"x\">"
      "<span property=\"ex:d\" content=\"2014-12-18\">18 Dec</span>"
      "</body></html>");
  Iri s("http://example.org/s");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.contains(Triple(s, Iri("http://example.org/a"), Literal::with_language("A & B € <", "nl"))));
  EXPECT_TRUE(g.contains(Triple(s, Iri("http://example.org/b"), Literal("plain"))));
  EXPECT_TRUE(g.contains(Triple(s, Iri("http://example.org/c"), Iri("http://example.org/o"))));
  EXPECT_TRUE(g.contains(Triple(s, Iri("http://example.org/d"), Literal::with_language("2014-12-18", "nl"))));
}

// --- isomorphism ---------------------------------------------------------

TEST(Isomorphism, Identity) {
  Graph g = fixture_graph("ic_edu.ttl");
  EXPECT_TRUE(graphs_isomorphic(g, g));
}

TEST(Isomorphism, RelabelOracle) {
  Graph g = fixture_graph("vocabulary.ttl");
  EXPECT_TRUE(graphs_isomorphic(g, relabel(g, "renamed")));
}

TEST(Isomorphism, OneTripleMutationOracle) {
  Graph g = fixture_graph("ic_edu.ttl");
  for (const auto& t : g) {
    Graph m = g;
    m.erase(t);
    EXPECT_FALSE(graphs_isomorphic(g, m)) << to_string(t.object());
  }
  Graph m = g;
  for (const auto& t : g) {
    if (t.object() == Term(Iri(kOdrl + "eq"))) m.erase(t);
  }
  EXPECT_EQ(m.size(), 12u);
  EXPECT_FALSE(graphs_isomorphic(g, m));
}

TEST(Isomorphism, RegularGraphsNeedBacktracking) {
  // Two triangles vs one hexagon: every node has in/out degree 1, so colour
  // refinement alone cannot tell them apart.
  auto ring = [](std::vector<std::vector<int>> cycles) {
    Graph g;
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        g.insert(Triple(BlankNode("n" + std::to_string(c[i])), Iri("http://p"),
                        BlankNode("n" + std::to_string(c[(i + 1) % c.size()]))));
      }
    }
    return g;
  };
  Graph triangles = ring({{0, 1, 2}, {3, 4, 5}});
  Graph hexagon = ring({{0, 1, 2, 3, 4, 5}});
  EXPECT_FALSE(graphs_isomorphic(triangles, hexagon));
  EXPECT_TRUE(graphs_isomorphic(triangles, ring({{5, 3, 1}, {0, 4, 2}})));
}

TEST(Isomorphism, ResourceLimit) {
  Graph g;
  for (std::size_t i = 0; i <= kMaxIsomorphismBlankNodes; ++i) {
    g.insert(Triple(BlankNode("b" + std::to_string(i)), Iri("http://p"), Literal("x")));
  }
  EXPECT_THROW(graphs_isomorphic(g, g), ResourceLimitError);
}
