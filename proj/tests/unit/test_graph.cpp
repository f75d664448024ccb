#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "coxroots/error.hpp"
#include "coxroots/graph.hpp"
#include "support.hpp"

using namespace coxroots;
using namespace coxroots::testing;

namespace {

// Direct reading of the definition: between any two consecutive copies of a
// letter, every neighbour of it appears.
bool intervening_oracle(const Word& w, const CoxeterGraph& g) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t j = i + 1;
    while (j < w.size() && w[j] != w[i]) ++j;
    if (j == w.size()) continue;
    for (Vertex y : g.neighbours(w[i])) {
      if (std::find(w.begin() + i + 1, w.begin() + j, y) == w.begin() + j) return false;
    }
  }
  return true;
}

std::size_t line_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("line format parses and round-trips") {
  const auto g = parse_graph("# triangle\nvertex a\nvertex b\nvertex c\n\nedge a b 3\nedge b c inf\nedge a c 4\n");
  CHECK(g.size() == 3);
  CHECK(g.edges().size() == 3);
  CHECK(g.label(1, 2).is_infinite());
  CHECK(g.label(2, 0) == Label(4));
  CHECK_FALSE(g.label(0, 0).is_edge());
  CHECK(parse_graph(to_text(g)) == g);
  CHECK(parse_graph(to_json(g)) == g);
  const auto j = parse_graph(R"({"vertices":["x","y"],"edges":[["x","y","inf"]]})");
  CHECK(j.label(0, 1).is_infinite());
}

TEST_CASE("malformed graphs are rejected with their line") {
  CHECK(line_of("vertex a\nvertex b\nedge a b 2\n") == 3);
  CHECK(line_of("vertex a\nvertex a\n") == 2);
  CHECK(line_of("vertex a\nedge a z 3\n") == 2);
  CHECK(line_of("vertex a\nvertex b\nedge a b 3\nedge b a 4\n") == 4);
  CHECK(line_of("vertex a\nedge a a 3\n") == 2);
  CHECK(line_of("vertex a\nnode b\n") == 2);
  CHECK(line_of("vertex a\nvertex b\nedge a b x\n") == 3);
  CHECK_THROWS_AS(parse_graph("{\"vertices\": [1]}"), ParseError);
}

TEST_CASE("catalog shapes") {
  struct Shape {
    Family f;
    int n;
    std::size_t vertices, edges;
    bool tree;
  };
  const std::vector<Shape> shapes = {
      {Family::A, 1, 2, 1, true},  {Family::A, 2, 3, 3, false}, {Family::A, 5, 6, 6, false},
      {Family::B, 3, 4, 3, true},  {Family::B, 6, 7, 6, true},  {Family::C, 2, 3, 2, true},
      {Family::C, 4, 5, 4, true},  {Family::D, 4, 5, 4, true},  {Family::D, 6, 7, 6, true},
      {Family::E6, 0, 7, 6, true}, {Family::E7, 0, 8, 7, true}, {Family::E8, 0, 9, 8, true},
      {Family::F4, 0, 5, 4, true}, {Family::G2, 0, 3, 2, true},
  };
  for (const auto& s : shapes) {
    const auto e = catalog(s.f, s.n);
    INFO(e.name());
    CHECK(e.graph.size() == s.vertices);
    CHECK(e.graph.edges().size() == s.edges);
    CHECK(e.graph.is_tree() == s.tree);
    CHECK(e.graph.connected());
    CHECK(e.graph.exact_labels());
  }
  CHECK(catalog(Family::A, 1).graph.label(0, 1).is_infinite());
  CHECK(catalog(Family::G2).graph.label(0, 1) == Label(6));
  CHECK(catalog(Family::G2).name() == "G2t");
  CHECK(catalog(Family::A, 2).name() == "A2t");
  // D4~ has a degree-4 centre.
  const auto d4 = catalog(Family::D, 4).graph;
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < d4.size(); ++v) max_degree = std::max(max_degree, d4.neighbours(v).size());
  CHECK(max_degree == 4);
  CHECK(parse_family("g2t") == Family::G2);
  CHECK(parse_family("A~") == Family::A);
  CHECK_THROWS_AS(parse_family("Q"), Error);
  CHECK_THROWS_AS(catalog(Family::B, 2), Error);
  CHECK(catalog_up_to(5).size() > 5);
}

TEST_CASE("intervening neighbours examples") {
  const auto a2t = affine(Family::A, 2);
  CHECK(has_intervening_neighbours(parse_word(a2t, "abc"), a2t));
  CHECK(has_intervening_neighbours(parse_word(a2t, "acac"), a2t).holds == false);
  const auto bad = has_intervening_neighbours(parse_word(a2t, "aba"), a2t);
  REQUIRE_FALSE(bad);
  CHECK(bad.violation == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(bad.missing_neighbour == a2t.index("c"));
  const auto a2 = type_a(2);
  CHECK(has_intervening_neighbours(parse_word(a2, "abab"), a2));
  CHECK(has_intervening_neighbours({}, a2));
  CHECK_THROWS_AS(parse_word(a2, "abz"), Error);
}

TEST_CASE("intervening check matches the definition, is reversal invariant") {
  std::mt19937_64 rng(21);
  for (const auto& entry : catalog_up_to(5)) {
    const auto& g = entry.graph;
    for (int k = 0; k < 300; ++k) {
      Word w = random_word(g, 1 + rng() % 9, rng);
      const bool holds = has_intervening_neighbours(w, g).holds;
      CHECK(holds == intervening_oracle(w, g));
      std::reverse(w.begin(), w.end());
      CHECK(has_intervening_neighbours(w, g).holds == holds);
    }
  }
}

TEST_CASE("extendable letters are exactly the safe appends") {
  std::mt19937_64 rng(22);
  const auto g = affine(Family::D, 4);
  for (int k = 0; k < 200; ++k) {
    Word w = random_word(g, rng() % 8, rng);
    if (!has_intervening_neighbours(w, g)) continue;
    const auto ext = extendable_letters(w, g);
    for (Vertex x = 0; x < g.size(); ++x) {
      Word longer = w;
      longer.push_back(x);
      CHECK((std::find(ext.begin(), ext.end(), x) != ext.end()) == intervening_oracle(longer, g));
    }
  }
}

TEST_CASE("bicoloured words have intervening neighbours") {
  for (const auto& entry : catalog_up_to(9)) {
    if (!entry.graph.is_tree()) continue;
    for (Vertex s = 0; s < entry.graph.size(); ++s) {
      const Word w = bicoloured_word(entry.graph, s, 5 * entry.graph.size());
      INFO(entry.name() << " from " << entry.graph.name(s));
      CHECK(w.size() == 5 * entry.graph.size());
      CHECK(w.front() == s);
      CHECK(intervening_oracle(w, entry.graph));
    }
  }
  const auto e6 = affine(Family::E6);
  CHECK(format_word(e6, bicoloured_word(e6, e6.index("c"), 7), "") == "cbdface");
  CHECK_THROWS_AS(bicoloured_word(affine(Family::A, 2), 0, 4), Error);
}

TEST_CASE("affine witness search") {
  // s0-s1, s1-s2, s1-s3, s2-s3: the triangle s1 s2 s3 is A2~.
  const auto tri = parse_graph(
      "vertex s0\nvertex s1\nvertex s2\nvertex s3\nedge s0 s1 3\nedge s1 s2 3\nedge s1 s3 3\nedge s2 s3 3\n");
  const auto w = find_affine_witness(tri);
  REQUIRE(w);
  CHECK(w->entry.name() == "A2t");
  std::vector<Vertex> found = w->vertices;
  std::sort(found.begin(), found.end());
  CHECK(found == std::vector<Vertex>{1, 2, 3});

  CHECK_FALSE(find_affine_witness(type_a(3)));
  CHECK_FALSE(find_affine_witness(type_b(4)));
  CHECK_FALSE(find_affine_witness(type_h3()));
  for (const auto& entry : catalog_up_to(7)) {
    INFO(entry.name());
    CHECK(find_affine_witness(entry.graph));
  }
}

TEST_CASE("extensions keep affine witnesses") {
  for (const auto& entry : catalog_up_to(5)) {
    const auto& g = entry.graph;
    const auto grown = extend_pendant(g, 0, "z", Label(3));
    CHECK(grown.size() == g.size() + 1);
    CHECK(find_affine_witness(grown));
    const auto& e = g.edges().front();
    if (!e.label.is_infinite()) {
      const auto raised = increase_label(g, e.u, e.v, Label::infinity());
      CHECK(raised.label(e.u, e.v).is_infinite());
      CHECK(find_affine_witness(raised));
    }
  }
  const auto g2 = affine(Family::G2);
  CHECK_THROWS_AS(increase_label(g2, 0, 1, Label(5)), Error);
  CHECK_THROWS_AS(extend_pendant(g2, 0, "a", Label(3)), Error);
}
