#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxroots/label.hpp"

namespace coxroots {

using Vertex = std::size_t;

// A word is a sequence of vertex indices into its graph.
using Word = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;
  Label label;
};

// Coxeter graph: the generators and the labels m_xy >= 3 of non-commuting
// pairs. Immutable after construction; vertex order is fixed and is the
// component order of every root vector over this graph.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  // Throws Error on duplicate names, self-loops, repeated pairs, labels
  // below 3 or endpoints out of range.
  CoxeterGraph(std::vector<std::string> names, std::vector<Edge> edges);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }
  // Throws Error for unknown names.
  Vertex index(std::string_view name) const;
  std::optional<Vertex> find(std::string_view name) const;

  // Edges in insertion order; edge indices address Orientation entries.
  const std::vector<Edge>& edges() const { return edges_; }
  // Label of the pair; Label::commuting() (2) when there is no edge.
  Label label(Vertex u, Vertex v) const { return labels_[u * size() + v]; }
  bool adjacent(Vertex u, Vertex v) const { return label(u, v).is_edge(); }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_.at(v); }
  // Index into edges() of the pair, if adjacent.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  // True when every label has an exact weight (3, 4, 5, 6 or inf).
  bool exact_labels() const;
  bool connected() const;
  bool is_tree() const;

  bool operator==(const CoxeterGraph& o) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> by_name_;
  std::vector<Edge> edges_;
  std::vector<Label> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// --- text and JSON formats -------------------------------------------------

// Line format ("vertex a", "edge a b 3", "# comment") or JSON
// ({"vertices":[...],"edges":[["a","b",3],...]}); JSON is detected by a
// leading '{'. Throws ParseError with the offending line.
CoxeterGraph parse_graph(std::string_view text);
// Canonical line-format rendering; parse_graph(to_text(g)) == g.
std::string to_text(const CoxeterGraph& g);
std::string to_json(const CoxeterGraph& g);

// Letters separated by whitespace or commas. When every vertex name is a
// single character, an unseparated run such as "acac" is split per char.
Word parse_word(const CoxeterGraph& g, std::string_view text);
std::string format_word(const CoxeterGraph& g, const Word& w, std::string_view sep = " ");
// Throws Error when a letter is not a vertex of g.
void check_word(const CoxeterGraph& g, const Word& w);

// --- affine catalog ----------------------------------------------------------

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

struct CatalogEntry {
  Family family;
  int rank;  // n for the A/B/C/D series, fixed rank otherwise
  CoxeterGraph graph;

  std::string name() const;  // e.g. "A2t", "G2t"
};

// Affine Coxeter graph of the given type. Valid ranks: A n >= 1 (n = 1 is
// the infinite bond), B n >= 3, C n >= 2, D n >= 4; the exceptional
// families ignore n. Vertices are named a, b, c, ... in drawing order.
CatalogEntry catalog(Family family, int n = 0);
// Parses "A", "At", "G2t", "e6", ...
Family parse_family(std::string_view token);
bool family_takes_rank(Family f);
// "A2t", "a", "G2~", ...; a rank embedded in the token wins over n only if
// they agree.
CatalogEntry catalog_by_name(std::string_view token, int n = 0);
// Every affine type with at most max_vertices vertices.
std::vector<CatalogEntry> catalog_up_to(std::size_t max_vertices);

// --- intervening neighbours --------------------------------------------------

struct InterveningCheck {
  bool holds = true;
  // Positions (0-based) of the first two consecutive occurrences of a letter
  // that are not separated by all of its neighbours.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  std::optional<Vertex> missing_neighbour;

  explicit operator bool() const { return holds; }
};

InterveningCheck has_intervening_neighbours(const Word& w, const CoxeterGraph& g);

// Letters that can be appended to w while keeping the property.
std::vector<Vertex> extendable_letters(const Word& w, const CoxeterGraph& g);

// s, then the vertices at odd distance from s, then those at even distance
// (s included), alternating; each block in vertex order. Requires a tree.
Word bicoloured_word(const CoxeterGraph& g, Vertex s, std::size_t length);
std::vector<int> distances_from(const CoxeterGraph& g, Vertex s);
std::size_t diameter(const CoxeterGraph& g);

// --- extension and classification -------------------------------------------

CoxeterGraph extend_pendant(const CoxeterGraph& g, Vertex s, const std::string& new_name, Label m);
CoxeterGraph increase_label(const CoxeterGraph& g, Vertex s, Vertex t, Label m);

struct AffineWitness {
  // vertices[i] is the graph vertex matched to template vertex i.
  std::vector<Vertex> vertices;
  CatalogEntry entry;
};

// Exhaustive search for an induced subgraph shaped like an affine graph with
// every label at least the template's. Finding one certifies infiniteness.
std::optional<AffineWitness> find_affine_witness(const CoxeterGraph& g);

}  // namespace coxroots
