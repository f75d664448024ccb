#include "coxroots/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "coxroots/error.hpp"
#include "coxroots/number.hpp"

namespace coxroots {

namespace {

bool valid_identifier(std::string_view id) {
  if (id.empty() || id.front() == '#') return false;
  return std::none_of(id.begin(), id.end(), [](unsigned char c) {
    return c == ',' || std::isspace(c) || c == '"';
  });
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<Label> parse_label_token(std::string_view tok) {
  if (tok == "inf") return Label::infinity();
  if (tok.empty() || tok.size() > 6) return std::nullopt;
  int value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return Label(value);
}

// Shared by both input formats: validates and builds, attributing each
// problem to a source line.
struct GraphBuilder {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> seen;
  struct PendingEdge {
    std::string u, v;
    Label label;
    std::size_t line;
  };
  std::vector<PendingEdge> edges;

  void add_vertex(std::string_view id, std::size_t line) {
    if (!valid_identifier(id)) throw ParseError(line, "invalid vertex identifier '" + std::string(id) + "'");
    if (!seen.emplace(std::string(id), names.size()).second) {
      throw ParseError(line, "duplicate vertex '" + std::string(id) + "'");
    }
    names.emplace_back(id);
  }

  void add_edge(std::string_view u, std::string_view v, Label label, std::size_t line) {
    if (label.is_infinite() ? false : label.value() < 3) {
      throw ParseError(line, "edge label must be >= 3 or inf (commuting pairs have no edge), got " +
                                 label.to_string());
    }
    edges.push_back({std::string(u), std::string(v), label, line});
  }

  CoxeterGraph build() {
    std::vector<Edge> out;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : edges) {
      const auto iu = seen.find(e.u);
      const auto iv = seen.find(e.v);
      if (iu == seen.end()) throw ParseError(e.line, "unknown vertex '" + e.u + "'");
      if (iv == seen.end()) throw ParseError(e.line, "unknown vertex '" + e.v + "'");
      if (iu->second == iv->second) throw ParseError(e.line, "self-loop on '" + e.u + "'");
      const std::pair<Vertex, Vertex> key = std::minmax(iu->second, iv->second);
      if (std::find(pairs.begin(), pairs.end(), key) != pairs.end()) {
        throw ParseError(e.line, "duplicate edge " + e.u + " " + e.v);
      }
      pairs.push_back(key);
      out.push_back({iu->second, iv->second, e.label});
    }
    return CoxeterGraph(std::move(names), std::move(out));
  }
};

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

CoxeterGraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), std::string("invalid JSON: ") + e.what());
  }
  GraphBuilder b;
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError(1, "JSON graph needs a \"vertices\" array");
  }
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError(1, "vertex names must be strings");
    b.add_vertex(v.get<std::string>(), 1);
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError(1, "\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
        throw ParseError(1, "edge entries are [\"u\", \"v\", label]");
      }
      Label label;
      if (e[2].is_string() && e[2].get<std::string>() == "inf") {
        label = Label::infinity();
      } else if (e[2].is_number_integer()) {
        label = Label(e[2].get<int>());
      } else {
        throw ParseError(1, "edge label must be an integer or \"inf\"");
      }
      b.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), label, 1);
    }
  }
  return b.build();
}

}  // namespace

CoxeterGraph::CoxeterGraph(std::vector<std::string> names, std::vector<Edge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  const std::size_t n = names_.size();
  for (Vertex v = 0; v < n; ++v) {
    if (!valid_identifier(names_[v])) throw Error("invalid vertex identifier '" + names_[v] + "'");
    if (!by_name_.emplace(names_[v], v).second) throw Error("duplicate vertex '" + names_[v] + "'");
  }
  labels_.assign(n * n, Label::commuting());
  adjacency_.assign(n, {});
  for (const auto& e : edges_) {
    if (e.u >= n || e.v >= n) throw Error("edge endpoint out of range");
    if (e.u == e.v) throw Error("self-loop on '" + names_[e.u] + "'");
    if (!e.label.is_infinite() && e.label.value() < 3) {
      throw Error("edge label must be >= 3 or inf, got " + e.label.to_string());
    }
    if (labels_[e.u * n + e.v].is_edge()) {
      throw Error("duplicate edge " + names_[e.u] + " " + names_[e.v]);
    }
    labels_[e.u * n + e.v] = e.label;
    labels_[e.v * n + e.u] = e.label;
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

Vertex CoxeterGraph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error("unknown vertex '" + std::string(name) + "'");
}

std::optional<Vertex> CoxeterGraph::find(std::string_view name) const {
  const auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CoxeterGraph::edge_index(Vertex u, Vertex v) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return i;
  }
  return std::nullopt;
}

bool CoxeterGraph::exact_labels() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return has_exact_weight(e.label); });
}

bool CoxeterGraph::connected() const {
  if (size() == 0) return true;
  const auto dist = distances_from(*this, 0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

bool CoxeterGraph::is_tree() const {
  return size() > 0 && edges_.size() + 1 == size() && connected();
}

bool CoxeterGraph::operator==(const CoxeterGraph& o) const {
  return names_ == o.names_ && labels_ == o.labels_;
}

CoxeterGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);

  GraphBuilder b;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "vertex") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertex <id>'");
      b.add_vertex(tokens[1], line_no);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'edge <id> <id> <label>'");
      const auto label = parse_label_token(tokens[3]);
      if (!label) throw ParseError(line_no, "bad edge label '" + std::string(tokens[3]) + "'");
      b.add_edge(tokens[1], tokens[2], *label, line_no);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
  }
  return b.build();
}

std::string to_text(const CoxeterGraph& g) {
  std::ostringstream out;
  for (const auto& n : g.names()) out << "vertex " << n << '\n';
  for (const auto& e : g.edges()) {
    out << "edge " << g.name(e.u) << ' ' << g.name(e.v) << ' ' << e.label.to_string() << '\n';
  }
  return out.str();
}

std::string to_json(const CoxeterGraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.names();
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    nlohmann::json label = e.label.is_infinite() ? nlohmann::json("inf") : nlohmann::json(e.label.value());
    doc["edges"].push_back({g.name(e.u), g.name(e.v), label});
  }
  return doc.dump();
}

Word parse_word(const CoxeterGraph& g, std::string_view text) {
  const bool single_char_names = std::all_of(g.names().begin(), g.names().end(),
                                             [](const std::string& n) { return n.size() == 1; });
  Word w;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (auto v = g.find(token)) {
      w.push_back(*v);
    } else if (single_char_names) {
      for (char c : token) w.push_back(g.index(std::string_view(&c, 1)));
    } else {
      throw Error("unknown letter '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return w;
}

std::string format_word(const CoxeterGraph& g, const Word& w, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += g.name(w[i]);
  }
  return out;
}

void check_word(const CoxeterGraph& g, const Word& w) {
  for (Vertex v : w) {
    if (v >= g.size()) throw Error("letter " + std::to_string(v) + " is not a vertex of the graph");
  }
}

InterveningCheck has_intervening_neighbours(const Word& w, const CoxeterGraph& g) {
  check_word(g, w);
  constexpr auto kNever = static_cast<std::size_t>(-1);
  std::vector<std::size_t> last(g.size(), kNever);
  InterveningCheck result;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const Vertex s = w[j];
    const std::size_t prev = last[s];
    if (prev != kNever) {
      for (Vertex y : g.neighbours(s)) {
        if (last[y] == kNever || last[y] < prev) {
          result.holds = false;
          result.violation = {prev, j};
          result.missing_neighbour = y;
          return result;
        }
      }
    }
    last[s] = j;
  }
  return result;
}

std::vector<Vertex> extendable_letters(const Word& w, const CoxeterGraph& g) {
  constexpr auto kNever = static_cast<std::size_t>(-1);
  std::vector<std::size_t> last(g.size(), kNever);
  for (std::size_t j = 0; j < w.size(); ++j) last.at(w[j]) = j;
  std::vector<Vertex> out;
  for (Vertex s = 0; s < g.size(); ++s) {
    const bool ok = last[s] == kNever ||
                    std::all_of(g.neighbours(s).begin(), g.neighbours(s).end(), [&](Vertex y) {
                      return last[y] != kNever && last[y] > last[s];
                    });
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<int> distances_from(const CoxeterGraph& g, Vertex s) {
  std::vector<int> dist(g.size(), -1);
  std::deque<Vertex> queue{s};
  dist.at(s) = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbours(v)) {
      if (dist[y] < 0) {
        dist[y] = dist[v] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::size_t diameter(const CoxeterGraph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    for (int d : distances_from(g, v)) best = std::max(best, d);
  }
  return static_cast<std::size_t>(best);
}

Word bicoloured_word(const CoxeterGraph& g, Vertex s, std::size_t length) {
  if (s >= g.size()) throw Error("unknown start vertex");
  if (!g.connected()) throw Error("bicoloured word needs a connected graph");
  if (!g.is_tree()) throw Error("bicoloured word needs a tree");
  if (length == 0) throw Error("bicoloured word length must be >= 1");
  const auto dist = distances_from(g, s);
  std::vector<Vertex> blacks;
  std::vector<Vertex> whites;
  for (Vertex v = 0; v < g.size(); ++v) (dist[v] % 2 ? blacks : whites).push_back(v);

  Word w{s};
  bool black_turn = true;
  while (w.size() < length) {
    const auto& block = black_turn ? blacks : whites;
    for (Vertex v : block) {
      if (w.size() == length) break;
      w.push_back(v);
    }
    black_turn = !black_turn;
  }
  return w;
}

CoxeterGraph extend_pendant(const CoxeterGraph& g, Vertex s, const std::string& new_name, Label m) {
  if (s >= g.size()) throw Error("unknown vertex");
  if (g.find(new_name)) throw Error("vertex '" + new_name + "' already exists");
  if (!m.is_infinite() && m.value() < 3) throw Error("edge label must be >= 3 or inf");
  auto names = g.names();
  auto edges = g.edges();
  names.push_back(new_name);
  edges.push_back({s, names.size() - 1, m});
  return CoxeterGraph(std::move(names), std::move(edges));
}

CoxeterGraph increase_label(const CoxeterGraph& g, Vertex s, Vertex t, Label m) {
  if (s >= g.size() || t >= g.size()) throw Error("unknown vertex");
  const auto idx = g.edge_index(s, t);
  if (!idx) throw Error("no edge between " + g.name(s) + " and " + g.name(t));
  auto edges = g.edges();
  if (!(m > edges[*idx].label)) {
    throw Error("new label " + m.to_string() + " must exceed current label " +
                edges[*idx].label.to_string());
  }
  edges[*idx].label = m;
  return CoxeterGraph(g.names(), std::move(edges));
}

}  // namespace coxroots
