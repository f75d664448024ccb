#include "coxroots/game.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

#include "coxroots/error.hpp"

namespace coxroots {

namespace {

void check_orientation(const Orientation& o, const CoxeterGraph& g) {
  if (o.heads.size() != g.edges().size()) throw Error("orientation does not cover every edge");
  for (std::size_t e = 0; e < o.heads.size(); ++e) {
    const auto& edge = g.edges()[e];
    if (o.heads[e] != edge.u && o.heads[e] != edge.v) {
      throw Error("orientation head is not an endpoint of its edge");
    }
  }
}

Vertex other_end(const Edge& e, Vertex v) { return e.u == v ? e.v : e.u; }

}  // namespace

bool is_sink(const Orientation& o, const CoxeterGraph& g, Vertex t) {
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    if ((edge.u == t || edge.v == t) && o.heads[e] != t) return false;
  }
  return true;
}

Orientation fire_orientation(const Orientation& o, const CoxeterGraph& g, Vertex t) {
  if (!is_sink(o, g, t)) throw Error("vertex " + g.name(t) + " is not a sink");
  Orientation out = o;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    if (edge.u == t || edge.v == t) out.heads[e] = other_end(edge, t);
  }
  return out;
}

Orientation bicoloured_orientation(const CoxeterGraph& g, Vertex s) {
  const auto dist = distances_from(g, s);
  Orientation o;
  for (const auto& e : g.edges()) {
    if (dist[e.u] < 0 || dist[e.v] < 0) throw Error("bicoloured orientation needs a connected graph");
    if (dist[e.u] % 2 == dist[e.v] % 2) throw Error("bicoloured orientation needs a bipartite graph");
    o.heads.push_back(dist[e.u] % 2 ? e.u : e.v);
  }
  return o;
}

std::string format_orientation(const Orientation& o, const CoxeterGraph& g) {
  std::string out;
  for (std::size_t e = 0; e < o.heads.size(); ++e) {
    if (e) out += ", ";
    const Vertex head = o.heads[e];
    out += g.name(other_end(g.edges()[e], head)) + "->" + g.name(head);
  }
  return out;
}

std::string GamePosition::to_string(const CoxeterGraph& g) const {
  std::string out;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (v) out += ", ";
    out += values[v].to_string();
  }
  return out + " | " + format_orientation(orientation, g);
}

GamePosition make_position(const CoxeterGraph& g, std::vector<Number> values, Orientation o) {
  if (values.size() != g.size()) throw Error("position needs one value per vertex");
  for (const auto& v : values) {
    if (v.sign() == Sign::negative) throw Error("position values must be nonnegative");
  }
  check_orientation(o, g);
  return GamePosition{std::move(values), std::move(o)};
}

namespace {

GamePosition initial_position_impl(const CoxeterGraph& g, const Word& w, bool bicoloured_default) {
  check_word(g, w);
  if (w.empty()) throw Error("initial position needs a nonempty word");
  if (const auto in = has_intervening_neighbours(w, g); !in) {
    throw Error("word lacks intervening neighbours at positions " +
                std::to_string(in.violation->first) + " and " + std::to_string(in.violation->second));
  }
  constexpr auto kNever = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first(g.size(), kNever);
  for (std::size_t k = 0; k < w.size(); ++k) first[w[k]] = std::min(first[w[k]], k);

  std::optional<Orientation> fallback;
  Orientation o;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    if (first[edge.u] == kNever || first[edge.v] == kNever) {
      if (!bicoloured_default) {
        const Vertex missing = first[edge.u] == kNever ? edge.u : edge.v;
        throw Error("vertex " + g.name(missing) + " never occurs in the word; orientation undefined");
      }
      if (!fallback) fallback = bicoloured_orientation(g, w[0]);
      o.heads.push_back(fallback->heads[e]);
    } else {
      o.heads.push_back(first[edge.u] < first[edge.v] ? edge.u : edge.v);
    }
  }
  const Vertex s = w[0];
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    if (edge.u == s || edge.v == s) o.heads[e] = other_end(edge, s);
  }
  std::vector<Number> values(g.size(), Number(0));
  values[s] = Number(1);
  return GamePosition{std::move(values), std::move(o)};
}

}  // namespace

GamePosition initial_position(const CoxeterGraph& g, const Word& w) {
  return initial_position_impl(g, w, false);
}

GamePosition initial_position_bicoloured_default(const CoxeterGraph& g, const Word& w) {
  return initial_position_impl(g, w, true);
}

Number fired_value(const GamePosition& p, const CoxeterGraph& g, Vertex t) {
  Number v = -p.values.at(t);
  for (Vertex y : g.neighbours(t)) {
    if (!p.values[y].is_zero()) v += weight(g.label(t, y)) * p.values[y];
  }
  return v;
}

std::vector<Vertex> legal_moves(const GamePosition& p, const CoxeterGraph& g) {
  std::vector<Vertex> out;
  for (Vertex t = 0; t < g.size(); ++t) {
    if (is_sink(p.orientation, g, t) && fired_value(p, g, t).sign() != Sign::negative) out.push_back(t);
  }
  return out;
}

GamePosition fire(const GamePosition& p, Vertex t, const CoxeterGraph& g) {
  if (t >= g.size()) throw Error("unknown vertex");
  if (!is_sink(p.orientation, g, t)) throw Error("illegal move: " + g.name(t) + " is not a sink");
  Number value = fired_value(p, g, t);
  if (value.sign() == Sign::negative) {
    throw Error("illegal move: firing " + g.name(t) + " would make its value negative");
  }
  GamePosition out{p.values, fire_orientation(p.orientation, g, t)};
  out.values[t] = std::move(value);
  return out;
}

bool check_diamond(const GamePosition& p, const CoxeterGraph& g) {
  const auto moves = legal_moves(p, g);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    for (std::size_t j = i + 1; j < moves.size(); ++j) {
      const GamePosition pa = fire(p, moves[i], g);
      const GamePosition pb = fire(p, moves[j], g);
      const auto la = legal_moves(pa, g);
      const auto lb = legal_moves(pb, g);
      if (std::find(la.begin(), la.end(), moves[j]) == la.end()) return false;
      if (std::find(lb.begin(), lb.end(), moves[i]) == lb.end()) return false;
      if (!(fire(pa, moves[j], g) == fire(pb, moves[i], g))) return false;
    }
  }
  return true;
}

MoveSequence play_word(const CoxeterGraph& g, const Word& w) {
  MoveSequence seq;
  seq.positions.push_back(initial_position(g, w));
  seq.moves.push_back(w[0]);
  for (std::size_t k = 1; k < w.size(); ++k) {
    seq.positions.push_back(fire(seq.positions.back(), w[k], g));
    seq.moves.push_back(w[k]);
  }
  return seq;
}

ExploreResult explore(const GamePosition& start, const CoxeterGraph& g, std::size_t depth_cap,
                      std::size_t state_cap) {
  if (depth_cap == 0 || state_cap == 0) throw Error("exploration caps must be positive");
  ExploreResult result;
  std::unordered_map<std::string, std::size_t> depth_of;
  std::deque<std::pair<GamePosition, std::size_t>> queue;
  depth_of.emplace(start.to_string(g), 0);
  queue.emplace_back(start, 0);

  bool open = false;
  bool mismatch = false;
  std::vector<std::pair<GamePosition, std::size_t>> terminals;

  while (!queue.empty()) {
    auto [pos, depth] = std::move(queue.front());
    queue.pop_front();
    const auto moves = legal_moves(pos, g);
    if (moves.empty()) {
      terminals.emplace_back(pos, depth);
      continue;
    }
    if (depth >= depth_cap) {
      open = true;
      continue;
    }
    for (Vertex t : moves) {
      GamePosition child = fire(pos, t, g);
      const std::string key = child.to_string(g);
      const auto it = depth_of.find(key);
      if (it != depth_of.end()) {
        if (it->second != depth + 1) mismatch = true;
        continue;
      }
      if (depth_of.size() >= state_cap) {
        open = true;
        continue;
      }
      depth_of.emplace(key, depth + 1);
      queue.emplace_back(std::move(child), depth + 1);
    }
  }
  result.positions_seen = depth_of.size();

  for (std::size_t k = 1; k < terminals.size(); ++k) {
    if (!(terminals[k].first == terminals[0].first) || terminals[k].second != terminals[0].second) {
      mismatch = true;
    }
  }
  if (mismatch) {
    result.kind = ExploreResult::Kind::non_confluent;
  } else if (open) {
    result.kind = ExploreResult::Kind::open_beyond_cap;
  } else {
    result.kind = ExploreResult::Kind::converged;
    result.final_position = terminals.at(0).first;
    result.length = terminals.at(0).second;
  }
  return result;
}

OrientationWalk orientation_path(const CoxeterGraph& g, const Orientation& from, const Orientation& to) {
  if (!g.is_tree()) throw Error("orientation paths are only constructed on trees");
  check_orientation(from, g);
  check_orientation(to, g);

  // Along an edge the endpoints fire alternately, the current head first.
  // So the head fires exactly once more than the tail when the edge must
  // flip and equally often otherwise; on a tree these differences fix the
  // firing counts up to a constant, which we choose minimal.
  std::vector<long long> count(g.size(), 0);
  std::vector<bool> seen(g.size(), false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const auto& edge = g.edges()[e];
      if (edge.u != v && edge.v != v) continue;
      const Vertex y = other_end(edge, v);
      if (seen[y]) continue;
      seen[y] = true;
      const long long diff = from.heads[e] != to.heads[e] ? 1 : 0;
      count[y] = from.heads[e] == y ? count[v] + diff : count[v] - diff;
      queue.push_back(y);
    }
  }
  const long long base = *std::min_element(count.begin(), count.end());
  for (auto& c : count) c -= base;

  OrientationWalk walk;
  walk.visited.push_back(from);
  // Some vertex with pending firings is always a sink: follow out-arrows
  // from any pending vertex; pending counts never decrease along them and
  // the tree is acyclic.
  while (true) {
    std::optional<Vertex> next;
    for (Vertex v = 0; v < g.size() && !next; ++v) {
      if (count[v] > 0 && is_sink(walk.visited.back(), g, v)) next = v;
    }
    if (!next) break;
    --count[*next];
    walk.moves.push_back(*next);
    walk.visited.push_back(fire_orientation(walk.visited.back(), g, *next));
  }
  if (std::any_of(count.begin(), count.end(), [](long long c) { return c != 0; }) ||
      !(walk.visited.back() == to)) {
    throw Error("orientation path construction failed");
  }
  return walk;
}

OrientationWalk orientation_tour(const CoxeterGraph& g, const Orientation& start) {
  if (!g.is_tree()) throw Error("orientation tours are only constructed on trees");
  check_orientation(start, g);
  const std::size_t edges = g.edges().size();
  if (edges > 20) throw Error("orientation tour limited to 20 edges");

  auto target = [&](std::size_t k) {
    const std::size_t gray = k ^ (k >> 1);
    Orientation o = start;
    for (std::size_t e = 0; e < edges; ++e) {
      if (gray & (std::size_t{1} << e)) o.heads[e] = other_end(g.edges()[e], o.heads[e]);
    }
    return o;
  };

  OrientationWalk tour;
  tour.visited.push_back(start);
  const std::size_t total = std::size_t{1} << edges;
  for (std::size_t k = 1; k < total; ++k) {
    OrientationWalk leg = orientation_path(g, tour.visited.back(), target(k));
    tour.moves.insert(tour.moves.end(), leg.moves.begin(), leg.moves.end());
    tour.visited.insert(tour.visited.end(), leg.visited.begin() + 1, leg.visited.end());
  }
  return tour;
}

std::vector<Orientation> replay(const CoxeterGraph& g, const Orientation& start,
                                const std::vector<Vertex>& moves) {
  check_orientation(start, g);
  std::set<Orientation> seen{start};
  Orientation current = start;
  for (Vertex t : moves) {
    current = fire_orientation(current, g, t);
    seen.insert(current);
  }
  return {seen.begin(), seen.end()};
}

std::string position_dot(const GamePosition& p, const CoxeterGraph& g) {
  std::ostringstream out;
  out << "digraph position {\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out << "  \"" << g.name(v) << "\" [label=\"" << g.name(v) << "\\n" << p.values[v].to_string() << "\"];\n";
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    const Vertex head = p.orientation.heads[e];
    out << "  \"" << g.name(other_end(edge, head)) << "\" -> \"" << g.name(head) << "\"";
    if (edge.label != Label(3)) out << " [label=\"" << edge.label.to_string() << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace coxroots
