#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxroots/graph.hpp"
#include "coxroots/number.hpp"

namespace coxroots {

// Direction of every edge, indexed like CoxeterGraph::edges(). heads[e] is
// the endpoint the arrow points at: the vertex whose turn it is.
struct Orientation {
  std::vector<Vertex> heads;

  bool operator==(const Orientation&) const = default;
  bool operator<(const Orientation& o) const { return heads < o.heads; }
};

bool is_sink(const Orientation& o, const CoxeterGraph& g, Vertex t);
// Reverses every arrow at t. Throws Error unless t is a sink.
Orientation fire_orientation(const Orientation& o, const CoxeterGraph& g, Vertex t);
// Every edge points at its endpoint at odd distance from s. Needs a
// connected bipartite graph.
Orientation bicoloured_orientation(const CoxeterGraph& g, Vertex s);
std::string format_orientation(const Orientation& o, const CoxeterGraph& g);

// Roots-and-chips position: a nonnegative value per vertex plus arrows.
struct GamePosition {
  std::vector<Number> values;
  Orientation orientation;

  bool operator==(const GamePosition&) const = default;
  // "v1, v2, ... | x->y, ..." ; also the deduplication key.
  std::string to_string(const CoxeterGraph& g) const;
};

// Throws Error for negative values or an orientation that does not cover
// the graph's edges.
GamePosition make_position(const CoxeterGraph& g, std::vector<Number> values, Orientation o);

// Zeros everywhere, arrows toward the endpoint occurring first in w, then
// the first letter s played: 1 on s and its arrows reversed. Requires an
// intervening-neighbours word containing every vertex.
GamePosition initial_position(const CoxeterGraph& g, const Word& w);
// As above, but edges touching a vertex missing from w take their
// direction from bicoloured_orientation(g, w[0]).
GamePosition initial_position_bicoloured_default(const CoxeterGraph& g, const Word& w);

// Value t would take if fired.
Number fired_value(const GamePosition& p, const CoxeterGraph& g, Vertex t);
std::vector<Vertex> legal_moves(const GamePosition& p, const CoxeterGraph& g);
GamePosition fire(const GamePosition& p, Vertex t, const CoxeterGraph& g);
// True iff every pair of distinct legal moves commutes.
bool check_diamond(const GamePosition& p, const CoxeterGraph& g);

struct MoveSequence {
  std::vector<Vertex> moves;
  // positions[k] is the position after moves[k]; moves[0] is the first
  // letter, already played by initial_position.
  std::vector<GamePosition> positions;
};

// initial_position(g, w) followed by firing w[1], w[2], ...; throws Error
// if some letter is not a legal move.
MoveSequence play_word(const CoxeterGraph& g, const Word& w);

struct ExploreResult {
  enum class Kind { converged, open_beyond_cap, non_confluent };
  Kind kind = Kind::converged;
  std::optional<GamePosition> final_position;  // when converged
  std::size_t length = 0;                      // moves to final_position
  std::size_t positions_seen = 0;
};

// Breadth-first search over all move sequences with position deduplication.
ExploreResult explore(const GamePosition& start, const CoxeterGraph& g, std::size_t depth_cap,
                      std::size_t state_cap = 100'000);

// --- orientation-only game on trees -------------------------------------------

struct OrientationWalk {
  std::vector<Vertex> moves;
  std::vector<Orientation> visited;  // visited[0] is the start
};

// Sink firings turning `from` into `to` on a tree.
OrientationWalk orientation_path(const CoxeterGraph& g, const Orientation& from, const Orientation& to);
// A walk from `start` through all 2^edges orientations of a tree.
OrientationWalk orientation_tour(const CoxeterGraph& g, const Orientation& start);
// Replays the moves from visited[0], checking each is a sink firing and
// returns the distinct orientations seen. Throws Error on an illegal move.
std::vector<Orientation> replay(const CoxeterGraph& g, const Orientation& start,
                                const std::vector<Vertex>& moves);

std::string position_dot(const GamePosition& p, const CoxeterGraph& g);

}  // namespace coxroots
