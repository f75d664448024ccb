#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coxroots/error.hpp"
#include "coxroots/game.hpp"
#include "coxroots/graph.hpp"
#include "coxroots/recognizer.hpp"
#include "coxroots/roots.hpp"

namespace coxroots::cli {

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

CoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

// Compact when every vertex name is a single character ("ca"), spaced
// otherwise.
std::string display_word(const CoxeterGraph& g, const Word& w) {
  const bool compact = std::all_of(g.names().begin(), g.names().end(),
                                   [](const std::string& n) { return n.size() == 1; });
  if (w.empty()) return "(empty)";
  return format_word(g, w, compact ? "" : " ");
}

void note_non_exact(bool non_exact, std::ostream& out, std::ostream& err) {
  if (!non_exact) return;
  out << "note: non-exact arithmetic (labels outside 3, 4, 5, 6, inf)\n";
  err << "warning: results rely on approximate arithmetic\n";
}

std::string fresh_name(const CoxeterGraph& g, const std::string& stem) {
  if (!g.find(stem)) return stem;
  for (int k = 1;; ++k) {
    const std::string name = stem + std::to_string(k);
    if (!g.find(name)) return name;
  }
}

Label parse_label(const std::string& token) {
  if (token == "inf") return Label::infinity();
  std::size_t used = 0;
  const int v = std::stoi(token, &used);
  if (used != token.size()) throw Error("bad label '" + token + "'");
  return Label(v);
}

struct Options {
  std::string graph_file;
  std::string word;
  bool dot = false;
  // bicolour
  std::string start;
  std::size_t length = 0;
  // catalog / speyer family
  std::string family;
  int rank = 0;
  bool json = false;
  // game
  std::size_t steps = 0;
  bool steps_given = false;
  bool trace = false;
  bool explore = false;
  std::size_t depth = 20;
  std::size_t states = 100'000;
  std::string default_orientation;
  // speyer
  std::size_t samples = 1000;
  std::size_t max_len = 40;
  std::uint64_t seed = 0;
  std::string pendant;
  std::vector<std::string> raise;
  bool force = false;
};

int cmd_check_in(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph_file);
  const Word w = parse_word(g, o.word);
  const auto r = has_intervening_neighbours(w, g);
  if (r) {
    out << "intervening neighbours: yes\n";
    return kHolds;
  }
  const auto [i, j] = *r.violation;
  out << "intervening neighbours: no\n"
      << "letter " << g.name(w[i]) << " at positions " << i + 1 << " and " << j + 1
      << " is not separated by neighbour " << g.name(*r.missing_neighbour) << "\n";
  return kFails;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  const Recognizer rec(load_graph(o.graph_file));
  const auto& g = rec.graph();
  const Word w = parse_word(g, o.word);
  const Verdict v = rec.is_reduced(w);
  note_non_exact(v.non_exact, out, err);
  if (v.reduced) {
    out << "reduced\n";
    return kHolds;
  }
  const auto& wit = *v.witness;
  out << "not reduced: delete positions " << wit.i + 1 << " (" << g.name(w[wit.i]) << ") and "
      << wit.j + 1 << " (" << g.name(w[wit.j]) << ")\n";
  out << "shortened: " << display_word(g, wit.shortened) << "\n";
  out << "reduced form: " << display_word(g, rec.reduce_fully(w)) << "\n";
  return kFails;
}

int cmd_smallroots(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(o.graph_file);
  const auto small = enumerate_small_roots(g);
  note_non_exact(!small.exact(), out, err);
  out << (o.dot ? small_roots_dot(small, g) : format_small_roots(small));
  return kHolds;
}

int cmd_dfa(const Options& o, std::ostream& out) {
  const Recognizer rec(load_graph(o.graph_file));
  if (!rec.exact()) throw Error("DFA construction needs exact edge labels");
  const auto dfa = rec.build_dfa();
  if (o.dot) {
    out << dfa_dot(dfa, rec);
    return kHolds;
  }
  const auto& g = rec.graph();
  out << "small roots: " << rec.small_roots().size() << "\n";
  out << "states: " << dfa.size() << " (0 = start, 1 = dead)\n";
  for (std::uint32_t s = 0; s < dfa.size(); ++s) {
    if (s == ReducedWordDFA::kDead) continue;
    out << s << ":";
    for (Vertex x = 0; x < g.size(); ++x) out << " " << g.name(x) << "->" << dfa.next(s, x);
    out << "\n";
  }
  return kHolds;
}

int cmd_bicolour(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph_file);
  const Word w = bicoloured_word(g, g.index(o.start), o.length);
  out << format_word(g, w) << "\n";
  return kHolds;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph_file);
  const auto witness = find_affine_witness(g);
  if (!witness) {
    out << "no affine witness\n";
    return kFails;
  }
  out << "infinite: contains " << witness->entry.name() << " on {";
  for (std::size_t k = 0; k < witness->vertices.size(); ++k) {
    out << (k ? ", " : "") << g.name(witness->vertices[k]);
  }
  out << "}\n";
  return kHolds;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const auto entry = catalog_by_name(o.family, o.rank);
  if (o.json) {
    out << to_json(entry.graph) << "\n";
  } else {
    out << "# " << entry.name() << "\n" << to_text(entry.graph);
  }
  return kHolds;
}

int cmd_game(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph_file);
  const Word w = parse_word(g, o.word);
  if (w.empty()) throw Error("game needs --word");
  if (!o.default_orientation.empty() && o.default_orientation != "bicoloured") {
    throw Error("unknown default orientation '" + o.default_orientation + "'");
  }
  GamePosition pos = o.default_orientation.empty() ? initial_position(g, w)
                                                   : initial_position_bicoloured_default(g, w);
  if (o.explore) {
    const auto r = explore(pos, g, o.depth, o.states);
    switch (r.kind) {
      case ExploreResult::Kind::converged:
        out << "converged after " << r.length << " moves: " << r.final_position->to_string(g) << "\n";
        if (o.dot) out << position_dot(*r.final_position, g);
        return kHolds;
      case ExploreResult::Kind::open_beyond_cap:
        out << "open beyond cap (depth " << o.depth << ", " << r.positions_seen << " positions)\n";
        return kFails;
      case ExploreResult::Kind::non_confluent:
        out << "non-confluent: move sequences disagree\n";
        return kFails;
    }
  }

  const std::size_t limit = o.steps_given ? std::min(o.steps, w.size() - 1) : w.size() - 1;
  if (o.trace) out << pos.to_string(g) << "\n";
  for (std::size_t k = 1; k <= limit; ++k) {
    const auto legal = legal_moves(pos, g);
    if (std::find(legal.begin(), legal.end(), w[k]) == legal.end()) {
      out << "illegal move " << g.name(w[k]) << " at step " << k << ": " << pos.to_string(g) << "\n";
      return kFails;
    }
    pos = fire(pos, w[k], g);
    if (o.trace) out << pos.to_string(g) << "\n";
  }
  if (o.dot) {
    out << position_dot(pos, g);
  } else if (!o.trace) {
    out << pos.to_string(g) << "\n";
  }
  return kHolds;
}

int cmd_speyer(const Options& o, std::ostream& out, std::ostream& err) {
  CoxeterGraph g;
  std::string name;
  if (!o.graph_file.empty()) {
    g = load_graph(o.graph_file);
    name = o.graph_file;
  } else if (!o.family.empty()) {
    auto entry = catalog_by_name(o.family, o.rank);
    name = entry.name();
    g = std::move(entry.graph);
  } else {
    throw Error("speyer needs --graph or --family");
  }
  if (!o.pendant.empty()) {
    const std::string added = fresh_name(g, "p");
    g = extend_pendant(g, g.index(o.pendant), added, Label(3));
    name += " +pendant " + added + " on " + o.pendant;
  }
  if (!o.raise.empty()) {
    if (o.raise.size() != 3) throw Error("--raise takes s t m");
    g = increase_label(g, g.index(o.raise[0]), g.index(o.raise[1]), parse_label(o.raise[2]));
    name += " +raise " + o.raise[0] + "-" + o.raise[1] + " to " + o.raise[2];
  }
  SpeyerOptions opt;
  opt.samples = o.samples;
  opt.max_length = o.max_len;
  opt.seed = o.seed;
  opt.force = o.force;
  const Recognizer rec(g);
  const auto report = check_speyer_property(rec, opt);
  note_non_exact(report.non_exact, out, err);
  out << "graph: " << name << "\n";
  out << "samples: " << report.samples << " (" << report.total_letters << " letters)\n";
  for (const auto& c : report.counterexamples) {
    out << "counterexample: " << display_word(g, c.word) << " (delete positions " << c.witness.i + 1
        << " and " << c.witness.j + 1 << ")\n";
  }
  out << report.counterexamples.size() << " counterexamples\n";
  return report.counterexamples.empty() ? kHolds : kFails;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced words, small roots and the roots-and-chips game for Coxeter graphs"};
  app.require_subcommand(1);
  Options o;

  auto* check_in = app.add_subcommand("check-in", "Check the intervening-neighbours property");
  check_in->add_option("graph", o.graph_file)->required();
  check_in->add_option("word", o.word)->required();

  auto* reduce = app.add_subcommand("reduce", "Decide reducedness; print a witness if not reduced");
  reduce->add_option("graph", o.graph_file)->required();
  reduce->add_option("word", o.word)->required();

  auto* smallroots = app.add_subcommand("smallroots", "List the small roots");
  smallroots->add_option("graph", o.graph_file)->required();
  smallroots->add_flag("--dot", o.dot, "Emit the small-root poset as DOT");

  auto* dfa = app.add_subcommand("dfa", "Build the reduced-word automaton");
  dfa->add_option("graph", o.graph_file)->required();
  dfa->add_flag("--dot", o.dot, "Emit DOT");

  auto* bicolour = app.add_subcommand("bicolour", "Print a prefix of the bicoloured word");
  bicolour->add_option("graph", o.graph_file)->required();
  bicolour->add_option("start", o.start)->required();
  bicolour->add_option("length", o.length)->required()->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Search for an affine subgraph witness");
  classify->add_option("graph", o.graph_file)->required();

  auto* cat = app.add_subcommand("catalog", "Emit an affine Coxeter graph");
  cat->add_option("family", o.family, "A, B, C, D, E6, E7, E8, F4, G2 (optional t suffix)")->required();
  cat->add_option("n", o.rank, "Rank for the A/B/C/D series");
  cat->add_flag("--json", o.json, "Emit JSON instead of the line format");

  auto* game = app.add_subcommand("game", "Play or explore the roots-and-chips game");
  game->add_option("graph", o.graph_file)->required();
  game->add_option("--word", o.word, "Intervening-neighbours word")->required();
  game->add_option("--steps", o.steps, "Play at most N letters after the first")
      ->each([&](const std::string&) { o.steps_given = true; });
  game->add_flag("--trace", o.trace, "Print every position");
  game->add_flag("--explore", o.explore, "Explore all move sequences from the initial position");
  game->add_option("--depth", o.depth, "Depth cap for --explore")->check(CLI::PositiveNumber);
  game->add_option("--states", o.states, "State cap for --explore")->check(CLI::PositiveNumber);
  game->add_flag("--dot", o.dot, "Render the final position as DOT");
  game->add_option("--default-orientation", o.default_orientation,
                   "Orientation for edges at vertices missing from the word (bicoloured)");

  auto* speyer = app.add_subcommand("speyer", "Random intervening-neighbours words must be reduced");
  auto* graph_opt = speyer->add_option("--graph", o.graph_file);
  auto* family_opt = speyer->add_option("--family", o.family);
  graph_opt->excludes(family_opt);
  speyer->add_option("n", o.rank, "Rank for --family A/B/C/D");
  speyer->add_option("--samples", o.samples)->required();
  speyer->add_option("--max-len", o.max_len)->required();
  speyer->add_option("--seed", o.seed)->required();
  speyer->add_option("--pendant", o.pendant, "Attach a new vertex to s with label 3");
  speyer->add_option("--raise", o.raise, "Raise the label of edge s t to m")->expected(3);
  speyer->add_flag("--force", o.force, "Run even without an affine witness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*check_in) return cmd_check_in(o, out);
    if (*reduce) return cmd_reduce(o, out, err);
    if (*smallroots) return cmd_smallroots(o, out, err);
    if (*dfa) return cmd_dfa(o, out);
    if (*bicolour) return cmd_bicolour(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*cat) return cmd_catalog(o, out);
    if (*game) return cmd_game(o, out);
    if (*speyer) return cmd_speyer(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace coxroots::cli
