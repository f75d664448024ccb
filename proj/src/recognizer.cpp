#include "coxroots/recognizer.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "coxroots/error.hpp"

namespace coxroots {

namespace {

Word delete_pair(const Word& w, std::size_t i, std::size_t j) {
  Word out;
  out.reserve(w.size() - 2);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k != i && k != j) out.push_back(w[k]);
  }
  return out;
}

constexpr auto kNoToken = std::numeric_limits<std::size_t>::max();

}  // namespace

PathTrace run_first_letter_path(const Word& w, const CoxeterGraph& g) {
  check_word(g, w);
  if (w.empty()) throw Error("first-letter path needs a nonempty word");
  PathTrace trace;
  trace.word = w;
  trace.states.push_back(unit_root(g, w[0]));
  for (std::size_t k = 1; k < w.size(); ++k) {
    Root next = reflect(trace.states.back(), w[k], g);
    if (side(next) == Side::negative) {
      trace.crossing = k;
      break;
    }
    trace.states.push_back(std::move(next));
  }
  return trace;
}

Recognizer::Recognizer(CoxeterGraph g, std::size_t small_root_cap)
    : g_(std::move(g)), small_(enumerate_small_roots(g_, small_root_cap)) {}

Verdict Recognizer::is_reduced(const Word& w) const {
  check_word(g_, w);
  Verdict verdict;
  verdict.non_exact = !small_.exact();

  // origin[r] is the earliest position whose token currently sits on small
  // root r; live lists the occupied roots.
  std::vector<std::size_t> origin(small_.size(), kNoToken);
  std::vector<std::size_t> next_origin(small_.size(), kNoToken);
  std::vector<std::uint32_t> live;
  std::vector<std::uint32_t> next_live;

  auto occupy = [&](std::uint32_t r, std::size_t o) {
    if (next_origin[r] == kNoToken) {
      next_origin[r] = o;
      next_live.push_back(r);
    } else {
      next_origin[r] = std::min(next_origin[r], o);
    }
  };

  for (std::size_t j = 0; j < w.size(); ++j) {
    const Vertex x = w[j];
    for (std::uint32_t r : live) {
      const Step& step = small_.step(r, x);
      if (step.kind == Step::Kind::negative) {
        const std::size_t i = origin[r];
        verdict.reduced = false;
        verdict.witness = ReductionWitness{i, j, delete_pair(w, i, j)};
        return verdict;
      }
      if (step.kind == Step::Kind::small) occupy(step.target, origin[r]);
    }
    occupy(small_.unit(x), j);
    for (std::uint32_t r : live) origin[r] = kNoToken;
    live.swap(next_live);
    next_live.clear();
    origin.swap(next_origin);
  }
  return verdict;
}

Word Recognizer::reduce_fully(const Word& w) const {
  Word current = w;
  while (true) {
    Verdict v = is_reduced(current);
    if (v.reduced) return current;
    current = std::move(v.witness->shortened);
  }
}

ReducedWordDFA Recognizer::build_dfa(std::size_t state_cap) const {
  ReducedWordDFA dfa;
  dfa.letters = g_.size();
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  dfa.states.push_back({});  // initial
  dfa.states.push_back({});  // dead

  auto intern = [&](std::vector<std::uint32_t> tracked) -> std::uint32_t {
    const auto it = index.find(tracked);
    if (it != index.end()) return it->second;
    if (dfa.states.size() >= state_cap) {
      throw CapExceeded("DFA construction exceeded " + std::to_string(state_cap) + " states");
    }
    const auto id = static_cast<std::uint32_t>(dfa.states.size());
    index.emplace(tracked, id);
    dfa.states.push_back({std::move(tracked)});
    return id;
  };

  for (std::uint32_t s = 0; s < dfa.states.size(); ++s) {
    for (Vertex x = 0; x < g_.size(); ++x) {
      if (s == ReducedWordDFA::kDead) {
        dfa.transitions.push_back(ReducedWordDFA::kDead);
        continue;
      }
      std::vector<std::uint32_t> next;
      bool dead = false;
      for (std::uint32_t r : dfa.states[s].tracked) {
        const Step& step = small_.step(r, x);
        if (step.kind == Step::Kind::negative) {
          dead = true;
          break;
        }
        if (step.kind == Step::Kind::small) next.push_back(step.target);
      }
      if (dead) {
        dfa.transitions.push_back(ReducedWordDFA::kDead);
        continue;
      }
      next.push_back(small_.unit(x));
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      dfa.transitions.push_back(intern(std::move(next)));
    }
  }
  return dfa;
}

bool ReducedWordDFA::accepts(const Word& w) const {
  std::uint32_t s = kInitial;
  for (Vertex x : w) {
    if (x >= letters) throw Error("letter out of range");
    s = next(s, x);
    if (s == kDead) return false;
  }
  return true;
}

Verdict is_reduced(const Word& w, const CoxeterGraph& g) { return Recognizer(g).is_reduced(w); }

Word reduce_fully(const Word& w, const CoxeterGraph& g) { return Recognizer(g).reduce_fully(w); }

ReducedWordDFA build_dfa(const CoxeterGraph& g, std::size_t state_cap) {
  if (!g.exact_labels()) throw Error("DFA construction needs exact edge labels");
  return Recognizer(g).build_dfa(state_cap);
}

std::string dfa_dot(const ReducedWordDFA& dfa, const Recognizer& rec) {
  const auto& g = rec.graph();
  std::ostringstream out;
  out << "digraph reduced_words {\n  rankdir=LR;\n";
  out << "  q0 [label=\"start\", shape=circle];\n";
  out << "  q1 [label=\"dead\", shape=box, style=filled];\n";
  for (std::uint32_t s = 2; s < dfa.size(); ++s) {
    out << "  q" << s << " [shape=doublecircle, label=\"";
    for (std::size_t k = 0; k < dfa.states[s].tracked.size(); ++k) {
      if (k) out << "\\n";
      out << rec.small_roots().roots()[dfa.states[s].tracked[k]].to_string();
    }
    out << "\"];\n";
  }
  for (std::uint32_t s = 0; s < dfa.size(); ++s) {
    if (s == ReducedWordDFA::kDead) continue;
    for (Vertex x = 0; x < dfa.letters; ++x) {
      out << "  q" << s << " -> q" << dfa.next(s, x) << " [label=\"" << g.name(x) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

InterveningWordGenerator::InterveningWordGenerator(const CoxeterGraph& g, std::uint64_t seed)
    : g_(g), engine_(seed) {}

std::uint64_t InterveningWordGenerator::below(std::uint64_t bound) {
  // Rejection sampling on the raw engine output keeps results identical
  // across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Word InterveningWordGenerator::next(std::size_t max_length) {
  if (max_length == 0) return {};
  const std::size_t length = 1 + below(max_length);
  Word w;
  while (w.size() < length) {
    const auto options = extendable_letters(w, g_);
    if (options.empty()) {
      throw Error("no letter extends the intervening-neighbours word " + format_word(g_, w));
    }
    w.push_back(options[below(options.size())]);
  }
  return w;
}

SpeyerReport check_speyer_property(const Recognizer& rec, const SpeyerOptions& opt) {
  const auto& g = rec.graph();
  if (!opt.force) {
    if (!g.connected()) throw Error("graph is not connected (group not irreducible); use force");
    if (!find_affine_witness(g)) throw Error("graph has no affine witness (not certified infinite); use force");
  }
  SpeyerReport report;
  report.non_exact = !rec.exact();
  InterveningWordGenerator gen(g, opt.seed);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    Word w = gen.next(opt.max_length);
    report.total_letters += w.size();
    ++report.samples;
    Verdict v = rec.is_reduced(w);
    if (!v.reduced) report.counterexamples.push_back({std::move(w), std::move(*v.witness)});
  }
  return report;
}

SpeyerReport check_speyer_property(const CoxeterGraph& g, const SpeyerOptions& opt) {
  return check_speyer_property(Recognizer(g), opt);
}

}  // namespace coxroots
