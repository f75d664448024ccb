#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coxroots/graph.hpp"
#include "coxroots/roots.hpp"

namespace coxroots {

// Path of the root spawned by the first letter.
struct PathTrace {
  Word word;
  // states[i] is the root after letters 0..i; stops before the crossing.
  std::vector<Root> states;
  // 0-based position whose reflection made the root negative.
  std::optional<std::size_t> crossing;
};

PathTrace run_first_letter_path(const Word& w, const CoxeterGraph& g);

struct ReductionWitness {
  std::size_t i = 0;  // 0-based, i < j
  std::size_t j = 0;
  Word shortened;     // w with positions i and j removed
};

struct Verdict {
  bool reduced = true;
  std::optional<ReductionWitness> witness;
  // Some label forced approximate arithmetic.
  bool non_exact = false;

  explicit operator bool() const { return reduced; }
};

struct DfaState {
  // Sorted small-root indices; empty only for the initial state.
  std::vector<std::uint32_t> tracked;
};

// Subset-construction automaton over small roots. State 0 is the initial
// state, state 1 the dead state ("reduction detected").
struct ReducedWordDFA {
  static constexpr std::uint32_t kInitial = 0;
  static constexpr std::uint32_t kDead = 1;

  std::vector<DfaState> states;
  std::size_t letters = 0;
  std::vector<std::uint32_t> transitions;  // states.size() * letters

  std::uint32_t next(std::uint32_t state, Vertex letter) const {
    return transitions[state * letters + letter];
  }
  bool accepts(const Word& w) const;
  std::size_t size() const { return states.size(); }
};

// Reduced-word recognition bound to one graph. Enumerates the small roots
// once and then answers queries with the cached transition table.
class Recognizer {
 public:
  explicit Recognizer(CoxeterGraph g, std::size_t small_root_cap = SmallRootSet::kDefaultCap);

  const CoxeterGraph& graph() const { return g_; }
  const SmallRootSet& small_roots() const { return small_; }
  bool exact() const { return small_.exact(); }

  // Token simulation: each position spawns the unit root of its letter;
  // live tokens are reflected by every later letter, retired when they
  // become big, merged when equal, and a token turning negative at j with
  // origin i is the witness (i, j).
  Verdict is_reduced(const Word& w) const;
  Word reduce_fully(const Word& w) const;
  ReducedWordDFA build_dfa(std::size_t state_cap = 1'000'000) const;

 private:
  CoxeterGraph g_;
  SmallRootSet small_;
};

Verdict is_reduced(const Word& w, const CoxeterGraph& g);
Word reduce_fully(const Word& w, const CoxeterGraph& g);
ReducedWordDFA build_dfa(const CoxeterGraph& g, std::size_t state_cap = 1'000'000);
std::string dfa_dot(const ReducedWordDFA& dfa, const Recognizer& rec);

// --- reflection-matrix oracle -------------------------------------------------

// Matrix of the geometric representation: generator s fixes e_t + w_st e_s
// columns, i.e. maps e_t to e_t + weight(m_st) e_s (t != s) and e_s to -e_s.
class ReflectionMatrix {
 public:
  ReflectionMatrix() = default;
  static ReflectionMatrix identity(std::size_t n);
  static ReflectionMatrix generator(const CoxeterGraph& g, Vertex s);

  std::size_t dim() const { return n_; }
  const Number& at(std::size_t row, std::size_t col) const { return m_[row * n_ + col]; }
  // Row-major entries.
  const std::vector<Number>& data() const { return m_; }
  ReflectionMatrix operator*(const ReflectionMatrix& o) const;
  bool operator==(const ReflectionMatrix& o) const { return n_ == o.n_ && m_ == o.m_; }

  // In place: this <- this * generator(s), and this <- generator(s) * this.
  void multiply_generator_right(const CoxeterGraph& g, Vertex s);
  void multiply_generator_left(const CoxeterGraph& g, Vertex s);

 private:
  std::size_t n_ = 0;
  std::vector<Number> m_;
};

ReflectionMatrix word_matrix(const Word& w, const CoxeterGraph& g);

struct OracleOptions {
  std::size_t max_length = 12;
};

// Deletion-condition oracle: w is reduced iff no pair deletion (i, j)
// leaves the matrix unchanged. Independent of roots and small roots.
bool oracle_is_reduced_deletion(const Word& w, const CoxeterGraph& g, OracleOptions opt = {});
// Pair deletion found by the oracle, if any.
std::optional<std::pair<std::size_t, std::size_t>> oracle_find_deletion(const Word& w,
                                                                         const CoxeterGraph& g,
                                                                         OracleOptions opt = {});
// Repeated oracle deletions down to a reduced word, memoized by word.
Word oracle_reduce(const Word& w, const CoxeterGraph& g, OracleOptions opt = {});

// --- randomized check of the intervening-neighbours theorem -------------------

struct SpeyerOptions {
  std::size_t samples = 1000;
  std::size_t max_length = 40;
  std::uint64_t seed = 0;
  // Run even when the graph is not certified infinite and connected.
  bool force = false;
};

struct Counterexample {
  Word word;
  ReductionWitness witness;
};

struct SpeyerReport {
  std::size_t samples = 0;
  std::size_t total_letters = 0;
  std::vector<Counterexample> counterexamples;
  bool non_exact = false;
};

// Uniform choice among letters that keep the property, up to a length drawn
// uniformly from [1, max_length]. Deterministic for a given engine state.
class InterveningWordGenerator {
 public:
  InterveningWordGenerator(const CoxeterGraph& g, std::uint64_t seed);
  Word next(std::size_t max_length);

 private:
  std::uint64_t below(std::uint64_t bound);
  const CoxeterGraph& g_;
  std::mt19937_64 engine_;
};

SpeyerReport check_speyer_property(const Recognizer& rec, const SpeyerOptions& opt);
SpeyerReport check_speyer_property(const CoxeterGraph& g, const SpeyerOptions& opt);

}  // namespace coxroots
