#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxroots/graph.hpp"
#include "coxroots/number.hpp"

namespace coxroots {

// Vector of components indexed by the graph's vertices.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<Number> components) : c_(std::move(components)) {}

  std::size_t size() const { return c_.size(); }
  const Number& operator[](Vertex v) const { return c_[v]; }
  const std::vector<Number>& components() const { return c_; }
  bool is_exact() const;

  bool operator==(const Root& o) const { return c_ == o.c_; }
  std::size_t hash() const;
  // "[1, 0, 1/2 + 1/2·r5]"
  std::string to_string() const;

 private:
  friend Root reflect(const Root& r, Vertex x, const CoxeterGraph& g);
  std::vector<Number> c_;
};

struct RootHash {
  std::size_t operator()(const Root& r) const { return r.hash(); }
};

enum class Side { positive, negative };

Root unit_root(const CoxeterGraph& g, Vertex s);
// Negates the x-component and adds each neighbour's component weighted by
// 2cos(pi/m). Involution.
Root reflect(const Root& r, Vertex x, const CoxeterGraph& g);
// Throws Error on a zero vector or mixed signs.
Side side(const Root& r);
// Lexicographic comparison by component value.
bool root_less(const Root& a, const Root& b);

// Outcome of reflecting a small root.
struct Step {
  enum class Kind : std::uint8_t { small, big, negative };
  Kind kind;
  std::uint32_t target = 0;  // index into SmallRootSet::roots() when small
};

// The finitely many roots reachable from unit roots using only steps that
// change the reflected component by less than 2 and stay positive, together
// with the full transition table over them.
class SmallRootSet {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  // Index of unit_root(s).
  std::uint32_t unit(Vertex s) const { return units_.at(s); }
  const Step& step(std::uint32_t root, Vertex x) const { return table_[root * letters_ + x]; }
  std::size_t letters() const { return letters_; }
  bool contains(const Root& r) const { return index_.count(r) != 0; }
  std::optional<std::uint32_t> find(const Root& r) const;
  // False when any label forced approximate arithmetic.
  bool exact() const { return exact_; }

 private:
  friend SmallRootSet enumerate_small_roots(const CoxeterGraph& g, std::size_t cap);
  std::vector<Root> roots_;
  std::unordered_map<Root, std::uint32_t, RootHash> index_;
  std::vector<std::uint32_t> units_;
  std::vector<Step> table_;
  std::size_t letters_ = 0;
  bool exact_ = true;
};

// Throws CapExceeded when more than `cap` roots are generated.
SmallRootSet enumerate_small_roots(const CoxeterGraph& g,
                                   std::size_t cap = SmallRootSet::kDefaultCap);
bool is_small(const Root& r, const SmallRootSet& small);

// Small roots sorted lexicographically, one per line; optionally the
// reflection-labelled poset as DOT.
std::string format_small_roots(const SmallRootSet& small);
std::string small_roots_dot(const SmallRootSet& small, const CoxeterGraph& g);

}  // namespace coxroots
