#include "coxroots/roots.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "coxroots/error.hpp"

namespace coxroots {

bool Root::is_exact() const {
  return std::all_of(c_.begin(), c_.end(), [](const Number& n) { return n.is_exact(); });
}

std::size_t Root::hash() const {
  std::size_t h = c_.size();
  for (const auto& n : c_) h ^= n.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::string Root::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ", ";
    out += c_[i].to_string();
  }
  return out + "]";
}

Root unit_root(const CoxeterGraph& g, Vertex s) {
  if (s >= g.size()) throw Error("unknown vertex " + std::to_string(s));
  std::vector<Number> c(g.size(), Number(0));
  c[s] = Number(1);
  return Root(std::move(c));
}

Root reflect(const Root& r, Vertex x, const CoxeterGraph& g) {
  if (x >= g.size()) throw Error("unknown vertex " + std::to_string(x));
  Number value = -r[x];
  for (Vertex y : g.neighbours(x)) {
    if (r[y].is_zero()) continue;
    const Label m = g.label(x, y);
    if (m == Label(3)) {
      value += r[y];
    } else {
      value += weight(m) * r[y];
    }
  }
  Root out = r;
  out.c_[x] = std::move(value);
  return out;
}

// Nonzero components of a root share one sign, so a component too close to
// zero to sign can be skipped as long as another one decides the side.
Side side(const Root& r) {
  bool pos = false;
  bool neg = false;
  bool unresolved = false;
  for (const auto& c : r.components()) {
    Sign s = Sign::zero;
    try {
      s = c.sign();
    } catch (const PrecisionExhausted&) {
      unresolved = true;
    }
    pos = pos || s == Sign::positive;
    neg = neg || s == Sign::negative;
  }
  if (pos && neg) throw Error("root " + r.to_string() + " has mixed signs");
  if (!pos && !neg) {
    if (unresolved) throw PrecisionExhausted("cannot decide the side of root " + r.to_string());
    throw Error("zero vector is not a root");
  }
  return pos ? Side::positive : Side::negative;
}

bool root_less(const Root& a, const Root& b) {
  const std::size_t n = std::min(a.size(), b.size());
  const bool exact = a.is_exact() && b.is_exact();
  for (std::size_t i = 0; i < n; ++i) {
    if (exact) {
      const auto c = compare(a[i], b[i]);
      if (c != 0) return c < 0;
    } else if (!(a[i] == b[i])) {
      // Display order only; tainted values order by their doubles.
      return a[i].to_double() < b[i].to_double();
    }
  }
  return a.size() < b.size();
}

std::optional<std::uint32_t> SmallRootSet::find(const Root& r) const {
  const auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SmallRootSet enumerate_small_roots(const CoxeterGraph& g, std::size_t cap) {
  SmallRootSet out;
  out.letters_ = g.size();
  out.exact_ = g.exact_labels();
  const Number two(2);
  const Number minus_two(-2);

  auto intern = [&](Root r) -> std::uint32_t {
    const auto it = out.index_.find(r);
    if (it != out.index_.end()) return it->second;
    if (out.roots_.size() >= cap) {
      throw CapExceeded("small-root enumeration exceeded " + std::to_string(cap) + " roots");
    }
    const auto id = static_cast<std::uint32_t>(out.roots_.size());
    out.index_.emplace(r, id);
    out.roots_.push_back(std::move(r));
    return id;
  };

  for (Vertex s = 0; s < g.size(); ++s) out.units_.push_back(intern(unit_root(g, s)));

  // roots_ doubles as the BFS queue: each root is expanded once, in order.
  for (std::size_t i = 0; i < out.roots_.size(); ++i) {
    for (Vertex x = 0; x < g.size(); ++x) {
      const Root& from = out.roots_[i];
      Root to = reflect(from, x, g);
      Step step{Step::Kind::small, 0};
      const Number delta = to[x] - from[x];
      if (side(to) == Side::negative) {
        step.kind = Step::Kind::negative;
      } else if (compare(delta, two) >= 0 || compare(delta, minus_two) <= 0) {
        step.kind = Step::Kind::big;
      } else {
        step.target = intern(std::move(to));
      }
      out.table_.push_back(step);
    }
  }
  return out;
}

bool is_small(const Root& r, const SmallRootSet& small) { return small.contains(r); }

namespace {

std::vector<std::uint32_t> sorted_order(const SmallRootSet& small) {
  std::vector<std::uint32_t> order(small.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return root_less(small.roots()[a], small.roots()[b]);
  });
  return order;
}

}  // namespace

std::string format_small_roots(const SmallRootSet& small) {
  std::string out;
  for (std::uint32_t i : sorted_order(small)) out += small.roots()[i].to_string() + "\n";
  return out;
}

std::string small_roots_dot(const SmallRootSet& small, const CoxeterGraph& g) {
  std::ostringstream out;
  out << "digraph small_roots {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::uint32_t i : sorted_order(small)) {
    out << "  r" << i << " [label=\"" << small.roots()[i].to_string() << "\"];\n";
  }
  bool any_big = false;
  for (std::uint32_t i : sorted_order(small)) {
    for (Vertex x = 0; x < g.size(); ++x) {
      const Step& s = small.step(i, x);
      switch (s.kind) {
        case Step::Kind::small:
          if (s.target != i) out << "  r" << i << " -> r" << s.target << " [label=\"" << g.name(x) << "\"];\n";
          break;
        case Step::Kind::big:
          any_big = true;
          out << "  r" << i << " -> big [label=\"" << g.name(x) << "\", style=dashed];\n";
          break;
        case Step::Kind::negative:
          out << "  r" << i << " -> neg_" << g.name(x) << " [label=\"" << g.name(x) << "\"];\n";
          out << "  neg_" << g.name(x) << " [label=\"-" << g.name(x) << "\", shape=plaintext];\n";
          break;
      }
    }
  }
  if (any_big) out << "  big [label=\"big roots\", shape=ellipse, style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace coxroots
