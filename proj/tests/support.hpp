#pragma once

// Test-side builders and oracles. The oracles here deliberately avoid the
// library's exact field: they work in floating point or by brute force.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coxroots/graph.hpp"

namespace coxroots::testing {

inline std::string letter_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

// Path a-b-c-... with the given labels between consecutive vertices.
inline CoxeterGraph path_graph(const std::vector<int>& labels) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i <= labels.size(); ++i) names.push_back(letter_name(i));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    edges.push_back({i, i + 1, labels[i] < 0 ? Label::infinity() : Label(labels[i])});
  }
  return CoxeterGraph(names, edges);
}

inline CoxeterGraph type_a(std::size_t n) { return path_graph(std::vector<int>(n - 1, 3)); }
inline CoxeterGraph type_b(std::size_t n) {
  std::vector<int> labels(n - 1, 3);
  labels.back() = 4;
  return path_graph(labels);
}
inline CoxeterGraph type_h3() { return path_graph({5, 3}); }

inline CoxeterGraph affine(Family f, int n = 0) { return catalog(f, n).graph; }

// Positive-root count of a finite Coxeter group by closing the simple roots
// under all reflections in floating point.
inline std::size_t finite_positive_root_count(const CoxeterGraph& g) {
  const std::size_t n = g.size();
  auto weight_of = [&](Vertex x, Vertex y) {
    const Label l = g.label(x, y);
    if (!l.is_edge()) return 0.0;
    if (l.is_infinite()) return 2.0;
    return 2.0 * std::cos(std::numbers::pi / l.value());
  };
  auto key = [](const std::vector<double>& r) {
    std::vector<long long> k;
    for (double c : r) k.push_back(std::llround(c * 1e6));
    return k;
  };
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<double>> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<double> e(n, 0.0);
    e[s] = 1.0;
    if (seen.insert(key(e)).second) queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (queue.size() > 100000) return 0;  // not finite
    for (Vertex x = 0; x < n; ++x) {
      auto r = queue[head];
      double c = -r[x];
      for (Vertex y = 0; y < n; ++y)
        if (y != x) c += weight_of(x, y) * r[y];
      r[x] = c;
      if (seen.insert(key(r)).second) queue.push_back(r);
    }
  }
  std::size_t positive = 0;
  for (const auto& r : queue) {
    bool pos = false;
    for (double c : r) pos = pos || c > 1e-9;
    positive += pos;
  }
  return positive;
}

// Calls f on every word over g of length exactly len.
inline void for_each_word(const CoxeterGraph& g, std::size_t len, const std::function<void(const Word&)>& f) {
  Word w(len, 0);
  while (true) {
    f(w);
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (++w[k] < g.size()) break;
      w[k] = 0;
      if (k == 0) return;
    }
    if (len == 0) return;
  }
}

inline Word random_word(const CoxeterGraph& g, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(pick(rng));
  return w;
}

}  // namespace coxroots::testing
