#include <algorithm>
#include <cctype>
#include <deque>
#include <string>

#include "coxroots/error.hpp"
#include "coxroots/graph.hpp"

namespace coxroots {

namespace {

std::string vertex_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "s" + std::to_string(i);
}

struct Shape {
  std::size_t vertices = 0;
  std::vector<Edge> edges;

  void link(Vertex u, Vertex v, int m = 3) { edges.push_back({u, v, Label(m)}); }
  void path(Vertex from, Vertex to) {
    for (Vertex v = from; v < to; ++v) link(v, v + 1);
  }

  CoxeterGraph build() && {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vertices; ++i) names.push_back(vertex_name(i));
    return CoxeterGraph(std::move(names), std::move(edges));
  }
};

[[noreturn]] void bad_rank(const char* family, int n, const char* requirement) {
  throw Error(std::string("invalid affine type ") + family + " with n = " + std::to_string(n) +
              " (" + requirement + ")");
}

}  // namespace

bool family_takes_rank(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

std::string CatalogEntry::name() const {
  switch (family) {
    case Family::A:
      return "A" + std::to_string(rank) + "t";
    case Family::B:
      return "B" + std::to_string(rank) + "t";
    case Family::C:
      return "C" + std::to_string(rank) + "t";
    case Family::D:
      return "D" + std::to_string(rank) + "t";
    case Family::E6:
      return "E6t";
    case Family::E7:
      return "E7t";
    case Family::E8:
      return "E8t";
    case Family::F4:
      return "F4t";
    case Family::G2:
      return "G2t";
  }
  return "?";
}

CatalogEntry catalog(Family family, int n) {
  Shape s;
  switch (family) {
    case Family::A:
      if (n < 1) bad_rank("A", n, "n >= 1");
      if (n == 1) {
        s.vertices = 2;
        s.edges.push_back({0, 1, Label::infinity()});
      } else {
        s.vertices = static_cast<std::size_t>(n) + 1;
        s.path(0, s.vertices - 1);
        s.link(s.vertices - 1, 0);
      }
      break;
    case Family::B:
      if (n < 3) bad_rank("B", n, "n >= 3");
      // row v0 =4= v1 - ... - v_{n-1}, fork vertex v_n on v_{n-2}
      s.vertices = static_cast<std::size_t>(n) + 1;
      s.link(0, 1, 4);
      s.path(1, n - 1);
      s.link(n - 2, n);
      break;
    case Family::C:
      if (n < 2) bad_rank("C", n, "n >= 2");
      s.vertices = static_cast<std::size_t>(n) + 1;
      s.link(0, 1, 4);
      s.path(1, n - 1);
      s.link(n - 1, n, 4);
      break;
    case Family::D:
      if (n < 4) bad_rank("D", n, "n >= 4");
      // row v0 .. v_{n-2}, with v_{n-1} on v1 and v_n on v_{n-3}
      s.vertices = static_cast<std::size_t>(n) + 1;
      s.path(0, n - 2);
      s.link(1, n - 1);
      s.link(n - 3, n);
      break;
    case Family::E6:
      s.vertices = 7;
      s.path(0, 4);
      s.link(2, 5);
      s.link(5, 6);
      n = 6;
      break;
    case Family::E7:
      s.vertices = 8;
      s.path(0, 6);
      s.link(3, 7);
      n = 7;
      break;
    case Family::E8:
      s.vertices = 9;
      s.path(0, 7);
      s.link(2, 8);
      n = 8;
      break;
    case Family::F4:
      s.vertices = 5;
      s.link(0, 1);
      s.link(1, 2, 4);
      s.link(2, 3);
      s.link(3, 4);
      n = 4;
      break;
    case Family::G2:
      s.vertices = 3;
      s.link(0, 1, 6);
      s.link(1, 2);
      n = 2;
      break;
  }
  return CatalogEntry{family, n, std::move(s).build()};
}

Family parse_family(std::string_view token) {
  std::string t;
  for (char c : token) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  while (!t.empty() && (t.back() == 'T' || t.back() == '~')) t.pop_back();
  if (t == "A") return Family::A;
  if (t == "B") return Family::B;
  if (t == "C") return Family::C;
  if (t == "D") return Family::D;
  if (t == "E6") return Family::E6;
  if (t == "E7") return Family::E7;
  if (t == "E8") return Family::E8;
  if (t == "F4") return Family::F4;
  if (t == "G2") return Family::G2;
  throw Error("unknown affine family '" + std::string(token) + "'");
}

CatalogEntry catalog_by_name(std::string_view token, int n) {
  std::string t(token);
  while (!t.empty() && (t.back() == 't' || t.back() == 'T' || t.back() == '~')) t.pop_back();
  // A2, B3 ... carry their rank; E6, F4, G2 name a fixed graph.
  std::string digits;
  while (!t.empty() && std::isdigit(static_cast<unsigned char>(t.back()))) {
    digits.insert(digits.begin(), t.back());
    t.pop_back();
  }
  Family f;
  try {
    f = parse_family(t);
  } catch (const Error&) {
    f = parse_family(t + digits);
    digits.clear();
  }
  if (!family_takes_rank(f)) return catalog(f);
  if (!digits.empty()) {
    const int embedded = std::stoi(digits);
    if (n != 0 && n != embedded) throw Error("conflicting ranks in '" + std::string(token) + "'");
    n = embedded;
  }
  if (n == 0) throw Error("affine family " + std::string(token) + " needs a rank n");
  return catalog(f, n);
}

std::vector<CatalogEntry> catalog_up_to(std::size_t max_vertices) {
  std::vector<CatalogEntry> out;
  const int limit = static_cast<int>(max_vertices);
  for (int n = 1; n + 1 <= limit; ++n) out.push_back(catalog(Family::A, n));
  for (int n = 3; n + 1 <= limit; ++n) out.push_back(catalog(Family::B, n));
  for (int n = 2; n + 1 <= limit; ++n) out.push_back(catalog(Family::C, n));
  for (int n = 4; n + 1 <= limit; ++n) out.push_back(catalog(Family::D, n));
  for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8}) {
    auto e = catalog(f);
    if (e.graph.size() <= max_vertices) out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.graph.size() < b.graph.size();
  });
  return out;
}

namespace {

// Backtracking embedding of a connected template as an induced subgraph.
class TemplateMatcher {
 public:
  TemplateMatcher(const CoxeterGraph& tmpl, const CoxeterGraph& host) : t_(tmpl), g_(host) {
    // BFS order so every vertex after the first has an already-placed parent.
    std::vector<bool> seen(t_.size(), false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    parent_.assign(t_.size(), 0);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      order_.push_back(v);
      for (Vertex y : t_.neighbours(v)) {
        if (!seen[y]) {
          seen[y] = true;
          parent_[y] = v;
          queue.push_back(y);
        }
      }
    }
    image_.assign(t_.size(), 0);
    used_.assign(g_.size(), false);
  }

  std::optional<std::vector<Vertex>> run() {
    if (t_.size() > g_.size()) return std::nullopt;
    if (place(0)) return image_;
    return std::nullopt;
  }

 private:
  bool compatible(Vertex tv, Vertex gv, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const Vertex tq = order_[k];
      const Label want = t_.label(tv, tq);
      const Label have = g_.label(gv, image_[tq]);
      if (want.is_edge()) {
        if (!have.is_edge() || have < want) return false;
      } else if (have.is_edge()) {
        return false;
      }
    }
    return true;
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex tv = order_[depth];
    auto attempt = [&](Vertex gv) {
      if (used_[gv] || !compatible(tv, gv, depth)) return false;
      used_[gv] = true;
      image_[tv] = gv;
      if (place(depth + 1)) return true;
      used_[gv] = false;
      return false;
    };
    if (depth == 0) {
      for (Vertex gv = 0; gv < g_.size(); ++gv) {
        if (attempt(gv)) return true;
      }
    } else {
      for (Vertex gv : g_.neighbours(image_[parent_[tv]])) {
        if (attempt(gv)) return true;
      }
    }
    return false;
  }

  const CoxeterGraph& t_;
  const CoxeterGraph& g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<AffineWitness> find_affine_witness(const CoxeterGraph& g) {
  for (auto& entry : catalog_up_to(g.size())) {
    TemplateMatcher matcher(entry.graph, g);
    if (auto image = matcher.run()) return AffineWitness{std::move(*image), std::move(entry)};
  }
  return std::nullopt;
}

}  // namespace coxroots
