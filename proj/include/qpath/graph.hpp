#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qpath/cospan.hpp"
#include "qpath/error.hpp"
#include "qpath/vertex_set.hpp"

namespace qpath {

struct Edge {
  std::string id, src, tgt;
  bool operator==(const Edge&) const = default;
};

// A directed multigraph with string-labeled vertices and edges.
class Graph {
 public:
  Graph() = default;
  Graph(VertexSet vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (!vertices_.contains(e.src) || !vertices_.contains(e.tgt))
        throw semantic_error("edge '" + e.id + "' has an unknown endpoint");
      if (!edge_index_.emplace(e.id, i).second)
        throw semantic_error("duplicate edge id '" + e.id + "'");
    }
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      out_[vertices_.index_of(edges_[i].src)].push_back(i);
      in_[vertices_.index_of(edges_[i].tgt)].push_back(i);
    }
  }

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end())
      throw semantic_error("unknown edge id '" + id + "'");
    return edges_[it->second];
  }
  const std::vector<std::size_t>& out_edges(std::size_t v) const {
    return out_[v];
  }
  const std::vector<std::size_t>& in_edges(std::size_t v) const {
    return in_[v];
  }

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

// A path: a start vertex and a (possibly empty) run of composable edge ids.
struct Path {
  std::string start;
  std::vector<std::string> edge_ids;

  std::size_t length() const { return edge_ids.size(); }
  bool operator==(const Path&) const = default;

  const std::string& end(const Graph& g) const {
    return edge_ids.empty() ? start : g.edge(edge_ids.back()).tgt;
  }
  void validate(const Graph& g) const {
    std::string at = start;
    if (!g.vertices().contains(at))
      throw semantic_error("path starts at unknown vertex '" + at + "'");
    for (const auto& id : edge_ids) {
      const Edge& e = g.edge(id);
      if (e.src != at)
        throw semantic_error("path edges do not compose at '" + id + "'");
      at = e.tgt;
    }
  }
};

// Canonical path order: length first, then the edge-id sequence.
struct PathLess {
  bool operator()(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.edge_ids != b.edge_ids) return a.edge_ids < b.edge_ids;
    return a.start < b.start;
  }
};

// Finite map from boundary pairs to duplicate-free, canonically ordered path
// lists, truncated at a length bound.
class PathTable {
 public:
  PathTable() = default;
  PathTable(VertexSet rows, VertexSet cols, std::size_t bound)
      : rows_(std::move(rows)), cols_(std::move(cols)), bound_(bound),
        cells_(rows_.size() * cols_.size()) {}

  const VertexSet& rows() const { return rows_; }
  const VertexSet& cols() const { return cols_; }
  std::size_t bound() const { return bound_; }

  const std::vector<Path>& at(std::size_t i, std::size_t j) const {
    return cells_[i * cols_.size() + j];
  }
  const std::vector<Path>& at(const std::string& r,
                              const std::string& c) const {
    return at(rows_.index_of(r), cols_.index_of(c));
  }
  std::size_t count(const std::string& r, const std::string& c) const {
    return at(r, c).size();
  }
  std::size_t count_of_length(const std::string& r, const std::string& c,
                              std::size_t len) const {
    std::size_t n = 0;
    for (const auto& p : at(r, c))
      if (p.length() == len) ++n;
    return n;
  }

  void add(std::size_t i, std::size_t j, Path p) {
    cells_[i * cols_.size() + j].push_back(std::move(p));
  }
  void canonicalize() {
    for (auto& cell : cells_) {
      std::sort(cell.begin(), cell.end(), PathLess{});
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
    }
  }

  bool operator==(const PathTable& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           cells_ == other.cells_;
  }

 private:
  VertexSet rows_, cols_;
  std::size_t bound_ = 0;
  std::vector<std::vector<Path>> cells_;
};

// Exactly the length-n edge sequences, per vertex pair. n = 0 gives one
// identity path per vertex.
inline PathTable paths_of_length(const Graph& g, std::size_t n) {
  const VertexSet& v = g.vertices();
  std::vector<Path> frontier;
  for (const auto& label : v.labels()) frontier.push_back(Path{label, {}});
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      std::size_t end = v.index_of(p.end(g));
      for (std::size_t ei : g.out_edges(end)) {
        Path q = p;
        q.edge_ids.push_back(g.edges()[ei].id);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  PathTable table(v, v, n);
  for (auto& p : frontier) {
    std::size_t i = v.index_of(p.start);
    std::size_t j = v.index_of(p.end(g));
    table.add(i, j, std::move(p));
  }
  table.canonicalize();
  return table;
}

// All paths of length <= k, per vertex pair: the hom-sets of the free
// category, truncated.
inline PathTable free_category(const Graph& g, std::size_t k) {
  PathTable table(g.vertices(), g.vertices(), k);
  for (std::size_t n = 0; n <= k; ++n) {
    PathTable layer = paths_of_length(g, n);
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
      for (std::size_t j = 0; j < g.vertices().size(); ++j)
        for (const auto& p : layer.at(i, j)) table.add(i, j, p);
  }
  table.canonicalize();
  return table;
}

struct OpenGraph {
  VertexSet input, output;
  FiniteFunction leg_in, leg_out;  // boundaries -> graph vertices
  Graph graph;

  void validate() const {
    if (leg_in.domain() != input || leg_in.codomain() != graph.vertices())
      throw semantic_error("open graph: input leg does not fit");
    if (leg_out.domain() != output || leg_out.codomain() != graph.vertices())
      throw semantic_error("open graph: output leg does not fit");
  }
};

inline OpenGraph identity_open_graph(const VertexSet& x) {
  return OpenGraph{x, x, FiniteFunction::identity(x),
                   FiniteFunction::identity(x), Graph(x, {})};
}

// Vertices glued by pushout over the shared boundary; edges are disjointly
// united, with colliding ids origin-prefixed. The maps back from each
// component are kept so paths can be transported into the composite.
struct GraphComposeResult {
  OpenGraph composite;
  FiniteFunction left_vertices, right_vertices;
  std::map<std::string, std::string> left_edge_ids, right_edge_ids;
};

inline GraphComposeResult compose_open_graph_full(const OpenGraph& g,
                                                  const OpenGraph& h) {
  if (g.output != h.input)
    throw semantic_error("compose: open graph boundaries do not match");
  PushoutResult po = pushout(g.leg_out, h.leg_in);

  std::vector<std::string> ids;
  std::vector<bool> origin;
  for (const auto& e : g.graph.edges()) {
    ids.push_back(e.id);
    origin.push_back(true);
  }
  for (const auto& e : h.graph.edges()) {
    ids.push_back(e.id);
    origin.push_back(false);
  }
  ids = detail::resolve_class_labels(std::move(ids), origin);

  GraphComposeResult out;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  for (const auto& e : g.graph.edges()) {
    out.left_edge_ids[e.id] = ids[pos];
    edges.push_back(Edge{ids[pos++], po.left_leg.apply(e.src),
                         po.left_leg.apply(e.tgt)});
  }
  for (const auto& e : h.graph.edges()) {
    out.right_edge_ids[e.id] = ids[pos];
    edges.push_back(Edge{ids[pos++], po.right_leg.apply(e.src),
                         po.right_leg.apply(e.tgt)});
  }
  out.composite =
      OpenGraph{g.input, h.output, compose(po.left_leg, g.leg_in),
                compose(po.right_leg, h.leg_out),
                Graph(po.quotient, std::move(edges))};
  out.left_vertices = po.left_leg;
  out.right_vertices = po.right_leg;
  return out;
}

inline OpenGraph compose_open_graph(const OpenGraph& g, const OpenGraph& h) {
  return compose_open_graph_full(g, h).composite;
}

// Boundary-restricted truncated path sets: cell (x,y) lists the paths from
// leg_in(x) to leg_out(y) of length <= k.
inline PathTable blackbox_graph(const OpenGraph& c, std::size_t k) {
  PathTable all = free_category(c.graph, k);
  PathTable table(c.input, c.output, k);
  for (std::size_t x = 0; x < c.input.size(); ++x)
    for (std::size_t y = 0; y < c.output.size(); ++y)
      for (const auto& p :
           all.at(c.leg_in.apply_index(x), c.leg_out.apply_index(y)))
        table.add(x, y, p);
  table.canonicalize();
  return table;
}

// Composite table over the shared boundary: every concatenation p.q through
// an intermediate boundary point, duplicates removed. Paths must already
// live in a common graph so that concatenations compose.
inline PathTable profunctor_compose(const PathTable& p, const PathTable& q) {
  if (p.cols() != q.rows())
    throw semantic_error("profunctor_compose: boundary mismatch");
  PathTable out(p.rows(), q.cols(), p.bound() + q.bound());
  for (std::size_t x = 0; x < p.rows().size(); ++x)
    for (std::size_t y = 0; y < p.cols().size(); ++y)
      for (const auto& left : p.at(x, y))
        for (std::size_t z = 0; z < q.cols().size(); ++z)
          for (const auto& right : q.at(y, z)) {
            Path joined = left;
            joined.edge_ids.insert(joined.edge_ids.end(),
                                   right.edge_ids.begin(),
                                   right.edge_ids.end());
            out.add(x, z, std::move(joined));
          }
  out.canonicalize();
  return out;
}

// Rewrites every path with a vertex map and an edge-id substitution; used to
// transport component tables into a composite graph.
inline PathTable translate_paths(
    const PathTable& table, const FiniteFunction& vertex_map,
    const std::map<std::string, std::string>& edge_ids) {
  PathTable out(table.rows(), table.cols(), table.bound());
  for (std::size_t i = 0; i < table.rows().size(); ++i)
    for (std::size_t j = 0; j < table.cols().size(); ++j)
      for (const auto& p : table.at(i, j)) {
        Path q{vertex_map.apply(p.start), {}};
        q.edge_ids.reserve(p.edge_ids.size());
        for (const auto& id : p.edge_ids) q.edge_ids.push_back(edge_ids.at(id));
        out.add(i, j, std::move(q));
      }
  out.canonicalize();
  return out;
}

inline PathTable truncate_table(const PathTable& table, std::size_t k) {
  PathTable out(table.rows(), table.cols(), k);
  for (std::size_t i = 0; i < table.rows().size(); ++i)
    for (std::size_t j = 0; j < table.cols().size(); ++j)
      for (const auto& p : table.at(i, j))
        if (p.length() <= k) out.add(i, j, p);
  out.canonicalize();
  return out;
}

namespace detail {

inline std::map<std::pair<std::size_t, std::size_t>, int> edge_multiset(
    const Graph& g, const std::vector<std::size_t>& vertex_map) {
  std::map<std::pair<std::size_t, std::size_t>, int> out;
  for (const auto& e : g.edges())
    ++out[{vertex_map[g.vertices().index_of(e.src)],
           vertex_map[g.vertices().index_of(e.tgt)]}];
  return out;
}

inline bool graph_iso_extends(const OpenGraph& a, const OpenGraph& b,
                              std::vector<std::size_t>& phi,
                              std::vector<bool>& used, std::size_t next) {
  const std::size_t n = a.graph.vertices().size();
  while (next < n && phi[next] != SIZE_MAX) ++next;
  if (next == n) {
    std::vector<std::size_t> ident(n);
    for (std::size_t i = 0; i < n; ++i) ident[i] = i;
    return edge_multiset(a.graph, phi) == edge_multiset(b.graph, ident);
  }
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    phi[next] = cand;
    used[cand] = true;
    if (graph_iso_extends(a, b, phi, used, next + 1)) return true;
    used[cand] = false;
    phi[next] = SIZE_MAX;
  }
  return false;
}

}  // namespace detail

// Isomorphism of open graphs over equal boundaries: a vertex bijection that
// commutes with the legs and matches edge multiplicities. Edge identities are
// not compared. Backtracking search, intended for small graphs.
inline bool open_graph_isomorphic(const OpenGraph& a, const OpenGraph& b) {
  if (a.input != b.input || a.output != b.output) return false;
  const std::size_t n = a.graph.vertices().size();
  if (n != b.graph.vertices().size()) return false;
  if (a.graph.edges().size() != b.graph.edges().size()) return false;
  std::vector<std::size_t> phi(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  auto pin = [&](std::size_t from, std::size_t to) {
    if (phi[from] == SIZE_MAX) {
      if (used[to]) return false;
      phi[from] = to;
      used[to] = true;
      return true;
    }
    return phi[from] == to;
  };
  for (std::size_t x = 0; x < a.input.size(); ++x)
    if (!pin(a.leg_in.apply_index(x), b.leg_in.apply_index(x))) return false;
  for (std::size_t y = 0; y < a.output.size(); ++y)
    if (!pin(a.leg_out.apply_index(y), b.leg_out.apply_index(y))) return false;
  return detail::graph_iso_extends(a, b, phi, used, 0);
}

// Inputs must have no incoming edges; outputs no outgoing edges.
inline bool is_functional_graph(const OpenGraph& c) {
  for (std::size_t x = 0; x < c.input.size(); ++x)
    if (!c.graph.in_edges(c.leg_in.apply_index(x)).empty()) return false;
  for (std::size_t y = 0; y < c.output.size(); ++y)
    if (!c.graph.out_edges(c.leg_out.apply_index(y)).empty()) return false;
  return true;
}

}  // namespace qpath
