#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frugal/error.hpp"

namespace frugal {

// Vertices and edges are dense indices; their order is the total order used
// for every deterministic tie-break in the library.
using Vertex = int;
using EdgeId = int;
using Colour = int;

using VertexColouring = std::vector<Colour>;
using EdgeColouring = std::vector<Colour>;
using Labelling = std::vector<int>;
using PartialColouring = std::vector<std::optional<Colour>>;

/// Per-item permitted colours. Each list is kept sorted and duplicate-free.
struct ListAssignment {
  std::vector<std::vector<Colour>> lists;

  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<Colour>> raw) : lists(std::move(raw)) {
    for (auto& l : lists) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
  }

  /// Every item gets {first, ..., first + size - 1}.
  static ListAssignment uniform(int items, int size, Colour first = 1) {
    std::vector<Colour> l(static_cast<std::size_t>(std::max(size, 0)));
    std::iota(l.begin(), l.end(), first);
    return ListAssignment(std::vector<std::vector<Colour>>(static_cast<std::size_t>(items), l));
  }

  std::size_t size() const { return lists.size(); }
  const std::vector<Colour>& operator[](std::size_t i) const { return lists[i]; }

  bool contains(std::size_t item, Colour c) const {
    return std::binary_search(lists[item].begin(), lists[item].end(), c);
  }

  /// Minimum list size (the t of a t-list assignment); 0 for an empty assignment.
  std::size_t min_size() const {
    if (lists.empty()) return 0;
    std::size_t m = lists.front().size();
    for (const auto& l : lists) m = std::min(m, l.size());
    return m;
  }
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite loopless multigraph. Immutable once constructed.
class MultiGraph {
 public:
  MultiGraph() = default;

  explicit MultiGraph(int n, std::vector<Edge> edges = {}) : edges_(std::move(edges)) {
    if (n < 0) throw Error(ErrorKind::Precondition, "negative vertex count");
    vertex_names_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vertex_names_.push_back(std::to_string(i));
    edge_names_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) edge_names_.push_back("e" + std::to_string(i));
    finalize();
  }

  MultiGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges,
             std::vector<std::string> edge_names)
      : vertex_names_(std::move(vertex_names)),
        edge_names_(std::move(edge_names)),
        edges_(std::move(edges)) {
    if (edge_names_.size() != edges_.size())
      throw Error(ErrorKind::Precondition, "edge name count mismatch");
    check_unique(vertex_names_, "vertex");
    check_unique(edge_names_, "edge");
    finalize();
  }

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  /// Number of incident edge-ids; parallel edges count separately.
  int degree(Vertex v) const { return static_cast<int>(incidence_[static_cast<std::size_t>(v)].size()); }
  std::span<const EdgeId> incident(Vertex v) const { return incidence_[static_cast<std::size_t>(v)]; }

  /// Distinct neighbours, ascending.
  std::span<const Vertex> neighbours(Vertex v) const { return neighbours_[static_cast<std::size_t>(v)]; }

  bool adjacent(Vertex a, Vertex b) const {
    auto n = neighbours(a);
    return std::binary_search(n.begin(), n.end(), b);
  }

  int max_degree() const { return max_degree_; }

  bool is_simple() const {
    for (Vertex v = 0; v < vertex_count(); ++v)
      if (degree(v) != static_cast<int>(neighbours(v).size())) return false;
    return true;
  }

  const std::string& vertex_name(Vertex v) const { return vertex_names_[static_cast<std::size_t>(v)]; }
  const std::string& edge_name(EdgeId e) const { return edge_names_[static_cast<std::size_t>(e)]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& edge_names() const { return edge_names_; }

  std::optional<Vertex> find_vertex(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<EdgeId> find_edge(const std::string& name) const {
    for (EdgeId e = 0; e < edge_count(); ++e)
      if (edge_names_[static_cast<std::size_t>(e)] == name) return e;
    return std::nullopt;
  }

 private:
  static void check_unique(const std::vector<std::string>& names, const char* what) {
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second)
        throw Error(ErrorKind::DuplicateId, std::string(what) + " id '" + n + "' repeated");
  }

  void finalize() {
    const auto n = vertex_names_.size();
    incidence_.assign(n, {});
    neighbours_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) vertex_index_.emplace(vertex_names_[i], static_cast<Vertex>(i));
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const Edge& ed = edges_[e];
      if (ed.u < 0 || ed.v < 0 || ed.u >= static_cast<int>(n) || ed.v >= static_cast<int>(n))
        throw Error(ErrorKind::DanglingEndpoint, "edge " + edge_names_[e] + " references a missing vertex");
      if (ed.u == ed.v) throw Error(ErrorKind::LoopEdge, "edge " + edge_names_[e] + " is a loop");
      incidence_[static_cast<std::size_t>(ed.u)].push_back(static_cast<EdgeId>(e));
      incidence_[static_cast<std::size_t>(ed.v)].push_back(static_cast<EdgeId>(e));
      neighbours_[static_cast<std::size_t>(ed.u)].push_back(ed.v);
      neighbours_[static_cast<std::size_t>(ed.v)].push_back(ed.u);
    }
    max_degree_ = 0;
    for (std::size_t v = 0; v < n; ++v) {
      auto& nb = neighbours_[v];
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      max_degree_ = std::max(max_degree_, static_cast<int>(incidence_[v].size()));
    }
  }

  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::vector<Vertex>> neighbours_;
  std::unordered_map<std::string, Vertex> vertex_index_;
  int max_degree_ = 0;
};

struct EdgeSpec {
  std::string id;
  std::string u;
  std::string v;
};

/// Builds a validated multigraph from named vertices and (id, u, v) triples.
inline MultiGraph build_multigraph(const std::vector<std::string>& vertex_ids,
                                   const std::vector<EdgeSpec>& edge_specs) {
  std::unordered_map<std::string, Vertex> index;
  for (std::size_t i = 0; i < vertex_ids.size(); ++i)
    if (!index.emplace(vertex_ids[i], static_cast<Vertex>(i)).second)
      throw Error(ErrorKind::DuplicateId, "vertex id '" + vertex_ids[i] + "' repeated");
  std::vector<Edge> edges;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> edge_index;
  for (const auto& spec : edge_specs) {
    if (!edge_index.emplace(spec.id, 0).second)
      throw Error(ErrorKind::DuplicateId, "edge id '" + spec.id + "' repeated");
    auto iu = index.find(spec.u);
    auto iv = index.find(spec.v);
    if (iu == index.end() || iv == index.end())
      throw Error(ErrorKind::DanglingEndpoint, "edge '" + spec.id + "' references a missing vertex");
    if (iu->second == iv->second) throw Error(ErrorKind::LoopEdge, "edge '" + spec.id + "' is a loop");
    edges.push_back({iu->second, iv->second});
    names.push_back(spec.id);
  }
  return MultiGraph(vertex_ids, std::move(edges), std::move(names));
}

/// Same vertices, one edge per adjacent pair.
inline MultiGraph simplify(const MultiGraph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbours(u))
      if (u < v) edges.push_back({u, v});
  std::vector<std::string> names;
  for (const auto& e : edges) names.push_back(g.vertex_name(e.u) + "-" + g.vertex_name(e.v));
  return MultiGraph(g.vertex_names(), std::move(edges), std::move(names));
}

inline constexpr int kUnreachable = -1;

inline std::vector<int> bfs_distances(const MultiGraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::queue<Vertex> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbours(u))
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
  }
  return dist;
}

/// Vertices at distance exactly two from v, ascending.
inline std::vector<Vertex> second_neighbours(const MultiGraph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u : g.neighbours(v))
    for (Vertex w : g.neighbours(u))
      if (w != v && !g.adjacent(v, w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Simple graph joining every pair at distance 1 or 2.
inline MultiGraph square(const MultiGraph& g) {
  std::vector<Edge> edges;
  std::vector<std::string> names;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    std::vector<Vertex> near(g.neighbours(u).begin(), g.neighbours(u).end());
    for (Vertex w : g.neighbours(u))
      for (Vertex x : g.neighbours(w))
        if (x != u) near.push_back(x);
    std::sort(near.begin(), near.end());
    near.erase(std::unique(near.begin(), near.end()), near.end());
    for (Vertex x : near)
      if (u < x) {
        edges.push_back({u, x});
        names.push_back(g.vertex_name(u) + "-" + g.vertex_name(x));
      }
  }
  return MultiGraph(g.vertex_names(), std::move(edges), std::move(names));
}

/// Vertices are the edge-ids of g; two are adjacent iff the edges share an endpoint.
inline MultiGraph line_graph(const MultiGraph& g) {
  std::vector<Edge> edges;
  std::vector<std::string> names;
  for (EdgeId a = 0; a < g.edge_count(); ++a)
    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
      const Edge& ea = g.edge(a);
      const Edge& eb = g.edge(b);
      if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) {
        edges.push_back({a, b});
        names.push_back(g.edge_name(a) + "~" + g.edge_name(b));
      }
    }
  return MultiGraph(g.edge_names(), std::move(edges), std::move(names));
}

/// Component index per vertex plus the component count.
inline std::pair<std::vector<int>, int> components(const MultiGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int count = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(u))
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return {comp, count};
}

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct Metrics {
  int max_degree = 0;
  std::vector<int> degrees;
  int girth = kInfiniteGirth;  // kInfiniteGirth for forests
  int component_count = 0;

  bool girth_infinite() const { return girth == kInfiniteGirth; }
};

/// Shortest cycle length; parallel edges form 2-cycles.
inline int girth(const MultiGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != static_cast<int>(g.neighbours(v).size())) return 2;
  int best = kInfiniteGirth;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbours(u)) {
        auto wi = static_cast<std::size_t>(w);
        auto ui = static_cast<std::size_t>(u);
        if (dist[wi] == -1) {
          dist[wi] = dist[ui] + 1;
          parent[wi] = u;
          q.push(w);
        } else if (parent[ui] != w) {
          best = std::min(best, dist[ui] + dist[wi] + 1);
        }
      }
    }
  }
  return best;
}

inline Metrics metrics(const MultiGraph& g) {
  Metrics m;
  m.max_degree = g.max_degree();
  for (Vertex v = 0; v < g.vertex_count(); ++v) m.degrees.push_back(g.degree(v));
  m.girth = girth(g);
  m.component_count = components(g).second;
  return m;
}

/// Cyclic order of incident edge-ids around each vertex.
struct RotationSystem {
  std::vector<std::vector<EdgeId>> order;
};

inline void validate_rotation(const MultiGraph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) != g.vertex_count())
    throw Error(ErrorKind::InvalidRotation, "rotation does not cover every vertex");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<EdgeId> a(g.incident(v).begin(), g.incident(v).end());
    std::vector<EdgeId> b = rot.order[static_cast<std::size_t>(v)];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw Error(ErrorKind::InvalidRotation,
                  "rotation at " + g.vertex_name(v) + " is not a permutation of its incident edges");
  }
}

/// Counter-clockwise angular order of incident edges from a straight-line drawing.
inline RotationSystem rotation_from_coordinates(const MultiGraph& g,
                                                const std::vector<std::pair<double, double>>& xy) {
  RotationSystem rot;
  rot.order.resize(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto& ord = rot.order[static_cast<std::size_t>(v)];
    ord.assign(g.incident(v).begin(), g.incident(v).end());
    const auto [vx, vy] = xy[static_cast<std::size_t>(v)];
    auto angle = [&](EdgeId e) {
      const auto [wx, wy] = xy[static_cast<std::size_t>(g.other(e, v))];
      return std::atan2(wy - vy, wx - vx);
    };
    std::stable_sort(ord.begin(), ord.end(), [&](EdgeId a, EdgeId b) { return angle(a) < angle(b); });
  }
  return rot;
}

/// A directed traversal of edge e; forward means u -> v.
struct Dart {
  EdgeId edge = 0;
  bool forward = true;

  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Face {
  std::vector<Dart> darts;
  std::vector<Vertex> walk;  // tail of each dart, in order

  int size() const { return static_cast<int>(walk.size()); }

  std::vector<Vertex> distinct_vertices() const {
    std::vector<Vertex> out = walk;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

struct FaceStructure {
  std::vector<Face> faces;
  int max_face_size = 0;  // the largest boundary walk length
};

/// Traces every face of the embedding. Each dart lies on exactly one face walk;
/// per component V - E + F = 2 must hold (isolated vertices count as one face).
inline FaceStructure faces(const MultiGraph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  const auto m = static_cast<std::size_t>(g.edge_count());
  // position of edge e in the rotation at each endpoint
  std::vector<std::size_t> pos_u(m), pos_v(m);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& ord = rot.order[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < ord.size(); ++i) {
      const Edge& e = g.edge(ord[i]);
      (e.u == v ? pos_u : pos_v)[static_cast<std::size_t>(ord[i])] = i;
    }
  }
  auto head = [&](Dart d) { return d.forward ? g.edge(d.edge).v : g.edge(d.edge).u; };
  auto tail = [&](Dart d) { return d.forward ? g.edge(d.edge).u : g.edge(d.edge).v; };
  auto dart_index = [](Dart d) { return static_cast<std::size_t>(d.edge) * 2 + (d.forward ? 0 : 1); };

  FaceStructure fs;
  std::vector<bool> used(2 * m, false);
  for (std::size_t start = 0; start < 2 * m; ++start) {
    if (used[start]) continue;
    Face f;
    Dart d{static_cast<EdgeId>(start / 2), start % 2 == 0};
    while (!used[dart_index(d)]) {
      used[dart_index(d)] = true;
      f.darts.push_back(d);
      f.walk.push_back(tail(d));
      Vertex h = head(d);
      const auto& ord = rot.order[static_cast<std::size_t>(h)];
      const Edge& e = g.edge(d.edge);
      std::size_t p = (e.u == h ? pos_u : pos_v)[static_cast<std::size_t>(d.edge)];
      EdgeId next = ord[(p + 1) % ord.size()];
      d = Dart{next, g.edge(next).u == h};
    }
    fs.max_face_size = std::max(fs.max_face_size, f.size());
    fs.faces.push_back(std::move(f));
  }

  auto [comp, count] = components(g);
  std::vector<long> euler(static_cast<std::size_t>(count), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    euler[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] += 1;
    if (g.degree(v) == 0) euler[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] += 1;
  }
  for (const auto& e : g.edges()) euler[static_cast<std::size_t>(comp[static_cast<std::size_t>(e.u)])] -= 1;
  for (const auto& f : fs.faces) euler[static_cast<std::size_t>(comp[static_cast<std::size_t>(f.walk.front())])] += 1;
  for (long x : euler)
    if (x != 2) throw Error(ErrorKind::NonPlanarEmbedding, "Euler characteristic check failed");
  return fs;
}

/// Result of deleting or merging vertices: the new graph plus old -> new vertex map
/// (-1 for deleted vertices).
struct VertexMap {
  MultiGraph graph;
  std::vector<Vertex> old_to_new;
};

struct Contraction {
  MultiGraph graph;
  std::vector<Vertex> old_to_new;  // both endpoints map to merged
  Vertex merged = 0;
};

/// Merges the endpoints of e into a fresh last vertex, drops loops and collapses
/// parallel edges at the merged vertex.
inline Contraction contract_edge_simplify(const MultiGraph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::MissingEdge, "edge " + std::to_string(e));
  const Vertex a = g.edge(e).u;
  const Vertex b = g.edge(e).v;
  Contraction c;
  c.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<std::string> names;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != a && v != b) {
      c.old_to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(names.size());
      names.push_back(g.vertex_name(v));
    }
  c.merged = static_cast<Vertex>(names.size());
  names.push_back(g.vertex_name(a) + "+" + g.vertex_name(b));
  c.old_to_new[static_cast<std::size_t>(a)] = c.merged;
  c.old_to_new[static_cast<std::size_t>(b)] = c.merged;

  std::vector<Edge> edges;
  std::vector<std::string> edge_names;
  std::set<Vertex> merged_nb;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    Vertex u = c.old_to_new[static_cast<std::size_t>(g.edge(f).u)];
    Vertex v = c.old_to_new[static_cast<std::size_t>(g.edge(f).v)];
    if (u == v) continue;
    if (u == c.merged || v == c.merged) {
      Vertex w = u == c.merged ? v : u;
      if (!merged_nb.insert(w).second) continue;
    }
    edges.push_back({u, v});
    edge_names.push_back(g.edge_name(f));
  }
  c.graph = MultiGraph(std::move(names), std::move(edges), std::move(edge_names));
  return c;
}

/// Subgraph induced by the vertices with keep[v] set; original order preserved.
inline VertexMap induced_subgraph(const MultiGraph& g, const std::vector<bool>& keep) {
  VertexMap r;
  r.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<std::string> names;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (keep[static_cast<std::size_t>(v)]) {
      r.old_to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(names.size());
      names.push_back(g.vertex_name(v));
    }
  std::vector<Edge> edges;
  std::vector<std::string> edge_names;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    Vertex u = r.old_to_new[static_cast<std::size_t>(g.edge(f).u)];
    Vertex v = r.old_to_new[static_cast<std::size_t>(g.edge(f).v)];
    if (u < 0 || v < 0) continue;
    edges.push_back({u, v});
    edge_names.push_back(g.edge_name(f));
  }
  r.graph = MultiGraph(std::move(names), std::move(edges), std::move(edge_names));
  return r;
}

/// Spanning subgraph keeping only the listed edge-ids (in the given order).
inline MultiGraph edge_subgraph(const MultiGraph& g, const std::vector<EdgeId>& keep) {
  std::vector<Edge> edges;
  std::vector<std::string> names;
  for (EdgeId e : keep) {
    edges.push_back(g.edge(e));
    names.push_back(g.edge_name(e));
  }
  return MultiGraph(g.vertex_names(), std::move(edges), std::move(names));
}

/// Articulation points via iterative low-link search.
inline std::vector<Vertex> cut_vertices(const MultiGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  int timer = 0;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    // frame: vertex, parent, next neighbour index
    std::vector<std::tuple<Vertex, Vertex, std::size_t>> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      auto& [u, parent, idx] = stack.back();
      auto nb = g.neighbours(u);
      if (idx < nb.size()) {
        Vertex w = nb[idx++];
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] == -1) {
          disc[wi] = low[wi] = timer++;
          if (u == root) ++root_children;
          stack.emplace_back(w, u, 0);
        } else if (w != parent) {
          low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[wi]);
        }
      } else {
        Vertex done = u;
        Vertex p = parent;
        stack.pop_back();
        if (p >= 0) {
          auto pi = static_cast<std::size_t>(p);
          low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done)]);
          if (p != root && low[static_cast<std::size_t>(done)] >= disc[pi]) is_cut[pi] = true;
        }
      }
    }
    if (root_children > 1) is_cut[static_cast<std::size_t>(root)] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (is_cut[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

inline bool is_two_connected(const MultiGraph& g) {
  return g.vertex_count() >= 3 && components(g).second == 1 && cut_vertices(g).empty();
}

/// Number of distinct values in a colouring.
inline int colour_count(std::span<const Colour> c) {
  std::set<Colour> s(c.begin(), c.end());
  return static_cast<int>(s.size());
}

}  // namespace frugal
