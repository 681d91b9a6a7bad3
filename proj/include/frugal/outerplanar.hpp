#pragma once

#include <string>
#include <vector>

#include "frugal/graph.hpp"
#include "frugal/planar.hpp"

namespace frugal {

enum class ReducibleProperty {
  LowDegree,       // degree at most one
  DegreeTwoPair,   // degree two, next to another degree-two vertex
  TriangleEar,     // degree two on a triangle whose apex is small
  SparseDegreeTwo, // degree two with few vertices at distance two
};

inline std::string to_string(ReducibleProperty p) {
  switch (p) {
    case ReducibleProperty::LowDegree: return "i";
    case ReducibleProperty::DegreeTwoPair: return "ii";
    case ReducibleProperty::TriangleEar: return "iii";
    case ReducibleProperty::SparseDegreeTwo: return "lw-degree2";
  }
  return "unknown";
}

struct ReducibleWitness {
  Vertex vertex = 0;
  ReducibleProperty property = ReducibleProperty::LowDegree;
  // LowDegree: the neighbour if any. DegreeTwoPair: the degree-two neighbour
  // first. TriangleEar and SparseDegreeTwo: the two neighbours, the one
  // carrying the degree condition first.
  std::vector<Vertex> support;
};

namespace detail {

inline std::optional<ReducibleWitness> reducible_at(const MultiGraph& g, Vertex u, ReducibleProperty p) {
  auto nb = g.neighbours(u);
  switch (p) {
    case ReducibleProperty::LowDegree:
      if (nb.size() <= 1) return ReducibleWitness{u, p, {nb.begin(), nb.end()}};
      return std::nullopt;
    case ReducibleProperty::DegreeTwoPair:
      if (nb.size() != 2) return std::nullopt;
      for (int i = 0; i < 2; ++i)
        if (g.neighbours(nb[static_cast<std::size_t>(i)]).size() == 2)
          return ReducibleWitness{u, p, {nb[static_cast<std::size_t>(i)], nb[static_cast<std::size_t>(1 - i)]}};
      return std::nullopt;
    case ReducibleProperty::TriangleEar: {
      if (nb.size() != 2 || !g.adjacent(nb[0], nb[1])) return std::nullopt;
      for (int i = 0; i < 2; ++i) {
        Vertex v = nb[static_cast<std::size_t>(i)];
        Vertex w = nb[static_cast<std::size_t>(1 - i)];
        auto vn = g.neighbours(v);
        if (vn.size() == 3) return ReducibleWitness{u, p, {v, w}};
        if (vn.size() == 4) {
          std::vector<Vertex> rest;
          for (Vertex x : vn)
            if (x != u && x != w) rest.push_back(x);
          if (rest.size() == 2 && g.adjacent(rest[0], rest[1])) return ReducibleWitness{u, p, {v, w}};
        }
      }
      return std::nullopt;
    }
    case ReducibleProperty::SparseDegreeTwo:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

/// A vertex whose removal keeps the outerplanar induction going; failure
/// certifies that g is not outerplanar.
inline ReducibleWitness find_reducible_vertex(const MultiGraph& g) {
  if (!g.is_simple()) throw Error(ErrorKind::Precondition, "reducible-vertex search needs a simple graph");
  for (auto p : {ReducibleProperty::LowDegree, ReducibleProperty::DegreeTwoPair, ReducibleProperty::TriangleEar})
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      if (auto w = detail::reducible_at(g, u, p)) return *w;
  throw Error(ErrorKind::NotReducible, "no reducible vertex; the graph is not outerplanar");
}

/// A degree-two vertex with at most bound_degree - 2 vertices at distance two.
inline ReducibleWitness find_light_degree2(const MultiGraph& g, int bound_degree) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nb = g.neighbours(u);
    if (nb.size() != 2) continue;
    if (static_cast<int>(second_neighbours(g, u).size()) <= bound_degree - 2)
      return ReducibleWitness{u, ReducibleProperty::SparseDegreeTwo, {nb[0], nb[1]}};
  }
  throw Error(ErrorKind::NoLightDegree2, "no degree-two vertex with at most " + std::to_string(bound_degree - 2) +
                                             " vertices at distance two");
}

/// True when the witness still describes g.
inline bool witness_holds(const MultiGraph& g, const ReducibleWitness& w, int bound_degree = 0) {
  if (w.vertex < 0 || w.vertex >= g.vertex_count()) return false;
  if (w.property == ReducibleProperty::SparseDegreeTwo) {
    auto nb = g.neighbours(w.vertex);
    return nb.size() == 2 && static_cast<int>(second_neighbours(g, w.vertex).size()) <= bound_degree - 2;
  }
  return detail::reducible_at(g, w.vertex, w.property).has_value();
}

namespace detail {

inline std::vector<std::vector<Colour>> restrict_lists(const std::vector<std::vector<Colour>>& lists,
                                                       const std::vector<Vertex>& old_to_new, int new_count) {
  std::vector<std::vector<Colour>> out(static_cast<std::size_t>(new_count));
  for (std::size_t x = 0; x < old_to_new.size(); ++x)
    if (old_to_new[x] >= 0) out[static_cast<std::size_t>(old_to_new[x])] = lists[x];
  return out;
}

/// Unwinds a deletion stack: each level removed one vertex (the recorded one),
/// the next level is coloured, and the removed vertex is extended.
struct DeletionLevel {
  MultiGraph graph;            // graph used for the extension check
  std::vector<std::vector<Colour>> lists;
  Vertex removed = 0;
  std::vector<Vertex> old_to_new;
};

inline VertexColouring unwind(const std::vector<DeletionLevel>& stack, PartialColouring colouring, int k) {
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    PartialColouring here(static_cast<std::size_t>(it->graph.vertex_count()));
    for (Vertex x = 0; x < it->graph.vertex_count(); ++x)
      if (x != it->removed)
        here[static_cast<std::size_t>(x)] = colouring[static_cast<std::size_t>(it->old_to_new[static_cast<std::size_t>(x)])];
    here[static_cast<std::size_t>(it->removed)] =
        extend_colour_at_vertex(it->graph, here, it->removed, k, it->lists[static_cast<std::size_t>(it->removed)]);
    colouring = std::move(here);
  }
  VertexColouring out;
  for (const auto& c : colouring) out.push_back(*c);
  return out;
}

inline void check_lists(const MultiGraph& g, const ListAssignment& lists, long need, ListPolicy policy) {
  if (static_cast<int>(lists.size()) != g.vertex_count())
    throw Error(ErrorKind::Precondition, "list assignment does not match the vertex set");
  if (policy == ListPolicy::Require && g.vertex_count() > 0 && static_cast<long>(lists.min_size()) < need)
    throw Error(ErrorKind::ListTooSmall,
                "lists of size " + std::to_string(lists.min_size()) + " but " + std::to_string(need) + " required");
}

}  // namespace detail

/// k-frugal list colouring of an outerplanar graph (k >= 2, maximum degree >= 3)
/// by repeatedly deleting a reducible vertex.
inline VertexColouring colour_outerplanar(const MultiGraph& g, int k, const ListAssignment& lists,
                                          ListPolicy policy = ListPolicy::Require) {
  if (k < 2) throw Error(ErrorKind::Precondition, "outerplanar colouring needs k >= 2");
  if (g.max_degree() < 3) throw Error(ErrorKind::Precondition, "outerplanar colouring needs maximum degree >= 3");
  if (!g.is_simple()) throw Error(ErrorKind::Precondition, "outerplanar colouring needs a simple graph");
  detail::check_lists(g, lists, floor_div(g.max_degree() - 1, k) + 3, policy);

  std::vector<detail::DeletionLevel> stack;
  MultiGraph cur = g;
  std::vector<std::vector<Colour>> cur_lists = lists.lists;
  while (cur.vertex_count() > 0) {
    auto w = find_reducible_vertex(cur);
    std::vector<bool> keep(static_cast<std::size_t>(cur.vertex_count()), true);
    keep[static_cast<std::size_t>(w.vertex)] = false;
    auto sub = induced_subgraph(cur, keep);
    auto next_lists = detail::restrict_lists(cur_lists, sub.old_to_new, sub.graph.vertex_count());
    stack.push_back({std::move(cur), std::move(cur_lists), w.vertex, std::move(sub.old_to_new)});
    cur = std::move(sub.graph);
    cur_lists = std::move(next_lists);
  }
  return detail::unwind(stack, {}, k);
}

/// k-frugal list colouring of a 2-connected outerplanar graph with maximum
/// degree >= 7. Each step removes a sparse degree-two vertex u and joins its
/// neighbours if they are not already adjacent.
inline VertexColouring colour_outerplanar_2connected(const MultiGraph& g, int k, const ListAssignment& lists,
                                                     ListPolicy policy = ListPolicy::Require) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  if (!g.is_simple()) throw Error(ErrorKind::Precondition, "outerplanar colouring needs a simple graph");
  if (!is_two_connected(g)) throw Error(ErrorKind::Precondition, "graph is not 2-connected");
  const int bound_degree = g.max_degree();
  if (bound_degree < 7) throw Error(ErrorKind::Precondition, "maximum degree below 7");
  detail::check_lists(g, lists, floor_div(bound_degree - 2, k) + 3, policy);

  std::vector<detail::DeletionLevel> stack;
  MultiGraph cur = g;
  std::vector<std::vector<Colour>> cur_lists = lists.lists;
  while (cur.vertex_count() > 3) {
    auto w = find_light_degree2(cur, bound_degree);
    const Vertex v = w.support[0];
    const Vertex x = w.support[1];
    std::vector<bool> keep(static_cast<std::size_t>(cur.vertex_count()), true);
    keep[static_cast<std::size_t>(w.vertex)] = false;
    auto sub = induced_subgraph(cur, keep);
    MultiGraph next = std::move(sub.graph);
    const Vertex nv = sub.old_to_new[static_cast<std::size_t>(v)];
    const Vertex nx = sub.old_to_new[static_cast<std::size_t>(x)];
    if (!next.adjacent(nv, nx)) {
      auto edges = next.edges();
      auto names = next.edge_names();
      edges.push_back({nv, nx});
      std::string name = "join:" + next.vertex_name(nv) + "-" + next.vertex_name(nx);
      while (next.find_edge(name)) name += "'";
      names.push_back(name);
      next = MultiGraph(next.vertex_names(), std::move(edges), std::move(names));
    }
    if (next.max_degree() > bound_degree)
      throw Error(ErrorKind::DegreeBoundBreached, "joining step raised the maximum degree");
    auto next_lists = detail::restrict_lists(cur_lists, sub.old_to_new, next.vertex_count());
    stack.push_back({std::move(cur), std::move(cur_lists), w.vertex, std::move(sub.old_to_new)});
    cur = std::move(next);
    cur_lists = std::move(next_lists);
  }
  // at most three vertices left: colour them one by one with the shared rule
  PartialColouring base(static_cast<std::size_t>(cur.vertex_count()));
  for (Vertex x = 0; x < cur.vertex_count(); ++x)
    base[static_cast<std::size_t>(x)] = extend_colour_at_vertex(cur, base, x, k, cur_lists[static_cast<std::size_t>(x)]);
  return detail::unwind(stack, std::move(base), k);
}

}  // namespace frugal
