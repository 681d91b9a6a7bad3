#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frugal/graph.hpp"

namespace frugal {

enum class ViolationKind { Adjacency, Frugality, Separation, FaceRainbow, ListMembership };

constexpr std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Adjacency: return "adjacency";
    case ViolationKind::Frugality: return "frugality";
    case ViolationKind::Separation: return "separation";
    case ViolationKind::FaceRainbow: return "face-rainbow";
    case ViolationKind::ListMembership: return "list-membership";
  }
  return "unknown";
}

/// A concrete counterexample. For frugality the first witness is the centre
/// vertex and the rest are the offending neighbours (vertex case) or incident
/// edge-ids (edge case); for adjacency/separation the two vertices; for
/// face-rainbow the constraint-set index followed by the two clashing vertices;
/// for list membership the item.
struct Violation {
  ViolationKind kind = ViolationKind::Adjacency;
  std::vector<int> witness;
  std::vector<Colour> colours;
};

/// nullopt means the object is valid.
using Verdict = std::optional<Violation>;

namespace detail {
inline void require_total(std::size_t got, int want, const char* what) {
  if (static_cast<int>(got) != want)
    throw Error(ErrorKind::Precondition, std::string(what) + " is not total on the graph");
}
}  // namespace detail

/// Proper on the simplification of g and no colour more than k times among
/// the distinct neighbours of any vertex.
inline Verdict validate_frugal_vertex(const MultiGraph& g, int k, std::span<const Colour> c) {
  detail::require_total(c.size(), g.vertex_count(), "vertex colouring");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (c[static_cast<std::size_t>(ed.u)] == c[static_cast<std::size_t>(ed.v)])
      return Violation{ViolationKind::Adjacency, {ed.u, ed.v}, {c[static_cast<std::size_t>(ed.u)]}};
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::map<Colour, std::vector<Vertex>> seen;
    for (Vertex w : g.neighbours(v)) {
      auto& bucket = seen[c[static_cast<std::size_t>(w)]];
      bucket.push_back(w);
      if (static_cast<int>(bucket.size()) > k) {
        std::vector<int> witness{v};
        witness.insert(witness.end(), bucket.begin(), bucket.end());
        return Violation{ViolationKind::Frugality, witness, {c[static_cast<std::size_t>(w)]}};
      }
    }
  }
  return std::nullopt;
}

/// No colour on more than k edge incidences at any vertex. Properness is not required.
inline Verdict validate_frugal_edge(const MultiGraph& g, int k, std::span<const Colour> ec) {
  detail::require_total(ec.size(), g.edge_count(), "edge colouring");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::map<Colour, std::vector<EdgeId>> seen;
    for (EdgeId e : g.incident(v)) {
      auto& bucket = seen[ec[static_cast<std::size_t>(e)]];
      bucket.push_back(e);
      if (static_cast<int>(bucket.size()) > k) {
        std::vector<int> witness{v};
        witness.insert(witness.end(), bucket.begin(), bucket.end());
        return Violation{ViolationKind::Frugality, witness, {ec[static_cast<std::size_t>(e)]}};
      }
    }
  }
  return std::nullopt;
}

/// |f(u)-f(v)| >= p at distance one and >= q at distance two.
inline Verdict validate_Lpq(const MultiGraph& g, int p, int q, std::span<const int> f) {
  detail::require_total(f.size(), g.vertex_count(), "labelling");
  auto at = [&](Vertex v) { return f[static_cast<std::size_t>(v)]; };
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbours(u))
      if (u < v && std::abs(at(u) - at(v)) < p)
        return Violation{ViolationKind::Separation, {u, v}, {at(u), at(v)}};
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex w : second_neighbours(g, u))
      if (u < w && std::abs(at(u) - at(w)) < q)
        return Violation{ViolationKind::Separation, {u, w}, {at(u), at(w)}};
  return std::nullopt;
}

/// Largest label; with labels drawn from 1..t this is the t of the labelling.
inline int label_span(std::span<const int> f) {
  int m = 0;
  for (int x : f) m = std::max(m, x);
  return m;
}

/// Proper on g and every constraint set rainbow.
inline Verdict validate_face_rainbow(const MultiGraph& g, const std::vector<std::vector<Vertex>>& sets,
                                     std::span<const Colour> c) {
  detail::require_total(c.size(), g.vertex_count(), "vertex colouring");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (c[static_cast<std::size_t>(ed.u)] == c[static_cast<std::size_t>(ed.v)])
      return Violation{ViolationKind::Adjacency, {ed.u, ed.v}, {c[static_cast<std::size_t>(ed.u)]}};
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::map<Colour, Vertex> seen;
    for (Vertex v : sets[i]) {
      if (v < 0 || v >= g.vertex_count()) throw Error(ErrorKind::Precondition, "constraint set outside vertex set");
      auto [it, fresh] = seen.emplace(c[static_cast<std::size_t>(v)], v);
      if (!fresh && it->second != v)
        return Violation{ViolationKind::FaceRainbow, {static_cast<int>(i), it->second, v},
                         {c[static_cast<std::size_t>(v)]}};
    }
  }
  return std::nullopt;
}

/// Every item's colour lies in its list.
inline Verdict validate_lists(std::span<const Colour> assignment, const ListAssignment& lists) {
  if (lists.size() < assignment.size()) throw Error(ErrorKind::Precondition, "lists do not cover the colouring");
  for (std::size_t i = 0; i < assignment.size(); ++i)
    if (!lists.contains(i, assignment[i]))
      return Violation{ViolationKind::ListMembership, {static_cast<int>(i)}, {assignment[i]}};
  return std::nullopt;
}

/// Proper vertex colouring of g's simplification.
inline Verdict validate_proper_vertex(const MultiGraph& g, std::span<const Colour> c) {
  return validate_frugal_vertex(g, std::max(1, g.max_degree()), c);
}

}  // namespace frugal
