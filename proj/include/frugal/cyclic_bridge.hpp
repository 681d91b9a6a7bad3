#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "frugal/exact.hpp"
#include "frugal/graph.hpp"
#include "frugal/planar.hpp"
#include "frugal/validators.hpp"

namespace frugal {

/// Constraints on one colour class C of a frugal colouring. Local vertex i is
/// members[i] in the host graph.
struct ClassConstraintGraph {
  Colour class_colour = 0;
  std::vector<Vertex> members;
  MultiGraph graph;
  // local ids, each in the cyclic order around the outside vertex that owns it
  std::vector<std::vector<Vertex>> special_sets;
  std::vector<Vertex> special_owner;
};

/// Builds the class constraint graph. An outside vertex with two neighbours in
/// the class joins them; one with three or more makes them a special set,
/// ordered by the rotation, and joins cyclically consecutive members.
inline ClassConstraintGraph build_class_constraint_graph(const MultiGraph& g, const RotationSystem& rot,
                                                         std::span<const Colour> c, Colour class_colour, int k) {
  if (auto bad = validate_frugal_vertex(g, k, c))
    throw Error(ErrorKind::InvalidColouring, "colouring is not " + std::to_string(k) + "-frugal");
  validate_rotation(g, rot);

  ClassConstraintGraph out;
  out.class_colour = class_colour;
  std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (c[static_cast<std::size_t>(v)] == class_colour) {
      local[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.members.size());
      out.members.push_back(v);
    }

  std::set<std::pair<Vertex, Vertex>> pairs;
  auto join = [&](Vertex a, Vertex b) {
    if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
  };
  for (const Edge& e : g.edges())
    if (local[static_cast<std::size_t>(e.u)] >= 0 && local[static_cast<std::size_t>(e.v)] >= 0)
      join(local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]);

  std::set<std::vector<Vertex>> seen_sets;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (local[static_cast<std::size_t>(v)] >= 0) continue;
    std::vector<Vertex> ring;
    for (EdgeId e : rot.order[static_cast<std::size_t>(v)]) {
      const Vertex x = local[static_cast<std::size_t>(g.other(e, v))];
      if (x >= 0 && std::find(ring.begin(), ring.end(), x) == ring.end()) ring.push_back(x);
    }
    if (ring.size() == 2) join(ring[0], ring[1]);
    if (ring.size() < 3) continue;
    for (std::size_t i = 0; i < ring.size(); ++i) join(ring[i], ring[(i + 1) % ring.size()]);
    std::vector<Vertex> key = ring;
    std::sort(key.begin(), key.end());
    if (!seen_sets.insert(key).second) continue;
    out.special_sets.push_back(std::move(ring));
    out.special_owner.push_back(v);
  }

  std::vector<std::string> names;
  for (Vertex v : out.members) names.push_back(g.vertex_name(v));
  std::vector<Edge> edges;
  std::vector<std::string> edge_names;
  for (auto [a, b] : pairs) {
    edges.push_back({a, b});
    edge_names.push_back(names[static_cast<std::size_t>(a)] + "-" + names[static_cast<std::size_t>(b)]);
  }
  out.graph = MultiGraph(std::move(names), std::move(edges), std::move(edge_names));
  return out;
}

struct ClassReport {
  Colour class_colour = 0;
  int size = 0;
  int colours_used = 0;
  int largest_special_set = 0;
  bool over_class_budget = false;  // needed more than ceil(3k/2)
};

struct SquareColouringReport {
  VertexColouring colouring;
  int total_colours = 0;
  int frugal_colours = 0;
  long class_budget = 0;      // ceil(3k/2) per class
  long combined_bound = 0;    // class_budget times the frugal colour count
  long max_degree_bound = 0;  // floor(3Δ/2) + 17
  std::vector<ClassReport> classes;
  std::uint64_t nodes = 0;
};

/// Proper colouring of the square of a plane graph from a k-frugal colouring:
/// each class is coloured on its constraint graph with every special set
/// rainbow, and the classes get disjoint palettes.
inline SquareColouringReport colour_square_via_classes(const MultiGraph& g, const RotationSystem& rot, int k,
                                                       std::span<const Colour> frugal,
                                                       std::uint64_t node_budget = kDefaultNodeBudget) {
  if (k < 4 || k % 2 != 0) throw Error(ErrorKind::Precondition, "k must be even and at least 4");
  if (auto bad = validate_frugal_vertex(g, k, frugal))
    throw Error(ErrorKind::InvalidColouring, "colouring is not " + std::to_string(k) + "-frugal");

  std::vector<Colour> palette(frugal.begin(), frugal.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

  SquareColouringReport report;
  report.colouring.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  report.frugal_colours = static_cast<int>(palette.size());
  report.class_budget = ceil_div(3L * k, 2);
  report.combined_bound = report.class_budget * report.frugal_colours;
  report.max_degree_bound = (3L * g.max_degree()) / 2 + 17;

  Colour offset = 0;
  for (Colour cls : palette) {
    ClassConstraintGraph ccg = build_class_constraint_graph(g, rot, frugal, cls, k);
    ClassReport cr;
    cr.class_colour = cls;
    cr.size = static_cast<int>(ccg.members.size());
    for (const auto& s : ccg.special_sets) cr.largest_special_set = std::max(cr.largest_special_set, static_cast<int>(s.size()));

    int cap = static_cast<int>(report.class_budget);
    ExactResult r;
    for (;;) {
      r = exact_rainbow_face_chromatic(ccg.graph, ccg.special_sets, std::min(cap, cr.size), node_budget);
      report.nodes += r.nodes;
      if (r.status == SearchStatus::BudgetExhausted)
        throw Error(ErrorKind::ClassColouringBudgetExhausted,
                    "search budget exhausted on class " + std::to_string(cls));
      if (r.status == SearchStatus::Optimal) break;
      ++cap;
    }
    cr.colours_used = r.optimum;
    cr.over_class_budget = r.optimum > report.class_budget;
    for (std::size_t i = 0; i < ccg.members.size(); ++i)
      report.colouring[static_cast<std::size_t>(ccg.members[i])] = offset + r.witness[i];
    offset += r.optimum;
    report.classes.push_back(cr);
  }
  report.total_colours = colour_count(report.colouring);
  return report;
}

}  // namespace frugal
