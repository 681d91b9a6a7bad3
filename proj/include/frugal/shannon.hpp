#pragma once

#include <vector>

#include "frugal/graph.hpp"

namespace frugal {

/// Proper edge colouring of a multigraph with colours 1..palette, valid for any
/// palette >= floor(3Δ/2). Edges are inserted one at a time; a blocked edge is
/// freed by recolouring one neighbouring edge or swapping one two-coloured path.
inline EdgeColouring shannon_edge_colouring(const MultiGraph& g, int palette) {
  const int delta = g.max_degree();
  if (palette < (3 * delta) / 2)
    throw Error(ErrorKind::Precondition, "palette " + std::to_string(palette) + " below floor(3Δ/2)");
  const auto slots = static_cast<std::size_t>(palette + 1);
  std::vector<EdgeId> at(static_cast<std::size_t>(g.vertex_count()) * slots, -1);
  EdgeColouring col(static_cast<std::size_t>(g.edge_count()), 0);
  auto slot = [&](Vertex v, Colour c) -> EdgeId& {
    return at[static_cast<std::size_t>(v) * slots + static_cast<std::size_t>(c)];
  };
  auto missing = [&](Vertex v, Colour c) { return slot(v, c) < 0; };
  auto paint = [&](EdgeId e, Colour c) {
    col[static_cast<std::size_t>(e)] = c;
    slot(g.edge(e).u, c) = e;
    slot(g.edge(e).v, c) = e;
  };
  auto erase = [&](EdgeId e) {
    Colour c = col[static_cast<std::size_t>(e)];
    slot(g.edge(e).u, c) = -1;
    slot(g.edge(e).v, c) = -1;
    col[static_cast<std::size_t>(e)] = 0;
  };
  auto common_missing = [&](Vertex a, Vertex b) -> Colour {
    for (Colour c = 1; c <= palette; ++c)
      if (missing(a, c) && missing(b, c)) return c;
    return 0;
  };
  auto any_missing = [&](Vertex a) -> Colour {
    for (Colour c = 1; c <= palette; ++c)
      if (missing(a, c)) return c;
    return 0;
  };
  // two-coloured path from x, which misses exactly one of a, b
  auto chain = [&](Vertex x, Colour a, Colour b) {
    std::vector<EdgeId> path;
    Colour want = missing(x, a) ? b : a;
    Vertex y = x;
    while (!missing(y, want)) {
      EdgeId f = slot(y, want);
      path.push_back(f);
      y = g.other(f, y);
      want = want == a ? b : a;
    }
    return std::pair{path, y};
  };
  auto swap_path = [&](const std::vector<EdgeId>& path, Colour a, Colour b) {
    std::vector<Colour> old;
    for (EdgeId f : path) {
      old.push_back(col[static_cast<std::size_t>(f)]);
      erase(f);
    }
    for (std::size_t i = 0; i < path.size(); ++i) paint(path[i], old[i] == a ? b : a);
  };

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Vertex u = g.edge(e).u;
    const Vertex v = g.edge(e).v;
    if (Colour c = common_missing(u, v)) {
      paint(e, c);
      continue;
    }
    const Colour alpha = any_missing(u);
    const EdgeId vw = slot(v, alpha);
    const Vertex w = g.other(vw, v);
    if (Colour gamma = common_missing(v, w)) {
      erase(vw);
      paint(vw, gamma);
      paint(e, alpha);
      continue;
    }
    const Colour gamma = common_missing(u, w);
    const Colour beta = any_missing(v);
    if (gamma == 0 || beta == 0) throw Error(ErrorKind::Internal, "edge colouring palette exhausted");
    auto [from_v, end_v] = chain(v, beta, gamma);
    if (end_v != u && end_v != w) {
      swap_path(from_v, beta, gamma);
      paint(e, gamma);
    } else if (end_v == u) {
      auto [from_w, end_w] = chain(w, beta, gamma);
      swap_path(from_w, beta, gamma);
      erase(vw);
      paint(vw, beta);
      paint(e, alpha);
    } else {
      auto [from_u, end_u] = chain(u, beta, gamma);
      swap_path(from_u, beta, gamma);
      paint(e, beta);
    }
  }
  return col;
}

}  // namespace frugal
