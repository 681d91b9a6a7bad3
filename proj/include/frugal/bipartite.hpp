#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "frugal/graph.hpp"

namespace frugal {

/// Direction of every edge: tail[e] -> head[e].
struct Orientation {
  std::vector<Vertex> tail;
  std::vector<Vertex> head;
};

/// Bipartite multigraph on two copies of V(G): vertex v on the left is v, on the
/// right n + v. Edge i of the lift corresponds to edge i of G.
struct BipartiteLift {
  MultiGraph graph;
  int left_count = 0;
};

/// Orientation along closed trails (Hierholzer). Every vertex ends with
/// in-degree equal to out-degree. A non-zero seed shuffles the traversal order.
inline Orientation euler_orientation(const MultiGraph& g, std::uint64_t seed = 0) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) throw Error(ErrorKind::OddDegree, "vertex " + g.vertex_name(v) + " has odd degree");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<EdgeId>> inc(n);
  for (Vertex v = 0; v < g.vertex_count(); ++v) inc[static_cast<std::size_t>(v)].assign(g.incident(v).begin(), g.incident(v).end());
  std::vector<Vertex> starts(n);
  std::iota(starts.begin(), starts.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (auto& l : inc) std::shuffle(l.begin(), l.end(), rng);
    std::shuffle(starts.begin(), starts.end(), rng);
  }
  Orientation o;
  o.tail.assign(static_cast<std::size_t>(g.edge_count()), -1);
  o.head.assign(static_cast<std::size_t>(g.edge_count()), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<std::size_t> next(n, 0);
  for (Vertex s : starts) {
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      auto& i = next[static_cast<std::size_t>(x)];
      const auto& l = inc[static_cast<std::size_t>(x)];
      while (i < l.size() && used[static_cast<std::size_t>(l[i])]) ++i;
      if (i == l.size()) {
        stack.pop_back();
        continue;
      }
      EdgeId e = l[i];
      used[static_cast<std::size_t>(e)] = true;
      Vertex y = g.other(e, x);
      o.tail[static_cast<std::size_t>(e)] = x;
      o.head[static_cast<std::size_t>(e)] = y;
      stack.push_back(y);
    }
  }
  return o;
}

inline BipartiteLift bipartite_lift(const MultiGraph& g, const Orientation& o) {
  const int n = g.vertex_count();
  std::vector<std::string> names;
  for (Vertex v = 0; v < n; ++v) names.push_back(g.vertex_name(v) + ":out");
  for (Vertex v = 0; v < n; ++v) names.push_back(g.vertex_name(v) + ":in");
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    edges.push_back({o.tail[static_cast<std::size_t>(e)], n + o.head[static_cast<std::size_t>(e)]});
  return {MultiGraph(std::move(names), std::move(edges), g.edge_names()), n};
}

/// Euler orientation followed by the lift.
inline std::pair<Orientation, BipartiteLift> bipartite_lift(const MultiGraph& g) {
  Orientation o = euler_orientation(g);
  BipartiteLift h = bipartite_lift(g, o);
  return {std::move(o), std::move(h)};
}

namespace detail {

inline void require_bipartite(const MultiGraph& h, int left_count) {
  for (const auto& e : h.edges())
    if ((e.u < left_count) == (e.v < left_count))
      throw Error(ErrorKind::NotBipartite, "edge inside one side of the bipartition");
}

/// Kuhn's augmenting paths restricted to the edges flagged alive. Returns the
/// matched edge of every left vertex, or -1.
inline std::vector<EdgeId> maximum_matching(const MultiGraph& h, int left_count, const std::vector<bool>& alive) {
  const auto n = static_cast<std::size_t>(h.vertex_count());
  std::vector<EdgeId> match_of(n, -1);  // for both sides
  std::vector<int> seen(n, -1);
  int stamp = 0;
  // iterative DFS over (left vertex, position in incidence)
  auto augment = [&](Vertex root) {
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    std::vector<EdgeId> via;  // edge used to leave each stacked left vertex
    seen[static_cast<std::size_t>(root)] = stamp;
    while (!stack.empty()) {
      auto& [x, pos] = stack.back();
      auto inc = h.incident(x);
      bool descended = false;
      while (pos < inc.size()) {
        EdgeId e = inc[pos++];
        if (!alive[static_cast<std::size_t>(e)]) continue;
        Vertex y = h.other(e, x);
        if (seen[static_cast<std::size_t>(y)] == stamp) continue;
        seen[static_cast<std::size_t>(y)] = stamp;
        EdgeId back = match_of[static_cast<std::size_t>(y)];
        via.push_back(e);
        if (back < 0) {
          // flip along the path
          for (std::size_t i = 0; i < via.size(); ++i) {
            EdgeId f = via[i];
            match_of[static_cast<std::size_t>(h.edge(f).u)] = f;
            match_of[static_cast<std::size_t>(h.edge(f).v)] = f;
          }
          return true;
        }
        Vertex z = h.other(back, y);
        seen[static_cast<std::size_t>(z)] = stamp;
        stack.emplace_back(z, 0);
        descended = true;
        break;
      }
      if (!descended) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
      }
    }
    return false;
  };
  for (Vertex x = 0; x < left_count; ++x) {
    if (h.degree(x) == 0) continue;
    ++stamp;
    augment(x);
  }
  std::vector<EdgeId> out(static_cast<std::size_t>(left_count), -1);
  for (Vertex x = 0; x < left_count; ++x) out[static_cast<std::size_t>(x)] = match_of[static_cast<std::size_t>(x)];
  return out;
}

}  // namespace detail

/// Splits an r-regular bipartite multigraph (left side 0..left_count-1) into r
/// perfect matchings, each a list of edge ids.
inline std::vector<std::vector<EdgeId>> perfect_matching_decomposition(const MultiGraph& h, int left_count) {
  detail::require_bipartite(h, left_count);
  const int r = h.vertex_count() > 0 ? h.degree(0) : 0;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) != r) throw Error(ErrorKind::NotRegular, "lift is not regular");
  std::vector<bool> alive(static_cast<std::size_t>(h.edge_count()), true);
  std::vector<std::vector<EdgeId>> out;
  for (int round = 0; round < r; ++round) {
    auto m = detail::maximum_matching(h, left_count, alive);
    std::vector<EdgeId> matching;
    for (EdgeId e : m) {
      if (e < 0) throw Error(ErrorKind::Internal, "regular bipartite graph without a perfect matching");
      matching.push_back(e);
      alive[static_cast<std::size_t>(e)] = false;
    }
    out.push_back(std::move(matching));
  }
  return out;
}

/// Proper edge colouring of a bipartite multigraph with colours 1..Δ by
/// alternating-path recolouring.
inline EdgeColouring konig_edge_colouring(const MultiGraph& h, int left_count) {
  detail::require_bipartite(h, left_count);
  const int delta = h.max_degree();
  const auto n = static_cast<std::size_t>(h.vertex_count());
  const auto slots = static_cast<std::size_t>(delta + 1);
  std::vector<EdgeId> at(n * slots, -1);
  auto slot = [&](Vertex v, Colour c) -> EdgeId& { return at[static_cast<std::size_t>(v) * slots + static_cast<std::size_t>(c)]; };
  auto free_colour = [&](Vertex v) {
    for (Colour c = 1; c <= delta; ++c)
      if (slot(v, c) < 0) return c;
    throw Error(ErrorKind::Internal, "no free colour");
  };
  EdgeColouring col(static_cast<std::size_t>(h.edge_count()), 0);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Vertex u = h.edge(e).u;
    const Vertex v = h.edge(e).v;
    const Colour a = free_colour(u);
    const Colour b = free_colour(v);
    if (slot(v, a) >= 0) {
      // walk the a/b path from v and swap it; bipartiteness keeps u off the path
      std::vector<EdgeId> path;
      Vertex x = v;
      Colour want = a;
      while (slot(x, want) >= 0) {
        EdgeId f = slot(x, want);
        path.push_back(f);
        x = h.other(f, x);
        want = want == a ? b : a;
      }
      for (EdgeId f : path) {
        slot(h.edge(f).u, col[static_cast<std::size_t>(f)]) = -1;
        slot(h.edge(f).v, col[static_cast<std::size_t>(f)]) = -1;
      }
      for (EdgeId f : path) {
        col[static_cast<std::size_t>(f)] = col[static_cast<std::size_t>(f)] == a ? b : a;
        slot(h.edge(f).u, col[static_cast<std::size_t>(f)]) = f;
        slot(h.edge(f).v, col[static_cast<std::size_t>(f)]) = f;
      }
    }
    col[static_cast<std::size_t>(e)] = a;
    slot(u, a) = e;
    slot(v, a) = e;
  }
  return col;
}

/// Proper edge colouring with every colour from the edge's list, for lists of
/// size at least Δ(h). Colours are processed in ascending order; for each one a
/// kernel of the remaining candidates is found by deferred acceptance.
inline EdgeColouring galvin_list_edge_colour(const MultiGraph& h, int left_count, const ListAssignment& lists) {
  detail::require_bipartite(h, left_count);
  if (static_cast<int>(lists.size()) != h.edge_count())
    throw Error(ErrorKind::Precondition, "list assignment does not match the edge set");
  const int delta = h.max_degree();
  for (std::size_t e = 0; e < lists.size(); ++e)
    if (static_cast<int>(lists[e].size()) < delta)
      throw Error(ErrorKind::ListTooSmall, "edge " + h.edge_name(static_cast<EdgeId>(e)) + " has a list of size " +
                                               std::to_string(lists[e].size()) + " below " + std::to_string(delta));
  const EdgeColouring seed = konig_edge_colouring(h, left_count);
  auto left_of = [&](EdgeId e) { return h.edge(e).u < left_count ? h.edge(e).u : h.edge(e).v; };
  auto right_of = [&](EdgeId e) { return h.edge(e).u < left_count ? h.edge(e).v : h.edge(e).u; };

  std::vector<std::vector<Colour>> remaining = lists.lists;
  EdgeColouring out(static_cast<std::size_t>(h.edge_count()), 0);
  std::vector<bool> done(static_cast<std::size_t>(h.edge_count()), false);
  std::set<Colour> palette;
  for (const auto& l : lists.lists) palette.insert(l.begin(), l.end());

  // left vertices rank their edges by decreasing seed colour
  std::vector<std::vector<EdgeId>> left_pref(static_cast<std::size_t>(h.vertex_count()));
  for (EdgeId e = 0; e < h.edge_count(); ++e) left_pref[static_cast<std::size_t>(left_of(e))].push_back(e);
  for (auto& l : left_pref)
    std::sort(l.begin(), l.end(), [&](EdgeId a, EdgeId b) { return seed[static_cast<std::size_t>(a)] > seed[static_cast<std::size_t>(b)]; });

  std::size_t left_to_colour = static_cast<std::size_t>(h.edge_count());
  for (Colour gamma : palette) {
    if (left_to_colour == 0) break;
    std::vector<bool> candidate(static_cast<std::size_t>(h.edge_count()), false);
    bool any = false;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      if (!done[static_cast<std::size_t>(e)] &&
          std::binary_search(remaining[static_cast<std::size_t>(e)].begin(), remaining[static_cast<std::size_t>(e)].end(), gamma)) {
        candidate[static_cast<std::size_t>(e)] = any = true;
      }
    if (!any) continue;
    // deferred acceptance: right vertices keep the proposal with the smallest seed colour
    std::vector<std::size_t> next(static_cast<std::size_t>(h.vertex_count()), 0);
    std::vector<EdgeId> held(static_cast<std::size_t>(h.vertex_count()), -1);
    std::vector<Vertex> free_left;
    for (Vertex x = 0; x < left_count; ++x) free_left.push_back(x);
    while (!free_left.empty()) {
      Vertex x = free_left.back();
      free_left.pop_back();
      auto& pref = left_pref[static_cast<std::size_t>(x)];
      auto& i = next[static_cast<std::size_t>(x)];
      while (i < pref.size() && !candidate[static_cast<std::size_t>(pref[i])]) ++i;
      if (i == pref.size()) continue;
      EdgeId e = pref[i++];
      Vertex y = right_of(e);
      EdgeId& cur = held[static_cast<std::size_t>(y)];
      if (cur < 0) {
        cur = e;
      } else if (seed[static_cast<std::size_t>(e)] < seed[static_cast<std::size_t>(cur)]) {
        free_left.push_back(left_of(cur));
        cur = e;
      } else {
        free_left.push_back(x);
      }
    }
    std::vector<bool> in_kernel(static_cast<std::size_t>(h.edge_count()), false);
    for (Vertex y = left_count; y < h.vertex_count(); ++y)
      if (held[static_cast<std::size_t>(y)] >= 0) in_kernel[static_cast<std::size_t>(held[static_cast<std::size_t>(y)])] = true;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (!candidate[static_cast<std::size_t>(e)]) continue;
      if (in_kernel[static_cast<std::size_t>(e)]) {
        out[static_cast<std::size_t>(e)] = gamma;
        done[static_cast<std::size_t>(e)] = true;
        --left_to_colour;
      } else {
        auto& l = remaining[static_cast<std::size_t>(e)];
        l.erase(std::lower_bound(l.begin(), l.end(), gamma));
      }
    }
  }
  if (left_to_colour != 0) throw Error(ErrorKind::Internal, "kernel colouring left edges uncoloured");
  return out;
}

/// Each edge in id order takes the smallest list colour unused on adjacent
/// coloured edges; nullopt when some edge is stuck.
inline std::optional<EdgeColouring> greedy_list_edge_colour(const MultiGraph& h, const ListAssignment& lists) {
  EdgeColouring out(static_cast<std::size_t>(h.edge_count()), 0);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    std::set<Colour> taken;
    for (Vertex x : {h.edge(e).u, h.edge(e).v})
      for (EdgeId f : h.incident(x))
        if (f < e) taken.insert(out[static_cast<std::size_t>(f)]);
    std::optional<Colour> pick;
    for (Colour c : lists[static_cast<std::size_t>(e)])
      if (!taken.count(c)) {
        pick = c;
        break;
      }
    if (!pick) return std::nullopt;
    out[static_cast<std::size_t>(e)] = *pick;
  }
  return out;
}

}  // namespace frugal
