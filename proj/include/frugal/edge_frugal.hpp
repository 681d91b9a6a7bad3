#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "frugal/bipartite.hpp"
#include "frugal/factor.hpp"
#include "frugal/graph.hpp"
#include "frugal/planar.hpp"
#include "frugal/shannon.hpp"

namespace frugal {

/// A target-regular supergraph. Original edges keep their ids 0..m-1; the
/// mirror copy of v is n + v.
struct Regularized {
  MultiGraph graph;
  int original_vertices = 0;
  int original_edges = 0;
};

/// Disjoint mirror copy plus (target - deg v) parallel edges between v and its mirror.
inline Regularized regularize_to_degree(const MultiGraph& g, int target) {
  if (target < g.max_degree()) throw Error(ErrorKind::Precondition, "target below maximum degree");
  const int n = g.vertex_count();
  std::vector<std::string> names = g.vertex_names();
  for (Vertex v = 0; v < n; ++v) names.push_back(g.vertex_name(v) + "'");
  std::vector<Edge> edges = g.edges();
  std::vector<std::string> edge_names = g.edge_names();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    edges.push_back({n + g.edge(e).u, n + g.edge(e).v});
    edge_names.push_back(g.edge_name(e) + "'");
  }
  for (Vertex v = 0; v < n; ++v)
    for (int i = g.degree(v); i < target; ++i) {
      edges.push_back({v, n + v});
      edge_names.push_back("pad:" + g.vertex_name(v) + ":" + std::to_string(i));
    }
  return {MultiGraph(std::move(names), std::move(edges), std::move(edge_names)), n, g.edge_count()};
}

/// Splits a 2r-regular multigraph into r spanning 2-regular subgraphs.
inline std::vector<std::vector<EdgeId>> two_factor_decomposition(const MultiGraph& g) {
  const int d = g.vertex_count() > 0 ? g.degree(0) : 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != d || d % 2 != 0) throw Error(ErrorKind::NotEvenRegular, "graph is not even-regular");
  if (d == 0) return {};
  auto [orientation, lift] = bipartite_lift(g);
  return perfect_matching_decomposition(lift.graph, lift.left_count);
}

namespace detail {

/// Proper colouring of a 2-regular edge set: alternate two colours around each
/// cycle and give the closing edge of an odd cycle the third.
inline void colour_two_factor(const MultiGraph& g, const std::vector<EdgeId>& factor, const Colour slice[3],
                              EdgeColouring& out) {
  std::vector<std::vector<EdgeId>> at(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeId e : factor) {
    at[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
    at[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.edge_count()), false);
  for (EdgeId start : factor) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<EdgeId> cycle;
    EdgeId e = start;
    Vertex x = g.edge(start).u;
    while (!seen[static_cast<std::size_t>(e)]) {
      seen[static_cast<std::size_t>(e)] = true;
      cycle.push_back(e);
      x = g.other(e, x);
      const auto& pair = at[static_cast<std::size_t>(x)];
      e = pair[0] == e ? pair[1] : pair[0];
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) out[static_cast<std::size_t>(cycle[i])] = slice[i % 2];
    if (cycle.size() % 2 == 1) out[static_cast<std::size_t>(cycle.back())] = slice[2];
  }
}

}  // namespace detail

/// k-frugal edge colouring for even k with exactly ceil(Δ/k) colours, or a
/// list colouring when lists of at least that size are given.
inline EdgeColouring colour_edges_even_k(const MultiGraph& g, int k, const std::optional<ListAssignment>& lists = std::nullopt) {
  if (k < 2 || k % 2 != 0) throw Error(ErrorKind::OddK, "k must be even and positive");
  if (lists && static_cast<int>(lists->size()) != g.edge_count())
    throw Error(ErrorKind::Precondition, "list assignment does not match the edge set");
  const int delta = g.max_degree();
  if (delta == 0) return EdgeColouring(static_cast<std::size_t>(g.edge_count()), 0);
  const int per_group = static_cast<int>(ceil_div(delta, k));
  if (lists && static_cast<int>(lists->min_size()) < per_group)
    throw Error(ErrorKind::ListTooSmall, "edge lists below " + std::to_string(per_group));

  Regularized reg = regularize_to_degree(g, k * per_group);
  auto [orientation, lift] = bipartite_lift(reg.graph);
  auto matchings = perfect_matching_decomposition(lift.graph, lift.left_count);

  EdgeColouring out(static_cast<std::size_t>(g.edge_count()), 0);
  for (int grp = 0; grp < k / 2; ++grp) {
    std::vector<EdgeId> members;  // lift edge ids of this group
    std::vector<Colour> plain;
    for (int j = 0; j < per_group; ++j)
      for (EdgeId e : matchings[static_cast<std::size_t>(grp * per_group + j)]) {
        members.push_back(e);
        plain.push_back(j + 1);
      }
    if (!lists) {
      for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i] < reg.original_edges) out[static_cast<std::size_t>(members[i])] = plain[i];
      continue;
    }
    MultiGraph part = edge_subgraph(lift.graph, members);
    std::vector<std::vector<Colour>> part_lists;
    for (EdgeId e : members) {
      if (e < reg.original_edges) {
        part_lists.push_back((*lists)[static_cast<std::size_t>(e)]);
      } else {
        std::vector<Colour> throwaway;
        for (int c = 1; c <= per_group; ++c) throwaway.push_back(-c);
        part_lists.push_back(std::move(throwaway));
      }
    }
    EdgeColouring part_col = galvin_list_edge_colour(part, lift.left_count, ListAssignment(std::move(part_lists)));
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i] < reg.original_edges) out[static_cast<std::size_t>(members[i])] = part_col[i];
  }
  return out;
}

namespace detail {

inline std::vector<EdgeId> ids_where(const std::vector<bool>& flags, bool value) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i] == value) out.push_back(static_cast<EdgeId>(i));
  return out;
}

/// Colours the edges `part` of g with a (k-1)-frugal colouring from the even
/// pipeline and writes them into out.
inline void colour_part_even(const MultiGraph& g, const std::vector<EdgeId>& part, int k, EdgeColouring& out) {
  if (part.empty()) return;
  MultiGraph sub = edge_subgraph(g, part);
  EdgeColouring c = colour_edges_even_k(sub, k);
  for (std::size_t i = 0; i < part.size(); ++i) out[static_cast<std::size_t>(part[i])] = c[i];
}

}  // namespace detail

/// Colour budget for odd k.
inline int odd_k_palette(int max_degree, int k) { return static_cast<int>(ceil_div(3L * max_degree, 3L * k - 1)); }

/// k-frugal edge colouring for odd k with at most ceil(3Δ/(3k-1)) colours.
///
/// With T that many colours, an edge set of maximum degree (k-1)T is coloured
/// (k-1)-frugally by the even pipeline and the rest properly, both from 1..T.
/// The rest is usually a union of 2-factors of a regularization, three colours
/// per factor. When the maximum degree is odd and exactly fills the budget the
/// proper part is a degree-bounded factor coloured by insertion, or else one
/// colour class is peeled off as a factor and the rest recurses.
inline EdgeColouring colour_edges_odd_k(const MultiGraph& g, int k) {
  if (k < 1 || k % 2 == 0) throw Error(ErrorKind::EvenK, "k must be odd and positive");
  const int delta = g.max_degree();
  EdgeColouring out(static_cast<std::size_t>(g.edge_count()), 0);
  if (delta == 0) return out;
  const int budget = odd_k_palette(delta, k);
  if (k == 1) return shannon_edge_colouring(g, budget);

  const int first_cap = (k - 1) * budget;
  const int factor_cap = 2 * (budget / 3);
  const int target = delta + delta % 2;

  if (target <= first_cap + factor_cap) {
    Regularized reg = regularize_to_degree(g, target);
    auto factors = two_factor_decomposition(reg.graph);
    const auto first_factors = static_cast<std::size_t>(std::min(first_cap, target) / 2);
    std::vector<EdgeId> first;
    for (std::size_t j = 0; j < first_factors; ++j)
      for (EdgeId e : factors[j])
        if (e < reg.original_edges) first.push_back(e);
    std::sort(first.begin(), first.end());
    detail::colour_part_even(g, first, k - 1, out);
    EdgeColouring rest(static_cast<std::size_t>(reg.graph.edge_count()), 0);
    for (std::size_t j = first_factors; j < factors.size(); ++j) {
      const Colour base = static_cast<Colour>(3 * (j - first_factors));
      const Colour slice[3] = {base + 1, base + 2, base + 3};
      detail::colour_two_factor(reg.graph, factors[j], slice, rest);
    }
    for (std::size_t j = first_factors; j < factors.size(); ++j)
      for (EdgeId e : factors[j])
        if (e < reg.original_edges) out[static_cast<std::size_t>(e)] = rest[static_cast<std::size_t>(e)];
    return out;
  }

  // maximum degree odd and equal to first_cap + floor(2T/3)
  const int n = g.vertex_count();
  std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  const int second_cap = delta - first_cap;
  for (Vertex v = 0; v < n; ++v) {
    lo[static_cast<std::size_t>(v)] = g.degree(v) - first_cap;
    hi[static_cast<std::size_t>(v)] = second_cap;
  }
  if (auto second_flags = degree_bounded_factor(g, lo, hi)) {
    detail::colour_part_even(g, detail::ids_where(*second_flags, false), k - 1, out);
    auto second = detail::ids_where(*second_flags, true);
    if (!second.empty()) {
      MultiGraph sub = edge_subgraph(g, second);
      EdgeColouring c = shannon_edge_colouring(sub, budget);
      for (std::size_t i = 0; i < second.size(); ++i) out[static_cast<std::size_t>(second[i])] = c[i];
    }
    return out;
  }
  // no such split: peel off one colour class and colour the rest with T-1 colours
  const int rest_cap = budget == 2 ? k : delta - k;
  for (Vertex v = 0; v < n; ++v) {
    lo[static_cast<std::size_t>(v)] = g.degree(v) - rest_cap;
    hi[static_cast<std::size_t>(v)] = k;
  }
  if (auto peeled = degree_bounded_factor(g, lo, hi)) {
    auto rest = detail::ids_where(*peeled, false);
    EdgeColouring c(rest.size(), 1);
    if (budget > 2 && !rest.empty()) c = colour_edges_odd_k(edge_subgraph(g, rest), k);
    if (colour_count(c) < budget) {
      for (EdgeId e : detail::ids_where(*peeled, true)) out[static_cast<std::size_t>(e)] = budget;
      for (std::size_t i = 0; i < rest.size(); ++i) out[static_cast<std::size_t>(rest[i])] = c[i];
      return out;
    }
  }
  // neither decomposition exists: the regularized route, one colour over budget
  Regularized reg = regularize_to_degree(g, target);
  auto factors = two_factor_decomposition(reg.graph);
  const auto first_factors = static_cast<std::size_t>(first_cap / 2);
  std::vector<EdgeId> first;
  for (std::size_t j = 0; j < first_factors; ++j)
    for (EdgeId e : factors[j])
      if (e < reg.original_edges) first.push_back(e);
  std::sort(first.begin(), first.end());
  detail::colour_part_even(g, first, k - 1, out);
  std::vector<EdgeId> second;
  for (std::size_t j = first_factors; j < factors.size(); ++j)
    for (EdgeId e : factors[j])
      if (e < reg.original_edges) second.push_back(e);
  std::sort(second.begin(), second.end());
  MultiGraph sub = edge_subgraph(g, second);
  EdgeColouring c = shannon_edge_colouring(sub, std::max(budget + 1, (3 * sub.max_degree()) / 2));
  for (std::size_t i = 0; i < second.size(); ++i) out[static_cast<std::size_t>(second[i])] = c[i];
  return out;
}

/// Dispatches on the parity of k.
inline EdgeColouring colour_edges_frugal(const MultiGraph& g, int k, const std::optional<ListAssignment>& lists = std::nullopt) {
  if (k % 2 == 0) return colour_edges_even_k(g, k, lists);
  if (lists) throw Error(ErrorKind::OddK, "list colouring for odd k is served only by the exact oracle");
  return colour_edges_odd_k(g, k);
}

}  // namespace frugal
