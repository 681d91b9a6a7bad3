#pragma once

#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "frugal/graph.hpp"

namespace frugal {

namespace detail {

/// Maximum matching in a general graph (Edmonds' blossom algorithm, BFS form).
class BlossomMatching {
 public:
  explicit BlossomMatching(int n) : n_(n), adj_(static_cast<std::size_t>(n)), match_(static_cast<std::size_t>(n), -1) {}

  void add_edge(int a, int b) {
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }

  /// Greedy start followed by augmentation from every exposed vertex.
  const std::vector<int>& solve() {
    for (int v = 0; v < n_; ++v)
      if (match_[idx(v)] < 0)
        for (int w : adj_[idx(v)])
          if (match_[idx(w)] < 0) {
            match_[idx(v)] = w;
            match_[idx(w)] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (match_[idx(v)] < 0) augment_from(v);
    return match_;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  int lca(int a, int b) {
    std::vector<bool> seen(idx(n_), false);
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = true;
      if (match_[idx(a)] < 0) break;
      a = parent_[idx(match_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = blossom_[idx(base_[idx(match_[idx(v)])])] = true;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  bool augment_from(int root) {
    used_.assign(idx(n_), false);
    parent_.assign(idx(n_), -1);
    base_.resize(idx(n_));
    std::iota(base_.begin(), base_.end(), 0);
    used_[idx(root)] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[idx(v)]) {
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] >= 0 && parent_[idx(match_[idx(to)])] >= 0)) {
          int cur = lca(v, to);
          blossom_.assign(idx(n_), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur;
              if (!used_[idx(i)]) {
                used_[idx(i)] = true;
                q.push(i);
              }
            }
        } else if (parent_[idx(to)] < 0) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] < 0) {
            for (int x = to; x >= 0;) {
              int pv = parent_[idx(x)];
              int next = match_[idx(pv)];
              match_[idx(x)] = pv;
              match_[idx(pv)] = x;
              x = next;
            }
            return true;
          }
          used_[idx(match_[idx(to)])] = true;
          q.push(match_[idx(to)]);
        }
      }
    }
    return false;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
};

}  // namespace detail

/// A spanning subgraph F with lo[v] <= deg_F(v) <= hi[v] at every vertex, as a
/// membership flag per edge; nullopt if none exists.
///
/// Each vertex becomes one port per incident edge, lo-forced and optional
/// absorbers; F is read off the port-to-port edges of a matching that covers
/// every port and every forced absorber.
inline std::optional<std::vector<bool>> degree_bounded_factor(const MultiGraph& g, const std::vector<int>& lo,
                                                              const std::vector<int>& hi) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  // port of edge e at its u end is 2e, at its v end 2e + 1
  int next = 2 * m;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> optional_nodes;
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    const int l = std::max(0, lo[static_cast<std::size_t>(v)]);
    const int h = std::min(d, hi[static_cast<std::size_t>(v)]);
    if (l > h) return std::nullopt;
    std::vector<int> ports;
    for (EdgeId e : g.incident(v)) ports.push_back(2 * e + (g.edge(e).u == v ? 0 : 1));
    // d - h absorbers must take a port; h - l more may
    for (int i = 0; i < d - l; ++i) {
      const int a = next++;
      if (i >= d - h) optional_nodes.push_back(a);
      for (int p : ports) edges.emplace_back(a, p);
    }
  }
  for (EdgeId e = 0; e < m; ++e) edges.emplace_back(2 * e, 2 * e + 1);
  // optional absorbers may pair off with each other
  for (std::size_t i = 0; i < optional_nodes.size(); ++i)
    for (std::size_t j = i + 1; j < optional_nodes.size(); ++j) edges.emplace_back(optional_nodes[i], optional_nodes[j]);
  int total = next;
  if (total % 2 == 1) {
    const int extra = total++;
    for (int a : optional_nodes) edges.emplace_back(extra, a);
  }
  detail::BlossomMatching bm(total);
  for (auto [a, b] : edges) bm.add_edge(a, b);
  const auto& mate = bm.solve();
  for (int x = 0; x < total; ++x)
    if (mate[static_cast<std::size_t>(x)] < 0) return std::nullopt;
  std::vector<bool> in_factor(static_cast<std::size_t>(m));
  for (EdgeId e = 0; e < m; ++e) in_factor[static_cast<std::size_t>(e)] = mate[static_cast<std::size_t>(2 * e)] == 2 * e + 1;
  return in_factor;
}

}  // namespace frugal
