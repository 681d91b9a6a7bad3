#pragma once

// Exhaustive branch-and-bound oracles for small instances. They never guess:
// an exhausted node budget is reported as such, not as an answer.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "frugal/graph.hpp"
#include "frugal/validators.hpp"

namespace frugal {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

enum class SearchStatus { Optimal, Infeasible, BudgetExhausted };

constexpr std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Optimal: return "optimal";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

struct ExactResult {
  SearchStatus status = SearchStatus::Infeasible;
  int optimum = 0;        // meaningful only when status == Optimal
  int lower_bound = 0;    // proven: no solution with fewer colours / smaller top label
  std::vector<int> witness;
  std::uint64_t nodes = 0;

  bool budget_exhausted() const { return status == SearchStatus::BudgetExhausted; }
};

/// Outcome of a fixed-list decision: witness found, proven impossible, or unknown.
struct DecisionResult {
  SearchStatus status = SearchStatus::Infeasible;  // Optimal == witness found
  std::vector<Colour> witness;
  std::uint64_t nodes = 0;
};

namespace detail {

struct BudgetExceeded {};

/// Backtracking over vertex colourings with frugality bookkeeping. Either
/// palette {1..t} with colour-permutation symmetry broken, or per-vertex lists.
class VertexSearch {
 public:
  VertexSearch(const MultiGraph& g, int k, std::uint64_t budget, std::uint64_t& nodes)
      : g_(g), k_(k), budget_(budget), nodes_(nodes) {
    order_.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g.neighbours(a).size() > g.neighbours(b).size();
    });
  }

  std::optional<VertexColouring> palette(int t) {
    lists_ = nullptr;
    palette_ = t;
    return run();
  }

  std::optional<VertexColouring> with_lists(const ListAssignment& lists) {
    lists_ = &lists;
    palette_ = 0;
    for (const auto& l : lists.lists)
      for (Colour c : l) palette_ = std::max(palette_, c);
    return run();
  }

 private:
  std::optional<VertexColouring> run() {
    const auto n = static_cast<std::size_t>(g_.vertex_count());
    colour_.assign(n, 0);
    if (lists_) {
      // remap list colours onto 0..p-1
      std::vector<Colour> all;
      for (const auto& l : lists_->lists) all.insert(all.end(), l.begin(), l.end());
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      values_ = all;
      slots_ = static_cast<int>(all.size());
    } else {
      values_.clear();
      slots_ = palette_;
    }
    count_.assign(n * static_cast<std::size_t>(std::max(slots_, 1)), 0);
    assigned_.assign(n, -1);
    if (!place(0, 0)) return std::nullopt;
    VertexColouring out(n);
    for (std::size_t v = 0; v < n; ++v)
      out[v] = lists_ ? values_[static_cast<std::size_t>(assigned_[v])] : assigned_[v] + 1;
    return out;
  }

  int& count(Vertex w, int slot) {
    return count_[static_cast<std::size_t>(w) * static_cast<std::size_t>(slots_) + static_cast<std::size_t>(slot)];
  }

  bool allowed(Vertex v, int slot) {
    if (count(v, slot) != 0) return false;  // a neighbour already has it
    for (Vertex w : g_.neighbours(v))
      if (count(w, slot) >= k_) return false;
    return true;
  }

  bool has_option(Vertex u, int used) {
    if (lists_) {
      for (Colour c : (*lists_)[static_cast<std::size_t>(u)]) {
        int slot = static_cast<int>(std::lower_bound(values_.begin(), values_.end(), c) - values_.begin());
        if (allowed(u, slot)) return true;
      }
      return false;
    }
    int top = std::min(slots_, used + 1);
    for (int s = 0; s < top; ++s)
      if (allowed(u, s)) return true;
    return false;
  }

  void set(Vertex v, int slot, int delta) {
    for (Vertex w : g_.neighbours(v)) count(w, slot) += delta;
    assigned_[static_cast<std::size_t>(v)] = delta > 0 ? slot : -1;
  }

  bool place(std::size_t depth, int used) {
    if (depth == order_.size()) return true;
    Vertex v = order_[depth];
    std::vector<int> candidates;
    if (lists_) {
      for (Colour c : (*lists_)[static_cast<std::size_t>(v)])
        candidates.push_back(static_cast<int>(std::lower_bound(values_.begin(), values_.end(), c) - values_.begin()));
    } else {
      for (int s = 0; s < std::min(slots_, used + 1); ++s) candidates.push_back(s);
    }
    for (int slot : candidates) {
      if (++nodes_ > budget_) throw BudgetExceeded{};
      if (!allowed(v, slot)) continue;
      set(v, slot, +1);
      int next_used = std::max(used, slot + 1);
      bool ok = true;
      // forward check on uncoloured vertices within distance two
      for (Vertex w : g_.neighbours(v)) {
        if (assigned_[static_cast<std::size_t>(w)] < 0 && !has_option(w, next_used)) { ok = false; break; }
        for (Vertex x : g_.neighbours(w))
          if (assigned_[static_cast<std::size_t>(x)] < 0 && !has_option(x, next_used)) { ok = false; break; }
        if (!ok) break;
      }
      if (ok && place(depth + 1, next_used)) return true;
      set(v, slot, -1);
    }
    return false;
  }

  const MultiGraph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<Vertex> order_;
  const ListAssignment* lists_ = nullptr;
  int palette_ = 0;
  int slots_ = 0;
  std::vector<Colour> values_;
  std::vector<int> count_;
  std::vector<int> assigned_;
  std::vector<Colour> colour_;
};

/// Size of a greedily grown clique in square(g), seeded from every vertex.
inline int square_clique_bound(const MultiGraph& g) {
  MultiGraph sq = square(g);
  int best = g.vertex_count() > 0 ? 1 : 0;
  for (Vertex s = 0; s < sq.vertex_count(); ++s) {
    std::vector<Vertex> clique{s};
    std::vector<Vertex> cand(sq.neighbours(s).begin(), sq.neighbours(s).end());
    std::stable_sort(cand.begin(), cand.end(),
                     [&](Vertex a, Vertex b) { return sq.degree(a) > sq.degree(b); });
    for (Vertex c : cand) {
      bool all = true;
      for (Vertex m : clique)
        if (!sq.adjacent(c, m)) { all = false; break; }
      if (all) clique.push_back(c);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace detail

/// The k-frugal chromatic number, searched upward from an admissible lower bound.
inline ExactResult exact_frugal_chromatic(const MultiGraph& g, int k, int max_colours = -1,
                                          std::uint64_t node_budget = kDefaultNodeBudget) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  ExactResult r;
  if (g.vertex_count() == 0) {
    r.status = SearchStatus::Optimal;
    return r;
  }
  int simple_delta = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    simple_delta = std::max(simple_delta, static_cast<int>(g.neighbours(v).size()));
  if (max_colours < 0) max_colours = g.vertex_count();
  int lb = simple_delta == 0 ? 1 : (simple_delta + k - 1) / k + 1;
  if (k == 1) lb = std::max(lb, detail::square_clique_bound(g));
  r.lower_bound = lb;
  detail::VertexSearch search(g, k, node_budget, r.nodes);
  for (int t = lb; t <= max_colours; ++t) {
    try {
      if (auto c = search.palette(t)) {
        r.status = SearchStatus::Optimal;
        r.optimum = t;
        r.witness = *c;
        return r;
      }
    } catch (const detail::BudgetExceeded&) {
      r.status = SearchStatus::BudgetExhausted;
      return r;
    }
    r.lower_bound = t + 1;
  }
  r.status = SearchStatus::Infeasible;
  return r;
}

namespace detail {

/// Edge colouring search. Parallel classes are laid out contiguously and their
/// colours forced non-decreasing; together with "next new colour is max+1" this
/// removes edge-permutation and colour-permutation symmetry soundly.
class EdgeSearch {
 public:
  EdgeSearch(const MultiGraph& g, int k, std::uint64_t budget, std::uint64_t& nodes)
      : g_(g), k_(k), budget_(budget), nodes_(nodes) {
    std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> classes;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      classes[{std::min(u, v), std::max(u, v)}].push_back(e);
    }
    std::vector<std::vector<EdgeId>> cls;
    for (auto& [key, es] : classes) cls.push_back(es);
    std::stable_sort(cls.begin(), cls.end(), [&](const auto& a, const auto& b) {
      auto weight = [&](const std::vector<EdgeId>& c) {
        return g.degree(g.edge(c.front()).u) + g.degree(g.edge(c.front()).v);
      };
      if (weight(a) != weight(b)) return weight(a) > weight(b);
      return a.front() < b.front();
    });
    for (const auto& c : cls)
      for (std::size_t i = 0; i < c.size(); ++i) {
        order_.push_back(c[i]);
        same_class_as_prev_.push_back(i > 0);
      }
  }

  std::optional<EdgeColouring> palette(int t) {
    t_ = t;
    count_.assign(static_cast<std::size_t>(g_.vertex_count()) * static_cast<std::size_t>(std::max(t, 1)), 0);
    assigned_.assign(static_cast<std::size_t>(g_.edge_count()), -1);
    if (!place(0, 0)) return std::nullopt;
    EdgeColouring out(assigned_.size());
    for (std::size_t e = 0; e < out.size(); ++e) out[e] = assigned_[e] + 1;
    return out;
  }

 private:
  int& count(Vertex v, int s) {
    return count_[static_cast<std::size_t>(v) * static_cast<std::size_t>(t_) + static_cast<std::size_t>(s)];
  }

  bool place(std::size_t depth, int used) {
    if (depth == order_.size()) return true;
    EdgeId e = order_[depth];
    auto [u, v] = g_.edge(e);
    int from = same_class_as_prev_[depth] ? assigned_[static_cast<std::size_t>(order_[depth - 1])] : 0;
    for (int s = from; s < std::min(t_, used + 1); ++s) {
      if (++nodes_ > budget_) throw BudgetExceeded{};
      if (count(u, s) >= k_ || count(v, s) >= k_) continue;
      ++count(u, s);
      ++count(v, s);
      assigned_[static_cast<std::size_t>(e)] = s;
      if (place(depth + 1, std::max(used, s + 1))) return true;
      --count(u, s);
      --count(v, s);
      assigned_[static_cast<std::size_t>(e)] = -1;
    }
    return false;
  }

  const MultiGraph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<EdgeId> order_;
  std::vector<bool> same_class_as_prev_;
  int t_ = 0;
  std::vector<int> count_;
  std::vector<int> assigned_;
};

}  // namespace detail

/// The k-frugal chromatic index, searched upward from ceil(Delta/k).
inline ExactResult exact_frugal_chromatic_index(const MultiGraph& g, int k, int max_colours = -1,
                                                std::uint64_t node_budget = kDefaultNodeBudget) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  ExactResult r;
  if (g.edge_count() == 0) {
    r.status = SearchStatus::Optimal;
    return r;
  }
  if (max_colours < 0) max_colours = g.edge_count();
  int lb = (g.max_degree() + k - 1) / k;
  r.lower_bound = lb;
  detail::EdgeSearch search(g, k, node_budget, r.nodes);
  for (int t = lb; t <= max_colours; ++t) {
    try {
      if (auto c = search.palette(t)) {
        r.status = SearchStatus::Optimal;
        r.optimum = t;
        r.witness = *c;
        return r;
      }
    } catch (const detail::BudgetExceeded&) {
      r.status = SearchStatus::BudgetExhausted;
      return r;
    }
    r.lower_bound = t + 1;
  }
  r.status = SearchStatus::Infeasible;
  return r;
}

/// lambda_{p,q}: the least t admitting an L(p,q)-labelling from {1..t}.
inline ExactResult exact_lambda(const MultiGraph& g, int p, int q, int max_label = -1,
                                std::uint64_t node_budget = kDefaultNodeBudget) {
  if (p < 0 || q < 0) throw Error(ErrorKind::Precondition, "p and q must be non-negative");
  ExactResult r;
  const int n = g.vertex_count();
  if (max_label < 0) max_label = 1 + std::max(n - 1, 0) * std::max({p, q, 1});
  if (n == 0) {
    r.status = SearchStatus::Optimal;
    return r;
  }
  std::vector<std::vector<Vertex>> dist2(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) dist2[static_cast<std::size_t>(v)] = second_neighbours(g, v);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.neighbours(a).size() > g.neighbours(b).size(); });

  int lb = g.edge_count() > 0 ? 1 + p : 1;
  r.lower_bound = std::max(lb, 1);
  std::vector<int> label(static_cast<std::size_t>(n), 0);

  auto fits = [&](Vertex v, int x) {
    for (Vertex w : g.neighbours(v)) {
      int y = label[static_cast<std::size_t>(w)];
      if (y != 0 && std::abs(x - y) < p) return false;
    }
    for (Vertex w : dist2[static_cast<std::size_t>(v)]) {
      int y = label[static_cast<std::size_t>(w)];
      if (y != 0 && std::abs(x - y) < q) return false;
    }
    return true;
  };

  for (int t = r.lower_bound; t <= max_label; ++t) {
    std::fill(label.begin(), label.end(), 0);
    // reversal x -> t+1-x is a symmetry; pin the first vertex to the lower half
    auto place = [&](auto&& self, std::size_t depth) -> bool {
      if (depth == order.size()) return true;
      Vertex v = order[depth];
      int top = depth == 0 ? (t + 1) / 2 : t;
      for (int x = 1; x <= top; ++x) {
        if (++r.nodes > node_budget) throw detail::BudgetExceeded{};
        if (!fits(v, x)) continue;
        label[static_cast<std::size_t>(v)] = x;
        if (self(self, depth + 1)) return true;
        label[static_cast<std::size_t>(v)] = 0;
      }
      return false;
    };
    try {
      if (place(place, 0)) {
        r.status = SearchStatus::Optimal;
        r.optimum = t;
        r.witness = label;
        return r;
      }
    } catch (const detail::BudgetExceeded&) {
      r.status = SearchStatus::BudgetExhausted;
      return r;
    }
    r.lower_bound = t + 1;
  }
  r.status = SearchStatus::Infeasible;
  return r;
}

/// g plus a clique on every constraint set: its proper colourings are exactly
/// the colourings that are proper on g and rainbow on every set.
inline MultiGraph rainbow_constraint_graph(const MultiGraph& g, const std::vector<std::vector<Vertex>>& sets) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : g.edges()) pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  for (const auto& s : sets)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (s[i] != s[j]) pairs.insert({std::min(s[i], s[j]), std::max(s[i], s[j])});
  std::vector<Edge> edges;
  std::vector<std::string> names;
  for (auto [a, b] : pairs) {
    edges.push_back({a, b});
    names.push_back(g.vertex_name(a) + "-" + g.vertex_name(b));
  }
  return MultiGraph(g.vertex_names(), std::move(edges), std::move(names));
}

/// Fewest colours that are proper on g and distinct on every constraint set.
inline ExactResult exact_rainbow_face_chromatic(const MultiGraph& g, const std::vector<std::vector<Vertex>>& sets,
                                                int max_colours = -1,
                                                std::uint64_t node_budget = kDefaultNodeBudget) {
  if (max_colours < 0) max_colours = g.vertex_count();
  MultiGraph h = rainbow_constraint_graph(g, sets);
  ExactResult r = exact_frugal_chromatic(h, std::max(1, h.max_degree()), max_colours, node_budget);
  for (const auto& s : sets) r.lower_bound = std::max(r.lower_bound, std::min(static_cast<int>(s.size()), max_colours + 1));
  return r;
}

/// Exhaustive search for a k-frugal colouring respecting fixed lists.
inline DecisionResult exact_list_frugal_decision(const MultiGraph& g, int k, const ListAssignment& lists,
                                                 std::uint64_t node_budget = kDefaultNodeBudget) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  if (static_cast<int>(lists.size()) != g.vertex_count())
    throw Error(ErrorKind::Precondition, "lists must cover every vertex");
  DecisionResult r;
  detail::VertexSearch search(g, k, node_budget, r.nodes);
  try {
    if (auto c = search.with_lists(lists)) {
      r.status = SearchStatus::Optimal;
      r.witness = *c;
    } else {
      r.status = SearchStatus::Infeasible;
    }
  } catch (const detail::BudgetExceeded&) {
    r.status = SearchStatus::BudgetExhausted;
  }
  return r;
}

}  // namespace frugal
