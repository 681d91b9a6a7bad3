#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frugal/graph.hpp"

namespace frugal {

/// Integer floor and ceiling division for a positive divisor.
constexpr long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
constexpr long ceil_div(long a, long b) { return -floor_div(-a, b); }

// ---------------------------------------------------------------------------
// Light vertices

struct LightVertexWitness {
  Vertex vertex = 0;
  std::vector<Vertex> neighbours;  // ascending by degree, ties by vertex id
  int light_case = 1;              // 1..4
};

namespace detail {

inline std::vector<Vertex> neighbours_by_degree(const MultiGraph& g, Vertex v) {
  std::vector<Vertex> nb(g.neighbours(v).begin(), g.neighbours(v).end());
  std::stable_sort(nb.begin(), nb.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  return nb;
}

inline bool matches_light_case(const MultiGraph& g, const std::vector<Vertex>& nb, int which) {
  const auto m = nb.size();
  auto d = [&](std::size_t i) { return g.degree(nb[i]); };
  switch (which) {
    case 1: return m <= 2;
    case 2: return m == 3 && d(0) <= 11;
    case 3: return m == 4 && d(0) <= 7 && d(1) <= 11;
    case 4: return m == 5 && d(0) <= 6 && d(1) <= 7 && d(2) <= 11;
    default: return false;
  }
}

}  // namespace detail

/// True when the witness still describes g.
inline bool witness_holds(const MultiGraph& g, const LightVertexWitness& w) {
  if (w.vertex < 0 || w.vertex >= g.vertex_count()) return false;
  auto nb = detail::neighbours_by_degree(g, w.vertex);
  return nb == w.neighbours && detail::matches_light_case(g, nb, w.light_case);
}

/// Every simple planar graph has such a vertex; failure proves non-planarity.
inline LightVertexWitness find_light_vertex(const MultiGraph& g) {
  if (!g.is_simple()) throw Error(ErrorKind::Precondition, "light-vertex search needs a simple graph");
  for (int which = 1; which <= 4; ++which)
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (which > 1 && g.degree(v) != which + 1) continue;
      auto nb = detail::neighbours_by_degree(g, v);
      if (detail::matches_light_case(g, nb, which)) return {v, std::move(nb), which};
    }
  throw Error(ErrorKind::NoLightVertex, "no light vertex; the graph is not planar");
}

// ---------------------------------------------------------------------------
// Extension step shared by the planar and outerplanar inductions

/// Colours v may not take: those on its neighbours, plus those already present
/// k times around some neighbour (not counting v). Uncoloured vertices are ignored.
inline std::set<Colour> forbidden_colours_at(const MultiGraph& g, const PartialColouring& partial, Vertex v, int k) {
  std::set<Colour> forbidden;
  auto colour_of = [&](Vertex x) { return partial[static_cast<std::size_t>(x)]; };
  for (Vertex u : g.neighbours(v)) {
    if (auto c = colour_of(u)) forbidden.insert(*c);
    std::map<Colour, int> around;
    for (Vertex w : g.neighbours(u)) {
      if (w == v) continue;
      if (auto c = colour_of(w); c && ++around[*c] >= k) forbidden.insert(*c);
    }
  }
  return forbidden;
}

/// Smallest list colour outside the forbidden set.
inline Colour extend_colour_at_vertex(const MultiGraph& g, const PartialColouring& partial, Vertex v, int k,
                                      const std::vector<Colour>& list) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  auto forbidden = forbidden_colours_at(g, partial, v, k);
  for (Colour c : list)
    if (!forbidden.count(c)) return c;
  throw Error(ErrorKind::ExtensionFailed,
              "every colour in the list of " + g.vertex_name(v) + " is forbidden (" +
                  std::to_string(forbidden.size()) + " forbidden, list size " + std::to_string(list.size()) + ")");
}

// ---------------------------------------------------------------------------
// Planar list colouring by contraction

enum class ListPolicy {
  Require,     // reject lists below the guaranteed size
  BestEffort,  // try anyway; a failed extension surfaces as ExtensionFailed
};

/// List size that always suffices for a simple planar graph of the given maximum degree.
inline long planar_list_requirement(int max_degree, int k) {
  const long c = std::max(max_degree, 12);
  return floor_div(2 * c + 19, k) + 6;
}

inline VertexColouring colour_planar_frugal(const MultiGraph& g, int k, const ListAssignment& lists,
                                            ListPolicy policy = ListPolicy::Require) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  if (!g.is_simple()) throw Error(ErrorKind::Precondition, "planar colouring needs a simple graph");
  if (static_cast<int>(lists.size()) != g.vertex_count())
    throw Error(ErrorKind::Precondition, "list assignment does not match the vertex set");
  const long cap = std::max(g.max_degree(), 12);
  const long need = planar_list_requirement(g.max_degree(), k);
  if (policy == ListPolicy::Require && g.vertex_count() > 0 && static_cast<long>(lists.min_size()) < need)
    throw Error(ErrorKind::ListTooSmall,
                "lists of size " + std::to_string(lists.min_size()) + " but " + std::to_string(need) + " required");

  struct Level {
    MultiGraph graph;
    std::vector<std::vector<Colour>> lists;
    Vertex light = 0;
    std::vector<Vertex> old_to_new;  // into the next level
    Vertex partner = -1;             // neighbour merged with the light vertex
  };
  std::vector<Level> stack;
  stack.push_back({g, lists.lists, 0, {}, -1});

  while (stack.back().graph.vertex_count() > 1) {
    Level& cur = stack.back();
    auto w = find_light_vertex(cur.graph);
    cur.light = w.vertex;
    Level next;
    if (w.neighbours.empty()) {
      std::vector<bool> keep(static_cast<std::size_t>(cur.graph.vertex_count()), true);
      keep[static_cast<std::size_t>(w.vertex)] = false;
      auto sub = induced_subgraph(cur.graph, keep);
      cur.old_to_new = sub.old_to_new;
      next.graph = std::move(sub.graph);
    } else {
      cur.partner = w.neighbours.front();
      EdgeId joining = -1;
      for (EdgeId e : cur.graph.incident(w.vertex))
        if (cur.graph.other(e, w.vertex) == cur.partner) joining = e;
      auto con = contract_edge_simplify(cur.graph, joining);
      if (con.graph.degree(con.merged) > cap)
        throw Error(ErrorKind::DegreeBoundBreached, "merged vertex has degree " +
                                                        std::to_string(con.graph.degree(con.merged)) +
                                                        " above " + std::to_string(cap));
      cur.old_to_new = con.old_to_new;
      next.graph = std::move(con.graph);
    }
    next.lists.resize(static_cast<std::size_t>(next.graph.vertex_count()));
    for (Vertex x = 0; x < cur.graph.vertex_count(); ++x) {
      if (x == cur.light) continue;
      next.lists[static_cast<std::size_t>(cur.old_to_new[static_cast<std::size_t>(x)])] =
          cur.lists[static_cast<std::size_t>(x)];
    }
    stack.push_back(std::move(next));
  }

  // base: at most one vertex
  PartialColouring colouring(static_cast<std::size_t>(stack.back().graph.vertex_count()));
  if (!colouring.empty()) {
    const auto& l = stack.back().lists.front();
    if (l.empty()) throw Error(ErrorKind::ExtensionFailed, "empty list at the base vertex");
    colouring[0] = l.front();
  }
  for (auto it = std::next(stack.rbegin()); it != stack.rend(); ++it) {
    const Level& lv = *it;
    PartialColouring here(static_cast<std::size_t>(lv.graph.vertex_count()));
    for (Vertex x = 0; x < lv.graph.vertex_count(); ++x)
      if (x != lv.light) here[static_cast<std::size_t>(x)] = colouring[static_cast<std::size_t>(lv.old_to_new[static_cast<std::size_t>(x)])];
    here[static_cast<std::size_t>(lv.light)] =
        extend_colour_at_vertex(lv.graph, here, lv.light, k, lv.lists[static_cast<std::size_t>(lv.light)]);
    colouring = std::move(here);
  }
  VertexColouring out;
  out.reserve(colouring.size());
  for (const auto& c : colouring) out.push_back(*c);
  return out;
}

// ---------------------------------------------------------------------------
// Labellings

/// Maps an L(k,1)-labelling with labels 1..t onto colours 1..ceil(t/k):
/// label x becomes ceil(x/k).
inline VertexColouring label_to_frugal(const Labelling& f_star, int k) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  VertexColouring c;
  c.reserve(f_star.size());
  for (int x : f_star) c.push_back(static_cast<Colour>(ceil_div(x, k)));
  return c;
}

/// List form: each colour x expands to the block {kx, ..., kx+k-1}.
inline ListAssignment expand_lists_for_labelling(const ListAssignment& lists, int k) {
  std::vector<std::vector<Colour>> out;
  for (const auto& l : lists.lists) {
    std::vector<Colour> big;
    for (Colour x : l)
      for (int j = 0; j < k; ++j) big.push_back(k * x + j);
    out.push_back(std::move(big));
  }
  return ListAssignment(std::move(out));
}

/// Inverse of the block expansion: label x becomes floor(x/k).
inline VertexColouring collapse_block_labels(const Labelling& f_star, int k) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  VertexColouring c;
  for (int x : f_star) c.push_back(static_cast<Colour>(floor_div(x, k)));
  return c;
}

/// Greedy L(k,1)-labelling in breadth-first order from the lowest unvisited vertex.
inline Labelling greedy_L_k1(const MultiGraph& g, int k) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Labelling f(n, 0);
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::deque<Vertex> queue{root};
    seen[static_cast<std::size_t>(root)] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      std::vector<std::pair<int, int>> taken;  // (label, required gap)
      for (Vertex u : g.neighbours(v))
        if (f[static_cast<std::size_t>(u)] > 0) taken.emplace_back(f[static_cast<std::size_t>(u)], k);
      for (Vertex w : second_neighbours(g, v))
        if (f[static_cast<std::size_t>(w)] > 0) taken.emplace_back(f[static_cast<std::size_t>(w)], 1);
      int label = 1;
      for (bool moved = true; moved;) {
        moved = false;
        for (auto [x, gap] : taken)
          if (std::abs(label - x) < gap) {
            label = x + gap;
            moved = true;
          }
      }
      f[static_cast<std::size_t>(v)] = label;
      for (Vertex u : g.neighbours(v))
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          queue.push_back(u);
        }
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Closed-form bounds

enum class BoundFamily {
  Conjecture2,
  Theorem4,
  Corollary8,
  Corollary10G7,
  Corollary10G6,
  Corollary10G5,
  Theorem11,
  Theorem12,
  EdgeEven,
  EdgeOdd,
  SquareViaCyclic,
};

inline const std::vector<std::pair<BoundFamily, std::string>>& bound_family_names() {
  static const std::vector<std::pair<BoundFamily, std::string>> names{
      {BoundFamily::Conjecture2, "conjecture-2"},       {BoundFamily::Theorem4, "theorem-4"},
      {BoundFamily::Corollary8, "corollary-8"},         {BoundFamily::Corollary10G7, "corollary-10-g7"},
      {BoundFamily::Corollary10G6, "corollary-10-g6"},  {BoundFamily::Corollary10G5, "corollary-10-g5"},
      {BoundFamily::Theorem11, "theorem-11"},           {BoundFamily::Theorem12, "theorem-12"},
      {BoundFamily::EdgeEven, "edge-even"},             {BoundFamily::EdgeOdd, "edge-odd"},
      {BoundFamily::SquareViaCyclic, "square-via-cyclic"},
  };
  return names;
}

inline std::string to_string(BoundFamily f) {
  for (const auto& [fam, name] : bound_family_names())
    if (fam == f) return name;
  return "unknown";
}

inline std::optional<BoundFamily> parse_bound_family(const std::string& s) {
  for (const auto& [fam, name] : bound_family_names())
    if (name == s) return fam;
  return std::nullopt;
}

struct BoundSpec {
  BoundFamily family = BoundFamily::Theorem4;
  int max_degree = 0;
  int k = 1;
  std::optional<int> girth;
  long value = 0;
  bool applicable = false;
  bool conjectural = false;
  std::string reason;
};

/// Evaluates the closed form. The value is always computed; applicability
/// reflects the hypotheses under which it is a known (or conjectured) bound.
inline BoundSpec bound_value(BoundFamily family, int max_degree, int k, std::optional<int> girth = std::nullopt) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  if (max_degree < 0) throw Error(ErrorKind::Precondition, "negative maximum degree");
  BoundSpec b{family, max_degree, k, girth, 0, true, false, ""};
  const long d = max_degree;
  auto need = [&](bool ok, const std::string& why) {
    if (!ok && b.applicable) {
      b.applicable = false;
      b.reason = why;
    }
  };
  auto need_girth = [&](int at_least) {
    need(girth.has_value(), "girth unknown");
    need(girth.has_value() && *girth >= at_least, "girth below " + std::to_string(at_least));
  };
  switch (family) {
    case BoundFamily::Conjecture2:
      b.value = k % 2 == 0 ? floor_div(d - 1, k) + 3 : floor_div(3 * d - 2, 3L * k - 1) + 3;
      b.conjectural = true;
      need(d >= std::max(2 * k, 8), "maximum degree below max(2k, 8)");
      break;
    case BoundFamily::Theorem4:
      b.value = floor_div(2 * d + 19, k) + 6;
      need(d >= 12, "maximum degree below 12");
      break;
    case BoundFamily::Corollary8:
      b.value = ceil_div(5 * d + 180, 3L * k) + 18;
      break;
    case BoundFamily::Corollary10G7:
      b.value = ceil_div(d - 1, k) + 2;
      need_girth(7);
      need(d >= 190 + 2L * k, "maximum degree below 190 + 2k");
      break;
    case BoundFamily::Corollary10G6:
      b.value = ceil_div(d + 4, k) + 6;
      need_girth(6);
      break;
    case BoundFamily::Corollary10G5:
      b.value = ceil_div(d + 10, k) + 6;
      need_girth(5);
      break;
    case BoundFamily::Theorem11:
      b.value = floor_div(d - 1, k) + 3;
      need(k >= 2, "k below 2");
      need(d >= 3, "maximum degree below 3");
      break;
    case BoundFamily::Theorem12:
      b.value = floor_div(d - 2, k) + 3;
      need(d >= 7, "maximum degree below 7");
      break;
    case BoundFamily::EdgeEven:
      b.value = ceil_div(d, k);
      need(k % 2 == 0, "k is odd");
      break;
    case BoundFamily::EdgeOdd:
      b.value = ceil_div(3 * d, 3L * k - 1);
      need(k % 2 == 1, "k is even");
      break;
    case BoundFamily::SquareViaCyclic:
      b.value = floor_div(3 * d, 2) + 17;
      b.conjectural = true;
      b.reason = "conditional on the even-k conjectured bound for k = 4";
      break;
  }
  return b;
}

}  // namespace frugal
