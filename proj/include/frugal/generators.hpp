#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frugal/graph.hpp"

namespace frugal {

struct GeneratedInstance {
  MultiGraph graph;
  std::optional<RotationSystem> rotation;
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::vector<Vertex> outer_cycle;  // outerplanar families only
};

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;

inline std::vector<std::pair<double, double>> circle_points(int n, double radius = 1.0, double phase = 0.0) {
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < n; ++i) {
    double a = phase + 2.0 * kPi * i / std::max(n, 1);
    xy.emplace_back(radius * std::cos(a), radius * std::sin(a));
  }
  return xy;
}

/// Portable uniform draw in [0, bound).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline MultiGraph named_graph(std::vector<std::string> names, const std::vector<Edge>& edges) {
  std::vector<std::string> enames;
  for (std::size_t i = 0; i < edges.size(); ++i) enames.push_back("e" + std::to_string(i));
  return MultiGraph(std::move(names), edges, std::move(enames));
}

}  // namespace detail

/// Three hubs x, y, z with edge xy, m-1 common neighbours of x and y, m of x
/// and z, and m of y and z. Maximum degree 2m.
inline GeneratedInstance gen_Gm(int m) {
  if (m < 2) throw Error(ErrorKind::Precondition, "G_m needs m >= 2");
  std::vector<std::string> names{"x", "y", "z"};
  std::vector<std::pair<double, double>> xy{{0.0, 1.0}, {0.0, -1.0}, {3.0, 0.0}};
  std::vector<Edge> edges{{0, 1}};
  for (int i = 1; i <= m - 1; ++i) {
    Vertex a = static_cast<Vertex>(names.size());
    names.push_back("a" + std::to_string(i));
    xy.emplace_back(-static_cast<double>(i), 0.0);
    edges.push_back({0, a});
    edges.push_back({1, a});
  }
  for (int i = 1; i <= m; ++i) {
    Vertex b = static_cast<Vertex>(names.size());
    names.push_back("b" + std::to_string(i));
    xy.emplace_back(1.5, 1.0 + i);
    edges.push_back({0, b});
    edges.push_back({2, b});
  }
  for (int i = 1; i <= m; ++i) {
    Vertex c = static_cast<Vertex>(names.size());
    names.push_back("c" + std::to_string(i));
    xy.emplace_back(1.5, -1.0 - i);
    edges.push_back({1, c});
    edges.push_back({2, c});
  }
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.rotation = rotation_from_coordinates(inst.graph, xy);
  inst.family = "gm";
  inst.params = {{"m", m}};
  return inst;
}

/// Three vertices with m parallel edges between each pair.
inline GeneratedInstance gen_Tm(int m) {
  if (m < 1) throw Error(ErrorKind::Precondition, "T^(m) needs m >= 1");
  std::vector<Edge> edges;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}})
    for (int i = 0; i < m; ++i) edges.push_back({a, b});
  GeneratedInstance inst;
  inst.graph = detail::named_graph({"a", "b", "c"}, edges);
  inst.family = "tm";
  inst.params = {{"m", m}};
  return inst;
}

inline GeneratedInstance gen_cycle(int n) {
  if (n < 3) throw Error(ErrorKind::Precondition, "cycle needs n >= 3");
  std::vector<Edge> edges;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    edges.push_back({i, (i + 1) % n});
  }
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.rotation = rotation_from_coordinates(inst.graph, detail::circle_points(n));
  inst.family = "cycle";
  inst.params = {{"n", n}};
  for (int i = 0; i < n; ++i) inst.outer_cycle.push_back(i);
  return inst;
}

inline GeneratedInstance gen_path(int n) {
  if (n < 1) throw Error(ErrorKind::Precondition, "path needs n >= 1");
  std::vector<Edge> edges;
  std::vector<std::string> names;
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    xy.emplace_back(static_cast<double>(i), 0.0);
    if (i + 1 < n) edges.push_back({i, i + 1});
  }
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.rotation = rotation_from_coordinates(inst.graph, xy);
  inst.family = "path";
  inst.params = {{"n", n}};
  return inst;
}

/// K_{1,n}: centre 0, leaves 1..n.
inline GeneratedInstance gen_star(int n) {
  if (n < 0) throw Error(ErrorKind::Precondition, "star needs n >= 0");
  std::vector<Edge> edges;
  std::vector<std::string> names{"c"};
  std::vector<std::pair<double, double>> xy{{0.0, 0.0}};
  auto ring = detail::circle_points(n);
  for (int i = 1; i <= n; ++i) {
    names.push_back("l" + std::to_string(i));
    xy.push_back(ring[static_cast<std::size_t>(i - 1)]);
    edges.push_back({0, i});
  }
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.rotation = rotation_from_coordinates(inst.graph, xy);
  inst.family = "star";
  inst.params = {{"n", n}};
  return inst;
}

inline GeneratedInstance gen_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  std::vector<std::string> names;
  for (int i = 0; i < 10; ++i) names.push_back("p" + std::to_string(i));
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.family = "petersen";
  return inst;
}

inline GeneratedInstance gen_k4() {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  auto xy = detail::circle_points(3, 2.0, detail::kPi / 2);
  xy.emplace_back(0.0, 0.0);
  GeneratedInstance inst;
  inst.graph = detail::named_graph({"a", "b", "c", "d"}, edges);
  inst.rotation = rotation_from_coordinates(inst.graph, xy);
  inst.family = "k4";
  return inst;
}

/// Outer triangle, middle hexagon, inner triangle; 5-regular plane triangulation.
inline GeneratedInstance gen_icosahedron() {
  std::vector<std::string> names;
  std::vector<std::pair<double, double>> xy;
  for (int j = 0; j < 3; ++j) names.push_back("o" + std::to_string(j));
  for (int t = 0; t < 6; ++t) names.push_back("h" + std::to_string(t));
  for (int j = 0; j < 3; ++j) names.push_back("i" + std::to_string(j));
  auto deg = [](double d) { return d * detail::kPi / 180.0; };
  for (int j = 0; j < 3; ++j) xy.emplace_back(10 * std::cos(deg(120.0 * j)), 10 * std::sin(deg(120.0 * j)));
  for (int t = 0; t < 6; ++t) xy.emplace_back(4 * std::cos(deg(60.0 * t)), 4 * std::sin(deg(60.0 * t)));
  for (int j = 0; j < 3; ++j)
    xy.emplace_back(1.5 * std::cos(deg(120.0 * j + 60)), 1.5 * std::sin(deg(120.0 * j + 60)));
  auto o = [](int j) { return j; };
  auto h = [](int t) { return 3 + ((t % 6) + 6) % 6; };
  auto in = [](int j) { return 9 + j; };
  std::vector<Edge> edges;
  for (int j = 0; j < 3; ++j) edges.push_back({o(j), o((j + 1) % 3)});
  for (int j = 0; j < 3; ++j) edges.push_back({in(j), in((j + 1) % 3)});
  for (int t = 0; t < 6; ++t) edges.push_back({h(t), h(t + 1)});
  for (int j = 0; j < 3; ++j)
    for (int d = -1; d <= 1; ++d) edges.push_back({o(j), h(2 * j + d)});
  for (int j = 0; j < 3; ++j)
    for (int d = 0; d <= 2; ++d) edges.push_back({in(j), h(2 * j + d)});
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.rotation = rotation_from_coordinates(inst.graph, xy);
  inst.family = "icosahedron";
  return inst;
}

/// Hub 0 joined to every vertex of an n-cycle.
inline GeneratedInstance gen_wheel(int n) {
  if (n < 3) throw Error(ErrorKind::Precondition, "wheel needs n >= 3");
  std::vector<std::string> names{"hub"};
  std::vector<std::pair<double, double>> xy{{0.0, 0.0}};
  auto ring = detail::circle_points(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back("r" + std::to_string(i));
    xy.push_back(ring[static_cast<std::size_t>(i)]);
    edges.push_back({0, 1 + i});
    edges.push_back({1 + i, 1 + (i + 1) % n});
  }
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.rotation = rotation_from_coordinates(inst.graph, xy);
  inst.family = "wheel";
  inst.params = {{"n", n}};
  return inst;
}

/// Path on n-1 vertices plus an apex adjacent to all of them (n vertices total).
inline GeneratedInstance gen_fan(int n) {
  if (n < 3) throw Error(ErrorKind::Precondition, "fan needs n >= 3");
  std::vector<std::string> names{"apex"};
  std::vector<std::pair<double, double>> xy{{(n - 2) / 2.0, 5.0}};
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    xy.emplace_back(static_cast<double>(i - 1), 0.0);
    edges.push_back({0, i});
    if (i + 1 < n) edges.push_back({i, i + 1});
  }
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.rotation = rotation_from_coordinates(inst.graph, xy);
  inst.family = "fan";
  inst.params = {{"n", n}};
  inst.outer_cycle.push_back(0);
  for (int i = n - 1; i >= 1; --i) inst.outer_cycle.push_back(i);
  return inst;
}

/// Triangulated polygon grown by inserting each new vertex on a random outer
/// edge. 2n-3 edges; the outer cycle is recorded.
inline GeneratedInstance gen_random_maximal_outerplanar(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::Precondition, "maximal outerplanar needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> outer{0, 1, 2};
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex v = 3; v < n; ++v) {
    auto i = static_cast<std::size_t>(detail::draw(rng, outer.size()));
    Vertex a = outer[i];
    Vertex b = outer[(i + 1) % outer.size()];
    edges.push_back({a, v});
    edges.push_back({b, v});
    outer.insert(outer.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
  }
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  std::vector<std::pair<double, double>> xy(static_cast<std::size_t>(n));
  auto ring = detail::circle_points(n);
  for (std::size_t p = 0; p < outer.size(); ++p) xy[static_cast<std::size_t>(outer[p])] = ring[p];
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.rotation = rotation_from_coordinates(inst.graph, xy);
  inst.family = "outerplanar";
  inst.params = {{"n", n}, {"seed", static_cast<std::int64_t>(seed)}};
  inst.outer_cycle = outer;
  return inst;
}

/// Seeded loopless multigraph with degree and multiplicity caps.
inline GeneratedInstance gen_random_multigraph(int n, int max_degree, int max_multiplicity, std::uint64_t seed) {
  if (n < 1 || max_degree < 0 || max_multiplicity < 1)
    throw Error(ErrorKind::Precondition, "random multigraph parameters out of range");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::map<std::pair<int, int>, int> mult;
  if (n >= 2) {
    const long attempts = static_cast<long>(n) * std::max(max_degree, 1) * 2;
    for (long a = 0; a < attempts; ++a) {
      auto u = static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(n)));
      auto v = static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(n)));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (deg[static_cast<std::size_t>(u)] >= max_degree || deg[static_cast<std::size_t>(v)] >= max_degree) continue;
      int& m = mult[{u, v}];
      if (m >= max_multiplicity) continue;
      ++m;
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
      edges.push_back({u, v});
    }
  }
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.family = "multigraph";
  inst.params = {{"n", n}, {"max_degree", max_degree}, {"max_multiplicity", max_multiplicity},
                 {"seed", static_cast<std::int64_t>(seed)}};
  return inst;
}

/// Seeded bipartite multigraph: left vertices 0..left-1, right vertices after.
inline GeneratedInstance gen_random_bipartite_multigraph(int left, int right, int max_degree,
                                                         int max_multiplicity, std::uint64_t seed) {
  if (left < 1 || right < 1 || max_degree < 0 || max_multiplicity < 1)
    throw Error(ErrorKind::Precondition, "random bipartite parameters out of range");
  std::mt19937_64 rng(seed);
  const int n = left + right;
  std::vector<Edge> edges;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::map<std::pair<int, int>, int> mult;
  const long attempts = static_cast<long>(n) * std::max(max_degree, 1) * 2;
  for (long a = 0; a < attempts; ++a) {
    auto u = static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(left)));
    auto v = left + static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(right)));
    if (deg[static_cast<std::size_t>(u)] >= max_degree || deg[static_cast<std::size_t>(v)] >= max_degree) continue;
    int& m = mult[{u, v}];
    if (m >= max_multiplicity) continue;
    ++m;
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
    edges.push_back({u, v});
  }
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back((v < left ? "l" : "r") + std::to_string(v < left ? v : v - left));
  GeneratedInstance inst;
  inst.graph = detail::named_graph(std::move(names), edges);
  inst.family = "bipartite";
  inst.params = {{"left", left}, {"right", right}, {"max_degree", max_degree},
                 {"max_multiplicity", max_multiplicity}, {"seed", static_cast<std::int64_t>(seed)}};
  return inst;
}

/// Dispatch by family name for the command line.
inline GeneratedInstance gen_named(const std::string& name, int n = 0) {
  if (name == "cycle") return gen_cycle(n);
  if (name == "path") return gen_path(n);
  if (name == "star") return gen_star(n);
  if (name == "petersen") return gen_petersen();
  if (name == "k4") return gen_k4();
  if (name == "icosahedron") return gen_icosahedron();
  if (name == "wheel") return gen_wheel(n);
  if (name == "fan") return gen_fan(n);
  throw Error(ErrorKind::Precondition, "unknown family '" + name + "'");
}

}  // namespace frugal
