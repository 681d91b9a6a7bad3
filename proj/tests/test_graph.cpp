#include <gtest/gtest.h>

#include "frugal/generators.hpp"
#include "frugal/graph.hpp"
#include "oracles.hpp"

using namespace frugal;

namespace {

MultiGraph triangle() { return build_multigraph({"a", "b", "c"}, {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}}); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(BuildMultigraph, Triangle) {
  auto g = triangle();
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_TRUE(g.is_simple());
}

TEST(BuildMultigraph, ParallelEdgesCountInDegree) {
  auto g = build_multigraph({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "b", "a"}});
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_FALSE(g.is_simple());
  EXPECT_EQ(g.neighbours(0).size(), 1U);
}

TEST(BuildMultigraph, Errors) {
  EXPECT_EQ(kind_of([] { build_multigraph({"a"}, {{"l", "a", "a"}}); }), ErrorKind::LoopEdge);
  EXPECT_EQ(kind_of([] { build_multigraph({"a", "a"}, {}); }), ErrorKind::DuplicateId);
  EXPECT_EQ(kind_of([] { build_multigraph({"a", "b"}, {{"x", "a", "b"}, {"x", "b", "a"}}); }), ErrorKind::DuplicateId);
  EXPECT_EQ(kind_of([] { build_multigraph({"a"}, {{"x", "a", "q"}}); }), ErrorKind::DanglingEndpoint);
}

TEST(Square, SmallCases) {
  auto c5 = square(gen_cycle(5).graph);
  EXPECT_EQ(c5.edge_count(), 10);  // K5
  auto pet = square(gen_petersen().graph);
  EXPECT_EQ(pet.edge_count(), 45);  // K10
  auto k2 = square(MultiGraph(2, {{0, 1}}));
  EXPECT_EQ(k2.edge_count(), 1);
}

TEST(Square, MatchesDistanceOracleOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto g = gen_random_multigraph(2 + static_cast<int>(s % 12), 4, 2, s).graph;
    auto sq = square(g);
    auto d = oracle::distances(g);
    EXPECT_TRUE(sq.is_simple());
    int want = 0;
    for (int i = 0; i < g.vertex_count(); ++i)
      for (int j = i + 1; j < g.vertex_count(); ++j)
        if (d[i][j] == 1 || d[i][j] == 2) {
          ++want;
          EXPECT_TRUE(sq.adjacent(i, j));
        }
    EXPECT_EQ(sq.edge_count(), want);
    for (const auto& e : g.edges()) EXPECT_TRUE(sq.adjacent(e.u, e.v));
  }
}

TEST(LineGraph, Examples) {
  EXPECT_EQ(line_graph(triangle()).edge_count(), 3);
  auto par = build_multigraph({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}});
  auto l = line_graph(par);
  EXPECT_EQ(l.vertex_count(), 3);
  EXPECT_EQ(simplify(l).edge_count(), 3);
  auto p3 = gen_path(3).graph;
  EXPECT_EQ(line_graph(p3).vertex_count(), 2);
  EXPECT_EQ(line_graph(p3).edge_count(), 1);
}

TEST(Metrics, Girth) {
  auto m = metrics(gen_petersen().graph);
  EXPECT_EQ(m.max_degree, 3);
  EXPECT_EQ(m.girth, 5);
  EXPECT_TRUE(metrics(gen_path(6).graph).girth_infinite());
  EXPECT_EQ(girth(MultiGraph(2, {{0, 1}, {0, 1}})), 2);
  EXPECT_EQ(girth(gen_cycle(7).graph), 7);
}

TEST(Faces, TriangleAndSquare) {
  auto tri = gen_cycle(3);
  auto fs = faces(tri.graph, *tri.rotation);
  ASSERT_EQ(fs.faces.size(), 2U);
  EXPECT_EQ(fs.max_face_size, 3);
  auto c4 = gen_cycle(4);
  auto f4 = faces(c4.graph, *c4.rotation);
  ASSERT_EQ(f4.faces.size(), 2U);
  for (const auto& f : f4.faces) EXPECT_EQ(f.size(), 4);
}

TEST(Faces, K4HasFourTriangles) {
  auto k4 = gen_k4();
  auto fs = faces(k4.graph, *k4.rotation);
  ASSERT_EQ(fs.faces.size(), 4U);
  for (const auto& f : fs.faces) EXPECT_EQ(f.size(), 3);
}

TEST(Faces, EulerOnGeneratedPlaneGraphs) {
  std::vector<GeneratedInstance> plane{gen_k4(), gen_icosahedron(), gen_wheel(7), gen_fan(6), gen_star(5)};
  for (int m = 2; m <= 8; ++m) plane.push_back(gen_Gm(m));
  for (const auto& inst : plane) {
    auto fs = faces(inst.graph, *inst.rotation);
    const int comps = components(inst.graph).second;
    EXPECT_EQ(inst.graph.vertex_count() - inst.graph.edge_count() + static_cast<int>(fs.faces.size()), 1 + comps)
        << inst.family;
    // every dart used exactly once
    std::size_t darts = 0;
    for (const auto& f : fs.faces) darts += f.darts.size();
    EXPECT_EQ(darts, 2U * static_cast<std::size_t>(inst.graph.edge_count()));
  }
}

TEST(Faces, BadRotationRejected) {
  auto c4 = gen_cycle(4);
  RotationSystem rot = *c4.rotation;
  rot.order[0].pop_back();
  EXPECT_EQ(kind_of([&] { faces(c4.graph, rot); }), ErrorKind::InvalidRotation);
}

TEST(Contract, Examples) {
  auto tri = contract_edge_simplify(triangle(), 0);
  EXPECT_EQ(tri.graph.vertex_count(), 2);
  EXPECT_EQ(tri.graph.edge_count(), 1);
  auto p3 = gen_path(3).graph;  // a-b-c
  auto c = contract_edge_simplify(p3, 0);
  EXPECT_EQ(c.graph.vertex_count(), 2);
  EXPECT_EQ(c.graph.edge_count(), 1);
  auto c4 = contract_edge_simplify(gen_cycle(4).graph, 0);
  EXPECT_EQ(c4.graph.vertex_count(), 3);
  EXPECT_EQ(c4.graph.edge_count(), 3);
  EXPECT_TRUE(c4.graph.is_simple());
}

TEST(Contract, MergedVertexSeesUnionOfNeighbourhoods) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto g = simplify(gen_random_multigraph(6 + static_cast<int>(s % 8), 5, 1, s).graph);
    if (g.edge_count() == 0) continue;
    const EdgeId e = static_cast<EdgeId>(s % static_cast<std::uint64_t>(g.edge_count()));
    auto c = contract_edge_simplify(g, e);
    const Vertex a = g.edge(e).u, b = g.edge(e).v;
    std::set<Vertex> want;
    for (Vertex x : g.neighbours(a))
      if (x != b) want.insert(c.old_to_new[static_cast<std::size_t>(x)]);
    for (Vertex x : g.neighbours(b))
      if (x != a) want.insert(c.old_to_new[static_cast<std::size_t>(x)]);
    auto got = c.graph.neighbours(c.merged);
    EXPECT_EQ(std::set<Vertex>(got.begin(), got.end()), want);
    EXPECT_TRUE(c.graph.is_simple());
  }
}

TEST(Connectivity, CutVertices) {
  EXPECT_TRUE(is_two_connected(gen_cycle(5).graph));
  EXPECT_FALSE(is_two_connected(gen_path(4).graph));
  EXPECT_EQ(cut_vertices(gen_star(4).graph), std::vector<Vertex>{0});
}
