#include <gtest/gtest.h>

#include <random>

#include "frugal/generators.hpp"
#include "frugal/validators.hpp"
#include "oracles.hpp"

using namespace frugal;

TEST(FrugalVertex, Examples) {
  auto c5 = gen_cycle(5).graph;
  EXPECT_FALSE(validate_frugal_vertex(c5, 1, VertexColouring{1, 2, 3, 4, 5}));
  auto star = gen_star(4).graph;
  auto v = validate_frugal_vertex(star, 2, VertexColouring{2, 1, 1, 1, 1});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::Frugality);
  EXPECT_EQ(v->witness.front(), 0);
  auto adj = validate_frugal_vertex(c5, 5, VertexColouring{1, 1, 2, 3, 4});
  ASSERT_TRUE(adj);
  EXPECT_EQ(adj->kind, ViolationKind::Adjacency);
}

TEST(FrugalVertex, DistinctNeighboursNotEdges) {
  // four parallel edges to one neighbour count once
  MultiGraph g(3, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 2}});
  EXPECT_FALSE(validate_frugal_vertex(g, 1, VertexColouring{1, 2, 3}));
}

TEST(FrugalEdge, Examples) {
  EXPECT_FALSE(validate_frugal_edge(gen_cycle(5).graph, 2, EdgeColouring(5, 1)));
  auto v = validate_frugal_edge(gen_Tm(1).graph, 1, EdgeColouring(3, 1));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::Frugality);
  // parallel edges are separate incidences
  MultiGraph par(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_TRUE(validate_frugal_edge(par, 2, EdgeColouring{1, 1, 1}));
  EXPECT_FALSE(validate_frugal_edge(par, 3, EdgeColouring{1, 1, 1}));
}

TEST(Lpq, Examples) {
  MultiGraph k2(2, {{0, 1}});
  EXPECT_FALSE(validate_Lpq(k2, 2, 1, Labelling{1, 3}));
  auto p3 = gen_path(3).graph;
  auto v = validate_Lpq(p3, 2, 1, Labelling{1, 2, 3});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::Separation);
  EXPECT_FALSE(validate_Lpq(gen_cycle(5).graph, 2, 1, Labelling{1, 3, 5, 2, 4}));
  EXPECT_TRUE(validate_Lpq(gen_cycle(5).graph, 2, 1, Labelling{1, 3, 5, 2, 5}));
}

TEST(FaceRainbow, Examples) {
  auto tri = gen_cycle(3).graph;
  EXPECT_FALSE(validate_face_rainbow(tri, {{0, 1, 2}}, VertexColouring{1, 2, 3}));
  auto c4 = gen_cycle(4).graph;
  auto v = validate_face_rainbow(c4, {{0, 1, 2, 3}}, VertexColouring{1, 2, 1, 2});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::FaceRainbow);
}

TEST(Lists, Examples) {
  ListAssignment l({{1, 3}});
  EXPECT_FALSE(validate_lists(VertexColouring{3}, l));
  EXPECT_TRUE(validate_lists(VertexColouring{2}, l));
}

TEST(FrugalVertex, LargeKIsProperColouring) {
  std::mt19937_64 rng(5);
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto g = gen_random_multigraph(3 + static_cast<int>(s % 8), 4, 2, s).graph;
    VertexColouring c(static_cast<std::size_t>(g.vertex_count()));
    for (auto& x : c) x = 1 + static_cast<int>(rng() % 3);
    EXPECT_EQ(validate_frugal_vertex(g, g.max_degree() + 1, c).has_value(), validate_proper_vertex(g, c).has_value());
  }
}

TEST(FrugalVertex, OneFrugalIsSquareColouring) {
  std::mt19937_64 rng(6);
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto g = gen_random_multigraph(3 + static_cast<int>(s % 8), 4, 2, s).graph;
    VertexColouring c(static_cast<std::size_t>(g.vertex_count()));
    for (auto& x : c) x = 1 + static_cast<int>(rng() % 6);
    EXPECT_EQ(!validate_frugal_vertex(g, 1, c), oracle::is_square_proper(g, c));
  }
}

TEST(Validators, MonotoneInK) {
  std::mt19937_64 rng(7);
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto g = gen_random_multigraph(3 + static_cast<int>(s % 8), 5, 3, s).graph;
    VertexColouring c(static_cast<std::size_t>(g.vertex_count()));
    for (auto& x : c) x = 1 + static_cast<int>(rng() % 4);
    EdgeColouring ec(static_cast<std::size_t>(g.edge_count()));
    for (auto& x : ec) x = 1 + static_cast<int>(rng() % 3);
    for (int k = 1; k < 5; ++k) {
      if (!validate_frugal_vertex(g, k, c)) EXPECT_FALSE(validate_frugal_vertex(g, k + 1, c));
      if (!validate_frugal_edge(g, k, ec)) EXPECT_FALSE(validate_frugal_edge(g, k + 1, ec));
    }
  }
}

TEST(Validators, AgreeWithNaiveCheck) {
  std::mt19937_64 rng(8);
  for (std::uint64_t s = 0; s < 500; ++s) {
    auto g = gen_random_multigraph(2 + static_cast<int>(s % 9), 5, 3, s).graph;
    const int k = 1 + static_cast<int>(s % 3);
    VertexColouring c(static_cast<std::size_t>(g.vertex_count()));
    for (auto& x : c) x = 1 + static_cast<int>(rng() % 5);
    EdgeColouring ec(static_cast<std::size_t>(g.edge_count()));
    for (auto& x : ec) x = 1 + static_cast<int>(rng() % 3);
    Labelling f(static_cast<std::size_t>(g.vertex_count()));
    for (auto& x : f) x = 1 + static_cast<int>(rng() % 9);
    EXPECT_EQ(!validate_frugal_vertex(g, k, c), oracle::is_frugal_vertex(g, k, c));
    EXPECT_EQ(!validate_frugal_edge(g, k, ec), oracle::is_frugal_edge(g, k, ec));
    EXPECT_EQ(!validate_Lpq(g, 2, 1, f), oracle::is_Lpq(g, 2, 1, f));
  }
}
