#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frugal/bipartite.hpp"
#include "frugal/cyclic_bridge.hpp"
#include "frugal/edge_frugal.hpp"
#include "frugal/exact.hpp"
#include "frugal/generators.hpp"
#include "frugal/io.hpp"
#include "frugal/outerplanar.hpp"
#include "frugal/planar.hpp"
#include "frugal/validators.hpp"
#include "oracles.hpp"

using namespace frugal;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int ceil_ratio(int a, int b) { return (a + b - 1) / b; }

/// Accumulates failures for one criterion and keeps the first few messages.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

/// Lists of the given size drawn from a pool only one colour larger, so
/// neighbouring items share almost everything.
std::vector<std::vector<Colour>> tight_lists(int items, int size, std::mt19937_64& rng) {
  std::vector<std::vector<Colour>> out;
  for (int i = 0; i < items; ++i) {
    std::vector<Colour> pool;
    for (int c = 1; c <= size + 1; ++c) pool.push_back(c);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(size));
    std::sort(pool.begin(), pool.end());
    out.push_back(pool);
  }
  return out;
}

/// The shared edge corpus: n <= 40, maximum degree <= 20, multiplicity <= 4.
std::vector<MultiGraph> edge_corpus() {
  std::vector<MultiGraph> out;
  for (std::uint64_t s = 0; out.size() < 240; ++s) {
    auto g = gen_random_multigraph(2 + static_cast<int>(s % 39), 1 + static_cast<int>((s * 7) % 20),
                                   1 + static_cast<int>(s % 4), 1000 + s)
                 .graph;
    if (g.edge_count() > 0) out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::string> data_files() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(FRUGAL_DATA_DIR))
    if (entry.path().extension() == ".json") out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

Tally even_k_equality(const std::vector<MultiGraph>& corpus, std::string& detail) {
  Tally t;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i];
    for (int k : {2, 4, 6}) {
      auto c = colour_edges_even_k(g, k);
      const std::string tag = "graph " + std::to_string(i) + " k=" + std::to_string(k);
      t.expect(!validate_frugal_edge(g, k, c) && oracle::is_frugal_edge(g, k, c), tag + " not frugal");
      t.expect(oracle::distinct(c) == ceil_ratio(g.max_degree(), k), tag + " colour count");
    }
  }
  const double secs = seconds_since(start);
  t.expect(secs < 60.0, "corpus took " + std::to_string(secs) + " s");
  detail = std::to_string(corpus.size()) + " multigraphs x k in {2,4,6}, " + std::to_string(secs) + " s";
  return t;
}

Tally even_k_lists(const std::vector<MultiGraph>& corpus, std::string& detail) {
  Tally t;
  std::mt19937_64 rng(2);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i];
    for (int k : {2, 4, 6}) {
      auto raw = tight_lists(g.edge_count(), ceil_ratio(g.max_degree(), k), rng);
      const std::string tag = "graph " + std::to_string(i) + " k=" + std::to_string(k);
      try {
        auto c = colour_edges_even_k(g, k, ListAssignment(raw));
        t.expect(oracle::is_frugal_edge(g, k, c), tag + " not frugal");
        t.expect(oracle::in_lists(c, raw), tag + " leaves its lists");
      } catch (const Error& e) {
        t.expect(false, tag + " threw " + e.what());
      }
    }
  }
  detail = std::to_string(corpus.size()) + " multigraphs x k in {2,4,6}, lists of size ceil(D/k)";
  return t;
}

Tally odd_k_bound(const std::vector<MultiGraph>& corpus, std::string& detail) {
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i];
    for (int k : {1, 3, 5}) {
      auto c = colour_edges_odd_k(g, k);
      const int bound = ceil_ratio(3 * g.max_degree(), 3 * k - 1);
      const std::string tag = "graph " + std::to_string(i) + " k=" + std::to_string(k);
      t.expect(oracle::is_frugal_edge(g, k, c), tag + " not frugal");
      t.expect(oracle::distinct(c) <= bound, tag + " uses " + std::to_string(oracle::distinct(c)) + " > " +
                                                 std::to_string(bound));
    }
  }
  for (int m = 1; m <= 6; ++m) {
    auto g = gen_Tm(m).graph;
    for (int k : {1, 3, 5}) {
      const int want = ceil_ratio(3 * m, 3 * ((k - 1) / 2) + 1);
      auto r = exact_frugal_chromatic_index(g, k);
      const std::string tag = "T" + std::to_string(m) + " k=" + std::to_string(k);
      t.expect(r.status == SearchStatus::Optimal && r.optimum == want, tag + " exact value");
      auto c = colour_edges_odd_k(g, k);
      t.expect(oracle::is_frugal_edge(g, k, c) && oracle::distinct(c) == want, tag + " constructive value");
    }
  }
  detail = std::to_string(corpus.size()) + " multigraphs x k in {1,3,5}; T_m for m=1..6 tight";
  return t;
}

Tally oracle_anchors(std::string& detail) {
  Tally t;
  const std::uint64_t budget = 10'000'000;
  double slowest = 0;
  auto timed = [&](const MultiGraph& g, int k) {
    const auto start = Clock::now();
    auto r = exact_frugal_chromatic(g, k, -1, budget);
    const double secs = seconds_since(start);
    slowest = std::max(slowest, secs);
    t.expect(secs < 30.0, "search took " + std::to_string(secs) + " s");
    t.expect(r.status == SearchStatus::Optimal, "search not optimal");
    return r.optimum;
  };
  t.expect(timed(gen_cycle(5).graph, 1) == 5, "C5");
  t.expect(timed(gen_petersen().graph, 1) == 10, "Petersen");
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 4; ++k)
      t.expect(timed(gen_star(n).graph, k) == ceil_ratio(n, k) + 1,
               "star n=" + std::to_string(n) + " k=" + std::to_string(k));
  detail = "C5, Petersen, 32 stars; slowest " + std::to_string(slowest) + " s";
  return t;
}

Tally gm_witness(std::string& detail) {
  Tally t;
  auto g2 = exact_frugal_chromatic(gen_Gm(2).graph, 2);
  t.expect(g2.status == SearchStatus::Optimal && g2.optimum == 4, "G2");
  t.expect(oracle::is_frugal_vertex(gen_Gm(2).graph, 2, g2.witness), "G2 witness");
  auto g4 = exact_frugal_chromatic(gen_Gm(4).graph, 2, -1, 100'000'000);
  t.expect(g4.status == SearchStatus::Optimal && g4.optimum == 6, "G4");
  t.expect(oracle::is_frugal_vertex(gen_Gm(4).graph, 2, g4.witness), "G4 witness");
  detail = "G2 = " + std::to_string(g2.optimum) + ", G4 = " + std::to_string(g4.optimum) + " (" +
           std::to_string(g4.nodes) + " nodes)";
  return t;
}

Tally label_conversion(std::string& detail) {
  Tally t;
  long greedy_runs = 0;
  long exact_runs = 0;
  auto check = [&](const MultiGraph& g, int k, const Labelling& f, const std::string& tag) {
    if (!oracle::is_Lpq(g, k, 1, f)) return;  // only valid labellings are in scope
    auto c = label_to_frugal(f, k);
    t.expect(!validate_frugal_vertex(g, k, c) && oracle::is_frugal_vertex(g, k, c), tag + " not frugal");
    t.expect(oracle::distinct(c) <= ceil_ratio(label_span(f), k), tag + " too many colours");
  };
  for (std::uint64_t s = 0; s < 300; ++s) {
    auto g = simplify(gen_random_multigraph(2 + static_cast<int>(s % 30), 1 + static_cast<int>(s % 8), 1, s).graph);
    for (int k = 1; k <= 4; ++k) {
      auto f = greedy_L_k1(g, k);
      t.expect(oracle::is_Lpq(g, k, 1, f), "greedy labelling invalid");
      check(g, k, f, "greedy seed " + std::to_string(s));
      ++greedy_runs;
      if (g.vertex_count() <= 7) {
        auto r = exact_lambda(g, k, 1);
        if (r.status == SearchStatus::Optimal) {
          check(g, k, r.witness, "exact seed " + std::to_string(s));
          ++exact_runs;
        }
      }
    }
  }
  detail = std::to_string(greedy_runs) + " greedy and " + std::to_string(exact_runs) + " optimal labellings";
  return t;
}

Tally outerplanar(std::string& detail) {
  Tally t;
  int general = 0;
  int two_connected = 0;
  for (std::uint64_t s = 0; s < 240; ++s) {
    const int n = 3 + static_cast<int>(s % 58);
    auto g = gen_random_maximal_outerplanar(n, 500 + s).graph;
    const int delta = g.max_degree();
    const std::string tag = "n=" + std::to_string(n) + " seed " + std::to_string(500 + s);
    for (int k = 2; k <= 4 && delta >= 3; ++k) {
      auto c = colour_outerplanar(g, k, ListAssignment::uniform(n, static_cast<int>(floor_div(delta - 1, k) + 3)));
      t.expect(oracle::is_frugal_vertex(g, k, c), tag + " general k=" + std::to_string(k));
      ++general;
    }
    for (int k = 1; k <= 3 && delta >= 7; ++k) {
      auto c = colour_outerplanar_2connected(g, k,
                                             ListAssignment::uniform(n, static_cast<int>(floor_div(delta - 2, k) + 3)));
      t.expect(oracle::is_frugal_vertex(g, k, c), tag + " 2-connected k=" + std::to_string(k));
      ++two_connected;
    }
  }
  t.expect(general >= 200 * 3 / 2, "too few runs of the general algorithm");
  t.expect(two_connected >= 200, "too few runs of the 2-connected algorithm");
  int exact = 0;
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 4 + static_cast<int>(s % 9);
    auto g = gen_random_maximal_outerplanar(n, 900 + s).graph;
    if (g.max_degree() < 3) continue;
    for (int k = 2; k <= 3; ++k) {
      auto r = exact_frugal_chromatic(g, k);
      t.expect(r.status == SearchStatus::Optimal && r.optimum <= floor_div(g.max_degree() - 1, k) + 3,
               "exact above bound, n=" + std::to_string(n));
      ++exact;
    }
  }
  detail = "240 instances: " + std::to_string(general) + " general runs, " + std::to_string(two_connected) +
           " 2-connected runs, " + std::to_string(exact) + " exact checks with n <= 12";
  return t;
}

Tally planar(std::string& detail) {
  Tally t;
  std::vector<std::pair<std::string, MultiGraph>> graphs;
  for (int m = 2; m <= 8; ++m) graphs.emplace_back("G" + std::to_string(m), gen_Gm(m).graph);
  for (const auto& path : data_files()) graphs.emplace_back(std::filesystem::path(path).filename().string(),
                                                              read_graph_file(path).graph);
  std::mt19937_64 rng(8);
  for (const auto& [name, g] : graphs) {
    for (int k = 1; k <= 3; ++k) {
      const int need = static_cast<int>(planar_list_requirement(g.max_degree(), k));
      const std::string tag = name + " k=" + std::to_string(k);
      for (int variant = 0; variant < 2; ++variant) {
        std::vector<std::vector<Colour>> raw =
            variant == 0 ? ListAssignment::uniform(g.vertex_count(), need).lists : tight_lists(g.vertex_count(), need, rng);
        try {
          auto c = colour_planar_frugal(g, k, ListAssignment(raw));
          t.expect(oracle::is_frugal_vertex(g, k, c), tag + " not frugal");
          t.expect(oracle::in_lists(c, raw), tag + " leaves its lists");
        } catch (const Error& e) {
          t.expect(false, tag + " threw " + e.what());
        }
      }
    }
  }
  detail = std::to_string(graphs.size()) + " graphs (G2..G8 and curated files) x k in {1,2,3}";
  return t;
}

Tally cyclic_bridge(std::string& detail) {
  Tally t;
  std::vector<GeneratedInstance> family{gen_Gm(4)};
  for (int n = 3; n <= 20; ++n) family.push_back(gen_cycle(n));
  int largest = 0;
  for (const auto& inst : family) {
    const auto& g = inst.graph;
    for (int k : {4, 6}) {
      auto f = colour_planar_frugal(
          g, k, ListAssignment::uniform(g.vertex_count(), static_cast<int>(planar_list_requirement(g.max_degree(), k))));
      const std::string tag = inst.family + " n=" + std::to_string(g.vertex_count()) + " k=" + std::to_string(k);
      auto rep = colour_square_via_classes(g, *inst.rotation, k, f);
      t.expect(oracle::is_square_proper(g, rep.colouring), tag + " not proper on the square");
      for (const auto& cr : rep.classes) {
        t.expect(cr.largest_special_set <= k, tag + " special set above k");
        largest = std::max(largest, cr.largest_special_set);
      }
    }
  }
  detail = "G4 and C3..C20 for k in {4,6}; largest special set " + std::to_string(largest);
  return t;
}

Tally galvin(std::string& detail) {
  Tally t;
  std::mt19937_64 rng(10);
  int instances = 0;
  for (std::uint64_t s = 0; instances < 120; ++s) {
    const int left = 1 + static_cast<int>(s % 10);
    const int right = 1 + static_cast<int>((s / 3) % 10);
    auto h = gen_random_bipartite_multigraph(left, right, 1 + static_cast<int>(s % 8), 1 + static_cast<int>(s % 3), s)
                 .graph;
    if (h.edge_count() == 0) continue;
    ++instances;
    auto raw = tight_lists(h.edge_count(), h.max_degree(), rng);
    auto c = galvin_list_edge_colour(h, left, ListAssignment(raw));
    t.expect(oracle::is_proper_edge(h, c) && oracle::in_lists(c, raw), "seed " + std::to_string(s));
  }
  // greedy in edge order gives e0 colour 1 and e1 colour 2, leaving e2 nothing
  MultiGraph reg(4, {{0, 2}, {1, 3}, {0, 3}, {1, 2}});
  ListAssignment lists({{1, 2}, {2, 3}, {1, 2}, {1, 2}});
  t.expect(!greedy_list_edge_colour(reg, lists).has_value(), "greedy no longer fails on the regression instance");
  auto c = galvin_list_edge_colour(reg, 2, lists);
  t.expect(oracle::is_proper_edge(reg, c) && oracle::in_lists(c, lists.lists), "regression instance");
  detail = std::to_string(instances) + " bipartite multigraphs with lists of size D, plus the greedy-failure instance";
  return t;
}

// ---------------------------------------------------------------------------

bool adjacent(const std::vector<std::vector<bool>>& a, int u, int v) {
  return u >= 0 && v >= 0 && static_cast<std::size_t>(u) < a.size() && static_cast<std::size_t>(v) < a.size() &&
         a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

bool vertex_witness_holds(const MultiGraph& g, int k, const VertexColouring& c, const Violation& v) {
  auto a = oracle::adjacency(g);
  auto col = [&](int x) { return c[static_cast<std::size_t>(x)]; };
  if (v.kind == ViolationKind::Adjacency)
    return v.witness.size() == 2 && adjacent(a, v.witness[0], v.witness[1]) && col(v.witness[0]) == col(v.witness[1]);
  if (v.kind != ViolationKind::Frugality || static_cast<int>(v.witness.size()) != k + 2) return false;
  std::set<int> others(v.witness.begin() + 1, v.witness.end());
  if (static_cast<int>(others.size()) != k + 1) return false;
  for (int w : others)
    if (!adjacent(a, v.witness[0], w) || col(w) != v.colours.at(0)) return false;
  return true;
}

bool edge_witness_holds(const MultiGraph& g, int k, const EdgeColouring& c, const Violation& v) {
  if (v.kind != ViolationKind::Frugality || static_cast<int>(v.witness.size()) != k + 2) return false;
  std::set<int> edges(v.witness.begin() + 1, v.witness.end());
  if (static_cast<int>(edges.size()) != k + 1) return false;
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if ((ed.u != v.witness[0] && ed.v != v.witness[0]) || c[static_cast<std::size_t>(e)] != v.colours.at(0)) return false;
  }
  return true;
}

bool lpq_witness_holds(const MultiGraph& g, int p, int q, const Labelling& f, const Violation& v) {
  if (v.kind != ViolationKind::Separation || v.witness.size() != 2) return false;
  auto d = oracle::distances(g);
  const int a = v.witness[0];
  const int b = v.witness[1];
  const int dist = d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  const int gap = std::abs(f[static_cast<std::size_t>(a)] - f[static_cast<std::size_t>(b)]);
  return a != b && ((dist == 1 && gap < p) || (dist == 2 && gap < q));
}

bool rainbow_witness_holds(const MultiGraph& g, const std::vector<std::vector<Vertex>>& sets, const VertexColouring& c,
                           const Violation& v) {
  auto col = [&](int x) { return c[static_cast<std::size_t>(x)]; };
  if (v.kind == ViolationKind::Adjacency)
    return v.witness.size() == 2 && adjacent(oracle::adjacency(g), v.witness[0], v.witness[1]) &&
           col(v.witness[0]) == col(v.witness[1]);
  if (v.kind != ViolationKind::FaceRainbow || v.witness.size() != 3) return false;
  const auto& s = sets.at(static_cast<std::size_t>(v.witness[0]));
  auto in = [&](int x) { return std::find(s.begin(), s.end(), x) != s.end(); };
  return v.witness[1] != v.witness[2] && in(v.witness[1]) && in(v.witness[2]) && col(v.witness[1]) == col(v.witness[2]);
}

Tally validator_soundness(std::string& detail) {
  Tally t;
  std::mt19937_64 rng(11);
  auto draw = [&](int hi) { return 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(hi)); };
  const int rounds = 10'000;
  long ok[5] = {0, 0, 0, 0, 0};
  long bad[5] = {0, 0, 0, 0, 0};
  std::vector<GeneratedInstance> plane;
  for (std::uint64_t s = 0; s < 40; ++s) plane.push_back(gen_random_maximal_outerplanar(4 + static_cast<int>(s % 12), s));
  for (int m = 2; m <= 4; ++m) plane.push_back(gen_Gm(m));
  plane.push_back(gen_wheel(7));
  plane.push_back(gen_icosahedron());
  for (int i = 0; i < rounds; ++i) {
    auto g = gen_random_multigraph(2 + i % 10, 1 + i % 6, 1 + i % 3, 7000 + static_cast<std::uint64_t>(i)).graph;
    const int k = 1 + i % 3;
    const int palette = 2 + i % 9;

    VertexColouring vc(static_cast<std::size_t>(g.vertex_count()));
    for (auto& x : vc) x = draw(palette);
    if (auto v = validate_frugal_vertex(g, k, vc)) {
      ++bad[0];
      t.expect(!oracle::is_frugal_vertex(g, k, vc) && vertex_witness_holds(g, k, vc, *v), "vertex violation");
    } else {
      ++ok[0];
      t.expect(oracle::is_frugal_vertex(g, k, vc), "vertex ok verdict");
    }

    EdgeColouring ec(static_cast<std::size_t>(g.edge_count()));
    for (auto& x : ec) x = draw(1 + palette / 3);
    if (auto v = validate_frugal_edge(g, k, ec)) {
      ++bad[1];
      t.expect(!oracle::is_frugal_edge(g, k, ec) && edge_witness_holds(g, k, ec, *v), "edge violation");
    } else {
      ++ok[1];
      t.expect(oracle::is_frugal_edge(g, k, ec), "edge ok verdict");
    }

    const int p = 1 + i % 3;
    Labelling f(static_cast<std::size_t>(g.vertex_count()));
    for (auto& x : f) x = draw(palette * 3);
    if (auto v = validate_Lpq(g, p, 1, f)) {
      ++bad[2];
      t.expect(!oracle::is_Lpq(g, p, 1, f) && lpq_witness_holds(g, p, 1, f, *v), "L(p,q) violation");
    } else {
      ++ok[2];
      t.expect(oracle::is_Lpq(g, p, 1, f), "L(p,q) ok verdict");
    }

    const auto& inst = plane[static_cast<std::size_t>(i) % plane.size()];
    std::vector<std::vector<Vertex>> sets;
    for (const auto& face : faces(inst.graph, *inst.rotation).faces) sets.push_back(face.distinct_vertices());
    VertexColouring fc(static_cast<std::size_t>(inst.graph.vertex_count()));
    for (auto& x : fc) x = draw(3 + palette * 2);
    if (auto v = validate_face_rainbow(inst.graph, sets, fc)) {
      ++bad[3];
      t.expect(rainbow_witness_holds(inst.graph, sets, fc, *v), "face violation");
    } else {
      ++ok[3];
      bool fine = true;
      for (const auto& e : inst.graph.edges()) fine = fine && fc[static_cast<std::size_t>(e.u)] != fc[static_cast<std::size_t>(e.v)];
      for (const auto& s : sets) {
        std::vector<Colour> cs;
        for (Vertex x : s) cs.push_back(fc[static_cast<std::size_t>(x)]);
        fine = fine && oracle::distinct(cs) == static_cast<int>(s.size());
      }
      t.expect(fine, "face ok verdict");
    }

    auto raw = tight_lists(g.vertex_count(), 1 + i % 3, rng);
    if (auto v = validate_lists(vc, ListAssignment(raw))) {
      ++bad[4];
      const auto item = static_cast<std::size_t>(v->witness.at(0));
      t.expect(!oracle::in_lists(vc, raw) && std::find(raw[item].begin(), raw[item].end(), vc[item]) == raw[item].end(),
               "list violation");
    } else {
      ++ok[4];
      t.expect(oracle::in_lists(vc, raw), "list ok verdict");
    }
  }
  std::ostringstream os;
  os << rounds << " per validator; ok/violation split";
  const char* names[5] = {"vertex", "edge", "lpq", "faces", "lists"};
  for (int j = 0; j < 5; ++j) {
    os << " " << names[j] << " " << ok[j] << "/" << bad[j];
    t.expect(ok[j] > 0 && bad[j] > 0, std::string(names[j]) + " fuzz never hit both verdicts");
  }
  detail = os.str();
  return t;
}

}  // namespace

int main() {
  const auto corpus = edge_corpus();
  struct Criterion {
    int id;
    std::string name;
    std::function<Tally(std::string&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "even-k edge colouring uses exactly ceil(D/k) colours", [&](std::string& d) { return even_k_equality(corpus, d); }},
      {2, "even-k list edge colouring", [&](std::string& d) { return even_k_lists(corpus, d); }},
      {3, "odd-k edge bound and T_m tightness", [&](std::string& d) { return odd_k_bound(corpus, d); }},
      {4, "exact oracle anchors", oracle_anchors},
      {5, "G_m lower-bound witnesses", gm_witness},
      {6, "labelling to frugal colouring", label_conversion},
      {7, "outerplanar list colouring", outerplanar},
      {8, "planar list colouring", planar},
      {9, "square colouring by classes", cyclic_bridge},
      {10, "bipartite list edge colouring", galvin},
      {11, "validator soundness", validator_soundness},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    Tally t;
    const auto start = Clock::now();
    try {
      t = c.run(detail);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const bool pass = t.failures == 0;
    failed += pass ? 0 : 1;
    std::printf("%s %2d %s: %s [%ld checks, %.2f s]\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), detail.c_str(),
                t.checks, seconds_since(start));
    for (const auto& n : t.notes) std::printf("     %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
