#pragma once

#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frugal/cyclic_bridge.hpp"
#include "frugal/edge_frugal.hpp"
#include "frugal/exact.hpp"
#include "frugal/generators.hpp"
#include "frugal/io.hpp"
#include "frugal/outerplanar.hpp"
#include "frugal/planar.hpp"
#include "frugal/validators.hpp"

namespace frugal::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

/// Structured result of one command; `report` goes to stdout.
struct Outcome {
  int code = kOk;
  Json report = Json::object();
};

/// --budget if given, else FRUGAL_NODE_BUDGET, else the library default.
inline std::uint64_t node_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FRUGAL_NODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    throw Error(ErrorKind::ParseError, "FRUGAL_NODE_BUDGET is not a number");
  }
  return kDefaultNodeBudget;
}

inline Json violation_json(const Verdict& v) {
  if (!v) return nullptr;
  return {{"kind", std::string(to_string(v->kind))}, {"witness", v->witness}, {"colours", v->colours}};
}

inline Json bound_json(const BoundSpec& b) {
  Json j{{"family", to_string(b.family)}, {"max_degree", b.max_degree}, {"k", b.k},
         {"value", b.value},              {"applicable", b.applicable}, {"conjectural", b.conjectural}};
  if (b.girth) j["girth"] = *b.girth;
  if (!b.reason.empty()) j["reason"] = b.reason;
  return j;
}

/// Colouring keyed by item name, in file order.
inline Json named(const std::vector<std::string>& names, const std::vector<int>& values) {
  Json j = Json::object();
  for (std::size_t i = 0; i < values.size() && i < names.size(); ++i) j[names[i]] = values[i];
  return j;
}

inline Json exact_json(const ExactResult& r, const std::vector<std::string>& names) {
  Json j{{"status", std::string(to_string(r.status))}, {"lower_bound", r.lower_bound}, {"nodes", r.nodes}};
  if (r.status == SearchStatus::Optimal) {
    j["value"] = r.optimum;
    j["witness"] = named(names, r.witness);
  }
  return j;
}

inline Outcome outcome_from(const Verdict& v, Json report) {
  report["valid"] = !v.has_value();
  report["violation"] = violation_json(v);
  return {v ? kViolation : kOk, std::move(report)};
}

template <typename T>
const T& require_field(const std::optional<T>& field, const char* what) {
  if (!field) throw Error(ErrorKind::Precondition, std::string("graph file has no ") + what);
  return *field;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  int n = 0;
  int m = 0;
  int left = 0;
  int right = 0;
  int max_degree = 0;
  int multiplicity = 1;
  std::optional<std::uint64_t> seed;
};

inline GeneratedInstance generate(const GenerateArgs& a) {
  auto seeded = [&]() {
    if (!a.seed) throw Error(ErrorKind::Precondition, "family '" + a.family + "' is random and needs --seed");
    return *a.seed;
  };
  if (a.family == "Gm") return gen_Gm(a.m);
  if (a.family == "Tm") return gen_Tm(a.m);
  if (a.family == "outerplanar") return gen_random_maximal_outerplanar(a.n, seeded());
  if (a.family == "multigraph") return gen_random_multigraph(a.n, a.max_degree, a.multiplicity, seeded());
  if (a.family == "bipartite")
    return gen_random_bipartite_multigraph(a.left, a.right, a.max_degree, a.multiplicity, seeded());
  return gen_named(a.family, a.n);
}

inline GraphFile file_of(const GeneratedInstance& inst) {
  GraphFile f;
  f.graph = inst.graph;
  f.rotation = inst.rotation;
  return f;
}

// ---------------------------------------------------------------------------

inline Outcome validate_command(const std::string& what, const GraphFile& f, int k, int p, int q, bool lists) {
  const MultiGraph& g = f.graph;
  Json report{{"object", what}};
  if (what == "vertex") {
    const auto& c = require_field(f.vertex_colouring, "vertex_colouring");
    Verdict v = validate_frugal_vertex(g, k, c);
    if (!v && lists) v = validate_lists(c, require_field(f.vertex_lists, "vertex_lists"));
    report["k"] = k;
    report["colours"] = colour_count(c);
    return outcome_from(v, std::move(report));
  }
  if (what == "edge") {
    const auto& c = require_field(f.edge_colouring, "edge_colouring");
    Verdict v = validate_frugal_edge(g, k, c);
    if (!v && lists) v = validate_lists(c, require_field(f.edge_lists, "edge_lists"));
    report["k"] = k;
    report["colours"] = colour_count(c);
    return outcome_from(v, std::move(report));
  }
  if (what == "lpq") {
    const auto& l = require_field(f.labelling, "labelling");
    report["p"] = p;
    report["q"] = q;
    report["span"] = label_span(l);
    return outcome_from(validate_Lpq(g, p, q, l), std::move(report));
  }
  // faces
  const auto& rot = require_field(f.rotation, "rotation");
  const auto& c = require_field(f.vertex_colouring, "vertex_colouring");
  auto fs = faces(g, rot);
  std::vector<std::vector<Vertex>> sets;
  for (const auto& face : fs.faces) sets.push_back(face.distinct_vertices());
  report["faces"] = sets.size();
  report["max_face_size"] = fs.max_face_size;
  return outcome_from(validate_face_rainbow(g, sets, c), std::move(report));
}

// ---------------------------------------------------------------------------

/// Runs a vertex algorithm, re-validates its output, and records it in `f`.
inline Outcome colour_vertex_command(const std::string& algo, GraphFile& f, int k, bool use_lists) {
  const MultiGraph& g = f.graph;
  const int delta = g.max_degree();
  Json report{{"algorithm", algo}, {"k", k}, {"max_degree", delta}};
  auto lists_for = [&](long need) {
    report["required_list_size"] = need;
    if (use_lists) return require_field(f.vertex_lists, "vertex_lists");
    return ListAssignment::uniform(g.vertex_count(), static_cast<int>(need));
  };
  std::optional<ListAssignment> lists;
  VertexColouring c;
  if (algo == "planar") {
    lists = lists_for(planar_list_requirement(delta, k));
    c = colour_planar_frugal(g, k, *lists);
    report["bounds"] = Json::array({bound_json(bound_value(BoundFamily::Theorem4, delta, k))});
  } else if (algo == "outerplanar") {
    lists = lists_for(floor_div(delta - 1, k) + 3);
    c = colour_outerplanar(g, k, *lists);
    report["bounds"] = Json::array({bound_json(bound_value(BoundFamily::Theorem11, delta, k))});
  } else if (algo == "outerplanar2") {
    lists = lists_for(floor_div(delta - 2, k) + 3);
    c = colour_outerplanar_2connected(g, k, *lists);
    report["bounds"] = Json::array({bound_json(bound_value(BoundFamily::Theorem12, delta, k))});
  } else {
    if (use_lists) throw Error(ErrorKind::Precondition, "via-lambda takes no lists");
    Labelling f_star = greedy_L_k1(g, k);
    c = label_to_frugal(f_star, k);
    report["label_span"] = label_span(f_star);
    report["colour_bound"] = ceil_div(label_span(f_star), k);
  }
  report["colours"] = colour_count(c);
  report["colouring"] = named(g.vertex_names(), c);
  Verdict v = validate_frugal_vertex(g, k, c);
  if (!v && lists) v = validate_lists(c, *lists);
  f.vertex_colouring = c;
  if (lists && !use_lists) f.vertex_lists = lists;
  return outcome_from(v, std::move(report));
}

inline Outcome colour_edge_command(GraphFile& f, int k, bool use_lists) {
  const MultiGraph& g = f.graph;
  const int delta = g.max_degree();
  std::optional<ListAssignment> lists;
  if (use_lists) lists = require_field(f.edge_lists, "edge_lists");
  EdgeColouring c = colour_edges_frugal(g, k, lists);
  Json report{{"k", k}, {"max_degree", delta}, {"pipeline", k % 2 == 0 ? "even" : "odd"}};
  report["colours"] = colour_count(c);
  report["bounds"] =
      Json::array({bound_json(bound_value(k % 2 == 0 ? BoundFamily::EdgeEven : BoundFamily::EdgeOdd, delta, k))});
  report["colouring"] = named(g.edge_names(), c);
  Verdict v = validate_frugal_edge(g, k, c);
  if (!v && lists) v = validate_lists(c, *lists);
  f.edge_colouring = c;
  return outcome_from(v, std::move(report));
}

// ---------------------------------------------------------------------------

inline Outcome exact_command(const std::string& what, const GraphFile& f, int k, int p, int q,
                             std::uint64_t budget) {
  const MultiGraph& g = f.graph;
  ExactResult r;
  Json report{{"quantity", what}, {"budget", budget}};
  std::vector<std::string> names = g.vertex_names();
  if (what == "chi-k") {
    report["k"] = k;
    r = exact_frugal_chromatic(g, k, -1, budget);
  } else if (what == "chi-k-edge") {
    report["k"] = k;
    names = g.edge_names();
    r = exact_frugal_chromatic_index(g, k, -1, budget);
  } else if (what == "lambda") {
    report["p"] = p;
    report["q"] = q;
    r = exact_lambda(g, p, q, -1, budget);
  } else {
    auto fs = faces(g, require_field(f.rotation, "rotation"));
    std::vector<std::vector<Vertex>> sets;
    for (const auto& face : fs.faces) sets.push_back(face.distinct_vertices());
    report["max_face_size"] = fs.max_face_size;
    r = exact_rainbow_face_chromatic(g, sets, -1, budget);
  }
  report["result"] = exact_json(r, names);
  return {r.budget_exhausted() ? kBudget : kOk, std::move(report)};
}

inline Outcome square_command(GraphFile& f, int k, std::uint64_t budget) {
  const MultiGraph& g = f.graph;
  const auto& rot = require_field(f.rotation, "rotation");
  VertexColouring frugal_c;
  Json report{{"k", k}};
  if (f.vertex_colouring) {
    frugal_c = *f.vertex_colouring;
    report["frugal_source"] = "file";
  } else {
    frugal_c = colour_planar_frugal(g, k, ListAssignment::uniform(g.vertex_count(), static_cast<int>(
                                                                                        planar_list_requirement(g.max_degree(), k))));
    report["frugal_source"] = "planar";
  }
  SquareColouringReport sq = colour_square_via_classes(g, rot, k, frugal_c, budget);
  report["frugal_colours"] = sq.frugal_colours;
  report["total_colours"] = sq.total_colours;
  report["class_budget"] = sq.class_budget;
  report["combined_bound"] = sq.combined_bound;
  report["max_degree_bound"] = sq.max_degree_bound;
  Json classes = Json::array();
  for (const auto& c : sq.classes)
    classes.push_back({{"class", c.class_colour},
                       {"size", c.size},
                       {"colours", c.colours_used},
                       {"largest_special_set", c.largest_special_set},
                       {"over_class_budget", c.over_class_budget}});
  report["classes"] = classes;
  report["nodes"] = sq.nodes;
  report["colouring"] = named(g.vertex_names(), sq.colouring);
  f.vertex_colouring = sq.colouring;
  return outcome_from(validate_proper_vertex(square(g), sq.colouring), std::move(report));
}

// ---------------------------------------------------------------------------

/// Runs one seeded corpus and counts failures: invalid output or a colour
/// count above the guaranteed bound.
inline Outcome bench_command(const std::string& corpus, std::uint64_t seed, int count) {
  Json report{{"corpus", corpus}, {"seed", seed}, {"count", count}};
  int failures = 0;
  int runs = 0;
  Json failed = Json::array();
  auto note = [&](bool ok, const std::string& what) {
    ++runs;
    if (!ok) {
      ++failures;
      failed.push_back(what);
    }
  };
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const std::string tag = corpus + "#" + std::to_string(i);
    if (corpus == "edge") {
      auto g = gen_random_multigraph(2 + static_cast<int>(s % 39), 1 + static_cast<int>(s % 20),
                                     1 + static_cast<int>(s % 4), s)
                   .graph;
      for (int k = 1; k <= 6; ++k) {
        EdgeColouring c = colour_edges_frugal(g, k);
        const long bound = k % 2 == 0 ? ceil_div(g.max_degree(), k) : odd_k_palette(g.max_degree(), k);
        note(!validate_frugal_edge(g, k, c) && colour_count(c) <= bound, tag + " k=" + std::to_string(k));
      }
    } else if (corpus == "outerplanar") {
      auto g = gen_random_maximal_outerplanar(4 + static_cast<int>(s % 57), s).graph;
      for (int k = 2; k <= 4; ++k) {
        if (g.max_degree() < 3) continue;
        auto lists = ListAssignment::uniform(g.vertex_count(), static_cast<int>(floor_div(g.max_degree() - 1, k) + 3));
        note(!validate_frugal_vertex(g, k, colour_outerplanar(g, k, lists)), tag + " k=" + std::to_string(k));
      }
    } else if (corpus == "planar") {
      auto g = gen_Gm(2 + i % 7).graph;
      for (int k = 1; k <= 3; ++k) {
        auto lists =
            ListAssignment::uniform(g.vertex_count(), static_cast<int>(planar_list_requirement(g.max_degree(), k)));
        note(!validate_frugal_vertex(g, k, colour_planar_frugal(g, k, lists)), tag + " k=" + std::to_string(k));
      }
    } else {
      throw Error(ErrorKind::Precondition, "unknown corpus '" + corpus + "'");
    }
  }
  report["runs"] = runs;
  report["failures"] = failures;
  report["failed"] = failed;
  return {failures == 0 ? kOk : kViolation, std::move(report)};
}

}  // namespace frugal::cli
