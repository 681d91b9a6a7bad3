#pragma once

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frugal/cli_commands.hpp"

namespace frugal::cli {

/// Parses `args` (without the program name), runs the command, writes the
/// report to `out` and diagnostics to `err`, and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-frugal colouring toolkit", "frugal"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  int k = 1;
  int p = 2;
  int q = 1;
  bool use_lists = false;
  std::optional<std::uint64_t> budget;
  std::function<Outcome()> action;

  auto add_input = [&](CLI::App* cmd) { cmd->add_option("file", input, "graph file")->required(); };
  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", output, "write the graph file here"); };
  auto load = [&]() { return read_graph_file(input); };
  auto save = [&](const GraphFile& f) {
    if (output.empty()) return;
    std::ofstream o(output);
    if (!o) throw Error(ErrorKind::ParseError, output + ": cannot write");
    o << write_graph_json(f);
  };

  // generate
  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "emit a generated graph file");
  generate_cmd->add_option("family", gen.family,
                           "Gm Tm cycle path star wheel fan petersen k4 icosahedron outerplanar multigraph bipartite")
      ->required();
  generate_cmd->add_option("--n", gen.n);
  generate_cmd->add_option("--m", gen.m);
  generate_cmd->add_option("--left", gen.left);
  generate_cmd->add_option("--right", gen.right);
  generate_cmd->add_option("--max-degree", gen.max_degree);
  generate_cmd->add_option("--multiplicity", gen.multiplicity);
  generate_cmd->add_option("--seed", gen.seed);
  add_output(generate_cmd);
  generate_cmd->callback([&] {
    action = [&] {
      GraphFile f = file_of(generate(gen));
      if (output.empty()) {
        out << write_graph_json(f);
        return Outcome{kOk, nullptr};
      }
      save(f);
      return Outcome{kOk, Json{{"family", gen.family}, {"vertices", f.graph.vertex_count()},
                               {"edges", f.graph.edge_count()}, {"output", output}}};
    };
  });

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check a colouring or labelling stored in a graph file");
  validate_cmd->require_subcommand(1);
  for (const char* what : {"vertex", "edge", "lpq", "faces"}) {
    auto* sub = validate_cmd->add_subcommand(what);
    add_input(sub);
    sub->add_option("--k", k);
    sub->add_option("--p", p);
    sub->add_option("--q", q);
    sub->add_flag("--lists", use_lists, "also check list membership");
    sub->callback([&, what] { action = [&, what] { return validate_command(what, load(), k, p, q, use_lists); }; });
  }

  // colour
  auto* colour_cmd = app.add_subcommand("colour", "run a constructive colouring algorithm");
  colour_cmd->require_subcommand(1);
  std::string algo = "planar";
  auto* colour_vertex = colour_cmd->add_subcommand("vertex");
  colour_vertex->add_option("--algo", algo)
      ->check(CLI::IsMember({"planar", "outerplanar", "outerplanar2", "via-lambda"}));
  auto* colour_edge = colour_cmd->add_subcommand("edge");
  for (auto* sub : {colour_vertex, colour_edge}) {
    add_input(sub);
    add_output(sub);
    sub->add_option("--k", k)->required();
    sub->add_flag("--lists", use_lists, "use the lists stored in the file");
  }
  colour_vertex->callback([&] {
    action = [&] {
      GraphFile f = load();
      Outcome o = colour_vertex_command(algo, f, k, use_lists);
      save(f);
      return o;
    };
  });
  colour_edge->callback([&] {
    action = [&] {
      GraphFile f = load();
      Outcome o = colour_edge_command(f, k, use_lists);
      save(f);
      return o;
    };
  });

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "exact small-instance oracles");
  exact_cmd->require_subcommand(1);
  for (const char* what : {"chi-k", "chi-k-edge", "lambda", "rainbow"}) {
    auto* sub = exact_cmd->add_subcommand(what);
    add_input(sub);
    sub->add_option("--k", k);
    sub->add_option("--p", p);
    sub->add_option("--q", q);
    sub->add_option("--budget", budget, "search-node budget");
    sub->callback([&, what] { action = [&, what] { return exact_command(what, load(), k, p, q, node_budget(budget)); }; });
  }

  // square-via-cyclic
  auto* square_cmd = app.add_subcommand("square-via-cyclic", "colour the square of a plane graph class by class");
  add_input(square_cmd);
  add_output(square_cmd);
  square_cmd->add_option("--k", k)->required();
  square_cmd->add_option("--budget", budget, "search-node budget per class");
  square_cmd->callback([&] {
    action = [&] {
      GraphFile f = load();
      Outcome o = square_command(f, k, node_budget(budget));
      save(f);
      return o;
    };
  });

  // bounds
  std::string family;
  int delta = 0;
  std::optional<int> girth;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a closed-form bound");
  bounds_cmd->add_option("--family", family)->required();
  bounds_cmd->add_option("--delta", delta)->required();
  bounds_cmd->add_option("--k", k)->required();
  bounds_cmd->add_option("--girth", girth);
  bounds_cmd->callback([&] {
    action = [&] {
      auto fam = parse_bound_family(family);
      if (!fam) throw Error(ErrorKind::Precondition, "unknown bound family '" + family + "'");
      return Outcome{kOk, bound_json(bound_value(*fam, delta, k, girth))};
    };
  });

  // bench
  std::string corpus;
  std::uint64_t seed = 0;
  int count = 50;
  auto* bench_cmd = app.add_subcommand("bench", "run a seeded corpus and count failures");
  bench_cmd->add_option("--corpus", corpus)->required()->check(CLI::IsMember({"edge", "outerplanar", "planar"}));
  bench_cmd->add_option("--seed", seed)->required();
  bench_cmd->add_option("--count", count);
  bench_cmd->callback([&] { action = [&] { return bench_command(corpus, seed, count); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    result = action();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::ClassColouringBudgetExhausted ? kBudget : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (result.report.is_null()) return result.code;
  Json doc;
  doc["command"] = args;
  doc["outcome"] = std::move(result.report);
  doc["exit_code"] = result.code;
  doc["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << doc.dump(2) << "\n";
  return result.code;
}

}  // namespace frugal::cli
