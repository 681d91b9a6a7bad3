#pragma once

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "frugal/graph.hpp"

namespace frugal {

inline constexpr const char* kFormatName = "frugal-graph";
inline constexpr int kFormatVersion = 1;

/// Everything a graph file can carry. Vertex and edge order follow the file.
struct GraphFile {
  MultiGraph graph;
  std::optional<RotationSystem> rotation;
  std::optional<ListAssignment> vertex_lists;
  std::optional<ListAssignment> edge_lists;
  std::optional<VertexColouring> vertex_colouring;
  std::optional<EdgeColouring> edge_colouring;
  std::optional<Labelling> labelling;

  friend bool operator==(const GraphFile& a, const GraphFile& b) {
    auto same_lists = [](const std::optional<ListAssignment>& x, const std::optional<ListAssignment>& y) {
      return x.has_value() == y.has_value() && (!x || x->lists == y->lists);
    };
    auto same_rot = [](const std::optional<RotationSystem>& x, const std::optional<RotationSystem>& y) {
      return x.has_value() == y.has_value() && (!x || x->order == y->order);
    };
    return a.graph.vertex_names() == b.graph.vertex_names() && a.graph.edge_names() == b.graph.edge_names() &&
           a.graph.edges() == b.graph.edges() && same_rot(a.rotation, b.rotation) &&
           same_lists(a.vertex_lists, b.vertex_lists) && same_lists(a.edge_lists, b.edge_lists) &&
           a.vertex_colouring == b.vertex_colouring && a.edge_colouring == b.edge_colouring &&
           a.labelling == b.labelling;
  }
};

namespace detail {

using Json = nlohmann::ordered_json;

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

inline std::string id_string(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  parse_fail(where, "expected a string or integer id");
}

inline int int_value(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  return j.get<int>();
}

inline const Json& object_field(const Json& root, const char* key) {
  const Json& j = root.at(key);
  if (!j.is_object()) parse_fail(key, "expected an object keyed by id");
  return j;
}

/// Reads an id -> value object into a dense vector indexed by `lookup`.
template <typename T, typename Read>
std::vector<T> keyed(const Json& obj, const char* field, int count,
                     const std::function<std::optional<int>(const std::string&)>& lookup, Read read) {
  std::vector<std::optional<T>> out(static_cast<std::size_t>(count));
  for (const auto& [key, value] : obj.items()) {
    const std::string where = std::string(field) + "." + key;
    auto i = lookup(key);
    if (!i) parse_fail(where, "unknown id");
    out[static_cast<std::size_t>(*i)] = read(value, where);
  }
  std::vector<T> dense;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i]) parse_fail(field, "missing entry for item " + std::to_string(i));
    dense.push_back(std::move(*out[i]));
  }
  return dense;
}

inline std::vector<Colour> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an integer array");
  std::vector<Colour> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_value(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

/// Parses the JSON graph format. Structural problems raise ParseError with the
/// offending field; semantic ones come from build_multigraph.
inline GraphFile parse_graph_json(const std::string& text) {
  using detail::Json;
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!root.is_object()) detail::parse_fail("document", "expected a JSON object");
  if (root.contains("format") && root["format"] != kFormatName) detail::parse_fail("format", "unknown format");
  if (root.contains("version") && root["version"] != kFormatVersion) detail::parse_fail("version", "unsupported version");
  if (!root.contains("vertices") || !root["vertices"].is_array()) detail::parse_fail("vertices", "missing array");
  if (!root.contains("edges") || !root["edges"].is_array()) detail::parse_fail("edges", "missing array");

  std::vector<std::string> vertex_ids;
  for (std::size_t i = 0; i < root["vertices"].size(); ++i)
    vertex_ids.push_back(detail::id_string(root["vertices"][i], "vertices[" + std::to_string(i) + "]"));
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < root["edges"].size(); ++i) {
    const Json& e = root["edges"][i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("u") || !e.contains("v")) detail::parse_fail(where, "expected {id, u, v}");
    specs.push_back({e.contains("id") ? detail::id_string(e["id"], where + ".id") : "e" + std::to_string(i),
                     detail::id_string(e["u"], where + ".u"), detail::id_string(e["v"], where + ".v")});
  }

  GraphFile out;
  out.graph = build_multigraph(vertex_ids, specs);
  const MultiGraph& g = out.graph;
  std::function<std::optional<int>(const std::string&)> vertex_of = [&](const std::string& s) {
    return g.find_vertex(s);
  };
  std::function<std::optional<int>(const std::string&)> edge_of = [&](const std::string& s) { return g.find_edge(s); };
  auto edge_ref = [&](const Json& j, const std::string& where) -> EdgeId {
    auto e = g.find_edge(detail::id_string(j, where));
    if (!e) detail::parse_fail(where, "unknown edge id");
    return *e;
  };

  if (root.contains("rotation")) {
    RotationSystem rot;
    rot.order = detail::keyed<std::vector<EdgeId>>(
        detail::object_field(root, "rotation"), "rotation", g.vertex_count(), vertex_of,
        [&](const Json& j, const std::string& where) {
          if (!j.is_array()) detail::parse_fail(where, "expected an edge-id array");
          std::vector<EdgeId> ord;
          for (std::size_t i = 0; i < j.size(); ++i) ord.push_back(edge_ref(j[i], where + "[" + std::to_string(i) + "]"));
          return ord;
        });
    validate_rotation(g, rot);
    out.rotation = std::move(rot);
  }
  if (root.contains("vertex_lists"))
    out.vertex_lists = ListAssignment(detail::keyed<std::vector<Colour>>(
        detail::object_field(root, "vertex_lists"), "vertex_lists", g.vertex_count(), vertex_of, detail::int_list));
  if (root.contains("edge_lists"))
    out.edge_lists = ListAssignment(detail::keyed<std::vector<Colour>>(
        detail::object_field(root, "edge_lists"), "edge_lists", g.edge_count(), edge_of, detail::int_list));
  if (root.contains("vertex_colouring"))
    out.vertex_colouring = detail::keyed<Colour>(detail::object_field(root, "vertex_colouring"), "vertex_colouring",
                                                 g.vertex_count(), vertex_of, detail::int_value);
  if (root.contains("edge_colouring"))
    out.edge_colouring = detail::keyed<Colour>(detail::object_field(root, "edge_colouring"), "edge_colouring",
                                               g.edge_count(), edge_of, detail::int_value);
  if (root.contains("labelling"))
    out.labelling = detail::keyed<int>(detail::object_field(root, "labelling"), "labelling", g.vertex_count(),
                                       vertex_of, detail::int_value);
  return out;
}

/// Serializes to the JSON graph format; parse_graph_json inverts it exactly.
inline nlohmann::ordered_json to_json(const GraphFile& f) {
  using detail::Json;
  const MultiGraph& g = f.graph;
  Json root;
  root["format"] = kFormatName;
  root["version"] = kFormatVersion;
  root["vertices"] = g.vertex_names();
  root["edges"] = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    root["edges"].push_back(
        {{"id", g.edge_name(e)}, {"u", g.vertex_name(g.edge(e).u)}, {"v", g.vertex_name(g.edge(e).v)}});
  auto by_vertex = [&](auto&& value) {
    Json obj = Json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) obj[g.vertex_name(v)] = value(static_cast<std::size_t>(v));
    return obj;
  };
  auto by_edge = [&](auto&& value) {
    Json obj = Json::object();
    for (EdgeId e = 0; e < g.edge_count(); ++e) obj[g.edge_name(e)] = value(static_cast<std::size_t>(e));
    return obj;
  };
  if (f.rotation)
    root["rotation"] = by_vertex([&](std::size_t v) {
      Json ord = Json::array();
      for (EdgeId e : f.rotation->order[v]) ord.push_back(g.edge_name(e));
      return ord;
    });
  if (f.vertex_lists) root["vertex_lists"] = by_vertex([&](std::size_t v) { return f.vertex_lists->lists[v]; });
  if (f.edge_lists) root["edge_lists"] = by_edge([&](std::size_t e) { return f.edge_lists->lists[e]; });
  if (f.vertex_colouring) root["vertex_colouring"] = by_vertex([&](std::size_t v) { return (*f.vertex_colouring)[v]; });
  if (f.edge_colouring) root["edge_colouring"] = by_edge([&](std::size_t e) { return (*f.edge_colouring)[e]; });
  if (f.labelling) root["labelling"] = by_vertex([&](std::size_t v) { return (*f.labelling)[v]; });
  return root;
}

inline std::string write_graph_json(const GraphFile& f) { return to_json(f).dump(2) + "\n"; }

/// Read-only import of a simple DIMACS graph ("p edge n m" then "e u v").
inline GraphFile parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  int lineno = 0;
  std::vector<EdgeSpec> specs;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    const std::string where = "line " + std::to_string(lineno);
    if (tag == "p") {
      std::string kind;
      int m = 0;
      if (!(ls >> kind >> n >> m) || n < 0) detail::parse_fail(where, "malformed problem line");
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (n < 0) detail::parse_fail(where, "edge before problem line");
      if (!(ls >> u >> v)) detail::parse_fail(where, "malformed edge line");
      specs.push_back({"e" + std::to_string(specs.size()), std::to_string(u), std::to_string(v)});
    } else {
      detail::parse_fail(where, "unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) detail::parse_fail("document", "no problem line");
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  GraphFile out;
  out.graph = build_multigraph(ids, specs);
  return out;
}

/// Loads a graph file; ".col" and ".dimacs" go through the DIMACS shim.
inline GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".col") || ends_with(".dimacs")) return parse_dimacs(buf.str());
  return parse_graph_json(buf.str());
}

}  // namespace frugal
