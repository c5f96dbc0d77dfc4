#pragma once

// Graph and representation files. Graphs are JSON {"n", "edges", "labels"?}
// or a plain edge list ("n <count>" then one "u v" pair per line, '#' comments).
// Representations are JSON {"d", "vectors", "graph"}.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/ortho.hpp"

namespace thetalab {

using Json = nlohmann::json;  // std::map storage, so keys serialize sorted

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  Json out;
  out["edges"] = std::move(edges);
  if (!g.labels().empty()) out["labels"] = g.labels();
  out["n"] = g.n();
  return out;
}

inline Graph graph_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::kParse, "edge must be a pair");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (!labels.empty() && labels.size() != n) throw Error(ErrorKind::kParse, "one label per vertex required");
    return Graph::from_edges(n, edges, std::move(labels));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

inline Graph graph_from_edge_list(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!have_header) {
      if (first != "n" || !(fields >> n)) {
        throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected 'n <count>'");
      }
      have_header = true;
      continue;
    }
    std::size_t u = 0;
    std::size_t v = 0;
    std::istringstream pair(line);
    if (!(pair >> u >> v)) throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(u, v);
  }
  if (!have_header) throw Error(ErrorKind::kParse, "missing 'n <count>' header");
  return Graph::from_edges(n, edges);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// JSON when the first non-blank character is '{', edge list otherwise.
inline Graph parse_graph(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    try {
      return graph_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::kParse, e.what());
    }
  }
  std::istringstream in(text);
  return graph_from_edge_list(in);
}

inline Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

inline Json rep_to_json(const OrthoRep& rep) {
  Json out;
  out["d"] = rep.d();
  out["graph"] = graph_to_json(rep.target());
  out["vectors"] = rep.vectors();
  return out;
}

inline OrthoRep rep_from_json(const Json& j) {
  try {
    return OrthoRep(graph_from_json(j.at("graph")), j.at("d").get<std::size_t>(),
                    j.at("vectors").get<std::vector<std::vector<double>>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

inline OrthoRep load_rep(const std::string& path) {
  try {
    return rep_from_json(Json::parse(read_file(path)));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

}  // namespace thetalab
