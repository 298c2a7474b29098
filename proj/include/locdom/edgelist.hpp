#pragma once

// Edge-list text interchange format.
//
// Header line:   p <num_vertices> <num_edges> genus=<g-or-unknown>
// Body:          one "u v" pair per line, whitespace-separated decimal ids
// Comments:      lines starting with '#'
//
// The vertex set is the set of endpoint ids when those are exactly
// <num_vertices> many; otherwise, if all endpoints lie in 1..<num_vertices>,
// the vertex set is 1..<num_vertices> (this is how isolated vertices are
// expressed). Ids with gaps are accepted as long as every vertex has an edge.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "locdom/graph.hpp"

namespace locdom {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EdgeListFile {
  Graph graph;
  std::optional<int> certified_genus;  // absent when header says "unknown"
};

inline EdgeListFile read_edge_list(std::istream& in) {
  std::string line;
  std::size_t declared_vertices = 0, declared_edges = 0;
  std::optional<int> genus;
  bool have_header = false;
  std::vector<Edge> edges;

  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string p, genus_field;
      if (!(ls >> p >> declared_vertices >> declared_edges >> genus_field) ||
          p != "p" || genus_field.rfind("genus=", 0) != 0) {
        throw FormatError("line " + std::to_string(lineno) +
                          ": expected header 'p <n> <m> genus=<g|unknown>'");
      }
      std::string gval = genus_field.substr(6);
      if (gval != "unknown") {
        try {
          genus = std::stoi(gval);
        } catch (const std::exception&) {
          throw FormatError("line " + std::to_string(lineno) +
                            ": bad genus value '" + gval + "'");
        }
        if (*genus < 0) throw FormatError("genus must be >= 0");
      }
      have_header = true;
      continue;
    }
    VertexId u = 0, v = 0;
    if (!(ls >> u >> v)) {
      throw FormatError("line " + std::to_string(lineno) + ": expected 'u v'");
    }
    std::string trailing;
    if (ls >> trailing) {
      throw FormatError("line " + std::to_string(lineno) + ": trailing tokens");
    }
    edges.push_back(make_edge(u, v));
  }
  if (!have_header) throw FormatError("missing header line");
  if (edges.size() != declared_edges) {
    throw FormatError("header declares " + std::to_string(declared_edges) +
                      " edges, file has " + std::to_string(edges.size()));
  }

  VertexSet endpoint_ids;
  endpoint_ids.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    endpoint_ids.push_back(e.first);
    endpoint_ids.push_back(e.second);
  }
  endpoint_ids = sorted_unique(std::move(endpoint_ids));

  VertexSet vertices;
  if (endpoint_ids.size() == declared_vertices) {
    vertices = std::move(endpoint_ids);
  } else if (endpoint_ids.empty() ||
             endpoint_ids.back() <= declared_vertices) {
    vertices.resize(declared_vertices);
    for (std::size_t i = 0; i < declared_vertices; ++i) {
      vertices[i] = static_cast<VertexId>(i + 1);
    }
  } else {
    throw FormatError("endpoint ids do not match declared vertex count");
  }

  EdgeListFile out;
  try {
    out.graph = Graph::from_edges(std::move(vertices), std::move(edges));
  } catch (const GraphConstructionError& e) {
    throw FormatError(e.what());
  }
  out.certified_genus = genus;
  return out;
}

inline EdgeListFile read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g,
                            std::optional<int> certified_genus) {
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << " genus=";
  if (certified_genus) {
    out << *certified_genus;
  } else {
    out << "unknown";
  }
  out << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

inline void write_edge_list_file(const std::string& path, const Graph& g,
                                 std::optional<int> certified_genus) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  write_edge_list(out, g, certified_genus);
}

inline std::string to_edge_list_string(const Graph& g,
                                       std::optional<int> certified_genus) {
  std::ostringstream os;
  write_edge_list(os, g, certified_genus);
  return os.str();
}

}  // namespace locdom
