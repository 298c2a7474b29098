#pragma once

// Immutable simple undirected graphs with stable vertex ids.
//
// All set-valued results are sorted ascending by id, so every computation
// built on top of them is deterministic and replayable. Vertex ids are
// positive and need not be contiguous.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace locdom {

using VertexId = std::uint64_t;
using VertexSet = std::vector<VertexId>;  // invariant: sorted ascending, unique
using Edge = std::pair<VertexId, VertexId>;  // invariant: first < second
using Rational = boost::rational<long long>;

struct UnknownVertexError : std::out_of_range {
  explicit UnknownVertexError(VertexId v)
      : std::out_of_range("unknown vertex id " + std::to_string(v)) {}
};

struct GraphConstructionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Edge make_edge(VertexId u, VertexId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// --- sorted-vector set algebra -------------------------------------------

inline bool contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet sorted_unique(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// --- graph -----------------------------------------------------------------

class Graph {
 public:
  Graph() = default;

  // Builds a graph from an explicit vertex set and edge list. Throws
  // GraphConstructionError on self-loops, duplicate edges, zero ids, or
  // edge endpoints outside the vertex set.
  static Graph from_edges(VertexSet vertices, std::vector<Edge> edges) {
    Graph g;
    g.vertices_ = sorted_unique(std::move(vertices));
    for (VertexId v : g.vertices_) {
      if (v == 0) throw GraphConstructionError("vertex ids must be positive");
    }
    g.adj_.assign(g.vertices_.size(), {});
    for (Edge& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u == v) {
        throw GraphConstructionError("self-loop at vertex " + std::to_string(u));
      }
      if (i > 0 && edges[i] == edges[i - 1]) {
        throw GraphConstructionError("duplicate edge {" + std::to_string(u) +
                                     "," + std::to_string(v) + "}");
      }
      std::size_t su = g.find_slot(u);
      std::size_t sv = g.find_slot(v);
      g.adj_[su].push_back(v);
      g.adj_[sv].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.num_edges_ = edges.size();
    return g;
  }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  bool empty() const noexcept { return vertices_.empty(); }

  const VertexSet& vertices() const noexcept { return vertices_; }

  bool has_vertex(VertexId v) const { return contains(vertices_, v); }

  bool has_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return contains(adj_[slot(u)], v);
  }

  // Open neighborhood, sorted ascending.
  const VertexSet& neighbors(VertexId v) const { return adj_[slot(v)]; }

  std::size_t degree(VertexId v) const { return adj_[slot(v)].size(); }

  // Closed neighborhood N[v].
  VertexSet closed_neighborhood(VertexId v) const {
    VertexSet out = neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (VertexId w : adj_[i]) {
        if (vertices_[i] < w) out.emplace_back(vertices_[i], w);
      }
    }
    return out;
  }

  // Subgraph induced by `vs` (all members must exist).
  Graph induced(const VertexSet& vs) const {
    VertexSet keep = sorted_unique(vs);
    std::vector<Edge> es;
    for (VertexId v : keep) {
      for (VertexId w : neighbors(v)) {
        if (v < w && contains(keep, w)) es.emplace_back(v, w);
      }
    }
    return from_edges(std::move(keep), std::move(es));
  }

  // G - B: induced subgraph on V \ B.
  Graph without(const VertexSet& removed) const {
    return induced(set_difference(vertices_, sorted_unique(removed)));
  }

 private:
  std::size_t slot(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw UnknownVertexError(v);
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  std::size_t find_slot(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
      throw GraphConstructionError("edge endpoint " + std::to_string(v) +
                                   " is not a vertex");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  VertexSet vertices_;
  std::vector<VertexSet> adj_;  // parallel to vertices_, each sorted
  std::size_t num_edges_ = 0;
};

// The radius-r ball around a vertex: the subgraph induced by N^r[center].
struct Ball {
  VertexId center = 0;
  int radius = 0;
  Graph subgraph;
};

// BFS distances from v, capped at `limit` (vertices farther away are absent).
inline std::vector<std::pair<VertexId, int>> bfs_distances(const Graph& g,
                                                           VertexId v,
                                                           int limit) {
  if (!g.has_vertex(v)) throw UnknownVertexError(v);
  std::vector<std::pair<VertexId, int>> dist;
  VertexSet seen{v};
  std::queue<std::pair<VertexId, int>> q;
  q.emplace(v, 0);
  dist.emplace_back(v, 0);
  while (!q.empty()) {
    auto [u, d] = q.front();
    q.pop();
    if (d == limit) continue;
    for (VertexId w : g.neighbors(u)) {
      if (!contains(seen, w)) {
        seen.insert(std::lower_bound(seen.begin(), seen.end(), w), w);
        dist.emplace_back(w, d + 1);
        q.emplace(w, d + 1);
      }
    }
  }
  return dist;
}

inline Ball closed_ball(const Graph& g, VertexId v, int radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  VertexSet members;
  for (auto [u, d] : bfs_distances(g, v, radius)) members.push_back(u);
  std::sort(members.begin(), members.end());
  return Ball{v, radius, g.induced(members)};
}

// N[A], closed.
inline VertexSet neighborhood_of_set(const Graph& g, const VertexSet& a) {
  VertexSet out;
  for (VertexId v : a) {
    if (!g.has_vertex(v)) throw UnknownVertexError(v);
    out.push_back(v);
    const VertexSet& nbrs = g.neighbors(v);
    out.insert(out.end(), nbrs.begin(), nbrs.end());
  }
  return sorted_unique(std::move(out));
}

inline bool is_dominating_set(const Graph& g, const VertexSet& d) {
  return neighborhood_of_set(g, d).size() == g.num_vertices();
}

// Exact |E|/|V|; comparisons against thresholds stay in integer arithmetic.
inline Rational edge_density(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("edge density of empty graph");
  return Rational(static_cast<long long>(g.num_edges()),
                  static_cast<long long>(g.num_vertices()));
}

}  // namespace locdom
