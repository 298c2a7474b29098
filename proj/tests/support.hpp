#pragma once

// Shared test helpers: small graph builders, seeded random instances, and
// straight-line reference implementations used as independent oracles.
// Everything here is deliberately naive; it must not share code paths with
// the library implementations it checks.

#include <map>
#include <random>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/oracle.hpp"

namespace support {

using locdom::Edge;
using locdom::Graph;
using locdom::VertexId;
using locdom::VertexSet;

inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  VertexSet vs;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(i);
  return Graph::from_edges(vs, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  return make_graph(n, es);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(1, n);
  return make_graph(n, es);
}

// K_{1,leaves}: center id 1, leaves 2..leaves+1.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> es;
  for (std::size_t i = 2; i <= leaves + 1; ++i) es.emplace_back(1, i);
  return make_graph(leaves + 1, es);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) es.emplace_back(i, j);
  }
  return make_graph(n, es);
}

// K_{m,n}: side ids 1..m and m+1..m+n.
inline Graph complete_bipartite(std::size_t m, std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = m + 1; j <= m + n; ++j) es.emplace_back(i, j);
  }
  return make_graph(m + n, es);
}

inline Graph grid_graph(std::size_t rows, std::size_t cols) {
  auto id = [&](std::size_t r, std::size_t c) { return r * cols + c + 1; };
  std::vector<Edge> es;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return make_graph(rows * cols, es);
}

// Disjoint union, with the second graph's ids shifted past the first's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  VertexId shift = a.vertices().empty() ? 0 : a.vertices().back();
  VertexSet vs = a.vertices();
  std::vector<Edge> es = a.edges();
  for (VertexId v : b.vertices()) vs.push_back(v + shift);
  for (Edge e : b.edges()) es.emplace_back(e.first + shift, e.second + shift);
  return Graph::from_edges(vs, es);
}

struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t bound) {
    std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
    return d(eng);
  }
  bool chance(double p) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    return d(eng) < p;
  }
  std::mt19937_64 eng;
};

// Random connected graph: spanning tree plus extra edges with probability p.
inline Graph random_connected_graph(Rng& rng, std::size_t n, double p) {
  std::vector<Edge> es;
  for (std::size_t i = 2; i <= n; ++i) {
    es.emplace_back(1 + rng.below(i - 1), i);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      bool present = false;
      for (const Edge& e : es) {
        if (e == Edge{i, j}) {
          present = true;
          break;
        }
      }
      if (!present && rng.chance(p)) es.emplace_back(i, j);
    }
  }
  return make_graph(n, es);
}

// --- independent oracles ----------------------------------------------------

// N^r[v] by literal iteration of the closed-neighborhood operator.
inline VertexSet iterated_closed_neighborhood(const Graph& g, VertexId v, int r) {
  VertexSet cur{v};
  for (int i = 0; i < r; ++i) cur = locdom::neighborhood_of_set(g, cur);
  return cur;
}

// Literal first phase: D = vertices whose open neighborhood cannot be
// covered by <= k vertices other than themselves. Uses the unrestricted
// exhaustive coverage decision, a different code path from the solver's.
inline VertexSet reference_phase1(const Graph& g, int k) {
  VertexSet d;
  for (VertexId v : g.vertices()) {
    if (!locdom::exact_coverage(g, v, k)) d.push_back(v);
  }
  return d;
}

struct ReferenceResult {
  VertexSet d;
  VertexSet dprime;
  std::map<VertexId, VertexId> dom;
};

// Straight-line global run of the two-phase algorithm (no runtime, no
// balls): phase-1 threshold k, then the max-residual dominator rule with
// smallest-id tie break, or the threshold rule when fo_threshold >= 0.
inline ReferenceResult reference_two_phase(const Graph& g, int k,
                                           long long fo_threshold = -1) {
  ReferenceResult r;
  r.d = reference_phase1(g, k);
  VertexSet nd = locdom::neighborhood_of_set(g, r.d);
  auto residual_degree = [&](VertexId w) {
    std::size_t c = 0;
    for (VertexId u : g.closed_neighborhood(w)) {
      if (!locdom::contains(nd, u)) ++c;
    }
    return c;
  };
  for (VertexId v : g.vertices()) {
    if (locdom::contains(nd, v)) continue;
    VertexSet cands = g.closed_neighborhood(v);
    VertexId pick = 0;
    if (fo_threshold < 0) {
      std::size_t best = 0;
      for (VertexId w : cands) {
        std::size_t rd = residual_degree(w);
        if (rd > best) {
          best = rd;
          pick = w;
        }
      }
    } else {
      for (VertexId w : cands) {
        if (residual_degree(w) > static_cast<std::size_t>(fo_threshold)) {
          pick = w;
          break;
        }
      }
      if (pick == 0) pick = cands.front();
    }
    r.dom[v] = pick;
  }
  for (auto& [v, w] : r.dom) {
    (void)v;
    r.dprime.push_back(w);
  }
  r.dprime = locdom::sorted_unique(std::move(r.dprime));
  return r;
}

// Exhaustively checks that no subset of size `size` dominates g.
inline bool no_dominating_subset_of_size(const Graph& g, std::size_t size) {
  const VertexSet& vs = g.vertices();
  std::vector<std::size_t> idx(size);
  bool found = false;
  auto rec = [&](auto&& self, std::size_t pos, std::size_t first) -> void {
    if (found) return;
    if (pos == size) {
      VertexSet d;
      for (std::size_t i : idx) d.push_back(vs[i]);
      if (locdom::is_dominating_set(g, d)) found = true;
      return;
    }
    for (std::size_t i = first; i < vs.size(); ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  if (size > vs.size()) return true;
  rec(rec, 0, 0);
  return !found;
}

// Rebuilds g with every edge/vertex kept except that edges with both
// endpoints outside `frozen` may be toggled; used by locality tests.
inline Graph toggle_far_edge(const Graph& g, const VertexSet& frozen,
                             Rng& rng, bool* changed) {
  std::vector<std::pair<VertexId, VertexId>> candidates;
  const VertexSet& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!locdom::contains(frozen, vs[i]) && !locdom::contains(frozen, vs[j])) {
        candidates.emplace_back(vs[i], vs[j]);
      }
    }
  }
  *changed = false;
  if (candidates.empty()) return g;
  auto [u, w] = candidates[rng.below(candidates.size())];
  std::vector<Edge> es = g.edges();
  Edge e = locdom::make_edge(u, w);
  auto it = std::find(es.begin(), es.end(), e);
  if (it != es.end()) {
    es.erase(it);
  } else {
    es.push_back(e);
  }
  *changed = true;
  return Graph::from_edges(g.vertices(), es);
}

}  // namespace support
