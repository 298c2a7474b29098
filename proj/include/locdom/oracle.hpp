#pragma once

// Exact reference computations: minimum dominating set by branch and bound,
// unrestricted coverage decision, and brute-force depth-1 minor enumeration.
// These are the ground truth the approximation algorithms are tested against.
// Built for desk-scale inputs; exactness matters here, speed does not.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

#include "locdom/detail/bits.hpp"
#include "locdom/graph.hpp"

namespace locdom {

struct OracleResult {
  std::size_t gamma = 0;
  VertexSet witness;
  std::uint64_t explored_nodes = 0;
};

// Search ran out of its node budget before certifying optimality. Carries
// the best dominating set seen so far; never silently nonoptimal.
struct BudgetExhaustedError : std::runtime_error {
  BudgetExhaustedError(VertexSet best, std::uint64_t explored)
      : std::runtime_error("oracle node budget exhausted after " +
                           std::to_string(explored) + " nodes"),
        best_so_far(std::move(best)),
        explored_nodes(explored) {}
  VertexSet best_so_far;
  std::uint64_t explored_nodes;
};

namespace detail {

struct IndexedGraph {
  explicit IndexedGraph(const Graph& g) : ids(g.vertices()), closed(ids.size()) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      Bits b(ids.size());
      b.set(i);
      for (VertexId w : g.neighbors(ids[i])) b.set(index_of(w));
      closed[i] = std::move(b);
    }
  }
  std::size_t index_of(VertexId v) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    return static_cast<std::size_t>(it - ids.begin());
  }
  VertexSet ids;
  std::vector<Bits> closed;  // closed neighborhoods as bitsets
};

}  // namespace detail

// Minimum dominating set by branch and bound. Branches on an undominated
// vertex with the fewest remaining dominator options; lower bound from a
// greedy packing of disjoint closed neighborhoods. Throws
// BudgetExhaustedError when `budget` search nodes are exceeded.
inline OracleResult exact_mds(const Graph& g,
                              std::uint64_t budget = 10'000'000) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return OracleResult{0, {}, 0};
  detail::IndexedGraph ix(g);

  // Greedy upper bound: repeatedly take the vertex covering the most
  // undominated vertices (smallest index on ties).
  std::vector<std::size_t> best;
  {
    detail::Bits dom(n);
    std::vector<std::size_t> chosen;
    while (!dom.all()) {
      std::size_t pick = n;
      std::size_t pick_gain = 0;
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t gain = (ix.closed[v] & ~dom).count();
        if (gain > pick_gain) {
          pick_gain = gain;
          pick = v;
        }
      }
      chosen.push_back(pick);
      dom |= ix.closed[pick];
    }
    best = std::move(chosen);
  }

  std::uint64_t explored = 0;
  std::vector<std::size_t> current;

  // Greedy packing of undominated vertices with pairwise disjoint closed
  // neighborhoods; each packed vertex needs its own dominator.
  auto lower_bound = [&](const detail::Bits& dom,
                         const detail::Bits& forbidden) -> std::size_t {
    detail::Bits used(n);
    std::size_t packed = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (dom.test(v)) continue;
      if (ix.closed[v].intersects(used)) continue;
      // Undominatable vertex: every candidate dominator is forbidden.
      bool has_candidate = false;
      for (std::size_t w = 0; w < n && !has_candidate; ++w) {
        if (ix.closed[v].test(w) && !forbidden.test(w)) has_candidate = true;
      }
      if (!has_candidate) return n + 1;  // dead branch
      used |= ix.closed[v];
      ++packed;
    }
    return packed;
  };

  auto search = [&](auto&& self, detail::Bits dom,
                    detail::Bits forbidden) -> void {
    if (++explored > budget) {
      VertexSet w;
      for (std::size_t i : best) w.push_back(ix.ids[i]);
      throw BudgetExhaustedError(sorted_unique(std::move(w)), explored);
    }
    if (dom.all()) {
      if (current.size() < best.size()) best = current;
      return;
    }
    std::size_t lb = lower_bound(dom, forbidden);
    if (current.size() + lb >= best.size()) return;

    // Pick the undominated vertex with the fewest allowed dominators.
    std::size_t branch_v = n;
    std::size_t branch_opts = n + 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (dom.test(v)) continue;
      std::size_t opts = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (ix.closed[v].test(w) && !forbidden.test(w)) ++opts;
      }
      if (opts < branch_opts) {
        branch_opts = opts;
        branch_v = v;
      }
    }
    if (branch_v == n || branch_opts == 0) return;

    // Order dominator candidates by coverage gain (descending, stable).
    std::vector<std::pair<std::size_t, std::size_t>> cands;  // (-gain, w)
    for (std::size_t w = 0; w < n; ++w) {
      if (!ix.closed[branch_v].test(w) || forbidden.test(w)) continue;
      std::size_t gain = (ix.closed[w] & ~dom).count();
      cands.emplace_back(n - gain, w);
    }
    std::sort(cands.begin(), cands.end());

    detail::Bits branch_forbidden = forbidden;
    for (auto [key, w] : cands) {
      (void)key;
      current.push_back(w);
      detail::Bits next_dom = dom;
      next_dom |= ix.closed[w];
      self(self, std::move(next_dom), branch_forbidden);
      current.pop_back();
      // Solutions containing w were fully explored above.
      branch_forbidden.set(w);
    }
  };

  search(search, detail::Bits(n), detail::Bits(n));

  VertexSet witness;
  for (std::size_t i : best) witness.push_back(ix.ids[i]);
  return OracleResult{best.size(), sorted_unique(std::move(witness)), explored};
}

// True iff some A subseteq V \ {v} with |A| <= k covers N(v), i.e.
// N(v) subseteq N[A]. Exhaustive over all of V \ {v} (no candidate
// restriction); validates the restricted search used by the algorithms.
inline bool exact_coverage(const Graph& g, VertexId v, int k) {
  if (!g.has_vertex(v)) throw UnknownVertexError(v);
  if (k < 0) return g.neighbors(v).empty();
  const VertexSet& target = g.neighbors(v);
  if (target.empty()) return true;  // A = {} covers nothing and nothing is needed
  if (static_cast<std::size_t>(k) >= target.size()) return true;  // A = N(v)

  detail::IndexedGraph ix(g);
  const std::size_t n = ix.ids.size();
  detail::Bits want(n);
  for (VertexId w : target) want.set(ix.index_of(w));
  std::size_t vi = ix.index_of(v);

  // Depth-first over candidate subsets, pruned on remaining budget.
  auto rec = [&](auto&& self, std::size_t first, detail::Bits covered,
                 int left) -> bool {
    detail::Bits missing = want & ~covered;
    if (missing.none()) return true;
    if (left == 0) return false;
    for (std::size_t a = first; a < n; ++a) {
      if (a == vi) continue;
      if (!ix.closed[a].intersects(missing)) continue;
      detail::Bits next = covered;
      next |= ix.closed[a];
      if (self(self, a + 1, std::move(next), left - 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, detail::Bits(n), k);
}

struct SizeLimitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Brute-force decision: is K_{t,3} a depth-1 minor of g? Enumerates all
// assignments of vertices to t+3 disjoint star roles (or none), with sound
// pruning only (a role whose members can no longer admit a common center is
// dead). Factorial-scale; inputs capped at 12 vertices.
inline bool naive_depth1_minor(const Graph& g, int t) {
  if (t < 3) throw std::invalid_argument("t must be >= 3");
  if (g.num_vertices() > 12) {
    throw SizeLimitError("naive depth-1 minor enumeration is capped at 12 vertices");
  }
  const int roles = t + 3;
  const std::size_t n = g.num_vertices();
  if (n < static_cast<std::size_t>(roles)) return false;
  detail::IndexedGraph ix(g);
  std::vector<detail::Bits> open(n, detail::Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    open[i] = ix.closed[i];
    open[i].reset(i);
  }

  std::vector<std::vector<std::size_t>> members(roles);

  // A role is still feasible if some vertex (member or future vertex) is
  // adjacent to all its members except possibly itself.
  auto role_feasible = [&](int r, std::size_t next_vertex) -> bool {
    const auto& m = members[r];
    if (m.size() <= 1) return true;
    for (std::size_t c : m) {
      bool ok = true;
      for (std::size_t x : m) {
        if (x != c && !open[c].test(x)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    for (std::size_t c = next_vertex; c < n; ++c) {
      bool ok = true;
      for (std::size_t x : m) {
        if (!open[c].test(x)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };

  auto star_valid = [&](const std::vector<std::size_t>& m) -> bool {
    if (m.size() <= 1) return true;
    for (std::size_t c : m) {
      bool ok = true;
      for (std::size_t x : m) {
        if (x != c && !open[c].test(x)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };

  auto sets_connected = [&](int ra, int rb) -> bool {
    for (std::size_t u : members[ra]) {
      for (std::size_t w : members[rb]) {
        if (open[u].test(w)) return true;
      }
    }
    return false;
  };

  auto complete = [&]() -> bool {
    for (int r = 0; r < roles; ++r) {
      if (members[r].empty() || !star_valid(members[r])) return false;
    }
    for (int a = 0; a < t; ++a) {
      for (int b = t; b < roles; ++b) {
        if (!sets_connected(a, b)) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return complete();
    // Leave v unused.
    if (self(self, v + 1)) return true;
    // Assign v to a role; same-side roles open in order to break symmetry.
    for (int r = 0; r < roles; ++r) {
      bool side_a = r < t;
      int prev = r - 1;
      bool openable = (side_a && r == 0) || (!side_a && r == t) ||
                      (prev >= 0 && ((side_a && prev < t) || (!side_a && prev >= t)) &&
                       !members[prev].empty());
      if (members[r].empty() && !openable) continue;
      members[r].push_back(v);
      bool ok = role_feasible(r, v + 1) && self(self, v + 1);
      members[r].pop_back();
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace locdom
