#pragma once

// Depth-1 minor machinery: star decompositions, star contraction, exact
// K_{t,3} depth-1 minor detection, locally-embeddable certification, and
// genus formula utilities.
//
// A depth-1 minor model of H consists of pairwise disjoint stars, one per
// vertex of H (a star may be a single vertex), such that every edge of H is
// witnessed by a host edge between the two corresponding stars. The
// detector is exact (exhaustive with pruning) and intended for desk-scale
// graphs and ball-sized subgraphs. Every model it returns is re-validated
// by an independent checker before being handed out.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "locdom/detail/bits.hpp"
#include "locdom/graph.hpp"

namespace locdom {

struct InvalidDecompositionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Pairwise disjoint stars, keyed by center; leaves exclude the center and
// must all be adjacent to it in the host graph.
struct StarDecomposition {
  std::map<VertexId, VertexSet> stars;

  VertexSet star_vertices(VertexId center) const {
    VertexSet s = stars.at(center);
    s.insert(std::lower_bound(s.begin(), s.end(), center), center);
    return s;
  }
};

inline void validate_decomposition(const Graph& g, const StarDecomposition& dec) {
  VertexSet used;
  for (const auto& [center, leaves] : dec.stars) {
    if (!g.has_vertex(center)) throw UnknownVertexError(center);
    VertexSet members = leaves;
    members.push_back(center);
    members = sorted_unique(std::move(members));
    if (members.size() != leaves.size() + 1) {
      throw InvalidDecompositionError("center listed among its own leaves");
    }
    for (VertexId leaf : leaves) {
      if (!g.has_edge(center, leaf)) {
        throw InvalidDecompositionError(
            "leaf " + std::to_string(leaf) + " is not adjacent to center " +
            std::to_string(center));
      }
    }
    if (intersects(used, members)) {
      throw InvalidDecompositionError("stars are not pairwise disjoint");
    }
    used = set_union(used, members);
  }
}

// Contracts each star to its center. Non-star vertices are unchanged; the
// result keeps an edge between two vertices iff some host edge joins their
// expanded vertex sets (loops and parallels collapse away).
inline Graph contract(const Graph& g, const StarDecomposition& dec) {
  validate_decomposition(g, dec);
  std::map<VertexId, VertexId> rep;
  for (const auto& [center, leaves] : dec.stars) {
    rep[center] = center;
    for (VertexId leaf : leaves) rep[leaf] = center;
  }
  auto rep_of = [&](VertexId v) {
    auto it = rep.find(v);
    return it == rep.end() ? v : it->second;
  };
  VertexSet vs;
  for (VertexId v : g.vertices()) vs.push_back(rep_of(v));
  vs = sorted_unique(std::move(vs));
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    VertexId a = rep_of(e.first);
    VertexId b = rep_of(e.second);
    if (a != b) es.push_back(make_edge(a, b));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph::from_edges(std::move(vs), std::move(es));
}

// A verified depth-1 minor model of K_{t,3}. The target graph uses ids
// 1..t for the t-side and t+1..t+3 for the 3-side; role_centers maps each
// target vertex to the center of its star in the host graph.
struct MinorModel {
  Graph target;
  StarDecomposition decomposition;
  std::map<VertexId, VertexId> role_centers;
  std::map<Edge, Edge> edge_witnesses;  // target edge -> host edge

  VertexSet vertices() const {
    VertexSet out;
    for (const auto& [center, leaves] : decomposition.stars) {
      out.push_back(center);
      out.insert(out.end(), leaves.begin(), leaves.end());
    }
    return sorted_unique(std::move(out));
  }
};

inline Graph make_k_t3(int t) {
  VertexSet vs;
  std::vector<Edge> es;
  for (int i = 1; i <= t + 3; ++i) vs.push_back(static_cast<VertexId>(i));
  for (int a = 1; a <= t; ++a) {
    for (int b = t + 1; b <= t + 3; ++b) {
      es.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
  }
  return Graph::from_edges(std::move(vs), std::move(es));
}

// Independent checker: disjoint valid stars, one per target vertex, and a
// present host edge between the right pair of stars for every target edge.
inline bool check_minor_model(const Graph& g, const MinorModel& m, int t) {
  try {
    validate_decomposition(g, m.decomposition);
  } catch (const std::exception&) {
    return false;
  }
  Graph want = make_k_t3(t);
  if (m.target.vertices() != want.vertices() || m.target.edges() != want.edges()) {
    return false;
  }
  if (m.role_centers.size() != static_cast<std::size_t>(t + 3)) return false;
  for (const auto& [role, center] : m.role_centers) {
    if (!m.target.has_vertex(role)) return false;
    if (m.decomposition.stars.find(center) == m.decomposition.stars.end()) {
      return false;
    }
  }
  for (const Edge& te : m.target.edges()) {
    auto wit = m.edge_witnesses.find(te);
    if (wit == m.edge_witnesses.end()) return false;
    Edge he = wit->second;
    if (!g.has_edge(he.first, he.second)) return false;
    VertexSet su = m.decomposition.star_vertices(m.role_centers.at(te.first));
    VertexSet sv = m.decomposition.star_vertices(m.role_centers.at(te.second));
    bool straight = contains(su, he.first) && contains(sv, he.second);
    bool crossed = contains(su, he.second) && contains(sv, he.first);
    if (!straight && !crossed) return false;
  }
  return true;
}

namespace detail {

inline bool is_planar(const Graph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.num_vertices());
  const VertexSet& ids = g.vertices();
  auto index_of = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  for (const Edge& e : g.edges()) {
    boost::add_edge(index_of(e.first), index_of(e.second), bg);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

// Exhaustive search for a K_{t,3} depth-1 minor model.
//
// Strategy: enumerate the t+3 star centers (ordered within each side and
// pruned by the necessary condition that cross-side centers lie within
// distance 3 of each other), then solve a small assignment problem: every
// target edge needs a witness host edge whose endpoints join the two stars,
// recruiting leaves adjacent to their centers as needed. Since every model
// can be reduced to one where each leaf serves some witness, searching only
// leaf-reduced models is exhaustive for existence and for minimum vertex
// count; a required vertex that ends up unused is attached as one extra
// leaf at the end.
class KT3Search {
 public:
  struct Options {
    int t = 3;
    std::optional<VertexId> must_contain;
    // Any model reduces to <= 7t+3 vertices (t+3 centers plus at most two
    // new vertices per target edge), so the cap loses nothing.
    std::size_t max_vertices = 0;  // 0 -> 7t+3
    bool minimize = false;         // smallest vertex set, then lex order
  };

  KT3Search(const Graph& g, Options opt) : g_(g), opt_(opt) {
    roles_ = opt_.t + 3;
    if (opt_.max_vertices == 0) {
      opt_.max_vertices = static_cast<std::size_t>(7 * opt_.t + 3);
    }
    cap_ = opt_.max_vertices;
  }

  std::optional<MinorModel> run() {
    const int t = opt_.t;
    n_ = g_.num_vertices();
    if (n_ < static_cast<std::size_t>(roles_)) return std::nullopt;
    // Any graph hosting a K_{t,3} depth-1 minor (t >= 3) has a K_{3,3}
    // minor and is therefore non-planar.
    if (is_planar(g_)) return std::nullopt;

    ids_ = g_.vertices();
    cadj_.assign(n_, Bits(n_));
    adj_.assign(n_, Bits(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      cadj_[i].set(i);
      for (VertexId w : g_.neighbors(ids_[i])) {
        std::size_t j = index_of(w);
        adj_[i].set(j);
        cadj_[i].set(j);
      }
    }
    reach3_.assign(n_, Bits(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      Bits b = cadj_[i];
      for (int step = 0; step < 2; ++step) {
        Bits next = b;
        b.for_each([&](std::size_t j) { next |= cadj_[j]; });
        b = std::move(next);
      }
      reach3_[i] = std::move(b);
    }

    owner_.assign(n_, -1);
    centers_.assign(roles_, SIZE_MAX);
    must_idx_ = opt_.must_contain ? index_of(*opt_.must_contain) : SIZE_MAX;
    if (opt_.must_contain && (must_idx_ >= n_ || ids_[must_idx_] != *opt_.must_contain)) {
      return std::nullopt;
    }
    found_ = false;
    best_.reset();
    choose_center(0);
    if (best_) return build_model(*best_);
    return std::nullopt;
  }

 private:
  // Roles 0..t-1 form the t-side, t..t+2 the 3-side. Centers are chosen in
  // an order that alternates sides early so the distance-3 pruning bites.
  std::vector<int> role_order() const {
    std::vector<int> order;
    int a = 0, b = opt_.t;
    while (a < opt_.t || b < roles_) {
      if (b < roles_) order.push_back(b++);
      if (a < opt_.t) order.push_back(a++);
    }
    return order;
  }

  bool side_a(int role) const { return role < opt_.t; }

  void choose_center(std::size_t pos) {
    if (found_ && !opt_.minimize) return;
    static thread_local std::vector<int> order_storage;
    if (pos == 0) order_storage = role_order();
    const std::vector<int>& order = order_storage;
    if (pos == static_cast<std::size_t>(roles_)) {
      if (must_idx_ != SIZE_MAX) {
        bool coverable = false;
        for (int r = 0; r < roles_ && !coverable; ++r) {
          if (cadj_[centers_[r]].test(must_idx_)) coverable = true;
        }
        if (!coverable) return;
      }
      solve_witnesses();
      return;
    }
    int role = order[pos];
    // Same-side centers ascend, killing the within-side permutation
    // symmetry (star sets are interchangeable inside a side).
    std::size_t lo = 0;
    for (int r = 0; r < role; ++r) {
      if (side_a(r) == side_a(role) && centers_[r] != SIZE_MAX) {
        lo = std::max(lo, centers_[r] + 1);
      }
    }
    for (std::size_t c = lo; c < n_; ++c) {
      if (owner_[c] != -1) continue;
      bool ok = true;
      for (int r = 0; r < roles_ && ok; ++r) {
        if (centers_[r] == SIZE_MAX || side_a(r) == side_a(role)) continue;
        if (!reach3_[c].test(centers_[r])) ok = false;
      }
      if (!ok) continue;
      centers_[role] = c;
      owner_[c] = role;
      ++assigned_;
      choose_center(pos + 1);
      --assigned_;
      owner_[c] = -1;
      centers_[role] = SIZE_MAX;
      if (found_ && !opt_.minimize) return;
    }
  }

  struct WitnessPick {
    int a_role, b_role;
    std::size_t u, w;  // u in the a-side star, w in the b-side star
  };

  void solve_witnesses() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < opt_.t; ++a) {
      for (int b = opt_.t; b < roles_; ++b) pairs.emplace_back(a, b);
    }
    picks_.clear();
    satisfy(pairs);
  }

  struct Option {
    std::size_t u, w;
    int cost;
  };

  void options_for(int a_role, int b_role, std::vector<Option>& out) const {
    out.clear();
    std::size_t ca = centers_[a_role];
    std::size_t cb = centers_[b_role];
    cadj_[ca].for_each([&](std::size_t u) {
      if (owner_[u] != -1 && owner_[u] != a_role) return;
      bool u_new = owner_[u] == -1;
      Bits hits = adj_[u] & cadj_[cb];
      hits.for_each([&](std::size_t w) {
        if (w == u) return;
        if (owner_[w] != -1 && owner_[w] != b_role) return;
        if (owner_[w] == -1 && w == u) return;
        if (u == w) return;
        if (owner_[w] == -1 && u_new && u == w) return;
        if (owner_[w] == -1 && owner_[u] == -1 && u == w) return;
        int cost = (u_new ? 1 : 0) + (owner_[w] == -1 ? 1 : 0);
        if (u_new && owner_[w] == -1 && u == w) return;
        out.push_back(Option{u, w, cost});
      });
    });
    std::sort(out.begin(), out.end(), [&](const Option& x, const Option& y) {
      if (x.cost != y.cost) return x.cost < y.cost;
      if (x.u != y.u) return x.u < y.u;
      return x.w < y.w;
    });
  }

  void satisfy(std::vector<std::pair<int, int>> pending) {
    if (found_ && !opt_.minimize) return;
    if (assigned_ > cap_) return;
    if (best_ && assigned_ > best_size_) return;
    if (pending.empty()) {
      complete();
      return;
    }
    // Fail-first: expand the pending pair with the fewest options.
    std::size_t pick = pending.size();
    std::vector<Option> pick_opts;
    std::vector<Option> opts;
    int max_min_cost = 0;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      options_for(pending[i].first, pending[i].second, opts);
      if (opts.empty()) return;
      max_min_cost = std::max(max_min_cost, opts.front().cost);
      if (pick == pending.size() || opts.size() < pick_opts.size()) {
        pick = i;
        pick_opts = opts;
      }
    }
    // Some pair still needs max_min_cost fresh vertices.
    if (assigned_ + static_cast<std::size_t>(max_min_cost) > cap_) return;
    if (best_ && assigned_ + static_cast<std::size_t>(max_min_cost) > best_size_) {
      return;
    }

    auto [a_role, b_role] = pending[pick];
    std::vector<std::pair<int, int>> rest;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (i != pick) rest.push_back(pending[i]);
    }
    for (const Option& o : pick_opts) {
      bool assigned_u = false, assigned_w = false;
      if (owner_[o.u] == -1) {
        owner_[o.u] = a_role;
        ++assigned_;
        assigned_u = true;
      }
      if (owner_[o.w] == -1) {
        owner_[o.w] = b_role;
        ++assigned_;
        assigned_w = true;
      }
      picks_.push_back(WitnessPick{a_role, b_role, o.u, o.w});
      satisfy(rest);
      picks_.pop_back();
      if (assigned_w) {
        owner_[o.w] = -1;
        --assigned_;
      }
      if (assigned_u) {
        owner_[o.u] = -1;
        --assigned_;
      }
      if (found_ && !opt_.minimize) return;
    }
  }

  struct Snapshot {
    std::vector<int> owner;
    std::vector<std::size_t> centers;
    std::vector<WitnessPick> picks;
    std::optional<std::pair<std::size_t, int>> attach;  // (vertex, role)
  };

  void complete() {
    Snapshot snap{owner_, centers_, picks_, std::nullopt};
    std::size_t size = assigned_;
    if (must_idx_ != SIZE_MAX && owner_[must_idx_] == -1) {
      // Recruit the required vertex as one extra leaf of the smallest-id
      // adjacent center.
      int role = -1;
      for (std::size_t c = 0; c < n_ && role == -1; ++c) {
        if (owner_[c] != -1 && centers_[owner_[c]] == c &&
            adj_[c].test(must_idx_)) {
          role = owner_[c];
        }
      }
      if (role == -1) return;
      snap.attach = std::make_pair(must_idx_, role);
      ++size;
      if (size > cap_) return;
    }
    VertexSet verts = snapshot_vertices(snap);
    if (opt_.minimize) {
      if (!best_ || size < best_size_ ||
          (size == best_size_ && verts < best_verts_)) {
        best_ = std::move(snap);
        best_size_ = size;
        best_verts_ = std::move(verts);
        found_ = true;
      }
      return;
    }
    best_ = std::move(snap);
    best_size_ = size;
    best_verts_ = std::move(verts);
    found_ = true;
  }

  VertexSet snapshot_vertices(const Snapshot& s) const {
    VertexSet out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (s.owner[i] != -1) out.push_back(ids_[i]);
    }
    if (s.attach) out.push_back(ids_[s.attach->first]);
    return sorted_unique(std::move(out));
  }

  MinorModel build_model(const Snapshot& s) const {
    MinorModel m;
    m.target = make_k_t3(opt_.t);
    std::vector<VertexSet> leaves(roles_);
    for (std::size_t i = 0; i < n_; ++i) {
      int r = s.owner[i];
      if (r == -1 || s.centers[r] == i) continue;
      leaves[r].push_back(ids_[i]);
    }
    if (s.attach) leaves[s.attach->second].push_back(ids_[s.attach->first]);
    for (int r = 0; r < roles_; ++r) {
      VertexId center = ids_[s.centers[r]];
      m.decomposition.stars[center] = sorted_unique(std::move(leaves[r]));
      m.role_centers[static_cast<VertexId>(r + 1)] = center;
    }
    for (const WitnessPick& p : s.picks) {
      Edge target_edge = make_edge(static_cast<VertexId>(p.a_role + 1),
                                   static_cast<VertexId>(p.b_role + 1));
      m.edge_witnesses[target_edge] = make_edge(ids_[p.u], ids_[p.w]);
    }
    return m;
  }

  std::size_t index_of(VertexId v) const {
    return static_cast<std::size_t>(
        std::lower_bound(ids_.begin(), ids_.end(), v) - ids_.begin());
  }

  const Graph& g_;
  Options opt_;
  int roles_ = 6;
  std::size_t cap_ = 24;
  std::size_t n_ = 0;
  VertexSet ids_;
  std::vector<Bits> adj_, cadj_, reach3_;
  std::vector<int> owner_;
  std::vector<std::size_t> centers_;
  std::vector<WitnessPick> picks_;
  std::size_t assigned_ = 0;
  std::size_t must_idx_ = SIZE_MAX;
  bool found_ = false;
  std::optional<Snapshot> best_;
  std::size_t best_size_ = 0;
  VertexSet best_verts_;
};

}  // namespace detail

// Exact decision plus witness: a verified model of K_{t,3} as a depth-1
// minor of g, or nullopt.
inline std::optional<MinorModel> has_k_t3_depth1_minor(const Graph& g, int t) {
  if (t < 3) throw std::invalid_argument("t must be >= 3");
  detail::KT3Search::Options opt;
  opt.t = t;
  auto model = detail::KT3Search(g, opt).run();
  if (model && !check_minor_model(g, *model, t)) {
    throw std::logic_error("minor detector produced an invalid model");
  }
  return model;
}

inline bool is_locally_embeddable(const Graph& g, int t) {
  return !has_k_t3_depth1_minor(g, t).has_value();
}

// Smallest (minimum cardinality, then lexicographically smallest sorted
// vertex sequence) K_{3,3} depth-1 minor model containing `v`, capped at 24
// vertices. Searches the whole supplied graph; callers restrict to a ball.
inline std::optional<MinorModel> minimum_k33_model_containing(const Graph& g,
                                                              VertexId v) {
  detail::KT3Search::Options opt;
  opt.t = 3;
  opt.must_contain = v;
  opt.max_vertices = 24;
  opt.minimize = true;
  auto model = detail::KT3Search(g, opt).run();
  if (model && !check_minor_model(g, *model, 3)) {
    throw std::logic_error("minor detector produced an invalid model");
  }
  return model;
}

// Orientable genus of K_{m,n}: ceil((m-2)(n-2)/4).
inline long long k_mn_genus(long long m, long long n) {
  if (m < 2 || n < 2) throw std::invalid_argument("k_mn_genus needs m,n >= 2");
  return ((m - 2) * (n - 2) + 3) / 4;
}

// Non-orientable companion: ceil((m-2)(n-2)/2).
inline long long k_mn_genus_nonorientable(long long m, long long n) {
  if (m < 2 || n < 2) throw std::invalid_argument("k_mn_genus needs m,n >= 2");
  return ((m - 2) * (n - 2) + 1) / 2;
}

// Maximum edge count certified for orientable genus g: 3n + 6g - 6.
inline long long euler_edge_bound(long long n_vertices, long long g) {
  if (n_vertices < 3) throw std::invalid_argument("edge bound needs n >= 3");
  return 3 * n_vertices + 6 * g - 6;
}

// Non-orientable companion: 3n + 3g - 3.
inline long long euler_edge_bound_nonorientable(long long n_vertices,
                                                long long g) {
  if (n_vertices < 3) throw std::invalid_argument("edge bound needs n >= 3");
  return 3 * n_vertices + 3 * g - 3;
}

}  // namespace locdom
