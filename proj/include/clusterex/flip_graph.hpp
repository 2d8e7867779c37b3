#pragma once

// The exchange graph: nodes are triangulations of the (n+3)-gon, edges are
// diagonal flips. Every edge carries the vertex 4-set of its flip
// quadrilateral as a label and is oriented from the endpoint containing the
// lexicographically smaller exchanged diagonal to the one containing the
// larger. On top of the graph: geodesic 4-/5-cycles from codimension-2
// partial triangulations, loop words, the stretch/insert/switch moves, and
// nets of 4-cycles between label-equal 5-cycles.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clusterex/errors.hpp"
#include "clusterex/polygon.hpp"
#include "clusterex/version.hpp"

namespace clusterex {

struct GraphEdge {
  int u = 0;                    // endpoint ids with u < v
  int v = 0;
  std::array<int, 4> label{};   // flip quadrilateral vertices, ascending
  Diagonal diag_u;              // diagonal present in u only
  Diagonal diag_v;              // diagonal present in v only
  int tail = 0;                 // orientation tail -> head
  int head = 0;

  int other(int node) const { return node == u ? v : u; }
};

class ExchangeGraph {
 public:
  static ExchangeGraph build(int n, std::size_t max_nodes = kDefaultMaxNodes) {
    ExchangeGraph g;
    g.n_ = n;
    g.nodes_ = enumerate_triangulations(n, max_nodes);
    g.adj_.resize(g.nodes_.size());
    for (std::size_t i = 0; i < g.nodes_.size(); ++i)
      g.index_.emplace(g.nodes_[i], static_cast<int>(i));

    for (int u = 0; u < static_cast<int>(g.nodes_.size()); ++u) {
      for (const auto& d : g.nodes_[u].diagonals()) {
        const auto [t2, fresh] = flip(g.nodes_[u], d);
        const int v = g.index_.at(t2);
        if (v < u) continue;
        GraphEdge e;
        e.u = u;
        e.v = v;
        e.label = quad_of(g.nodes_[u], d);
        e.diag_u = d;
        e.diag_v = fresh;
        e.tail = d < fresh ? u : v;
        e.head = e.u + e.v - e.tail;
        const int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back(e);
        g.adj_[u].emplace_back(v, id);
        g.adj_[v].emplace_back(u, id);
        g.edge_ids_.emplace(std::make_pair(u, v), id);
      }
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.assert_triangle_free();
    return g;
  }

  int n() const { return n_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Triangulation>& nodes() const { return nodes_; }
  const Triangulation& node(int id) const { return nodes_.at(id); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(int id) const { return edges_.at(id); }

  /// Neighbors of u as (node id, edge id), sorted.
  const std::vector<std::pair<int, int>>& neighbors(int u) const {
    return adj_.at(u);
  }

  std::optional<int> node_id(const Triangulation& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int require_node_id(const Triangulation& t) const {
    auto id = node_id(t);
    if (!id) throw std::invalid_argument("triangulation not in graph");
    return *id;
  }

  std::optional<int> edge_between(int u, int v) const {
    auto it = edge_ids_.find(std::minmax(u, v));
    if (it == edge_ids_.end()) return std::nullopt;
    return it->second;
  }

  bool adjacent(int u, int v) const { return edge_between(u, v).has_value(); }

 private:
  void assert_triangle_free() const {
    for (const auto& e : edges_) {
      const auto& nu = adj_[e.u];
      const auto& nv = adj_[e.v];
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i].first == nv[j].first)
          throw TriangleFound("exchange graph contains a triangle");
        if (nu[i].first < nv[j].first)
          ++i;
        else
          ++j;
      }
    }
  }

  int n_ = 0;
  std::vector<Triangulation> nodes_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::unordered_map<Triangulation, int, Triangulation::Hash> index_;
  std::map<std::pair<int, int>, int> edge_ids_;
};

/// Cycle of completions of a codimension-2 partial triangulation: two empty
/// quadrilaterals give a 4-cycle, one empty pentagon gives a 5-cycle whose
/// label is the pentagon's vertex set.
struct GeodesicCycle {
  enum class Kind { Four, Five };

  Kind kind = Kind::Five;
  std::vector<int> nodes;       // node ids in cyclic order (4 or 5 of them)
  std::vector<int> label;       // pentagon vertices for Five; empty for Four
  std::vector<Diagonal> base;   // the n-2 diagonals of the partial triangulation
};

struct GeodesicCycles {
  std::vector<GeodesicCycle> fours;
  std::vector<GeodesicCycle> fives;
};

namespace detail {

/// Interior diagonals of the pentagon {p0 < ... < p4}, indexed so that
/// delta[i] joins p[i] and p[i+2 mod 5]; consecutive deltas cross, deltas two
/// apart share an endpoint.
inline std::array<Diagonal, 5> pentagon_diagonals(
    const std::array<int, 5>& p) {
  std::array<Diagonal, 5> delta;
  for (int i = 0; i < 5; ++i) delta[i] = Diagonal(p[i], p[(i + 2) % 5]);
  return delta;
}

inline std::vector<Diagonal> with_extra(const std::vector<Diagonal>& base,
                                        Diagonal d1, Diagonal d2) {
  std::vector<Diagonal> out = base;
  out.push_back(d1);
  out.push_back(d2);
  return out;
}

}  // namespace detail

/// The geodesic 5-cycle over a fixed exterior triangulation `base` and a
/// pentagon vertex set. Node j completes the pentagon with the diagonal pair
/// {delta[2j], delta[2j+2]} (indices mod 5), which makes consecutive nodes
/// differ by one flip.
inline GeodesicCycle five_cycle_from_base(const ExchangeGraph& g,
                                          const std::vector<Diagonal>& base,
                                          const std::array<int, 5>& pentagon) {
  const auto delta = detail::pentagon_diagonals(pentagon);
  GeodesicCycle c;
  c.kind = GeodesicCycle::Kind::Five;
  c.label.assign(pentagon.begin(), pentagon.end());
  c.base = base;
  std::sort(c.base.begin(), c.base.end());
  for (int j = 0; j < 5; ++j) {
    const Triangulation t(
        g.n(), detail::with_extra(base, delta[(2 * j) % 5],
                                  delta[(2 * j + 2) % 5]));
    c.nodes.push_back(g.require_node_id(t));
  }
  return c;
}

/// All geodesic cycles of the graph, enumerated from the codimension-2
/// partial triangulations (noncrossing diagonal sets of size n-2) in
/// lexicographic order.
inline GeodesicCycles geodesic_cycles(const ExchangeGraph& g) {
  GeodesicCycles out;
  const int n = g.n();
  if (n < 2) return out;
  const auto all = all_diagonals(n);

  std::vector<Diagonal> chosen;
  auto classify = [&]() {
    const auto regions = dissection_regions(n, chosen);
    std::vector<std::vector<int>> big;
    for (const auto& r : regions)
      if (r.size() >= 4) big.push_back(r);
    if (big.size() == 1 && big[0].size() == 5) {
      std::array<int, 5> p;
      std::copy(big[0].begin(), big[0].end(), p.begin());
      out.fives.push_back(five_cycle_from_base(g, chosen, p));
    } else if (big.size() == 2 && big[0].size() == 4 && big[1].size() == 4) {
      const auto& q = big[0];
      const auto& r = big[1];
      const Diagonal a0(q[0], q[2]), a1(q[1], q[3]);
      const Diagonal b0(r[0], r[2]), b1(r[1], r[3]);
      GeodesicCycle c;
      c.kind = GeodesicCycle::Kind::Four;
      c.base = chosen;
      for (const auto& [da, db] :
           {std::pair{a0, b0}, {a1, b0}, {a1, b1}, {a0, b1}})
        c.nodes.push_back(g.require_node_id(
            Triangulation(n, detail::with_extra(chosen, da, db))));
      out.fours.push_back(std::move(c));
    } else {
      throw std::logic_error("codimension-2 face is neither type");
    }
  };

  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(chosen.size()) == n - 2) {
      classify();
      return;
    }
    // Not enough diagonals left to finish: prune.
    if (all.size() - start <
        static_cast<std::size_t>(n - 2) - chosen.size())
      return;
    for (std::size_t i = start; i < all.size(); ++i) {
      bool ok = true;
      for (const auto& d : chosen)
        if (crosses(d, all[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(all[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Two geodesic 5-cycles are homotopic exactly when their labels agree.
inline bool homotopic(const GeodesicCycle& c1, const GeodesicCycle& c2) {
  if (c1.kind != GeodesicCycle::Kind::Five ||
      c2.kind != GeodesicCycle::Kind::Five)
    throw std::invalid_argument("homotopic expects 5-cycles");
  return c1.label == c2.label;
}

/// Closed walk: node ids with front() == back(). Consecutive entries must be
/// equal or adjacent; repeated entries contribute no letter to the word.
using Walk = std::vector<int>;

inline Walk closed_walk(const GeodesicCycle& c) {
  Walk w = c.nodes;
  w.push_back(c.nodes.front());
  return w;
}

inline void validate_walk(const ExchangeGraph& g, const Walk& walk) {
  if (walk.empty()) throw NotAWalk("walk is empty");
  if (walk.front() != walk.back()) throw NotAWalk("walk is not closed");
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (walk[i] == walk[i + 1]) continue;
    if (!g.adjacent(walk[i], walk[i + 1]))
      throw NotAWalk("consecutive walk nodes are not adjacent");
  }
}

using Letter = std::array<int, 4>;
using LoopWord = std::vector<Letter>;

/// Edge labels read along a closed walk.
inline LoopWord loop_word(const ExchangeGraph& g, const Walk& walk) {
  validate_walk(g, walk);
  LoopWord word;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (walk[i] == walk[i + 1]) continue;
    word.push_back(g.edge(*g.edge_between(walk[i], walk[i + 1])).label);
  }
  return word;
}

enum class MoveKind { Stretch, Insert, Switch };

struct Move {
  MoveKind kind;
  int pos = 0;
  int node = -1;  // inserted node (Insert only)
};

/// Apply one homotopy-preserving change to a closed walk. Word effect:
/// Stretch none, Insert a squared letter, Switch a transposition of two
/// adjacent letters across a geodesic 4-cycle.
inline Walk apply_move(const ExchangeGraph& g, const Walk& walk,
                       const Move& move) {
  validate_walk(g, walk);
  const int len = static_cast<int>(walk.size());
  Walk out = walk;
  switch (move.kind) {
    case MoveKind::Stretch: {
      if (move.pos < 0 || move.pos >= len)
        throw MoveNotApplicable("stretch position out of range");
      out.insert(out.begin() + move.pos + 1, walk[move.pos]);
      return out;
    }
    case MoveKind::Insert: {
      if (move.pos < 0 || move.pos + 1 >= len)
        throw MoveNotApplicable("insert position out of range");
      if (walk[move.pos] != walk[move.pos + 1])
        throw MoveNotApplicable("insert needs equal adjacent nodes");
      if (move.node < 0 || move.node >= g.num_nodes() ||
          !g.adjacent(walk[move.pos], move.node))
        throw MoveNotApplicable("inserted node must be a neighbor");
      out.insert(out.begin() + move.pos + 1, move.node);
      return out;
    }
    case MoveKind::Switch: {
      if (move.pos < 1 || move.pos + 1 >= len)
        throw MoveNotApplicable("switch position out of range");
      const int a = walk[move.pos - 1], b = walk[move.pos],
                c = walk[move.pos + 1];
      if (a == b || b == c || a == c)
        throw MoveNotApplicable("switch needs three distinct nodes");
      const auto lab = g.edge(*g.edge_between(a, b)).label;
      const auto lbc = g.edge(*g.edge_between(b, c)).label;
      for (const auto& [j, eja] : g.neighbors(a)) {
        if (j == b || !g.adjacent(j, c)) continue;
        if (g.edge(eja).label != lbc) continue;
        if (g.edge(*g.edge_between(j, c)).label != lab) continue;
        out[move.pos] = j;
        return out;
      }
      throw MoveNotApplicable("no geodesic 4-cycle completes the switch");
    }
  }
  throw std::logic_error("unknown move kind");
}

/// A grid: closed walks of equal length stacked so that entries in
/// consecutive rows are near (equal or adjacent).
struct Net {
  std::vector<Walk> rows;
};

namespace detail {

/// Sides and interior diagonals of a convex sub-polygon given by its
/// ascending vertex list (which is its cyclic order).
inline bool region_adjacent(const std::vector<int>& region, int u, int v) {
  const auto iu = std::lower_bound(region.begin(), region.end(), u);
  const auto iv = std::lower_bound(region.begin(), region.end(), v);
  const auto pu = iu - region.begin(), pv = iv - region.begin();
  const auto m = static_cast<long>(region.size());
  return std::abs(pu - pv) == 1 ||
         (std::min(pu, pv) == 0 && std::max(pu, pv) == m - 1);
}

inline bool in_region(const std::vector<int>& region, int v) {
  return std::binary_search(region.begin(), region.end(), v);
}

/// Flip quadrilateral of d inside a fully triangulated sub-polygon.
inline std::array<int, 4> region_quad(const std::vector<int>& region,
                                      const std::set<Diagonal>& diags,
                                      Diagonal d) {
  auto side = [&](int u, int v) {
    return region_adjacent(region, u, v) || diags.count(Diagonal(u, v)) > 0;
  };
  std::array<int, 4> quad{d.a, d.b, 0, 0};
  int found = 0;
  for (int c : region) {
    if (c == d.a || c == d.b) continue;
    if (side(d.a, c) && side(c, d.b)) quad[2 + found++] = c;
  }
  if (found != 2) throw std::logic_error("region diagonal without two apexes");
  std::sort(quad.begin(), quad.end());
  return quad;
}

/// Exterior regions of a pentagon inside the (n+3)-gon: for each pentagon
/// side, the arc of polygon vertices it spans (ascending order).
inline std::vector<std::vector<int>> pentagon_exterior_regions(
    int n, const std::array<int, 5>& p) {
  std::vector<std::vector<int>> regions;
  const int m = num_vertices(n);
  for (int i = 0; i < 5; ++i) {
    const int from = p[i], to = p[(i + 1) % 5];
    std::vector<int> verts;
    if (from < to) {
      for (int v = from; v <= to; ++v) verts.push_back(v);
    } else {
      for (int v = 1; v <= to; ++v) verts.push_back(v);
      for (int v = from; v <= m; ++v) verts.push_back(v);
    }
    if (verts.size() >= 4) regions.push_back(std::move(verts));
  }
  std::sort(regions.begin(), regions.end());
  return regions;
}

/// Flip sequence that retriangulates every exterior region toward the fan at
/// the region's least vertex. Returns the full chain of diagonal sets,
/// starting with `base`; each step flips one diagonal outside the pentagon.
inline std::vector<std::vector<Diagonal>> normalize_exterior(
    int n, const std::array<int, 5>& p, const std::vector<Diagonal>& base) {
  std::vector<std::vector<Diagonal>> chain;
  std::set<Diagonal> cur(base.begin(), base.end());
  auto snapshot = [&] {
    chain.emplace_back(cur.begin(), cur.end());
  };
  snapshot();

  for (const auto& region : pentagon_exterior_regions(n, p)) {
    const int apex = region.front();
    while (true) {
      // Interior diagonals of this region under the current set.
      std::set<Diagonal> inside;
      for (const auto& d : cur)
        if (in_region(region, d.a) && in_region(region, d.b) &&
            !region_adjacent(region, d.a, d.b))
          inside.insert(d);
      // Frontier: a diagonal avoiding the apex whose flip quadrilateral
      // contains it; flipping strictly grows the fan.
      std::optional<Diagonal> frontier;
      for (const auto& d : inside) {
        if (d.a == apex || d.b == apex) continue;
        const auto quad = region_quad(region, inside, d);
        if (std::count(quad.begin(), quad.end(), apex) > 0) {
          frontier = d;
          break;
        }
      }
      if (!frontier) break;
      const auto quad = region_quad(region, inside, *frontier);
      std::array<int, 4> rest{};
      int k = 0;
      for (int v : quad)
        if (v != frontier->a && v != frontier->b) rest[k++] = v;
      cur.erase(*frontier);
      cur.insert(Diagonal(rest[0], rest[1]));
      snapshot();
    }
  }
  return chain;
}

}  // namespace detail

/// Grid of 5-cycles realizing the homotopy between two label-equal geodesic
/// 5-cycles: the first row is c1, the last row is c2, and consecutive rows
/// differ entrywise by a single flip outside the label pentagon.
inline Net net_between(const ExchangeGraph& g, const GeodesicCycle& c1,
                       const GeodesicCycle& c2) {
  if (c1.kind != GeodesicCycle::Kind::Five ||
      c2.kind != GeodesicCycle::Kind::Five)
    throw std::invalid_argument("net_between expects 5-cycles");
  if (c1.label != c2.label)
    throw LabelMismatch("cycles have different labels");
  std::array<int, 5> p;
  std::copy(c1.label.begin(), c1.label.end(), p.begin());

  Net net;
  auto add_row = [&](const std::vector<Diagonal>& base) {
    net.rows.push_back(closed_walk(five_cycle_from_base(g, base, p)));
  };
  if (c1.base == c2.base) {
    add_row(c1.base);
    return net;
  }
  const auto down = detail::normalize_exterior(g.n(), p, c1.base);
  const auto up = detail::normalize_exterior(g.n(), p, c2.base);
  if (down.back() != up.back())
    throw std::logic_error("exterior normal forms disagree");
  for (const auto& s : down) add_row(s);
  for (auto it = up.rbegin() + 1; it != up.rend(); ++it) add_row(*it);
  return net;
}

/// Check the grid conditions: equal-length closed rows, first/last rows equal
/// to the given cycles, every row a geodesic 5-cycle with the fixed label,
/// and vertically near entries whose connecting edges all carry one label per
/// row pair (each little square closes into a 4-cycle).
inline bool check_net(const ExchangeGraph& g, const Net& net,
                      const GeodesicCycle& c1, const GeodesicCycle& c2) {
  if (net.rows.empty()) return false;
  if (net.rows.front() != closed_walk(c1)) return false;
  if (net.rows.back() != closed_walk(c2)) return false;
  for (const auto& row : net.rows) {
    if (row.size() != 6 || row.front() != row.back()) return false;
    std::set<int> distinct(row.begin(), row.end());
    if (distinct.size() != 5) return false;
    LoopWord word;
    try {
      word = loop_word(g, row);
    } catch (const NotAWalk&) {
      return false;
    }
    if (word.size() != 5) return false;
    std::set<Letter> letters(word.begin(), word.end());
    if (letters.size() != 5) return false;
    std::set<int> uni;
    for (const auto& l : word) uni.insert(l.begin(), l.end());
    if (!std::equal(uni.begin(), uni.end(), c1.label.begin(), c1.label.end()))
      return false;
  }
  for (std::size_t t = 0; t + 1 < net.rows.size(); ++t) {
    std::set<Letter> vertical;
    for (std::size_t j = 0; j + 1 < net.rows[t].size(); ++j) {
      const int a = net.rows[t][j], b = net.rows[t + 1][j];
      if (a == b) continue;
      const auto e = g.edge_between(a, b);
      if (!e) return false;
      vertical.insert(g.edge(*e).label);
    }
    if (vertical.size() > 1) return false;
  }
  return true;
}

/// Graphviz export, directed per edge orientation.
inline std::string to_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "digraph exchange {\n";
  os << "  // " << kToolName << " " << kVersion << ", n=" << g.n() << "\n";
  for (int i = 0; i < g.num_nodes(); ++i) {
    os << "  t" << i << " [label=\"";
    const auto& diags = g.node(i).diagonals();
    for (std::size_t k = 0; k < diags.size(); ++k) {
      if (k) os << " ";
      os << "(" << diags[k].a << "," << diags[k].b << ")";
    }
    os << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  t" << e.tail << " -> t" << e.head << " [label=\"{";
    for (int k = 0; k < 4; ++k) {
      if (k) os << ",";
      os << e.label[k];
    }
    os << "}\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace clusterex
