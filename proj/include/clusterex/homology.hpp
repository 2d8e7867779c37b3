#pragma once

// The 2-cell complex on the exchange graph (a 2-cell glued along every
// 4-cycle; the graph is triangle-free) and its first homology: boundary
// matrices, rank and torsion, class vectors of closed walks, exact class
// equality modulo boundaries, and decomposition of 5-cycle classes over the
// distinguished basis of 1-containing labels.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "clusterex/flip_graph.hpp"
#include "clusterex/int_linalg.hpp"

namespace clusterex {

/// 2-cells as canonical node quadruples (m, a, o, b): the boundary walk is
/// m -> a -> o -> b -> m where m is the least node and a < b are its two
/// neighbors on the cycle.
struct CellComplex2 {
  int num_nodes = 0;
  int num_edges = 0;
  std::vector<std::array<int, 4>> cells;
};

/// Attach a 2-cell along every 4-cycle of the graph, found by scanning
/// neighbor pairs of the least node against common neighbors. Triangles
/// would break the construction and are rejected.
inline CellComplex2 build_complex(const ExchangeGraph& g) {
  for (const auto& e : g.edges()) {
    for (const auto& [w, ew] : g.neighbors(e.u))
      if (w != e.v && g.adjacent(w, e.v))
        throw TriangleFound("graph has a triangle; complex undefined");
  }
  CellComplex2 x;
  x.num_nodes = g.num_nodes();
  x.num_edges = g.num_edges();
  for (int m = 0; m < g.num_nodes(); ++m) {
    const auto& nb = g.neighbors(m);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i].first <= m) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (nb[j].first <= m) continue;
        const int a = std::min(nb[i].first, nb[j].first);
        const int b = std::max(nb[i].first, nb[j].first);
        // Common neighbors of a and b beyond m complete 4-cycles m-a-o-b.
        for (const auto& [o, eo] : g.neighbors(a)) {
          if (o <= m || o == b) continue;
          if (g.adjacent(o, b)) x.cells.push_back({m, a, o, b});
        }
      }
    }
  }
  std::sort(x.cells.begin(), x.cells.end());
  return x;
}

/// Boundary matrices of the complex: d1 (nodes x edges) sends an oriented
/// edge to head minus tail; d2 (edges x cells) is the signed traversal of
/// each 2-cell boundary.
inline std::pair<IntMat, IntMat> boundary_matrices(const ExchangeGraph& g,
                                                   const CellComplex2& x) {
  IntMat d1(g.num_nodes(), g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    d1.at(g.edge(e).tail, e) -= 1;
    d1.at(g.edge(e).head, e) += 1;
  }
  IntMat d2(g.num_edges(), static_cast<int>(x.cells.size()));
  for (std::size_t c = 0; c < x.cells.size(); ++c) {
    const auto& [m, a, o, b] = x.cells[c];
    const std::array<std::pair<int, int>, 4> steps{
        std::pair{m, a}, {a, o}, {o, b}, {b, m}};
    for (const auto& [p, q] : steps) {
      const int e = *g.edge_between(p, q);
      d2.at(e, static_cast<int>(c)) += g.edge(e).tail == p ? 1 : -1;
    }
  }
  return {std::move(d1), std::move(d2)};
}

struct H1Result {
  int rank = 0;
  std::vector<Int> torsion;  // invariant factors exceeding 1
  int rank_d1 = 0;
  int rank_d2 = 0;
  int cycle_rank = 0;  // dim ker d1 = E - rank d1
};

/// First homology of the complex. The rank is dim ker d1 - rank d2; the
/// torsion equals the invariant factors of d2 exceeding 1 (restricting d2 to
/// the cycle space changes nothing: C1 / ker d1 embeds in C0, hence is
/// free).
inline H1Result homology_h1(const ExchangeGraph& g, const CellComplex2& x) {
  const auto [d1, d2] = boundary_matrices(g, x);
  H1Result h;
  h.rank_d1 = smith_normal_form(d1).rank;
  const auto s2 = smith_normal_form(d2);
  h.rank_d2 = s2.rank;
  h.cycle_rank = g.num_edges() - h.rank_d1;
  h.rank = h.cycle_rank - h.rank_d2;
  for (const auto& f : s2.factors)
    if (f != 1) h.torsion.push_back(f);
  return h;
}

inline H1Result homology_h1(int n, std::size_t max_nodes = kDefaultMaxNodes) {
  const auto g = ExchangeGraph::build(n, max_nodes);
  return homology_h1(g, build_complex(g));
}

/// Chain in C1: signed edge-traversal counts of a closed walk.
inline std::vector<Int> class_vector(const ExchangeGraph& g, const Walk& walk) {
  validate_walk(g, walk);
  std::vector<Int> v(g.num_edges(), Int(0));
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (walk[i] == walk[i + 1]) continue;
    const int e = *g.edge_between(walk[i], walk[i + 1]);
    v[e] += g.edge(e).tail == walk[i] ? 1 : -1;
  }
  return v;
}

/// Exact homology-class comparisons against the lattice of 2-cell
/// boundaries. The Hermite form of d2 is computed once and reused.
class CycleClassifier {
 public:
  CycleClassifier(const ExchangeGraph& g, const CellComplex2& x)
      : graph_(&g), boundaries_(boundary_matrices(g, x).second),
        lattice_(boundaries_) {}

  const IntMat& boundary_matrix() const { return boundaries_; }

  bool is_boundary(const std::vector<Int>& chain) const {
    return lattice_.contains(chain);
  }

  bool classes_equal(const Walk& w1, const Walk& w2) const {
    auto v1 = class_vector(*graph_, w1);
    const auto v2 = class_vector(*graph_, w2);
    for (std::size_t i = 0; i < v1.size(); ++i) v1[i] -= v2[i];
    return is_boundary(v1);
  }

 private:
  const ExchangeGraph* graph_;
  IntMat boundaries_;
  Lattice lattice_;
};

/// Canonical representative 5-cycle of a label: the pentagon's chord sides
/// plus each exterior region triangulated as the fan at its least vertex.
inline GeodesicCycle canonical_five_cycle(const ExchangeGraph& g,
                                          const std::array<int, 5>& pentagon) {
  std::vector<Diagonal> base;
  for (int i = 0; i < 5; ++i) {
    const int u = pentagon[i], v = pentagon[(i + 1) % 5];
    if (!is_boundary_edge(g.n(), u, v)) base.emplace_back(u, v);
  }
  for (const auto& region : detail::pentagon_exterior_regions(g.n(), pentagon))
    for (std::size_t k = 2; k + 1 < region.size(); ++k)
      base.emplace_back(region[0], region[k]);
  return five_cycle_from_base(g, base, pentagon);
}

/// Basis classes of H1: one canonical representative per 1-containing
/// 5-element label, in lexicographic label order.
struct HomologyBasis {
  std::vector<std::array<int, 5>> labels;
  std::vector<GeodesicCycle> representatives;
  IntMat class_matrix;  // edges x labels
};

inline std::vector<std::array<int, 5>> five_subsets(int n,
                                                    bool containing_one) {
  std::vector<std::array<int, 5>> out;
  const int m = num_vertices(n);
  std::array<int, 5> s{};
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == 5) {
      out.push_back(s);
      return;
    }
    for (int v = from; v <= m - (4 - pos); ++v) {
      s[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  if (containing_one) {
    s[0] = 1;
    rec(rec, 1, 2);
  } else {
    rec(rec, 0, 1);
  }
  return out;
}

inline HomologyBasis homology_basis(const ExchangeGraph& g) {
  HomologyBasis basis;
  basis.labels = five_subsets(g.n(), true);
  std::vector<std::vector<Int>> cols;
  for (const auto& label : basis.labels) {
    basis.representatives.push_back(canonical_five_cycle(g, label));
    cols.push_back(class_vector(g, closed_walk(basis.representatives.back())));
  }
  basis.class_matrix = IntMat::from_columns(g.num_edges(), cols);
  return basis;
}

/// Integer coefficients writing a 5-cycle's class over the basis classes,
/// found by solving against the basis columns augmented with the 2-cell
/// boundaries. The basis part of any solution is unique because the basis
/// classes are independent in H1.
inline std::vector<Int> decompose(const ExchangeGraph& g,
                                  const CycleClassifier& classifier,
                                  const HomologyBasis& basis,
                                  const GeodesicCycle& cycle) {
  const int e = g.num_edges();
  const int k = basis.class_matrix.cols();
  const IntMat& d2 = classifier.boundary_matrix();
  IntMat augmented(e, k + d2.cols());
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < k; ++j) augmented.at(i, j) = basis.class_matrix.at(i, j);
    for (int j = 0; j < d2.cols(); ++j)
      augmented.at(i, k + j) = d2.at(i, j);
  }
  const auto coords =
      lattice_contains(augmented, class_vector(g, closed_walk(cycle)));
  if (!coords)
    throw NotInSpan("cycle class outside the span of basis classes");
  return std::vector<Int>(coords->begin(), coords->begin() + k);
}

}  // namespace clusterex
