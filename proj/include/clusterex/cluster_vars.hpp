#pragma once

// Cluster variables of the type-A cluster algebra as exact Laurent
// polynomials attached to polygon diagonals. The initial seed is the fan at
// vertex 1: diagonal (1, j) carries x_{j-2}, boundary edge (i, i+1) the
// frozen variable x_{n+i}, and (1, n+3) the frozen x_{2n+3}. The full table
// is produced by BFS over the exchange graph, applying the exchange relation
// x_k x_k' = x_a x_c + x_b x_d across each flip quadrilateral and checking
// that every diagonal receives one well-defined value.

#include <map>
#include <string>
#include <vector>

#include "clusterex/errors.hpp"
#include "clusterex/flip_graph.hpp"
#include "clusterex/laurent.hpp"

namespace clusterex {

struct Seed {
  int n = 0;

  explicit Seed(int n_in) : n(n_in) {}

  int nvars() const { return 2 * n + 3; }

  /// Index of the cluster variable on a fan diagonal (1, j), j in 3..n+2.
  int cluster_index(Diagonal d) const {
    if (d.a != 1 || d.b < 3 || d.b > n + 2)
      throw std::invalid_argument("not an initial fan diagonal");
    return d.b - 2;
  }

  /// Index of the frozen variable on a boundary edge.
  int frozen_index(BoundaryEdge e) const {
    if (!is_boundary_edge(n, e.a, e.b))
      throw std::invalid_argument("not a boundary edge");
    if (e.a == 1 && e.b == num_vertices(n)) return 2 * n + 3;
    return n + e.a;
  }

  bool is_frozen_index(int var) const { return var > n && var <= nvars(); }
};

/// Laurent polynomial attached to every diagonal of the (n+3)-gon; boundary
/// edges are served as their single frozen variables.
class VariableTable {
 public:
  explicit VariableTable(int n) : seed_(n) {}

  int n() const { return seed_.n; }
  int nvars() const { return seed_.nvars(); }
  const Seed& seed() const { return seed_; }

  bool contains(Diagonal d) const { return vars_.count(d) > 0; }

  const LaurentPoly& at(Diagonal d) const {
    auto it = vars_.find(d);
    if (it == vars_.end())
      throw std::invalid_argument("diagonal has no recorded variable");
    return it->second;
  }

  void set(Diagonal d, LaurentPoly p) { vars_[d] = std::move(p); }

  const std::map<Diagonal, LaurentPoly>& entries() const { return vars_; }

  /// Variable of a quadrilateral side: frozen monomial for a boundary edge,
  /// the table entry for a diagonal.
  LaurentPoly side(int u, int v) const {
    if (is_boundary_edge(seed_.n, u, v))
      return LaurentPoly::variable(nvars(),
                                   seed_.frozen_index(BoundaryEdge(u, v)));
    return at(Diagonal(u, v));
  }

 private:
  Seed seed_;
  std::map<Diagonal, LaurentPoly> vars_;
};

/// Exchange relation across a flip: x_k' = (x_a x_c + x_b x_d) / x_k, where
/// (a, b, c, d) are the quadrilateral sides in cyclic order so that a, c and
/// b, d are the opposite pairs. The division is exact by the Laurent
/// phenomenon; NotDivisible therefore signals an upstream inconsistency.
inline LaurentPoly exchange(const LaurentPoly& xk, const LaurentPoly& xa,
                            const LaurentPoly& xb, const LaurentPoly& xc,
                            const LaurentPoly& xd) {
  return exact_div(xa * xc + xb * xd, xk);
}

/// BFS over the exchange graph from the fan seed. Every edge is processed
/// from both endpoints, so each diagonal reached along several flip paths is
/// recomputed and compared; a mismatch raises InconsistentVariable.
inline VariableTable compute_table(const ExchangeGraph& g) {
  const int n = g.n();
  VariableTable table(n);
  for (const auto& d : g.node(0).diagonals())
    table.set(d,
              LaurentPoly::variable(table.nvars(), table.seed().cluster_index(d)));

  for (int u = 0; u < g.num_nodes(); ++u) {
    for (const auto& [v, eid] : g.neighbors(u)) {
      const GraphEdge& e = g.edge(eid);
      const Diagonal removed = e.u == u ? e.diag_u : e.diag_v;
      const Diagonal added = e.u == u ? e.diag_v : e.diag_u;
      const auto& q = e.label;
      const LaurentPoly value =
          exchange(table.at(removed), table.side(q[0], q[1]),
                   table.side(q[1], q[2]), table.side(q[2], q[3]),
                   table.side(q[3], q[0]));
      if (table.contains(added)) {
        if (!(table.at(added) == value))
          throw InconsistentVariable(
              "two flip paths disagree on diagonal (" +
              std::to_string(added.a) + "," + std::to_string(added.b) + ")");
      } else {
        table.set(added, value);
      }
    }
  }
  if (table.entries().size() != all_diagonals(n).size())
    throw std::logic_error("variable table does not cover all diagonals");
  return table;
}

inline VariableTable compute_table(int n,
                                   std::size_t max_nodes = kDefaultMaxNodes) {
  return compute_table(ExchangeGraph::build(n, max_nodes));
}

/// Every value is a Laurent polynomial whose denominator is a monomial in
/// the mutable variables x_1..x_n: frozen variables never carry negative
/// exponents.
inline bool laurent_phenomenon_holds(const VariableTable& table) {
  for (const auto& [d, p] : table.entries())
    for (const auto& [e, c] : p.terms())
      for (int i = table.n(); i < table.nvars(); ++i)
        if (e[i] < 0) return false;
  return true;
}

/// Re-run the exchange relation over every graph edge against the stored
/// table.
inline bool exchange_consistent(const ExchangeGraph& g,
                                const VariableTable& table) {
  for (const auto& e : g.edges()) {
    const auto& q = e.label;
    const LaurentPoly value =
        exchange(table.at(e.diag_u), table.side(q[0], q[1]),
                 table.side(q[1], q[2]), table.side(q[2], q[3]),
                 table.side(q[3], q[0]));
    if (!(value == table.at(e.diag_v))) return false;
  }
  return true;
}

/// One cluster variable per diagonal: values are pairwise distinct.
inline bool variables_distinct(const VariableTable& table) {
  std::vector<LaurentPoly> vals;
  for (const auto& [d, p] : table.entries()) vals.push_back(p);
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j)
      if (vals[i] == vals[j]) return false;
  return true;
}

/// Empirical positivity: every coefficient is +1-signed. Reported, not
/// load-bearing.
inline bool coefficients_positive(const VariableTable& table) {
  for (const auto& [d, p] : table.entries())
    for (const auto& [e, c] : p.terms())
      if (c <= 0) return false;
  return true;
}

/// Period-five recurrence at n=2. With frozen variables set to 1, the
/// variables along the pentagon of flips obey f_{k+1} = (f_k + 1) / f_{k-1}
/// and return to the seed: f_6 = x_1, f_7 = x_2.
struct PeriodFiveReport {
  bool ok = false;
  std::vector<LaurentPoly> f;        // f_1..f_7, frozen variables at 1
  std::vector<Rational> unit_orbit;  // specialization x_1 = x_2 = 1
};

inline PeriodFiveReport verify_period_five() {
  const auto g = ExchangeGraph::build(2);
  const auto table = compute_table(g);
  const int nv = table.nvars();
  auto strip = [&](Diagonal d) {
    return table.at(d).substitute_ones([&](int i) { return i > 2; });
  };

  PeriodFiveReport rep;
  rep.f = {strip(Diagonal(1, 3)), strip(Diagonal(1, 4)), strip(Diagonal(2, 4)),
           strip(Diagonal(2, 5)), strip(Diagonal(3, 5)), strip(Diagonal(1, 3)),
           strip(Diagonal(1, 4))};

  rep.ok = true;
  const LaurentPoly one = LaurentPoly::constant(nv, 1);
  for (std::size_t k = 2; k < rep.f.size(); ++k)
    rep.ok = rep.ok && exact_div(rep.f[k - 1] + one, rep.f[k - 2]) == rep.f[k];
  rep.ok = rep.ok && rep.f[5] == LaurentPoly::variable(nv, 1) &&
           rep.f[6] == LaurentPoly::variable(nv, 2);

  std::vector<Rational> ones(nv, Rational(1));
  for (const auto& fk : rep.f) rep.unit_orbit.push_back(fk.specialize(ones));
  return rep;
}

}  // namespace clusterex
