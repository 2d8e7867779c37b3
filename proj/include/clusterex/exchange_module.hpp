#pragma once

// The free module F on crossing diagonal pairs, the map theta sending the
// pair generator X_{alpha,beta} to the difference x_alpha - x_beta of cluster
// variables, its kernel, the pentagonal relations, and the explicit free
// basis of the exchange module (pairs whose smaller diagonal has endpoint 1).

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "clusterex/cluster_vars.hpp"
#include "clusterex/homology.hpp"
#include "clusterex/int_linalg.hpp"

namespace clusterex {

/// The unique crossing pair of diagonals over a vertex 4-set {a<b<c<d}:
/// alpha = (a, c) and beta = (b, d), ordered so alpha's first endpoint is the
/// smaller.
struct CrossingPair {
  std::array<int, 4> verts{};

  Diagonal alpha() const { return Diagonal(verts[0], verts[2]); }
  Diagonal beta() const { return Diagonal(verts[1], verts[3]); }

  auto operator<=>(const CrossingPair&) const = default;
};

/// One pair per vertex 4-set, in lexicographic 4-set order; C(n+3, 4) pairs.
inline std::vector<CrossingPair> crossing_pairs(int n) {
  std::vector<CrossingPair> out;
  const int m = num_vertices(n);
  for (int a = 1; a <= m - 3; ++a)
    for (int b = a + 1; b <= m - 2; ++b)
      for (int c = b + 1; c <= m - 1; ++c)
        for (int d = c + 1; d <= m; ++d)
          out.push_back(CrossingPair{{a, b, c, d}});
  return out;
}

/// Column index of each 4-set among crossing_pairs(n).
class PairIndex {
 public:
  explicit PairIndex(const std::vector<CrossingPair>& pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      idx_.emplace(pairs[i].verts, static_cast<int>(i));
  }

  int at(const std::array<int, 4>& verts) const {
    auto it = idx_.find(verts);
    if (it == idx_.end())
      throw std::invalid_argument("vertex 4-set is not a crossing pair");
    return it->second;
  }

 private:
  std::map<std::array<int, 4>, int> idx_;
};

/// Matrix of theta over the monomial basis: columns follow crossing_pairs(n),
/// rows are the union of all monomials occurring in any difference
/// x_alpha - x_beta, in descending graded-lex order.
struct ThetaMatrix {
  int n = 0;
  std::vector<CrossingPair> pairs;
  std::vector<Exponents> monomials;
  IntMat m;
};

inline ThetaMatrix theta_matrix(const VariableTable& table) {
  ThetaMatrix theta;
  theta.n = table.n();
  theta.pairs = crossing_pairs(theta.n);

  std::vector<LaurentPoly> diffs;
  std::set<Exponents, GrlexLess> monomials;
  for (const auto& pr : theta.pairs) {
    diffs.push_back(table.at(pr.alpha()) - table.at(pr.beta()));
    for (const auto& [e, c] : diffs.back().terms()) monomials.insert(e);
  }
  theta.monomials.assign(monomials.rbegin(), monomials.rend());
  std::map<Exponents, int, GrlexLess> row;
  for (std::size_t i = 0; i < theta.monomials.size(); ++i)
    row.emplace(theta.monomials[i], static_cast<int>(i));

  theta.m = IntMat(static_cast<int>(theta.monomials.size()),
                   static_cast<int>(theta.pairs.size()));
  for (std::size_t j = 0; j < diffs.size(); ++j)
    for (const auto& [e, c] : diffs[j].terms())
      theta.m.at(row.at(e), static_cast<int>(j)) = c;
  return theta;
}

/// Saturated integer kernel basis of theta, no rank policing. The kernel is
/// the full cycle space of the crossing graph (vertices = diagonals, one
/// edge per crossing pair): any closed cycle of differences telescopes to
/// zero, and the cluster variables are linearly independent, so nothing
/// else vanishes. Its rank is therefore C(n+3,4) - D + 1 with D the number
/// of diagonals.
inline IntMat kernel_theta_unchecked(const ThetaMatrix& theta) {
  return kernel_basis(theta.m);
}

/// Kernel basis with the advertised rank C(n+2, 4) enforced. The refutation
/// signal fires for every n >= 3: the true kernel is strictly larger (see
/// kernel_theta_unchecked); only n <= 2 passes.
inline IntMat kernel_theta(const ThetaMatrix& theta) {
  IntMat k = kernel_theta_unchecked(theta);
  if (Int(k.cols()) != binomial(theta.n + 2, 4))
    throw RankMismatch("kernel rank " + std::to_string(k.cols()) +
                       " differs from C(n+2,4) = " +
                       binomial(theta.n + 2, 4).str());
  return k;
}

/// Relation vector of the pentagon {a<b<c<d<e} in pair coordinates: the five
/// exchanges inside the pentagon telescope to zero, which in the alpha<beta
/// ordering reads +{a,b,c,d} +{b,c,d,e} +{a,b,d,e} -{a,c,d,e} -{a,b,c,e}.
inline std::vector<Int> pentagon_vector(const PairIndex& index, int pair_count,
                                        const std::array<int, 5>& label) {
  const auto& [a, b, c, d, e] = label;
  std::vector<Int> v(pair_count, Int(0));
  v[index.at({a, b, c, d})] += 1;
  v[index.at({b, c, d, e})] += 1;
  v[index.at({a, b, d, e})] += 1;
  v[index.at({a, c, d, e})] -= 1;
  v[index.at({a, b, c, e})] -= 1;
  return v;
}

/// Matrix whose columns are the pentagonal relation vectors, optionally
/// restricted to labels containing vertex 1, in label order.
inline IntMat pentagon_matrix(int n, bool one_containing_only = false) {
  const auto pairs = crossing_pairs(n);
  const PairIndex index(pairs);
  std::vector<std::vector<Int>> cols;
  for (const auto& label : five_subsets(n, one_containing_only))
    cols.push_back(
        pentagon_vector(index, static_cast<int>(pairs.size()), label));
  return IntMat::from_columns(static_cast<int>(pairs.size()), cols);
}

/// Image of a pair-coordinate vector under theta, as an exact Laurent
/// polynomial.
inline LaurentPoly theta_apply(const VariableTable& table,
                               const std::vector<CrossingPair>& pairs,
                               const std::vector<Int>& v) {
  LaurentPoly sum(table.nvars());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (v[i] == 0) continue;
    const LaurentPoly diff =
        table.at(pairs[i].alpha()) - table.at(pairs[i].beta());
    sum += diff * LaurentPoly::constant(table.nvars(), v[i]);
  }
  return sum;
}

/// Formal image of a pair-coordinate vector in the free module on diagonals
/// (each pair maps to alpha - beta). Vanishing here is the combinatorial
/// shadow of theta-vanishing and needs no variable table.
inline std::map<Diagonal, Int> theta_symbolic(
    const std::vector<CrossingPair>& pairs, const std::vector<Int>& v) {
  std::map<Diagonal, Int> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (v[i] == 0) continue;
    out[pairs[i].alpha()] += v[i];
    out[pairs[i].beta()] -= v[i];
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

struct PentagonGenerationReport {
  int pentagon_count = 0;
  int kernel_rank = 0;
  int one_containing_count = 0;
  bool all_pentagons_span_kernel = false;
  bool one_containing_span_kernel = false;
  bool one_containing_independent = false;

  bool ok() const {
    return all_pentagons_span_kernel && one_containing_span_kernel &&
           one_containing_independent;
  }
};

/// Whether the lattice generated by all C(n+3,5) pentagonal relations
/// equals ker theta and the C(n+2,4) relations whose label contains vertex 1
/// form an independent spanning set. The spanning claims fail for n >= 3
/// (the kernel strictly contains the pentagon lattice); the independence
/// claim and the pentagon-lattice rank are genuine.
inline PentagonGenerationReport verify_pentagonal_generation(
    const ThetaMatrix& theta, const IntMat& kernel) {
  const IntMat all = pentagon_matrix(theta.n, false);
  const IntMat ones = pentagon_matrix(theta.n, true);

  PentagonGenerationReport rep;
  rep.pentagon_count = all.cols();
  rep.kernel_rank = kernel.cols();
  rep.one_containing_count = ones.cols();
  rep.all_pentagons_span_kernel = lattice_equal(all, kernel);
  rep.one_containing_span_kernel = lattice_equal(ones, kernel);
  rep.one_containing_independent = rank(ones) == ones.cols();
  return rep;
}

/// Basis pairs of the exchange module: the 4-sets containing vertex 1, i.e.
/// the pairs whose smaller diagonal has 1 as an endpoint; C(n+2, 3) of them.
inline std::vector<CrossingPair> exchange_basis(int n) {
  std::vector<CrossingPair> out;
  for (const auto& pr : crossing_pairs(n))
    if (pr.verts[0] == 1) out.push_back(pr);
  return out;
}

/// Writes theta-images of arbitrary pairs as exact integer combinations of
/// the basis images. The Hermite transform of the basis columns is computed
/// once.
class BasisExpressor {
 public:
  explicit BasisExpressor(const ThetaMatrix& theta)
      : theta_(&theta), index_(theta.pairs), basis_(exchange_basis(theta.n)) {
    std::vector<std::vector<Int>> cols;
    for (const auto& pr : basis_)
      cols.push_back(theta.m.column(index_.at(pr.verts)));
    basis_matrix_ = IntMat::from_columns(theta.m.rows(), cols);
    lattice_.emplace(basis_matrix_, true);
  }

  const std::vector<CrossingPair>& basis() const { return basis_; }

  /// Coefficients over basis() with exact round-trip; NotExpressible if the
  /// image lies outside the basis span (which would refute freeness).
  std::vector<Int> express(const CrossingPair& pair) const {
    const auto target = theta_->m.column(index_.at(pair.verts));
    auto coeffs = lattice_->coordinates(target);
    if (!coeffs)
      throw NotExpressible("pair image outside the basis span");
    if (basis_matrix_.apply(*coeffs) != target)
      throw NotExpressible("round-trip mismatch");
    return *coeffs;
  }

 private:
  const ThetaMatrix* theta_;
  PairIndex index_;
  std::vector<CrossingPair> basis_;
  IntMat basis_matrix_;
  std::optional<Lattice> lattice_;
};

/// Label map C1 -> pair coordinates: each oriented edge maps to the
/// generator of its flip quadrilateral. Opposite edges of every 2-cell share
/// a label with parallel orientation, so 2-cell boundaries map to zero and
/// homology classes have well-defined images.
inline std::vector<Int> label_chain(const ExchangeGraph& g,
                                    const PairIndex& index, int pair_count,
                                    const std::vector<Int>& chain) {
  std::vector<Int> out(pair_count, Int(0));
  for (int e = 0; e < g.num_edges(); ++e)
    if (chain[e] != 0) out[index.at(g.edge(e).label)] += chain[e];
  return out;
}

/// Edge-class correspondence: the equivalence generated by "opposite edges
/// of a 2-cell" (nets of 4-cycles) has exactly one class per label.
/// Exhaustive in both directions.
inline bool edge_classes_match_labels(const ExchangeGraph& g,
                                      const CellComplex2& x) {
  const int ne = g.num_edges();
  std::vector<int> parent(ne);
  for (int e = 0; e < ne; ++e) parent[e] = e;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [m, a, o, b] : x.cells) {
    parent[find(*g.edge_between(m, a))] = find(*g.edge_between(o, b));
    parent[find(*g.edge_between(a, o))] = find(*g.edge_between(b, m));
  }
  std::map<std::array<int, 4>, int> label_root;
  std::map<int, std::array<int, 4>> root_label;
  for (int e = 0; e < ne; ++e) {
    const int r = find(e);
    const auto& label = g.edge(e).label;
    auto [it, fresh] = label_root.emplace(label, r);
    if (!fresh && it->second != r) return false;  // label split over classes
    auto [jt, fresh2] = root_label.emplace(r, label);
    if (!fresh2 && jt->second != label) return false;  // class mixes labels
  }
  return true;
}

/// Five-cycle classes match pentagonal relations under the label map: every
/// 2-cell boundary maps to zero, and every geodesic 5-cycle's class vector
/// maps exactly to the negated pentagon vector of its label.
inline bool pentagon_classes_match_homology(const ExchangeGraph& g,
                                            const CellComplex2& x) {
  const auto pairs = crossing_pairs(g.n());
  const PairIndex index(pairs);
  const int pc = static_cast<int>(pairs.size());

  const IntMat d2 = boundary_matrices(g, x).second;
  for (int c = 0; c < d2.cols(); ++c) {
    for (const auto& v : label_chain(g, index, pc, d2.column(c)))
      if (v != 0) return false;
  }
  for (const auto& cycle : geodesic_cycles(g).fives) {
    std::array<int, 5> label;
    std::copy(cycle.label.begin(), cycle.label.end(), label.begin());
    const auto expected = pentagon_vector(index, pc, label);
    const auto image =
        label_chain(g, index, pc, class_vector(g, closed_walk(cycle)));
    for (int i = 0; i < pc; ++i)
      if (image[i] != -expected[i]) return false;
  }
  return true;
}

}  // namespace clusterex
