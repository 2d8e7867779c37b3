#pragma once

// Combinatorics of the labeled convex (n+3)-gon: diagonals, crossings,
// triangulations, flips and enumeration. Vertices are numbered 1..n+3 in
// clockwise increasing order; every module of the library shares this
// convention.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "clusterex/errors.hpp"
#include "clusterex/numbers.hpp"

namespace clusterex {

/// Chord between two non-adjacent polygon vertices, stored with a < b.
struct Diagonal {
  int a = 0;
  int b = 0;

  Diagonal() = default;
  Diagonal(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}

  auto operator<=>(const Diagonal&) const = default;
};

/// Number of polygon vertices for parameter n.
inline int num_vertices(int n) { return n + 3; }

/// True iff (u, v) is a side of the (n+3)-gon boundary.
inline bool is_boundary_edge(int n, int u, int v) {
  const int a = std::min(u, v), b = std::max(u, v);
  if (a < 1 || b > num_vertices(n)) return false;
  return b - a == 1 || (a == 1 && b == num_vertices(n));
}

/// Boundary side of the polygon, normalized with a < b.
struct BoundaryEdge {
  int a = 0;
  int b = 0;

  BoundaryEdge() = default;
  BoundaryEdge(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}

  auto operator<=>(const BoundaryEdge&) const = default;
};

/// All n+3 boundary edges in increasing order.
inline std::vector<BoundaryEdge> boundary_edges(int n) {
  std::vector<BoundaryEdge> out;
  const int m = num_vertices(n);
  out.reserve(m);
  for (int i = 1; i < m; ++i) out.emplace_back(i, i + 1);
  out.emplace_back(1, m);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool valid_diagonal(int n, Diagonal d) {
  const int m = num_vertices(n);
  return 1 <= d.a && d.a < d.b && d.b <= m && d.b - d.a >= 2 &&
         !(d.a == 1 && d.b == m);
}

/// Strict interleaving test: (a,c) and (b,d) cross iff a < b < c < d (up to
/// swapping the two diagonals). Shared endpoints never cross.
inline bool crosses(Diagonal d1, Diagonal d2) {
  return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) ||
         (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

/// All diagonals of the (n+3)-gon in increasing order.
inline std::vector<Diagonal> all_diagonals(int n) {
  std::vector<Diagonal> out;
  const int m = num_vertices(n);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 2; b <= m; ++b)
      if (!(a == 1 && b == m)) out.emplace_back(a, b);
  return out;
}

/// A maximal set of pairwise noncrossing diagonals (exactly n of them),
/// stored sorted so that equality and hashing are structural.
class Triangulation {
 public:
  Triangulation() = default;

  Triangulation(int n, std::vector<Diagonal> diagonals)
      : n_(n), diags_(std::move(diagonals)) {
    std::sort(diags_.begin(), diags_.end());
    if (static_cast<int>(diags_.size()) != n)
      throw std::invalid_argument("triangulation must have exactly n diagonals");
    for (std::size_t i = 0; i < diags_.size(); ++i) {
      if (!valid_diagonal(n, diags_[i]))
        throw std::invalid_argument("invalid diagonal in triangulation");
      if (i > 0 && diags_[i] == diags_[i - 1])
        throw std::invalid_argument("duplicate diagonal in triangulation");
      for (std::size_t j = i + 1; j < diags_.size(); ++j)
        if (crosses(diags_[i], diags_[j]))
          throw std::invalid_argument("crossing diagonals in triangulation");
    }
  }

  int n() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diags_; }

  bool contains(Diagonal d) const {
    return std::binary_search(diags_.begin(), diags_.end(), d);
  }

  /// True iff (u, v) is a boundary edge or a diagonal of this triangulation.
  bool has_side(int u, int v) const {
    return is_boundary_edge(n_, u, v) || contains(Diagonal(u, v));
  }

  auto operator<=>(const Triangulation&) const = default;

  struct Hash {
    std::size_t operator()(const Triangulation& t) const {
      std::size_t h = 1469598103934665603ull;
      auto mix = [&h](int x) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
      };
      mix(t.n_);
      for (const auto& d : t.diags_) {
        mix(d.a);
        mix(d.b);
      }
      return h;
    }
  };

 private:
  int n_ = 0;
  std::vector<Diagonal> diags_;
};

/// Triangulation whose diagonals all share the given apex vertex.
inline Triangulation fan(int n, int apex) {
  if (apex < 1 || apex > num_vertices(n))
    throw std::invalid_argument("fan apex out of range");
  std::vector<Diagonal> diags;
  for (int v = 1; v <= num_vertices(n); ++v)
    if (v != apex && !is_boundary_edge(n, apex, v)) diags.emplace_back(apex, v);
  return Triangulation(n, std::move(diags));
}

/// Vertices of the quadrilateral in which flipping d takes place: the two
/// endpoints of d plus the apexes of the two triangles glued along d.
inline std::array<int, 4> quad_of(const Triangulation& t, Diagonal d) {
  if (!t.contains(d))
    throw DiagonalNotInTriangulation("diagonal (" + std::to_string(d.a) + "," +
                                     std::to_string(d.b) +
                                     ") not in triangulation");
  std::array<int, 4> quad{d.a, d.b, 0, 0};
  int found = 0;
  for (int c = 1; c <= num_vertices(t.n()); ++c) {
    if (c == d.a || c == d.b) continue;
    if (t.has_side(d.a, c) && t.has_side(c, d.b)) quad[2 + found++] = c;
  }
  if (found != 2) throw std::logic_error("diagonal without two apex triangles");
  std::sort(quad.begin(), quad.end());
  return quad;
}

/// Replace d by the other diagonal of its quadrilateral. Returns the new
/// triangulation together with the inserted diagonal; applying flip to the
/// result with the new diagonal restores the input.
inline std::pair<Triangulation, Diagonal> flip(const Triangulation& t,
                                               Diagonal d) {
  const auto q = quad_of(t, d);
  Diagonal fresh;
  if (d == Diagonal(q[0], q[2]))
    fresh = Diagonal(q[1], q[3]);
  else if (d == Diagonal(q[1], q[3]))
    fresh = Diagonal(q[0], q[2]);
  else
    throw std::logic_error("flip quadrilateral does not contain its diagonal");
  std::vector<Diagonal> diags;
  diags.reserve(t.diagonals().size());
  for (const auto& x : t.diagonals())
    if (x != d) diags.push_back(x);
  diags.push_back(fresh);
  return {Triangulation(t.n(), std::move(diags)), fresh};
}

inline constexpr std::size_t kDefaultMaxNodes = 250000;

/// All triangulations of the (n+3)-gon, enumerated by breadth-first closure
/// of fan(n, 1) under flips; neighbors are generated by flipping diagonals in
/// sorted order, so indices are reproducible. The count is Catalan(n+1).
inline std::vector<Triangulation> enumerate_triangulations(
    int n, std::size_t max_nodes = kDefaultMaxNodes) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (catalan(n + 1) > Int(max_nodes))
    throw ResourceLimit("triangulation count for n=" + std::to_string(n) +
                        " exceeds the node bound " +
                        std::to_string(max_nodes));
  std::vector<Triangulation> nodes;
  std::unordered_map<Triangulation, int, Triangulation::Hash> index;
  nodes.push_back(fan(n, 1));
  index.emplace(nodes[0], 0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Triangulation current = nodes[head];
    for (const auto& d : current.diagonals()) {
      auto [next, fresh] = flip(current, d);
      (void)fresh;
      if (index.emplace(next, static_cast<int>(nodes.size())).second)
        nodes.push_back(std::move(next));
    }
  }
  return nodes;
}

/// Faces of the dissection of the (n+3)-gon by a noncrossing chord set.
/// Each face is returned as its ascending vertex list (which is also its
/// cyclic order, since polygon vertices are in convex position); faces are
/// sorted lexicographically.
inline std::vector<std::vector<int>> dissection_regions(
    int n, const std::vector<Diagonal>& chords) {
  std::vector<std::vector<int>> regions(1);
  regions[0].resize(num_vertices(n));
  for (int v = 1; v <= num_vertices(n); ++v) regions[0][v - 1] = v;

  for (const auto& d : chords) {
    bool placed = false;
    for (std::size_t r = 0; r < regions.size() && !placed; ++r) {
      const auto& reg = regions[r];
      auto ia = std::lower_bound(reg.begin(), reg.end(), d.a);
      auto ib = std::lower_bound(reg.begin(), reg.end(), d.b);
      if (ia == reg.end() || *ia != d.a || ib == reg.end() || *ib != d.b)
        continue;
      const std::size_t pa = static_cast<std::size_t>(ia - reg.begin());
      const std::size_t pb = static_cast<std::size_t>(ib - reg.begin());
      const bool cyclically_adjacent =
          pb - pa == 1 || (pa == 0 && pb == reg.size() - 1);
      if (cyclically_adjacent) continue;  // chord is a side of this region
      std::vector<int> inner(reg.begin() + pa, reg.begin() + pb + 1);
      std::vector<int> outer(reg.begin(), reg.begin() + pa + 1);
      outer.insert(outer.end(), reg.begin() + pb, reg.end());
      regions[r] = std::move(inner);
      regions.push_back(std::move(outer));
      placed = true;
    }
    if (!placed)
      throw std::invalid_argument("chord set is not noncrossing");
  }
  std::sort(regions.begin(), regions.end());
  return regions;
}

/// Triangles of a full triangulation, each as an ascending vertex triple.
inline std::vector<std::array<int, 3>> triangles(const Triangulation& t) {
  std::vector<std::array<int, 3>> out;
  for (const auto& reg : dissection_regions(t.n(), t.diagonals())) {
    if (reg.size() != 3) throw std::logic_error("non-triangular face");
    out.push_back({reg[0], reg[1], reg[2]});
  }
  return out;
}

}  // namespace clusterex
