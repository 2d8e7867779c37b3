#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, saturated
// kernels, lattice membership and lattice equality. All verdicts are exact;
// no floating point, no modular shortcuts.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "clusterex/errors.hpp"
#include "clusterex/numbers.hpp"

namespace clusterex {

/// Dense matrix of arbitrary-precision integers, row major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMat identity(int k) {
    IntMat m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMat from_columns(int rows,
                             const std::vector<std::vector<Int>>& cols) {
    IntMat m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
      if (static_cast<int>(cols[j].size()) != rows)
        throw std::invalid_argument("column length mismatch");
      for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  std::vector<Int> column(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  std::vector<Int> row(int i) const {
    std::vector<Int> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }

  IntMat transposed() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  friend IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
    IntMat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Int& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Int& bkj = b.at(k, j);
          if (bkj != 0) c.at(i, j) += aik * bkj;
        }
      }
    return c;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("dimension mismatch");
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
  }

  bool operator==(const IntMat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

/// Row Hermite normal form H = U * A with U unimodular. H is the canonical
/// echelon form: pivots positive, entries above each pivot reduced into
/// [0, pivot), zero rows at the bottom. Canonicity makes lattice comparison a
/// matrix equality.
struct HermiteResult {
  IntMat h;
  IntMat u;  // empty unless requested
  std::vector<int> pivot_cols;
  int rank = 0;
};

inline HermiteResult hermite_rows(const IntMat& a, bool with_transform) {
  HermiteResult res;
  res.h = a;
  if (with_transform) res.u = IntMat::identity(a.rows());
  IntMat& h = res.h;
  IntMat& u = res.u;
  const int rows = a.rows(), cols = a.cols();

  auto add_row = [&](int dst, int src, const Int& k) {
    if (k == 0) return;
    for (int j = 0; j < cols; ++j)
      if (h.at(src, j) != 0) h.at(dst, j) += k * h.at(src, j);
    if (with_transform)
      for (int j = 0; j < rows; ++j)
        if (u.at(src, j) != 0) u.at(dst, j) += k * u.at(src, j);
  };
  auto swap_rows = [&](int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < cols; ++j) std::swap(h.at(r1, j), h.at(r2, j));
    if (with_transform)
      for (int j = 0; j < rows; ++j) std::swap(u.at(r1, j), u.at(r2, j));
  };
  auto negate_row = [&](int r) {
    for (int j = 0; j < cols; ++j) h.at(r, j) = -h.at(r, j);
    if (with_transform)
      for (int j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
  };

  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    // Euclidean reduction below the cursor until one nonzero entry remains.
    while (true) {
      int best = -1;
      for (int i = lead; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        if (best < 0 || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
      }
      if (best < 0) break;
      swap_rows(lead, best);
      bool cleared = true;
      for (int i = lead + 1; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        add_row(i, lead, -floor_div(h.at(i, col), h.at(lead, col)));
        if (h.at(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h.at(lead, col) == 0) continue;
    if (h.at(lead, col) < 0) negate_row(lead);
    for (int i = 0; i < lead; ++i)
      add_row(i, lead, -floor_div(h.at(i, col), h.at(lead, col)));
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = lead;
  return res;
}

/// Integer basis of {v : M v = 0}, returned as matrix columns. The basis
/// rows come from the unimodular transform of the Hermite form of M^T, so
/// the lattice they span is saturated: it contains every integer kernel
/// vector.
inline IntMat kernel_basis(const IntMat& m) {
  const HermiteResult hr = hermite_rows(m.transposed(), true);
  const int total = m.cols();
  std::vector<std::vector<Int>> cols;
  for (int r = hr.rank; r < total; ++r) cols.push_back(hr.u.row(r));
  return IntMat::from_columns(total, cols);
}

inline int rank(const IntMat& m) { return hermite_rows(m, false).rank; }

/// Integer lattice spanned by the columns of a generating matrix, with exact
/// membership tests and (optionally) coordinates in the original generators.
class Lattice {
 public:
  explicit Lattice(const IntMat& generators, bool with_coordinates = false)
      : gens_(generators),
        hr_(hermite_rows(generators.transposed(), with_coordinates)),
        with_coordinates_(with_coordinates) {}

  int ambient_dim() const { return gens_.rows(); }
  int rank() const { return hr_.rank; }

  /// Canonical Hermite form of the generators (zero rows stripped); two
  /// column-generated lattices are equal iff these matrices are equal.
  IntMat canonical_basis() const {
    IntMat b(hr_.rank, gens_.rows());
    for (int i = 0; i < hr_.rank; ++i)
      for (int j = 0; j < gens_.rows(); ++j) b.at(i, j) = hr_.h.at(i, j);
    return b;
  }

  bool contains(const std::vector<Int>& v) const {
    return reduce(v).has_value();
  }

  /// Integer coefficients c with generators * c = v, if any. Requires the
  /// lattice to have been built with coordinates enabled.
  std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const {
    if (!with_coordinates_)
      throw std::logic_error("lattice built without coordinate transform");
    auto y = reduce(v);
    if (!y) return std::nullopt;
    // v = y^T H = (y^T U) A with A = generators^T, so c = U^T y.
    const int ngen = gens_.cols();
    std::vector<Int> c(ngen);
    for (int r = 0; r < hr_.rank; ++r) {
      if ((*y)[r] == 0) continue;
      for (int g = 0; g < ngen; ++g)
        if (hr_.u.at(r, g) != 0) c[g] += hr_.u.at(r, g) * (*y)[r];
    }
    return c;
  }

 private:
  // Coefficients of v over the Hermite rows, or nullopt if v is outside.
  std::optional<std::vector<Int>> reduce(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != gens_.rows())
      throw std::invalid_argument("vector has wrong dimension");
    std::vector<Int> rem = v;
    std::vector<Int> y(hr_.rank, Int(0));
    for (int r = 0; r < hr_.rank; ++r) {
      const int pc = hr_.pivot_cols[r];
      if (rem[pc] == 0) continue;
      if (rem[pc] % hr_.h.at(r, pc) != 0) return std::nullopt;
      const Int q = rem[pc] / hr_.h.at(r, pc);
      for (int j = pc; j < gens_.rows(); ++j)
        if (hr_.h.at(r, j) != 0) rem[j] -= q * hr_.h.at(r, j);
      y[r] = q;
    }
    for (const auto& x : rem)
      if (x != 0) return std::nullopt;
    return y;
  }

  IntMat gens_;
  HermiteResult hr_;
  bool with_coordinates_;
};

inline std::optional<std::vector<Int>> lattice_contains(
    const IntMat& generators, const std::vector<Int>& v) {
  return Lattice(generators, true).coordinates(v);
}

inline bool lattice_equal(const IntMat& b1, const IntMat& b2) {
  if (b1.rows() != b2.rows()) return false;
  return Lattice(b1).canonical_basis() == Lattice(b2).canonical_basis();
}

/// Smith normal form U * M * V = D. `factors` lists the nonzero invariant
/// factors d_1 | d_2 | ... ; rank is their count. Witness matrices are
/// accumulated only on request (they are dense).
struct SmithResult {
  std::vector<Int> factors;
  int rank = 0;
  bool has_witnesses = false;
  IntMat u;
  IntMat v;

  IntMat diagonal(int rows, int cols) const {
    IntMat d(rows, cols);
    for (std::size_t i = 0; i < factors.size(); ++i)
      d.at(static_cast<int>(i), static_cast<int>(i)) = factors[i];
    return d;
  }
};

namespace detail {

/// Sparse workspace for Smith reduction: row maps plus a column occupancy
/// index, with optional dense witness tracking. Pivoting prefers minimal
/// absolute value, then minimal fill.
class SmithWorkspace {
 public:
  SmithWorkspace(const IntMat& m, bool witnesses)
      : rows_(m.rows()), cols_(m.cols()), row_(m.rows()), col_rows_(m.cols()),
        witnesses_(witnesses) {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (m.at(i, j) != 0) {
          row_[i][j] = m.at(i, j);
          col_rows_[j].insert(i);
        }
    if (witnesses_) {
      u_ = IntMat::identity(rows_);
      v_ = IntMat::identity(cols_);
    }
  }

  SmithResult run() {
    std::vector<std::tuple<int, int>> pivots;  // (row, col) in extraction order
    std::set<int> live_rows, live_cols;
    for (int i = 0; i < rows_; ++i) live_rows.insert(i);
    for (int j = 0; j < cols_; ++j) live_cols.insert(j);

    while (true) {
      auto pv = pick_pivot(live_rows);
      if (!pv) break;
      auto [pi, pj] = *pv;
      isolate(pi, pj);
      pivots.emplace_back(pi, pj);
      live_rows.erase(pi);
      live_cols.erase(pj);
    }

    // Positive pivots, then enforce the divisibility chain pairwise.
    for (auto& [pi, pj] : pivots)
      if (row_[pi].at(pj) < 0) negate_row(pi);
    std::sort(pivots.begin(), pivots.end(), [&](const auto& x, const auto& y) {
      return row_[std::get<0>(x)].at(std::get<1>(x)) <
             row_[std::get<0>(y)].at(std::get<1>(y));
    });
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t t = 0; t + 1 < pivots.size(); ++t) {
        auto& [i1, j1] = pivots[t];
        auto& [i2, j2] = pivots[t + 1];
        const Int a = row_[i1].at(j1);
        const Int b = row_[i2].at(j2);
        if (b % a == 0) continue;
        fix_pair(i1, j1, i2, j2);
        if (row_[i1].at(j1) < 0) negate_row(i1);
        if (row_[i2].at(j2) < 0) negate_row(i2);
        if (row_[i1].at(j1) > row_[i2].at(j2))
          std::swap(pivots[t], pivots[t + 1]);
        changed = true;
      }
    }

    SmithResult res;
    res.rank = static_cast<int>(pivots.size());
    for (auto& [pi, pj] : pivots) res.factors.push_back(row_[pi].at(pj));
    res.has_witnesses = witnesses_;
    if (witnesses_) {
      // Permute so pivot t lands on diagonal position (t, t).
      res.u = permuted_rows(u_, pivots, rows_, true);
      res.v = permuted_cols(v_, pivots, cols_);
    }
    return res;
  }

 private:
  Int entry(int i, int j) const {
    auto it = row_[i].find(j);
    return it == row_[i].end() ? Int(0) : it->second;
  }

  void set_entry(int i, int j, Int val) {
    if (val == 0) {
      row_[i].erase(j);
      col_rows_[j].erase(i);
    } else {
      row_[i][j] = std::move(val);
      col_rows_[j].insert(i);
    }
  }

  // row dst += k * row src
  void add_row(int dst, int src, const Int& k) {
    if (k == 0) return;
    for (const auto& [j, val] : row_[src]) {
      Int nv = entry(dst, j) + k * val;
      set_entry(dst, j, std::move(nv));
    }
    if (witnesses_)
      for (int j = 0; j < rows_; ++j)
        if (u_.at(src, j) != 0) u_.at(dst, j) += k * u_.at(src, j);
  }

  // col dst += k * col src
  void add_col(int dst, int src, const Int& k) {
    if (k == 0) return;
    const auto rows_touched = col_rows_[src];  // copy: set mutates below
    for (int i : rows_touched) {
      Int nv = entry(i, dst) + k * row_[i].at(src);
      set_entry(i, dst, std::move(nv));
    }
    if (witnesses_)
      for (int i = 0; i < cols_; ++i)
        if (v_.at(i, src) != 0) v_.at(i, dst) += k * v_.at(i, src);
  }

  void negate_row(int r) {
    for (auto& [j, val] : row_[r]) val = -val;
    if (witnesses_)
      for (int j = 0; j < rows_; ++j) u_.at(r, j) = -u_.at(r, j);
  }

  std::optional<std::pair<int, int>> pick_pivot(
      const std::set<int>& live_rows) const {
    int bi = -1, bj = -1;
    Int babs;
    std::size_t bfill = 0;
    for (int i : live_rows) {
      for (const auto& [j, val] : row_[i]) {
        const Int a = val < 0 ? Int(-val) : val;
        const std::size_t fill =
            (row_[i].size() - 1) * (col_rows_[j].size() - 1);
        if (bi < 0 || a < babs || (a == babs && fill < bfill)) {
          bi = i;
          bj = j;
          babs = a;
          bfill = fill;
        }
      }
    }
    if (bi < 0) return std::nullopt;
    return std::make_pair(bi, bj);
  }

  /// Clear pivot row and column by Euclidean reduction; on exit (pi, pj) is
  /// the only nonzero entry in its row and column. Whenever a division
  /// leaves a remainder, the strictly smaller remainder becomes the pivot,
  /// so the pivot's absolute value is monotone decreasing and the loop
  /// terminates.
  void isolate(int pi, int pj) {
    while (true) {
      while (col_rows_[pj].size() > 1) {
        int other = -1;
        for (int i : col_rows_[pj])
          if (i != pi) {
            other = i;
            break;
          }
        const Int q = floor_div(row_[other].at(pj), row_[pi].at(pj));
        add_row(other, pi, -q);
        if (entry(other, pj) != 0) swap_rows(pi, other);
      }
      bool dirty = false;
      while (row_[pi].size() > 1) {
        int other = -1;
        for (const auto& [j, val] : row_[pi])
          if (j != pj) {
            other = j;
            break;
          }
        const Int q = floor_div(row_[pi].at(other), row_[pi].at(pj));
        add_col(other, pj, -q);
        if (entry(pi, other) != 0) {
          swap_cols(pj, other);
          dirty = true;
          break;  // the swapped-in column may be occupied: redo column pass
        }
      }
      if (!dirty && col_rows_[pj].size() == 1 && row_[pi].size() == 1) return;
    }
  }

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    std::swap(row_[r1], row_[r2]);
    for (auto& s : col_rows_) {
      const bool h1 = s.count(r1) > 0, h2 = s.count(r2) > 0;
      if (h1 == h2) continue;
      if (h1) {
        s.erase(r1);
        s.insert(r2);
      } else {
        s.erase(r2);
        s.insert(r1);
      }
    }
    if (witnesses_)
      for (int j = 0; j < rows_; ++j) std::swap(u_.at(r1, j), u_.at(r2, j));
  }

  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    std::swap(col_rows_[c1], col_rows_[c2]);
    const auto rows_touched = [&] {
      std::set<int> s = col_rows_[c1];
      s.insert(col_rows_[c2].begin(), col_rows_[c2].end());
      return s;
    }();
    for (int i : rows_touched) {
      auto it1 = row_[i].find(c1);
      auto it2 = row_[i].find(c2);
      Int v1 = it1 == row_[i].end() ? Int(0) : it1->second;
      Int v2 = it2 == row_[i].end() ? Int(0) : it2->second;
      if (v2 == 0) row_[i].erase(c1); else row_[i][c1] = v2;
      if (v1 == 0) row_[i].erase(c2); else row_[i][c2] = v1;
    }
    if (witnesses_)
      for (int i = 0; i < cols_; ++i) std::swap(v_.at(i, c1), v_.at(i, c2));
  }

  /// Replace diagonal pair (a, b) with (gcd, lcm) using unimodular ops.
  void fix_pair(int i1, int j1, int i2, int j2) {
    add_col(j1, j2, 1);  // introduces b at (i2, j1)
    // Euclid down column j1 between rows i1 and i2.
    int top = i1, bot = i2;
    while (entry(bot, j1) != 0) {
      const Int q = floor_div(row_[top].count(j1) ? row_[top].at(j1) : Int(0),
                              row_[bot].at(j1));
      add_row(top, bot, -q);
      std::swap(top, bot);
    }
    if (top != i1) swap_rows(i1, i2);
    // Clear the residue of row i1 in column j2; it is a multiple of the gcd.
    const Int g = row_[i1].at(j1);
    const Int r = entry(i1, j2);
    if (r != 0) {
      if (r % g != 0) throw std::logic_error("smith pair fix: non-multiple");
      add_col(j2, j1, -(r / g));
    }
  }

  static IntMat permuted_rows(const IntMat& u,
                              const std::vector<std::tuple<int, int>>& pivots,
                              int rows, bool /*is_u*/) {
    std::vector<int> order;
    std::vector<char> used(rows, 0);
    for (auto& [pi, pj] : pivots) {
      order.push_back(pi);
      used[pi] = 1;
    }
    for (int i = 0; i < rows; ++i)
      if (!used[i]) order.push_back(i);
    IntMat out(rows, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j) out.at(i, j) = u.at(order[i], j);
    return out;
  }

  static IntMat permuted_cols(const IntMat& v,
                              const std::vector<std::tuple<int, int>>& pivots,
                              int cols) {
    std::vector<int> order;
    std::vector<char> used(cols, 0);
    for (auto& [pi, pj] : pivots) {
      order.push_back(pj);
      used[pj] = 1;
    }
    for (int j = 0; j < cols; ++j)
      if (!used[j]) order.push_back(j);
    IntMat out(cols, cols);
    for (int i = 0; i < cols; ++i)
      for (int j = 0; j < cols; ++j) out.at(i, j) = v.at(i, order[j]);
    return out;
  }

  int rows_, cols_;
  std::vector<std::map<int, Int>> row_;
  std::vector<std::set<int>> col_rows_;
  bool witnesses_;
  IntMat u_, v_;
};

}  // namespace detail

inline SmithResult smith_normal_form(const IntMat& m,
                                     bool with_witnesses = false) {
  detail::SmithWorkspace ws(m, with_witnesses);
  return ws.run();
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square matrix only");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace clusterex
