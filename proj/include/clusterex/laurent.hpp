#pragma once

// Exact multivariate Laurent polynomials with arbitrary-precision integer
// coefficients. Terms are kept in descending graded-lexicographic order with
// no zero coefficients, so equality is structural and printing is
// deterministic.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "clusterex/errors.hpp"
#include "clusterex/numbers.hpp"

namespace clusterex {

/// Exponent vector of a Laurent monomial; one entry per variable, negatives
/// allowed.
using Exponents = std::vector<int>;

inline long long total_degree(const Exponents& e) {
  long long d = 0;
  for (int x : e) d += x;
  return d;
}

/// Graded-lexicographic order: compare total degree first, then exponents
/// left to right.
inline bool grlex_less(const Exponents& x, const Exponents& y) {
  const long long dx = total_degree(x), dy = total_degree(y);
  if (dx != dy) return dx < dy;
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

struct GrlexLess {
  bool operator()(const Exponents& x, const Exponents& y) const {
    return grlex_less(x, y);
  }
};

class LaurentPoly {
 public:
  using Term = std::pair<Exponents, Int>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, Int c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace_back(Exponents(nvars, 0), std::move(c));
    return p;
  }

  /// The monomial c * x_index^power, with index counted from 1.
  static LaurentPoly variable(int nvars, int index, int power = 1,
                              Int c = Int(1)) {
    if (index < 1 || index > nvars)
      throw std::invalid_argument("variable index out of range");
    LaurentPoly p(nvars);
    if (c != 0) {
      Exponents e(nvars, 0);
      e[index - 1] = power;
      p.terms_.emplace_back(std::move(e), std::move(c));
    }
    return p;
  }

  static LaurentPoly monomial(Exponents e, Int c) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace_back(std::move(e), std::move(c));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Terms in descending graded-lex order; coefficients are nonzero.
  const std::vector<Term>& terms() const { return terms_; }

  /// Leading term under graded-lex; poly must be nonzero.
  const Term& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return terms_.front();
  }

  bool operator==(const LaurentPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

  LaurentPoly operator-() const {
    LaurentPoly p(nvars_);
    p.terms_ = terms_;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    check_arity(p, q);
    std::map<Exponents, Int, GrlexLess> acc;
    for (const auto& [e, c] : p.terms_) acc[e] += c;
    for (const auto& [e, c] : q.terms_) acc[e] += c;
    return from_map(std::max(p.nvars_, q.nvars_), acc);
  }

  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
    return p + (-q);
  }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    check_arity(p, q);
    std::map<Exponents, Int, GrlexLess> acc;
    Exponents e(static_cast<std::size_t>(std::max(p.nvars_, q.nvars_)), 0);
    for (const auto& [ep, cp] : p.terms_) {
      for (const auto& [eq, cq] : q.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
        acc[e] += cp * cq;
      }
    }
    return from_map(std::max(p.nvars_, q.nvars_), acc);
  }

  LaurentPoly& operator+=(const LaurentPoly& q) { return *this = *this + q; }
  LaurentPoly& operator-=(const LaurentPoly& q) { return *this = *this - q; }
  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  /// Componentwise minimum exponent over all terms (zero vector if empty).
  Exponents min_exponents() const {
    Exponents m(nvars_, 0);
    if (terms_.empty()) return m;
    m = terms_.front().first;
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
  }

  /// Multiply by the monomial x^shift (exponent translation).
  LaurentPoly shifted(const Exponents& shift) const {
    LaurentPoly p(nvars_);
    p.terms_ = terms_;
    for (auto& [e, c] : p.terms_)
      for (int i = 0; i < nvars_; ++i) e[i] += shift[i];
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& s, const Term& t) {
                return grlex_less(t.first, s.first);
              });
    return p;
  }

  /// Exact evaluation at a total assignment of rational values.
  Rational specialize(const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != nvars_)
      throw ArityMismatch("assignment size does not match variable count");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term(c);
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (values[i] == 0) {
          if (e[i] < 0)
            throw ZeroToNegativePower("zero raised to a negative power");
          term = 0;
          break;
        }
        Rational base = values[i];
        int k = e[i];
        if (k < 0) {
          base = Rational(1) / base;
          k = -k;
        }
        for (int j = 0; j < k; ++j) term *= base;
      }
      sum += term;
    }
    return sum;
  }

  /// Substitute 1 for every variable whose (1-based) index satisfies the
  /// predicate; the result is a Laurent polynomial in the remaining ones.
  template <typename Pred>
  LaurentPoly substitute_ones(Pred&& is_substituted) const {
    std::map<Exponents, Int, GrlexLess> acc;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (int i = 0; i < nvars_; ++i)
        if (is_substituted(i + 1)) f[i] = 0;
      acc[f] += c;
    }
    return from_map(nvars_, acc);
  }

  /// Deterministic rendering, terms in storage order, e.g.
  /// "x1^-1*x3*x5 + x1^-1*x2*x4".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const Int abs_c = c < 0 ? Int(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      std::string vars;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += "x" + std::to_string(i + 1);
        if (e[i] != 1) vars += "^" + std::to_string(e[i]);
      }
      if (vars.empty()) {
        os << abs_c.str();
      } else {
        if (abs_c != 1) os << abs_c.str() << "*";
        os << vars;
      }
    }
    return os.str();
  }

  friend LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

 private:
  static void check_arity(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.nvars_ != q.nvars_)
      throw ArityMismatch("operands have different variable counts");
  }

  static LaurentPoly from_map(int nvars,
                              const std::map<Exponents, Int, GrlexLess>& acc) {
    LaurentPoly p(nvars);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (it->second != 0) p.terms_.emplace_back(it->first, it->second);
    return p;
  }

  int nvars_ = 0;
  std::vector<Term> terms_;
};

/// Exact quotient p / q in the Laurent ring; throws NotDivisible when no
/// integer-coefficient Laurent quotient exists. Both operands are first
/// normalized by monomial factors so that the quotient reduces to ordinary
/// polynomial division (monomials are units here), then divided by repeated
/// leading-term cancellation under graded-lex.
inline LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (p.nvars() != q.nvars())
    throw ArityMismatch("operands have different variable counts");
  if (p.is_zero()) return LaurentPoly(p.nvars());

  const int nv = p.nvars();
  const Exponents mp = p.min_exponents();
  const Exponents mq = q.min_exponents();
  Exponents neg_mp(nv), neg_mq(nv), back(nv);
  for (int i = 0; i < nv; ++i) {
    neg_mp[i] = -mp[i];
    neg_mq[i] = -mq[i];
    back[i] = mp[i] - mq[i];
  }
  const LaurentPoly pp = p.shifted(neg_mp);
  const LaurentPoly qq = q.shifted(neg_mq);

  LaurentPoly quotient(nv);
  LaurentPoly rem = pp;
  const auto& [qe, qc] = qq.leading();
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading();
    Exponents diff(nv);
    for (int i = 0; i < nv; ++i) {
      diff[i] = re[i] - qe[i];
      if (diff[i] < 0) throw NotDivisible("leading monomial not divisible");
    }
    if (rc % qc != 0) throw NotDivisible("leading coefficient not divisible");
    const LaurentPoly t = LaurentPoly::monomial(std::move(diff), rc / qc);
    quotient += t;
    rem -= t * qq;
  }
  return quotient.shifted(back);
}

}  // namespace clusterex
