#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterex {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero for k < 0 or k > n.
inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Catalan number C_k = C(2k, k) / (k + 1); counts triangulations of a
/// (k+2)-gon.
inline Int catalan(int k) { return binomial(2 * k, k) / (k + 1); }

/// Quotient of floored division (remainder has the divisor's sign or zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace clusterex
