#pragma once

#include <stdexcept>
#include <string>

namespace clusterex {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DiagonalNotInTriangulation : Error {
  using Error::Error;
};

/// Enumeration or graph construction would exceed the configured node bound.
struct ResourceLimit : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

/// Exact division failed; in the cluster-variable pipeline this signals an
/// upstream bug, never a legitimate state.
struct NotDivisible : Error {
  using Error::Error;
};

struct ZeroToNegativePower : Error {
  using Error::Error;
};

struct NotAWalk : Error {
  using Error::Error;
};

struct MoveNotApplicable : Error {
  using Error::Error;
};

struct LabelMismatch : Error {
  using Error::Error;
};

/// Two flip paths produced different Laurent polynomials for one diagonal.
struct InconsistentVariable : Error {
  using Error::Error;
};

struct TriangleFound : Error {
  using Error::Error;
};

struct RankMismatch : Error {
  using Error::Error;
};

struct NotExpressible : Error {
  using Error::Error;
};

struct NotInSpan : Error {
  using Error::Error;
};

}  // namespace clusterex
