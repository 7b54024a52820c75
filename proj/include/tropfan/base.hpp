// tropfan: exact-arithmetic obstructions for fan tropical curves in fan
// tropical planes.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropfan {

using Int = mpz_class;  // arbitrary-precision integer
using Rat = mpq_class;  // arbitrary-precision rational
using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorKind {
  // lattice
  ZeroVector,
  DegenerateSimplex,
  // arrangement
  DuplicateLine,
  AllConcurrent,
  InconsistentIncidence,
  CombinatorialModeOnly,
  // planefan / curve
  DimensionMismatch,
  CurveNotInFan,
  NonIntegralDegree,
  TooManyRays,
  UnbalancedCurve,
  // intersection
  OrderingDoesNotCover,
  NotAtCorner,
  NonIntegralDecomposition,
  // obstruction
  DegreeTooSmall,
  ReducibleImage,
  MalformedRegion,
  // classify
  DegreeNotOne,
  NotTrivalent,
  ReducibleCurve,
  // surface
  NonGenericLifts,
  EmptySupport,
  BadParameters,
  InvalidTriangulation,
  // io / cli
  InputError,
  Internal,
};

const char* error_kind_name(ErrorKind k);

// Input/schema problems exit the CLI with code 2; violated mathematical
// preconditions exit with code 3.
bool is_input_error(ErrorKind k);

class TropError : public std::runtime_error {
 public:
  TropError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw TropError(kind, msg);
}

// ---------------------------------------------------------------------------
// Integer vector helpers
// ---------------------------------------------------------------------------

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec scaled(const Int& c, const Vec& a);
Int dot(const Vec& a, const Vec& b);

// gcd of all entries (nonnegative; 0 for the zero vector).
Int content(const Vec& v);

// primitive(v) = (v / content, content).  Errors on v = 0.
std::pair<Vec, Int> primitive(const Vec& v);

std::string to_string(const Vec& v);

// ---------------------------------------------------------------------------
// Exact linear algebra (small dense systems)
// ---------------------------------------------------------------------------

// Determinant of a square integer matrix (rows), fraction-free.
Int det(const std::vector<Vec>& rows);

// Basis of the right nullspace of a rational matrix (rows of length n).
std::vector<QVec> nullspace(const std::vector<QVec>& rows, std::size_t n);

// Solve a*x + b*y = v exactly for rationals (a, b) given integer vectors
// x, y, v with x, y linearly independent.  Returns nullopt when v is outside
// the span of {x, y}.
std::optional<std::pair<Rat, Rat>> solve_pair(const Vec& x, const Vec& y,
                                              const Vec& v);

// Solve a square rational linear system rows * sol = rhs; nullopt if singular.
std::optional<QVec> solve_square(const std::vector<QVec>& rows,
                                 const QVec& rhs);

// Generalized cross product: the 1-dimensional kernel direction of an
// (n-1) x n integer matrix of full rank, as an integer vector (cofactor
// expansion).  Zero vector if the rows are dependent.
Vec kernel_direction(const std::vector<Vec>& rows);

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

}  // namespace tropfan
