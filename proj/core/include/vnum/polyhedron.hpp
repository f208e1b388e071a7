#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vnum {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// `p/q` in lowest terms, or `p` when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

/// a·y >= rhs.
struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;
};

/// {y in Q^dim : A·y >= b, y >= 0}. Non-negativity is implicit.
class RationalPolyhedron {
 public:
  explicit RationalPolyhedron(std::size_t dim) : dim_(dim) {}
  RationalPolyhedron(std::size_t dim, std::vector<LinearConstraint> constraints);

  /// Throws StructuralError when the coefficient tuple has the wrong length.
  void add_constraint(LinearConstraint c);

  std::size_t dimension() const { return dim_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  bool contains(const RationalVector& y) const;

 private:
  std::size_t dim_;
  std::vector<LinearConstraint> constraints_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector point;
};

/// Two-phase dense simplex over exact rationals with Bland's pivoting rule.
LpResult lp_minimize(const RationalPolyhedron& P, const RationalVector& objective);

inline constexpr std::size_t kDefaultVertexDimensionCap = 12;

/// Every vertex of P, found by scanning all dim-subsets of the constraint rows
/// (non-negativity facets included) with incremental rank pruning.
/// Throws ResourceError when the dimension exceeds `dimension_cap`.
std::vector<RationalVector> enumerate_vertices(const RationalPolyhedron& P,
                                               std::size_t dimension_cap = kDefaultVertexDimensionCap);

Rational coordinate_sum(const RationalVector& v);

}  // namespace vnum
