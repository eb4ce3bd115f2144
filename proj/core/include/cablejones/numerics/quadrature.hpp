#pragma once

#include <cstddef>
#include <functional>

#include "cablejones/numerics/real.hpp"

namespace cablejones {

struct QuadratureOptions {
  /// Gauss-Legendre points per panel.
  unsigned order = 24;
  /// Equal panels the interval is split into before refinement starts.
  unsigned min_panels = 1;
  /// Bisections allowed along any one panel.
  unsigned max_depth = 200;
  /// Panels allowed in the final partition.
  std::size_t max_panels = 1u << 14;
};

struct QuadratureResult {
  Real value;
  /// Sum of |coarse - refined| over accepted panels.
  Real error_estimate;
  std::size_t panels;
};

/// Adaptive panel quadrature of f over [a, b] to absolute error `tol`.
///
/// Each panel is integrated with an n-point Gauss-Legendre rule and compared
/// against the sum over its two halves. The panel with the largest
/// disagreement is bisected until the disagreements sum to at most `tol`;
/// ties go to the leftmost panel, so the partition and result are fully
/// deterministic. Computation runs at the precision of `a`. Throws
/// ConvergenceError if `tol` is below what that precision can resolve or if
/// max_depth or max_panels is exhausted.
QuadratureResult integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                           const Real& tol, const QuadratureOptions& options = {});

}  // namespace cablejones
