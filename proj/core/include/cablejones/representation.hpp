#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cablejones/numerics/real.hpp"

namespace cablejones {

/// Real 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  Real a;
  Real b;
  Real c;
  Real d;

  static Mat2 identity(Real::Bits bits);
  Real::Bits bits() const { return a.bits(); }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Real det(const Mat2& m);
/// Inverse via the adjugate; DomainError for a singular matrix.
Mat2 inverse(const Mat2& m);
/// m^n by repeated squaring; negative n inverts first.
Mat2 pow(const Mat2& m, long n);
/// Product of a word read left to right, e.g. {x, y_inv, x}.
Mat2 product(const std::vector<const Mat2*>& word);
Real max_abs_entry(const Mat2& m);
Real max_abs_diff(const Mat2& x, const Mat2& y);

/// delta(u) = (T - 3 + sqrt((T + 1)(T - 3)))/2 with T = e^{2u} + e^{-2u}.
/// DomainError for u < kappa.
Real delta(const Real& u);

/// l(u) = (e^{4u} - e^{2u} - 2 - e^{-2u} + e^{-4u})/2 + sinh(2u) sqrt((T + 1)(T - 3)).
/// DomainError for u < kappa.
Real ell(const Real& u);

/// cosh(4u) - cosh(2u) - 1 + 2 sinh(2u) sinh(phi(u)), the same value computed
/// from phi.
Real ell_hyperbolic(const Real& u);

/// d log l / du = (8 cosh(2u) - 2) / sqrt((T + 1)(T - 3)), for u > kappa.
Real dlog_ell(const Real& u);

/// e^{4u} - e^{2u} - 2 - e^{-2u} + e^{-4u}.
Real fig8_trace_poly(const Real& u);

/// Images of the generators of the cable knot group under rho_u.
struct RepData {
  Real u;
  int b = 0;
  Real delta;
  Real ell;
  Mat2 x;
  Mat2 y;
  Mat2 p;
  /// Closed form of rho(r).
  Mat2 r;
  /// Closed form of the figure-eight longitude image.
  Mat2 lambda_E;
  /// Cable longitude, lambda_E squared.
  Mat2 lambda;
  /// Closed form of rho(x)^b.
  Mat2 x_pow_b;

  std::vector<std::pair<std::string, const Mat2*>> named() const;
};

/// Requires u > kappa and b >= 0.
RepData build_rep(const Real& u, int b);

struct RelationResidual {
  std::string name;
  /// max |lhs - rhs| over max(1, product of the factor norms of either side).
  Real residual;
};

/// Every group relation and closed-form display checked as a matrix identity.
std::vector<RelationResidual> verify_relations(const RepData& rep);

/// l - (e^{4u} - e^{2u} - 2 - e^{-2u} + e^{-4u}) + l^{-1}.
Real a_poly_fig8_residual(const Real& u);

/// |l^2 + l^{-2} - ((e^{4u} - e^{2u} - 2 - e^{-2u} + e^{-4u})^2 - 2)|.
Real a_poly_cable_check(const Real& u);

/// The second factor L - ((M^8 - M^4 - 2 - M^{-4} + M^{-8})^2 - 2) + L^{-1} of the
/// cable A-polynomial at M = e^{u/2}, L = l(u)^2.
Real a_poly_cable_factor(const Real& u);

}  // namespace cablejones
