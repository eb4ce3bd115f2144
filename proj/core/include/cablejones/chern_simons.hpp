#pragma once

#include "cablejones/numerics/real.hpp"

namespace cablejones {

/// int_kappa^u log l(s) ds to absolute error `tol`, integrated in w after
/// s = kappa + w^2. DomainError for u <= kappa; ConvergenceError if tol is out
/// of reach at the precision of u.
Real integral_log_ell(const Real& u, const Real& tol);

/// Chern-Simons value of one exterior with both evaluation routes.
/// CS values are defined modulo pi^2 Z and are reported unreduced.
struct CSResult {
  /// Meridian parameter: u for the cable, eta for the figure-eight.
  Real u;
  /// l at the point of evaluation: l(u) for the cable, l(eta/2) for the figure-eight.
  Real ell;
  /// Longitude parameter: 4 log l(u) for the cable, 2 log l(eta/2) for the figure-eight.
  Real v;
  /// Dilogarithm value S(u), or S(eta/2).
  Real S;
  Real cs;
  /// The same value from the other route (dilogarithm for the cable, integral for the figure-eight).
  Real cs_other_route;
  /// int_kappa^{u or eta/2} log l.
  Real integral;
  /// |S - 2 integral|.
  Real integral_residual;
};

/// cs = 2 int_kappa^u log l - u log l(u); the other route is S(u) - u v/4.
/// Throws ConvergenceError if the two routes disagree beyond tolerance.
CSResult cs_cable(const Real& u, const Real& tol);

/// cs = S(eta/2) - eta v_E/4 with v_E = 2 log l(eta/2), eta > 2 kappa.
CSResult cs_fig8(const Real& eta, const Real& tol);

struct DerivativeCheck {
  /// |exp(dS/du) - l(u)^2| / l(u)^2 with a central difference of step h.
  Real finite_difference;
  /// Relative gap in (e^phi - e^{-2u})/(1 - e^{phi-2u}) = e^{phi+2u} + e^{-phi-2u} - 2.
  Real intermediate;
};

DerivativeCheck verify_derivative_identity(const Real& u, const Real& h);

/// Integral over t in [0, 1] of u_t v'(t) - u'(t) v(t) along u_t = kappa + (u - kappa) t,
/// v = 4 log l(u_t), against its integrated-by-parts value 4u log l(u) - 8 int_kappa^u log l.
struct PathVariation {
  Real integral;
  Real closed_form;
  Real residual;
};

PathVariation path_variation_check(const Real& u, const Real& tol);

}  // namespace cablejones
