#include "cablejones/chern_simons.hpp"

#include <string>

#include "cablejones/asymptotics.hpp"
#include "cablejones/errors.hpp"
#include "cablejones/numerics/quadrature.hpp"
#include "cablejones/representation.hpp"

namespace cablejones {

namespace {

void require_above_kappa(const Real& u, const Real& k, const char* op) {
  if (u <= k) {
    throw DomainError(std::string(op) + ": u = " + u.to_string(12) + " must exceed kappa");
  }
}

void require_positive_tol(const Real& tol, const char* op) {
  if (tol.sign() <= 0) {
    throw DomainError(std::string(op) + ": tol must be positive");
  }
}

void check_routes(const Real& a, const Real& b, const Real& tol, const char* op) {
  Real rounding = abs(b);
  rounding.mul_2exp(16 - static_cast<long>(a.bits()));
  const Real slack = tol * 8L + rounding;
  if (abs(a - b) > slack) {
    throw ConvergenceError(std::string(op) + ": integral and dilogarithm routes disagree by " +
                           abs(a - b).to_string(6));
  }
}

}  // namespace

Real integral_log_ell(const Real& u, const Real& tol) {
  const Real k = kappa(u.bits());
  require_above_kappa(u, k, "integral_log_ell");
  require_positive_tol(tol, "integral_log_ell");
  const Real top = sqrt(u - k);
  auto integrand = [&k](const Real& w) {
    Real out = w * log(ell(k + square(w)));
    out.mul_2exp(1);
    return out;
  };
  return integrate(integrand, Real(top.bits()), top, tol).value;
}

CSResult cs_cable(const Real& u, const Real& tol) {
  CSResult out;
  out.u = u;
  out.integral = integral_log_ell(u, tol);
  out.ell = ell(u);
  const Real log_l = log(out.ell);
  out.v = log_l * 4L;
  out.S = S_of_xi(u);
  Real twice = out.integral * 2L;
  out.cs = twice - u * log_l;
  out.cs_other_route = out.S - u * out.v / 4L;
  out.integral_residual = abs(out.S - twice);
  check_routes(out.cs, out.cs_other_route, tol, "cs_cable");
  return out;
}

CSResult cs_fig8(const Real& eta, const Real& tol) {
  const Real half = eta / 2L;
  require_above_kappa(half, kappa(eta.bits()), "cs_fig8");
  CSResult out;
  out.u = eta;
  out.integral = integral_log_ell(half, tol);
  out.ell = ell(half);
  out.v = log(out.ell) * 2L;
  out.S = S_of_xi(half);
  const Real quarter = eta * out.v / 4L;
  out.cs = out.S - quarter;
  Real twice = out.integral * 2L;
  out.cs_other_route = twice - quarter;
  out.integral_residual = abs(out.S - twice);
  check_routes(out.cs, out.cs_other_route, tol, "cs_fig8");
  return out;
}

DerivativeCheck verify_derivative_identity(const Real& u, const Real& h) {
  require_above_kappa(u, kappa(u.bits()), "verify_derivative_identity");
  if (h.sign() <= 0) {
    throw DomainError("verify_derivative_identity: h must be positive");
  }
  if (u - h <= kappa(u.bits())) {
    throw DomainError("verify_derivative_identity: u - h must exceed kappa");
  }
  DerivativeCheck out;
  const Real slope = (S_of_xi(u + h) - S_of_xi(u - h)) / (h * 2L);
  const Real l2 = square(ell(u));
  out.finite_difference = abs(exp(slope) - l2) / l2;

  const Real p = phi(u);
  const Real two_u = u * 2L;
  const Real lhs = (exp(p) - exp(-two_u)) / (1L - exp(p - two_u));
  const Real rhs = exp(p + two_u) + exp(-p - two_u) - 2L;
  out.intermediate = abs(lhs - rhs) / abs(rhs);
  return out;
}

PathVariation path_variation_check(const Real& u, const Real& tol) {
  const Real k = kappa(u.bits());
  require_above_kappa(u, k, "path_variation_check");
  require_positive_tol(tol, "path_variation_check");
  const Real span = u - k;
  // t = w^2 absorbs the inverse square root of d log l at kappa.
  auto integrand = [&](const Real& w) {
    const Real t = square(w);
    const Real ut = k + span * t;
    const Real v = log(ell(ut)) * 4L;
    const Real dv = dlog_ell(ut) * 4L * span;
    Real out = w * (ut * dv - span * v);
    out.mul_2exp(1);
    return out;
  };
  PathVariation out;
  out.integral = integrate(integrand, Real(u.bits()), Real(1, u.bits()), tol).value;
  out.closed_form = u * log(ell(u)) * 4L - integral_log_ell(u, tol) * 8L;
  out.residual = abs(out.integral - out.closed_form);
  return out;
}

}  // namespace cablejones
