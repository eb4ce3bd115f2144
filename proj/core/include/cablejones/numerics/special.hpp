#pragma once

#include <string_view>

#include "cablejones/numerics/real.hpp"

namespace cablejones {

/// Real dilogarithm Li2(x) = -int_0^x log(1-t)/t dt for x <= 1.
///
/// Power series for |x| <= 1/2, reflection onto 1-x for x in (1/2, 1),
/// Landen's identity for x in [-1, -1/2) and inversion for x < -1.
/// Evaluated with guard bits and rounded to the precision of `x`.
/// Throws DomainError for x > 1.
Real dilog(const Real& x);

/// log(x + sqrt(x^2 - 1)) for x >= 1; DomainError otherwise.
Real arccosh(const Real& x);

/// Gamma(1/3) to 50 digits. Stored rather than computed.
inline constexpr std::string_view kGammaOneThird =
    "2.6789385347077476336556929409746776441286893779573";

Real gamma_one_third(Real::Bits bits);

}  // namespace cablejones
