#include "cablejones/numerics/special.hpp"

#include "cablejones/errors.hpp"

namespace cablejones {

namespace {

constexpr Real::Bits kDilogGuard = 24;

// sum_{k>=1} x^k / k^2 for |x| <= 1/2.
Real dilog_series(const Real& x) {
  const Real::Bits bits = x.bits();
  Real sum(bits);
  if (x.is_zero()) {
    return sum;
  }
  Real power = x;
  for (long k = 1;; ++k) {
    Real term = power / (k * k);
    sum += term;
    if (abs(term).exponent2() < sum.exponent2() - static_cast<long>(bits) - 2) {
      break;
    }
    power *= x;
  }
  return sum;
}

Real zeta2(Real::Bits bits) { return square(pi(bits)) / 6; }

Real dilog_core(const Real& x) {
  const Real::Bits bits = x.bits();
  const Real half = Real::ratio(1, 2, bits);
  if (x < -1) {
    // Li2(x) = -pi^2/6 - log^2(-x)/2 - Li2(1/x)
    const Real l = log(-x);
    return -zeta2(bits) - square(l) / 2 - dilog_core(1 / x);
  }
  if (x < -half) {
    // Landen: Li2(x) = -Li2(x/(x-1)) - log^2(1-x)/2, with x/(x-1) in (1/3, 1/2].
    const Real l = log(1 - x);
    return -dilog_series(x / (x - 1)) - square(l) / 2;
  }
  if (x <= half) {
    return dilog_series(x);
  }
  // Reflection: Li2(x) = pi^2/6 - log(x) log(1-x) - Li2(1-x).
  const Real y = 1 - x;
  return zeta2(bits) - log(x) * log(y) - dilog_series(y);
}

}  // namespace

Real dilog(const Real& x) {
  if (x > 1) {
    throw DomainError("dilog: argument " + x.to_string(10) + " exceeds 1");
  }
  const Real::Bits bits = x.bits();
  const Real wide = x.rounded(bits + kDilogGuard);
  if (wide == 1) {
    return zeta2(bits + kDilogGuard).rounded(bits);
  }
  return dilog_core(wide).rounded(bits);
}

Real arccosh(const Real& x) {
  if (x < 1) {
    throw DomainError("arccosh: argument " + x.to_string(10) + " below 1");
  }
  const Real::Bits bits = x.bits();
  const Real wide = x.rounded(bits + kDilogGuard);
  const Real root = sqrt((wide - 1) * (wide + 1));
  return log(wide + root).rounded(bits);
}

Real gamma_one_third(Real::Bits bits) { return Real::from_string(kGammaOneThird, bits); }

}  // namespace cablejones
