#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <random>
#include <string_view>

#include "cablejones/laurent.hpp"
#include "cablejones/numerics/real.hpp"

namespace oracle {

using cablejones::LaurentPoly;
using cablejones::Real;

inline constexpr Real::Bits kBits = 160;

inline Real num(std::string_view text, Real::Bits bits = kBits) { return Real::from_string(text, bits); }

inline Real li2(const Real& x) {
  Real r(x.bits());
  mpfr_li2(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real acosh(const Real& x) {
  Real r(x.bits());
  mpfr_acosh(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real gamma(const Real& x) {
  Real r(x.bits());
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real sin(const Real& x) {
  Real r(x.bits());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real from_mpq(const mpq_class& q, Real::Bits bits) {
  Real r(bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

/// q^k for a rational q and any integer k.
inline mpq_class qpow(const mpq_class& q, long k) {
  mpq_class out = 1;
  const mpq_class base = k < 0 ? mpq_class(1) / q : q;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) {
    out *= base;
  }
  return out;
}

/// Exact sum of c * s^e at rational s.
inline mpq_class eval_exact(const LaurentPoly& p, const mpq_class& s) {
  mpq_class out = 0;
  for (const auto& [e, c] : p.terms()) {
    out += mpq_class(c) * qpow(s, e);
  }
  return out;
}

/// Habiro's sum for J_m(E) at t = s^2, in exact rationals.
inline mpq_class fig8_exact(int m, const mpq_class& s) {
  mpq_class total = 0;
  mpq_class prod = 1;
  for (int l = 0; l < m; ++l) {
    if (l > 0) {
      prod *= (qpow(s, m + l) - qpow(s, -(m + l))) * (qpow(s, m - l) - qpow(s, -(m - l)));
    }
    total += prod;
  }
  return total;
}

/// The cable formula assembled from fig8_exact, divided by s^N - s^-N.
inline mpq_class cable_exact(int N, int b, const mpq_class& s) {
  const long twist = 2L * b + 1;
  mpq_class sum = 0;
  for (int d = 0; d < N; ++d) {
    const mpq_class term = qpow(s, twist * (static_cast<long>(d) * d + d)) *
                           (qpow(s, 2 * d + 1) - qpow(s, -(2 * d + 1))) * fig8_exact(2 * d + 1, s);
    sum += (d % 2 == 0) ? term : mpq_class(-term);
  }
  const mpq_class sign = (N % 2 == 1) ? 1 : -1;
  return sign * qpow(s, -twist * (static_cast<long>(N) * N - 1)) * sum / (qpow(s, N) - qpow(s, -N));
}

inline std::mt19937_64 rng() { return std::mt19937_64(0x5eed1234abcdULL); }

}  // namespace oracle
