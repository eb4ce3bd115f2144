#pragma once

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "cablejones/numerics/precision.hpp"

namespace cablejones {

/// Arbitrary-precision real scalar (RAII over `mpfr_t`, round-to-nearest).
///
/// A value carries its own binary precision, normally taken from the
/// PrecisionContext it was created with. Binary operators round to the larger
/// of the two operand precisions. Operations that would produce NaN or an
/// infinity throw DomainError instead.
class Real {
 public:
  using Bits = mpfr_prec_t;

  /// Zero at the default working precision.
  Real() : Real(static_cast<Bits>(PrecisionContext::kDefaultBits)) {}
  /// Zero at the context's working precision.
  explicit Real(const PrecisionContext& ctx) : Real(static_cast<Bits>(ctx.working_bits())) {}
  explicit Real(Bits bits);
  Real(long value, const PrecisionContext& ctx);
  Real(long value, Bits bits);

  static Real from_double(double value, Bits bits);
  static Real from_double(double value, const PrecisionContext& ctx) {
    return from_double(value, ctx.working_bits());
  }
  /// Parses a decimal string (e.g. "1.5", "1e-20"); throws DomainError on junk.
  static Real from_string(std::string_view text, Bits bits);
  static Real from_string(std::string_view text, const PrecisionContext& ctx) {
    return from_string(text, ctx.working_bits());
  }
  /// Exact rational num/den rounded once.
  static Real ratio(long num, long den, Bits bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Bits bits() const { return mpfr_get_prec(value_); }
  /// Copy rounded (or exactly widened) to `bits`.
  Real rounded(Bits bits) const;
  Real rounded(const PrecisionContext& ctx) const { return rounded(ctx.working_bits()); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  /// Multiplies by 2^k exactly.
  Real& mul_2exp(long k);

  friend Real operator+(Real lhs, const Real& rhs);
  friend Real operator-(Real lhs, const Real& rhs);
  friend Real operator*(Real lhs, const Real& rhs);
  friend Real operator/(Real lhs, const Real& rhs);
  friend Real operator+(Real lhs, long rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, long rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }
  friend Real operator+(long lhs, Real rhs) { return rhs += lhs; }
  friend Real operator-(long lhs, const Real& rhs);
  friend Real operator*(long lhs, Real rhs) { return rhs *= lhs; }
  friend Real operator/(long lhs, const Real& rhs);
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exponent e with 2^(e-1) <= |x| < 2^e; 0 for zero.
  long exponent2() const;
  /// Scientific decimal with `digits` significant digits, e.g. "2.5166e+00".
  std::string to_string(unsigned digits) const;
  /// Plain text at the given significant digits without exponent when practical.
  std::string to_fixed_string(unsigned digits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  void check_finite(const char* op) const;

  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real exp(const Real& x);
/// Natural log; DomainError for x <= 0.
Real log(const Real& x);
/// DomainError for x < 0.
Real sqrt(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real square(const Real& x);
Real pow(const Real& x, long n);
/// x^y for x > 0.
Real pow(const Real& x, const Real& y);
Real floor(const Real& x);
/// floor(x) as an integer; DomainError if it does not fit.
std::int64_t floor_to_int(const Real& x);
std::int64_t ceil_to_int(const Real& x);
Real max(const Real& a, const Real& b);
Real pi(Real::Bits bits);
inline Real pi(const PrecisionContext& ctx) { return pi(ctx.working_bits()); }

/// |a - b| / max(|b|, 1): the relative-or-absolute gap used by agreement checks.
Real relative_gap(const Real& a, const Real& b);

/// True when a and b agree to `digits` decimal places in the relative_gap sense.
bool agrees_to_digits(const Real& a, const Real& b, unsigned digits);

/// 10^(-k) at the given precision.
Real ten_to_minus(unsigned k, Real::Bits bits);

}  // namespace cablejones
