#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cablejones/numerics/real.hpp"

namespace cablejones {

/// Exact Laurent polynomial in s = t^(1/2) with arbitrary-size integer
/// coefficients. Exponent e stands for t^(e/2); zero coefficients are never
/// stored, so two equal polynomials have identical term maps.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, mpz_class>;

  LaurentPoly() = default;

  /// coeff * t^(half_exp/2).
  static LaurentPoly monomial(const mpz_class& coeff, Exponent half_exp);
  static LaurentPoly constant(const mpz_class& coeff) { return monomial(coeff, 0); }
  /// t^(k/2) - t^(-k/2), the building block of every quantum-integer factor.
  static LaurentPoly symmetric_difference(Exponent k);
  static LaurentPoly from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of t^(e/2); zero when absent.
  mpz_class coefficient(Exponent half_exp) const;
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const mpz_class& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by t^(shift/2).
  LaurentPoly shifted(Exponent shift) const;

  /// Human-readable form in t, e.g. "t^2 - t + 1 - t^-1 + t^-2".
  std::string to_string() const;

 private:
  void add_term(Exponent e, const mpz_class& c);

  Terms terms_;
};

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly negate(const LaurentPoly& a) { return -a; }

/// Exact division failed; carries the nonzero remainder of the long division.
class NotDivisible : public std::runtime_error {
 public:
  explicit NotDivisible(LaurentPoly remainder);
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

/// q with a = q * b. Throws NotDivisible when no such Laurent polynomial
/// exists, and DomainError when b is zero.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// The involution t -> t^-1 (exponent negation).
LaurentPoly mirror(const LaurentPoly& p);

/// Sum of c * t_value^(e/2) for t_value > 0, accurate to ctx.target_digits().
///
/// Coefficients of colored Jones polynomials alternate in sign and are large,
/// so the sum is formed at extra precision; the extra precision is raised
/// until the measured cancellation leaves the target intact.
Real eval(const LaurentPoly& p, const Real& t_value, const PrecisionContext& ctx);

/// JSON object {"<half_exponent>": "<decimal coefficient>", ...}, exponents
/// ascending. Deterministic byte-for-byte.
std::string to_json(const LaurentPoly& p);

/// Inverse of to_json. Throws std::invalid_argument naming the offending key.
LaurentPoly from_json(std::string_view text);

}  // namespace cablejones
