#include "cablejones/numerics/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <string>

#include "cablejones/errors.hpp"

namespace cablejones {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

struct MpfrStringDeleter {
  void operator()(char* p) const { mpfr_free_str(p); }
};

std::string format(const char* fmt, int digits, mpfr_srcptr x) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, fmt, digits, x) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::unique_ptr<char, MpfrStringDeleter> owned(raw);
  return std::string(owned.get());
}

void widen_to(mpfr_ptr x, mpfr_prec_t bits) {
  if (mpfr_get_prec(x) < bits) {
    mpfr_prec_round(x, bits, kRound);
  }
}

}  // namespace

Real::Real(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, const PrecisionContext& ctx) : Real(value, static_cast<Bits>(ctx.working_bits())) {}

Real::Real(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, kRound);
}

Real Real::from_double(double value, Bits bits) {
  Real r(bits);
  mpfr_set_d(r.value_, value, kRound);
  r.check_finite("from_double");
  return r;
}

Real Real::from_string(std::string_view text, Bits bits) {
  Real r(bits);
  const std::string owned(text);
  char* end = nullptr;
  if (!owned.empty()) {
    mpfr_strtofr(r.value_, owned.c_str(), &end, 10, kRound);
  }
  if (owned.empty() || end == owned.c_str() || *end != '\0') {
    throw DomainError("not a decimal number: '" + owned + "'");
  }
  r.check_finite("from_string");
  return r;
}

Real Real::ratio(long num, long den, Bits bits) {
  if (den == 0) {
    throw DomainError("ratio: zero denominator");
  }
  Real r(bits);
  mpq_t q;
  mpq_init(q);
  mpq_set_si(q, num, 1);
  mpz_set_si(mpq_denref(q), den);
  mpq_canonicalize(q);
  mpfr_set_q(r.value_, q, kRound);
  mpq_clear(q);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::rounded(Bits bits) const {
  Real r(bits);
  mpfr_set(r.value_, value_, kRound);
  return r;
}

void Real::check_finite(const char* op) const {
  if (mpfr_nan_p(value_)) {
    throw DomainError(std::string(op) + ": result is not a number");
  }
  if (mpfr_inf_p(value_)) {
    throw DomainError(std::string(op) + ": result is infinite");
  }
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(value_, rhs.bits());
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(value_, rhs.bits());
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(value_, rhs.bits());
  mpfr_mul(value_, value_, rhs.value_, kRound);
  check_finite("mul");
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("division by zero");
  }
  widen_to(value_, rhs.bits());
  mpfr_div(value_, value_, rhs.value_, kRound);
  check_finite("div");
  return *this;
}

Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, kRound);
  return *this;
}

Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, kRound);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRound);
  check_finite("mul");
  return *this;
}

Real& Real::operator/=(long rhs) {
  if (rhs == 0) {
    throw DomainError("division by zero");
  }
  mpfr_div_si(value_, value_, rhs, kRound);
  return *this;
}

Real& Real::mul_2exp(long k) {
  mpfr_mul_2si(value_, value_, k, kRound);
  check_finite("mul_2exp");
  return *this;
}

Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

Real operator-(long lhs, const Real& rhs) {
  Real r(rhs.bits());
  mpfr_si_sub(r.value_, lhs, rhs.value_, kRound);
  return r;
}

Real operator/(long lhs, const Real& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("division by zero");
  }
  Real r(rhs.bits());
  mpfr_si_div(r.value_, lhs, rhs.value_, kRound);
  return r;
}

Real Real::operator-() const {
  Real r(bits());
  mpfr_neg(r.value_, value_, kRound);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

long Real::exponent2() const {
  if (is_zero()) {
    return 0;
  }
  return mpfr_get_exp(value_);
}

std::string Real::to_string(unsigned digits) const {
  return format("%.*Re", static_cast<int>(std::max(1u, digits) - 1), value_);
}

std::string Real::to_fixed_string(unsigned digits) const {
  return format("%.*Rg", static_cast<int>(std::max(1u, digits)), value_);
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  const auto prec = os.precision();
  return os << x.to_fixed_string(prec > 0 ? static_cast<unsigned>(prec) : 6u);
}

Real abs(const Real& x) {
  Real r(x.bits());
  mpfr_abs(r.get(), x.get(), kRound);
  return r;
}

Real exp(const Real& x) {
  Real r(x.bits());
  mpfr_exp(r.get(), x.get(), kRound);
  if (mpfr_inf_p(r.get())) {
    throw DomainError("exp: overflow");
  }
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) {
    throw DomainError("log of non-positive value " + x.to_string(10));
  }
  Real r(x.bits());
  mpfr_log(r.get(), x.get(), kRound);
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) {
    throw DomainError("sqrt of negative value " + x.to_string(10));
  }
  Real r(x.bits());
  mpfr_sqrt(r.get(), x.get(), kRound);
  return r;
}

Real sinh(const Real& x) {
  Real r(x.bits());
  mpfr_sinh(r.get(), x.get(), kRound);
  return r;
}

Real cosh(const Real& x) {
  Real r(x.bits());
  mpfr_cosh(r.get(), x.get(), kRound);
  return r;
}

Real square(const Real& x) {
  Real r(x.bits());
  mpfr_sqr(r.get(), x.get(), kRound);
  return r;
}

Real pow(const Real& x, long n) {
  if (n < 0 && x.is_zero()) {
    throw DomainError("pow: zero to a negative power");
  }
  Real r(x.bits());
  mpfr_pow_si(r.get(), x.get(), n, kRound);
  return r;
}

Real pow(const Real& x, const Real& y) {
  if (x.sign() <= 0) {
    throw DomainError("pow: non-positive base");
  }
  Real r(std::max(x.bits(), y.bits()));
  mpfr_pow(r.get(), x.get(), y.get(), kRound);
  return r;
}

Real floor(const Real& x) {
  Real r(x.bits());
  mpfr_floor(r.get(), x.get());
  return r;
}

std::int64_t floor_to_int(const Real& x) {
  if (!mpfr_fits_slong_p(x.get(), MPFR_RNDD)) {
    throw DomainError("floor_to_int: out of range");
  }
  return mpfr_get_si(x.get(), MPFR_RNDD);
}

std::int64_t ceil_to_int(const Real& x) {
  if (!mpfr_fits_slong_p(x.get(), MPFR_RNDU)) {
    throw DomainError("ceil_to_int: out of range");
  }
  return mpfr_get_si(x.get(), MPFR_RNDU);
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi(Real::Bits bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), kRound);
  return r;
}

Real relative_gap(const Real& a, const Real& b) {
  Real scale = abs(b);
  if (scale < 1) {
    scale = Real(1, scale.bits());
  }
  return abs(a - b) / scale;
}

Real ten_to_minus(unsigned k, Real::Bits bits) {
  Real r(10, bits);
  mpfr_pow_si(r.get(), r.get(), -static_cast<long>(k), kRound);
  return r;
}

bool agrees_to_digits(const Real& a, const Real& b, unsigned digits) {
  return relative_gap(a, b) <= ten_to_minus(digits, std::max(a.bits(), b.bits()));
}

}  // namespace cablejones
