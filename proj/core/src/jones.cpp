#include "cablejones/jones.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "cablejones/errors.hpp"

namespace cablejones {

namespace {

using Exponent = LaurentPoly::Exponent;

// Extra bits carried through the O(N^2) sum: roundoff of ~N^2 operations plus
// the bounded cancellation 1/(1 - e^{-xi/2}), plus slack.
Real::Bits sum_guard_bits(int N, double xi) {
  const double margin = -std::log2(-std::expm1(-xi / 2));
  return static_cast<Real::Bits>(2 * std::bit_width(static_cast<unsigned>(N)) + 16 +
                                 std::max(0.0, std::ceil(margin)));
}

// sinh(k xi / (2N)) for k = 0 .. count-1.
std::vector<Real> sinh_table(const Real& xi, int N, int count) {
  std::vector<Real> table;
  table.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    table.push_back(sinh(xi * static_cast<long>(k) / (2L * N)));
  }
  return table;
}

Real row_leading_term(const CableSpec& spec, int d, const Real& xi, const std::vector<Real>& sh) {
  const long weight = static_cast<long>(2 * spec.b + 1) * (static_cast<long>(d) * d + d);
  Real f = exp(xi * weight / (2L * spec.N));
  f *= sh[static_cast<std::size_t>(2 * d + 1)];
  f.mul_2exp(1);
  return f;
}

struct RowSummary {
  Real sum;
  Real max_term;
  int argmax = 0;
};

RowSummary sum_row(const CableSpec& spec, int d, const Real& xi, const std::vector<Real>& sh) {
  Real f = row_leading_term(spec, d, xi, sh);
  RowSummary out{f, f, 0};
  for (int l = 1; l <= 2 * d; ++l) {
    f *= sh[static_cast<std::size_t>(2 * d + 1 + l)];
    f *= sh[static_cast<std::size_t>(2 * d + 1 - l)];
    f.mul_2exp(2);
    out.sum += f;
    if (f > out.max_term) {
      out.max_term = f;
      out.argmax = l;
    }
  }
  return out;
}

void require_positive(const Real& x, const char* name) {
  if (x.sign() <= 0) {
    throw DomainError(std::string(name) + " must be positive, got " + x.to_string(10));
  }
}

}  // namespace

void CableSpec::validate() const {
  if (N < 1) {
    throw DomainError("color N must be >= 1, got " + std::to_string(N));
  }
  if (b < 0) {
    throw DomainError("cabling parameter b must be >= 0, got " + std::to_string(b));
  }
}

LaurentPoly habiro_fig8_poly(int m) {
  if (m < 1) {
    throw DomainError("habiro_fig8_poly: m must be >= 1, got " + std::to_string(m));
  }
  LaurentPoly product = LaurentPoly::constant(1);
  LaurentPoly sum = product;
  for (int l = 1; l < m; ++l) {
    product *= LaurentPoly::symmetric_difference(m + l);
    product *= LaurentPoly::symmetric_difference(m - l);
    sum += product;
  }
  return sum;
}

LaurentPoly cable_poly(const CableSpec& spec, const CablePolyOptions& options) {
  spec.validate();
  if (spec.N > options.max_N) {
    throw DomainError("cable_poly: N = " + std::to_string(spec.N) + " exceeds the exact cap " +
                      std::to_string(options.max_N));
  }
  const Exponent twist = 2 * static_cast<Exponent>(spec.b) + 1;
  LaurentPoly numerator;
  for (int d = 0; d < spec.N; ++d) {
    LaurentPoly row = habiro_fig8_poly(2 * d + 1) * LaurentPoly::symmetric_difference(2 * d + 1);
    row = row.shifted(twist * (static_cast<Exponent>(d) * d + d));
    if (d % 2 == 0) {
      numerator += row;
    } else {
      numerator -= row;
    }
  }
  const Exponent n = spec.N;
  numerator = numerator.shifted(-twist * (n * n - 1));
  if ((spec.N - 1) % 2 != 0) {
    numerator = -numerator;
  }
  return exact_div(numerator, LaurentPoly::symmetric_difference(spec.N));
}

Real eval_f(const TermIndex& idx, const CableSpec& spec, const Real& xi) {
  spec.validate();
  require_positive(xi, "xi");
  if (idx.d < 0 || idx.d >= spec.N || idx.l < 0 || idx.l > 2 * idx.d) {
    throw DomainError("eval_f: index (d=" + std::to_string(idx.d) + ", l=" + std::to_string(idx.l) +
                      ") outside 0 <= d < N, 0 <= l <= 2d");
  }
  const long two_n = 2L * spec.N;
  const long m = 2L * idx.d + 1;
  const long weight = static_cast<long>(2 * spec.b + 1) * (static_cast<long>(idx.d) * idx.d + idx.d);
  Real f = exp(xi * weight / two_n) * sinh(xi * m / two_n);
  f.mul_2exp(1);
  for (long k = 1; k <= idx.l; ++k) {
    f *= sinh(xi * (m + k) / two_n) * sinh(xi * (m - k) / two_n);
    f.mul_2exp(2);
  }
  return f;
}

std::vector<Real> row_terms(const CableSpec& spec, int d, const Real& xi) {
  spec.validate();
  require_positive(xi, "xi");
  if (d < 0 || d >= spec.N) {
    throw DomainError("row_terms: row " + std::to_string(d) + " outside 0 <= d < N");
  }
  const Real::Bits bits = xi.bits();
  const Real wide = xi.rounded(bits + sum_guard_bits(spec.N, xi.to_double()));
  const auto sh = sinh_table(wide, spec.N, 4 * d + 2);
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(2 * d + 1));
  Real f = row_leading_term(spec, d, wide, sh);
  out.push_back(f.rounded(bits));
  for (int l = 1; l <= 2 * d; ++l) {
    f *= sh[static_cast<std::size_t>(2 * d + 1 + l)];
    f *= sh[static_cast<std::size_t>(2 * d + 1 - l)];
    f.mul_2exp(2);
    out.push_back(f.rounded(bits));
  }
  return out;
}

AlternatingSum eval_S_sum_detailed(const CableSpec& spec, const Real& xi, const SumOptions& options) {
  spec.validate();
  require_positive(xi, "xi");
  const Real::Bits bits = xi.bits();
  const Real wide = xi.rounded(bits + sum_guard_bits(spec.N, xi.to_double()));
  const auto sh = sinh_table(wide, spec.N, 4 * spec.N);

  std::vector<RowSummary> rows(static_cast<std::size_t>(spec.N), RowSummary{Real(wide.bits()), Real(wide.bits()), 0});
  const unsigned threads = std::clamp(options.threads, 1u, static_cast<unsigned>(spec.N));
  if (threads == 1) {
    for (int d = 0; d < spec.N; ++d) {
      rows[static_cast<std::size_t>(d)] = sum_row(spec, d, wide, sh);
    }
  } else {
    // Row d costs ~2d; interleaving rows keeps the workers balanced.
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (int d = static_cast<int>(w); d < spec.N; d += static_cast<int>(threads)) {
          rows[static_cast<std::size_t>(d)] = sum_row(spec, d, wide, sh);
        }
      });
    }
  }

  Real total(wide.bits());
  std::size_t best = 0;
  for (std::size_t d = 0; d < rows.size(); ++d) {
    if (d % 2 == 0) {
      total += rows[d].sum;
    } else {
      total -= rows[d].sum;
    }
    if (rows[d].max_term > rows[best].max_term) {
      best = d;
    }
  }
  if ((spec.N - 1) % 2 != 0) {
    total = -total;
  }

  AlternatingSum out{total.rounded(bits), rows[best].max_term.rounded(bits),
                     TermIndex{static_cast<int>(best), rows[best].argmax},
                     rows.back().sum.rounded(bits), 0.0};
  if (total.sign() > 0) {
    const Real lost = log(rows[best].max_term / total);
    out.cancellation_bits = lost.to_double() / std::log(2.0);
  } else {
    out.cancellation_bits = std::numeric_limits<double>::infinity();
  }
  return out;
}

Real JonesValue::value() const {
  Real v = exp(log_abs);
  return sign < 0 ? -v : v;
}

JonesValue eval_cable_jones(const CableSpec& spec, const Real& xi, const SumOptions& options) {
  spec.validate();
  require_positive(xi, "xi");
  const Real::Bits bits = xi.bits();
  if (spec.N == 1) {
    // S = f_{0,0} = 2 sinh(xi/2) cancels the denominator exactly.
    return {1, Real(bits)};
  }
  const Real wide = xi.rounded(bits + 32);
  const AlternatingSum sum = eval_S_sum_detailed(spec, wide, options);
  const long n = spec.N;
  const long twist = 2L * spec.b + 1;
  Real log_abs = log(abs(sum.value));
  log_abs -= wide * (twist * (n * n - 1)) / (2 * n);
  Real denom = sinh(wide / 2L);
  denom.mul_2exp(1);
  log_abs -= log(denom);
  return {sum.value.sign() < 0 ? -1 : 1, log_abs.rounded(bits)};
}

JonesValue eval_fig8_jones(int m, const Real& eta) {
  if (m < 1) {
    throw DomainError("eval_fig8_jones: m must be >= 1, got " + std::to_string(m));
  }
  require_positive(eta, "eta");
  const Real::Bits bits = eta.bits();
  if (m == 1) {
    return {1, Real(bits)};
  }
  const Real wide = eta.rounded(bits + 2 * std::bit_width(static_cast<unsigned>(m)) + 16);
  const auto sh = sinh_table(wide, m, 2 * m);
  Real term(1, wide.bits());
  Real sum = term;
  for (int l = 1; l < m; ++l) {
    term *= sh[static_cast<std::size_t>(m + l)];
    term *= sh[static_cast<std::size_t>(m - l)];
    term.mul_2exp(2);
    sum += term;
  }
  return {1, log(sum).rounded(bits)};
}

LaurentPoly alexander_fig8() {
  return LaurentPoly::monomial(-1, 2) + LaurentPoly::constant(3) + LaurentPoly::monomial(-1, -2);
}

LaurentPoly alexander_cable(int b) {
  if (b < 0) {
    throw DomainError("alexander_cable: b must be >= 0, got " + std::to_string(b));
  }
  const Exponent k = 2 * static_cast<Exponent>(b) + 1;
  const LaurentPoly doubled =
      LaurentPoly::monomial(-1, 4) + LaurentPoly::constant(3) + LaurentPoly::monomial(-1, -4);
  const LaurentPoly torus = exact_div(LaurentPoly::monomial(1, k) + LaurentPoly::monomial(1, -k),
                                      LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1));
  return doubled * torus;
}

}  // namespace cablejones
