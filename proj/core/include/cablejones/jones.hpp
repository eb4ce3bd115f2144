#pragma once

#include <vector>

#include "cablejones/laurent.hpp"
#include "cablejones/numerics/real.hpp"

namespace cablejones {

/// Color N >= 1 and cabling parameter b >= 0 of the (2, 2b+1)-cable.
struct CableSpec {
  int N = 1;
  int b = 0;

  /// Throws DomainError unless N >= 1 and b >= 0.
  void validate() const;
};

/// Position (d, l) in the double sum: 0 <= d <= N-1, 0 <= l <= 2d.
struct TermIndex {
  int d = 0;
  int l = 0;

  friend bool operator==(const TermIndex&, const TermIndex&) = default;
};

/// Habiro's cyclotomic sum for the figure-eight knot,
///   J_m(E; t) = sum_{l<m} prod_{k=1}^{l} (t^{(m+k)/2} - t^{-(m+k)/2})(t^{(m-k)/2} - t^{-(m-k)/2}).
/// The l-th product extends the (l-1)-th, so the whole sum costs m products.
LaurentPoly habiro_fig8_poly(int m);

struct CablePolyOptions {
  /// Exact computation is refused above this color.
  int max_N = 15;
};

/// Exact colored Jones polynomial of the (2, 2b+1)-cable of the figure-eight:
/// the alternating d-sum of t^{(2b+1)(d^2+d)/2} (t^{(2d+1)/2} - t^{-(2d+1)/2}) J_{2d+1}(E; t),
/// times (-1)^{N-1} t^{-(2b+1)(N^2-1)/2}, divided exactly by t^{N/2} - t^{-N/2}.
/// A nonzero remainder (NotDivisible) means the pipeline is broken.
LaurentPoly cable_poly(const CableSpec& spec, const CablePolyOptions& options = {});

/// The positive summand f_{d,l} at t = e^{xi/N}, evaluated directly from its
/// product form (no recurrence). Throws DomainError for xi <= 0 or a bad index.
Real eval_f(const TermIndex& idx, const CableSpec& spec, const Real& xi);

/// All terms f_{d,0}, ..., f_{d,2d} of one row, by the multiplicative recurrence.
std::vector<Real> row_terms(const CableSpec& spec, int d, const Real& xi);

struct SumOptions {
  /// Rows are split over this many threads; results do not depend on it.
  unsigned threads = 1;
};

/// The signed double sum (-1)^{N-1} sum_d sum_l (-1)^d f_{d,l} with diagnostics.
struct AlternatingSum {
  Real value;
  /// Largest summand and where it sits.
  Real max_term;
  TermIndex argmax;
  /// sum over l of f_{N-1,l}.
  Real last_row_sum;
  /// log2(max_term / value): bits lost to cancellation, negative when none are.
  double cancellation_bits = 0.0;
};

/// O(N^2) evaluation of the alternating sum. Each row starts from its closed
/// form f_{d,0} and steps l with f_{d,l} = f_{d,l-1} * 4 sinh((2d+1+l)xi/2N) sinh((2d+1-l)xi/2N)
/// using a shared sinh table, so no subtraction enters the recurrence. Rows are
/// reduced in ascending d.
AlternatingSum eval_S_sum_detailed(const CableSpec& spec, const Real& xi, const SumOptions& options = {});

inline Real eval_S_sum(const CableSpec& spec, const Real& xi, const SumOptions& options = {}) {
  return eval_S_sum_detailed(spec, xi, options).value;
}

/// A real value kept as sign and log-magnitude; colored Jones values grow like e^{cN}.
struct JonesValue {
  int sign = 1;
  Real log_abs;

  Real value() const;
};

/// J_N(E^{(2,2b+1)}; e^{xi/N}) = e^{-(2b+1)(N^2-1)xi/2N} S / (2 sinh(xi/2)), xi > 0.
JonesValue eval_cable_jones(const CableSpec& spec, const Real& xi, const SumOptions& options = {});

/// J_m(E; e^{eta/m}) from Habiro's sum; every summand is positive for eta > 0.
JonesValue eval_fig8_jones(int m, const Real& eta);

/// Delta(E; t) = -t + 3 - t^{-1}.
LaurentPoly alexander_fig8();

/// Delta(E^{(2,2b+1)}; t) = (-t^2 + 3 - t^{-2}) (t^{(2b+1)/2} + t^{-(2b+1)/2}) / (t^{1/2} + t^{-1/2}).
LaurentPoly alexander_cable(int b);

}  // namespace cablejones
