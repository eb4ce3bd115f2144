#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cablejones/jones.hpp"
#include "cablejones/numerics/real.hpp"

namespace cablejones {

/// kappa = arccosh(3/2)/2 = log((3 + sqrt 5)/2)/2, the log of the golden ratio.
Real kappa(const PrecisionContext& ctx);
Real kappa(Real::Bits bits);

/// phi(xi) = arccosh(cosh(2 xi) - 1/2), real for xi >= kappa.
/// Throws DomainError for xi < kappa.
Real phi(const Real& xi);

/// S(xi) = Li2(e^{-phi-2xi}) - Li2(e^{phi-2xi}) + 2 xi phi for xi > kappa.
Real S_of_xi(const Real& xi);

/// One line of a convergence table.
struct GrowthRow {
  int N = 0;
  /// (xi/N) log J_N.
  Real rate;
  Real limit;
  /// |rate - limit|.
  Real gap;
};

struct TableOptions {
  /// Independent rows are distributed over threads; output order is by N.
  unsigned threads = 1;
};

/// Rates (xi/N) log J_N(E^{(2,2b+1)}; e^{xi/N}) against S(xi) for ascending Ns.
std::vector<GrowthRow> growth_table(int b, const Real& xi, std::span<const int> Ns,
                                    const TableOptions& options = {});

/// Rates (eta/N) log J_N(E; e^{eta/N}) against S(eta/2), eta > 2 kappa.
std::vector<GrowthRow> growth_table_fig8(const Real& eta, std::span<const int> Ns,
                                         const TableOptions& options = {});

/// Location of the largest term of the last row {f_{N-1,l} : 0 <= l <= 2N-2}.
struct MaxTermReport {
  int N = 0;
  /// floor(phi(xi) N / xi) - 1, or 0 when xi <= kappa.
  std::int64_t predicted = 0;
  /// Brute-force argmax over every term of the row.
  std::int64_t observed = 0;
  /// ceil(l*) - 1 where cosh(l* xi/N) = cosh(2xi - xi/N) - 1/2: the exact
  /// point where the step ratio f_{N-1,l}/f_{N-1,l-1} drops below 1.
  std::int64_t ratio_threshold = 0;

  bool predicted_matches() const { return predicted == observed; }
};

/// Throws DomainError for N < 2, or xi <= kappa unless allow_subcritical.
MaxTermReport max_term(int N, const Real& xi, bool allow_subcritical = false);

enum class StepBranch {
  /// cosh(l xi/N) >= cosh(2xi) - 1/2: the row must decrease at l.
  Decreasing,
  /// cosh(l xi/N) < cosh(2xi) - 1/2 - delta: the row increases at l once N is large.
  Increasing,
  /// Neither hypothesis holds.
  Neither,
};

struct StepCheck {
  StepBranch branch = StepBranch::Neither;
  /// Whether the branch's conclusion on f_{N-1,l-1} vs f_{N-1,l} held.
  bool conclusion_held = false;
  /// f_{N-1,l} / f_{N-1,l-1}, from the two directly evaluated terms.
  Real ratio;
};

/// Evaluates the monotonicity criterion for one step l of the last row.
/// Requires 1 <= l <= 2N-2 and delta > 0.
StepCheck check_last_row_step(int N, int l, const Real& xi, const Real& delta);

/// 2 cosh(2xi - xi/N) - 2 cosh(l xi/N), the closed form of f_{N-1,l}/f_{N-1,l-1}.
Real last_row_step_ratio(int N, int l, const Real& xi);

/// J_N(E; e^{2 kappa/N}) / N^{2/3}.
Real poly_growth_check(int N, const PrecisionContext& ctx);

/// Gamma(1/3) / (6 kappa)^{2/3}.
Real critical_growth_constant(const PrecisionContext& ctx);

/// (1 - e^{-xi/2}) f_max < S < N^2 f_max, evaluated for one instance.
struct SandwichCheck {
  Real lower;
  Real value;
  Real upper;
  /// (1 - e^{-xi/2}) sum_l f_{N-1,l}, the sharper lower bound.
  Real row_lower;

  bool holds() const { return lower < value && value < upper && row_lower < value; }
};

SandwichCheck sandwich_bounds(const CableSpec& spec, const Real& xi);

}  // namespace cablejones
