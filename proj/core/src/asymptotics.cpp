#include "cablejones/asymptotics.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "cablejones/errors.hpp"
#include "cablejones/numerics/special.hpp"

namespace cablejones {

namespace {

constexpr Real::Bits kInnerGuard = 64;

// Rejects xi below kappa as seen at xi's own precision, so a kappa computed
// at that precision is itself admissible.
void require_at_least_kappa(const Real& xi, const char* op) {
  if (xi < kappa(xi.bits())) {
    throw DomainError(std::string(op) + ": xi = " + xi.to_string(12) +
                      " is below kappa = arccosh(3/2)/2");
  }
}

void require_above_kappa(const Real& xi, const char* op) {
  if (xi <= kappa(xi.bits())) {
    throw DomainError(std::string(op) + ": xi = " + xi.to_string(12) +
                      " must exceed kappa = arccosh(3/2)/2");
  }
}

void require_ascending(std::span<const int> Ns) {
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    if (Ns[i] < 1) {
      throw DomainError("growth table: N must be >= 1, got " + std::to_string(Ns[i]));
    }
    if (i > 0 && Ns[i] <= Ns[i - 1]) {
      throw DomainError("growth table: N list must be strictly ascending");
    }
  }
}

template <typename RowFn>
std::vector<GrowthRow> build_rows(std::span<const int> Ns, unsigned threads, RowFn&& row_fn) {
  std::vector<GrowthRow> rows(Ns.size());
  const unsigned workers_wanted = std::clamp(threads, 1u, static_cast<unsigned>(std::max<std::size_t>(Ns.size(), 1)));
  if (workers_wanted == 1) {
    for (std::size_t i = 0; i < Ns.size(); ++i) {
      rows[i] = row_fn(Ns[i]);
    }
    return rows;
  }
  std::vector<std::exception_ptr> errors(Ns.size());
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < workers_wanted; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < Ns.size(); i += workers_wanted) {
          try {
            rows[i] = row_fn(Ns[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return rows;
}

GrowthRow make_row(int N, const Real& scale, const JonesValue& j, const Real& limit) {
  if (j.sign <= 0) {
    throw DomainError("growth table: J_N is not positive at N = " + std::to_string(N));
  }
  Real rate = scale * j.log_abs / static_cast<long>(N);
  Real gap = abs(rate - limit);
  return {N, std::move(rate), limit, std::move(gap)};
}

}  // namespace

Real kappa(Real::Bits bits) { return arccosh(Real::ratio(3, 2, bits + 8)).rounded(bits) / 2L; }

Real kappa(const PrecisionContext& ctx) { return kappa(static_cast<Real::Bits>(ctx.working_bits())); }

Real phi(const Real& xi) {
  require_at_least_kappa(xi, "phi");
  const Real::Bits bits = xi.bits();
  const Real wide = xi.rounded(bits + kInnerGuard);
  Real arg = cosh(wide * 2L) - Real::ratio(1, 2, wide.bits());
  if (arg < 1) {
    arg = Real(1, wide.bits());
  }
  return arccosh(arg).rounded(bits);
}

Real S_of_xi(const Real& xi) {
  require_above_kappa(xi, "S_of_xi");
  const Real::Bits bits = xi.bits();
  const Real wide = xi.rounded(bits + kInnerGuard);
  const Real p = phi(wide);
  const Real two_xi = wide * 2L;
  Real s = dilog(exp(-p - two_xi)) - dilog(exp(p - two_xi)) + two_xi * p;
  return s.rounded(bits);
}

std::vector<GrowthRow> growth_table(int b, const Real& xi, std::span<const int> Ns,
                                    const TableOptions& options) {
  require_above_kappa(xi, "growth_table");
  require_ascending(Ns);
  if (b < 0) {
    throw DomainError("growth_table: b must be >= 0");
  }
  const Real limit = S_of_xi(xi);
  return build_rows(Ns, options.threads, [&](int N) {
    return make_row(N, xi, eval_cable_jones({N, b}, xi), limit);
  });
}

std::vector<GrowthRow> growth_table_fig8(const Real& eta, std::span<const int> Ns,
                                         const TableOptions& options) {
  const Real half = eta / 2L;
  if (half <= kappa(eta.bits())) {
    throw DomainError("growth_table_fig8: eta = " + eta.to_string(12) + " must exceed 2 kappa");
  }
  require_ascending(Ns);
  const Real limit = S_of_xi(half);
  return build_rows(Ns, options.threads, [&](int N) {
    return make_row(N, eta, eval_fig8_jones(N, eta), limit);
  });
}

MaxTermReport max_term(int N, const Real& xi, bool allow_subcritical) {
  if (N < 2) {
    throw DomainError("max_term: N must be >= 2, got " + std::to_string(N));
  }
  if (xi.sign() <= 0) {
    throw DomainError("max_term: xi must be positive");
  }
  const bool subcritical = xi <= kappa(xi.bits());
  if (subcritical && !allow_subcritical) {
    throw DomainError("max_term: xi = " + xi.to_string(12) +
                      " must exceed kappa (pass allow_subcritical to probe xi <= kappa)");
  }
  MaxTermReport report;
  report.N = N;
  report.predicted = subcritical ? 0 : floor_to_int(phi(xi) * static_cast<long>(N) / xi) - 1;

  const auto row = row_terms({N, 0}, N - 1, xi);
  report.observed = std::distance(row.begin(), std::max_element(row.begin(), row.end()));

  const Real::Bits wide = xi.bits() + kInnerGuard;
  const Real x = xi.rounded(wide);
  const Real level = cosh(x * 2L - x / static_cast<long>(N)) - Real::ratio(1, 2, wide);
  if (level <= 1) {
    report.ratio_threshold = 0;
  } else {
    const Real crossing = arccosh(level) * static_cast<long>(N) / x;
    report.ratio_threshold = std::min<std::int64_t>(ceil_to_int(crossing) - 1, 2L * N - 2);
  }
  return report;
}

Real last_row_step_ratio(int N, int l, const Real& xi) {
  const Real n(N, xi.bits());
  Real r = cosh(xi * 2L - xi / n) - cosh(xi * static_cast<long>(l) / n);
  r.mul_2exp(1);
  return r;
}

StepCheck check_last_row_step(int N, int l, const Real& xi, const Real& delta) {
  if (N < 2 || l < 1 || l > 2 * N - 2) {
    throw DomainError("check_last_row_step: need N >= 2 and 1 <= l <= 2N-2");
  }
  if (delta.sign() <= 0) {
    throw DomainError("check_last_row_step: delta must be positive");
  }
  const CableSpec spec{N, 0};
  const Real prev = eval_f({N - 1, l - 1}, spec, xi);
  const Real cur = eval_f({N - 1, l}, spec, xi);
  const Real level = cosh(xi * 2L) - Real::ratio(1, 2, xi.bits());
  const Real c = cosh(xi * static_cast<long>(l) / static_cast<long>(N));

  StepCheck out;
  out.ratio = cur / prev;
  if (c >= level) {
    out.branch = StepBranch::Decreasing;
    out.conclusion_held = prev > cur;
  } else if (c < level - delta) {
    out.branch = StepBranch::Increasing;
    out.conclusion_held = prev < cur;
  }
  return out;
}

Real critical_growth_constant(const PrecisionContext& ctx) {
  const auto bits = static_cast<Real::Bits>(ctx.working_bits());
  const Real six_kappa = kappa(bits) * 6L;
  return gamma_one_third(bits) / pow(six_kappa, Real::ratio(2, 3, bits));
}

Real poly_growth_check(int N, const PrecisionContext& ctx) {
  if (N < 1) {
    throw DomainError("poly_growth_check: N must be >= 1");
  }
  const auto bits = static_cast<Real::Bits>(ctx.working_bits());
  const Real eta = kappa(bits) * 2L;
  const Real j = eval_fig8_jones(N, eta).value();
  return j / pow(Real(N, bits), Real::ratio(2, 3, bits));
}

SandwichCheck sandwich_bounds(const CableSpec& spec, const Real& xi) {
  const AlternatingSum sum = eval_S_sum_detailed(spec, xi);
  const Real factor = 1L - exp(-xi / 2L);
  const long n = spec.N;
  return {factor * sum.max_term, sum.value, sum.max_term * (n * n), factor * sum.last_row_sum};
}

}  // namespace cablejones
