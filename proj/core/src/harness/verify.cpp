#include "cablejones/harness/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "cablejones/asymptotics.hpp"
#include "cablejones/chern_simons.hpp"
#include "cablejones/errors.hpp"
#include "cablejones/jones.hpp"
#include "cablejones/laurent.hpp"
#include "cablejones/representation.hpp"

namespace cablejones {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kSampleSeed = 20240611;

class Collector {
 public:
  Collector(VerifyReport& report, const PrecisionContext& ctx)
      : report_(report), bits_(static_cast<Real::Bits>(ctx.working_bits())) {}

  Real::Bits bits() const { return bits_; }
  Real num(const char* text) const { return Real::from_string(text, bits_); }

  void residual(std::string id, std::string reference, const Real& value, const Real& bound) {
    report_.checks.push_back({std::move(id), std::move(reference), value.to_string(6), value < bound});
  }

  void boolean(std::string id, std::string reference, bool ok, std::string detail = {}) {
    std::string value = ok ? "true" : "false";
    if (!detail.empty()) {
      value += " (" + detail + ")";
    }
    report_.checks.push_back({std::move(id), std::move(reference), std::move(value), ok});
  }

  // Runs a check body, turning an unexpected exception into a failed check.
  template <typename Body>
  void guarded(const std::string& id, const std::string& reference, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report_.checks.push_back({id, reference, std::string("error: ") + e.what(), false});
    }
  }

 private:
  VerifyReport& report_;
  Real::Bits bits_;
};

std::string tag(const char* key, int value) { return std::string(key) + "=" + std::to_string(value); }

std::string tag(const char* key, const char* value) { return std::string(key) + "=" + value; }

mpz_class sum_of_coefficients(const LaurentPoly& p) {
  mpz_class s = 0;
  for (const auto& [e, c] : p.terms()) {
    s += c;
  }
  return s;
}

void poly_suite(Collector& c, const PrecisionContext& ctx, const VerifyOptions& options) {
  const int max_N = options.deep ? 12 : 8;
  const int cross_N = options.deep ? 12 : 6;
  const Real cross_bound = c.num("1e-20");
  const std::array<const char*, 3> xis{"0.3", "1.0", "2.0"};

  for (int b = 0; b <= 2; ++b) {
    for (int N = 1; N <= max_N; ++N) {
      const std::string where = tag("N", N) + " " + tag("b", b);
      c.guarded("cable_exact_division " + where, "the cable sum is divisible by t^{N/2} - t^{-N/2}", [&] {
        const LaurentPoly p = cable_poly({N, b});
        c.boolean("cable_exact_division " + where, "the cable sum is divisible by t^{N/2} - t^{-N/2}", true);
        c.boolean("cable_at_one " + where, "J_N(t = 1) = 1", sum_of_coefficients(p) == 1);
        if (N > cross_N) {
          return;
        }
        for (const char* xi_text : xis) {
          const Real xi = c.num(xi_text);
          const Real t = exp(xi / static_cast<long>(N));
          const Real exact = eval(p, t, ctx);
          const Real floating = eval_cable_jones({N, b}, xi).value();
          c.residual("cross_pipeline " + where + " " + tag("xi", xi_text),
                     "exact polynomial at e^{xi/N} = floating double sum", relative_gap(floating, exact),
                     cross_bound);
        }
      });
    }
  }

  for (int m = 1; m <= 10; ++m) {
    c.guarded("fig8 " + tag("m", m), "Habiro sum", [&] {
      const LaurentPoly p = habiro_fig8_poly(m);
      c.boolean("fig8_mirror " + tag("m", m), "J_m(E; t^{-1}) = J_m(E; t)", mirror(p) == p);
      c.boolean("fig8_at_one " + tag("m", m), "J_m(E; 1) = 1", sum_of_coefficients(p) == 1);
      const Real eta = c.num("1.0");
      const Real exact = eval(p, exp(eta / static_cast<long>(m)), ctx);
      c.residual("cross_pipeline_fig8 " + tag("m", m), "exact polynomial at e^{eta/m} = floating Habiro sum",
                 relative_gap(eval_fig8_jones(m, eta).value(), exact), cross_bound);
    });
  }

  const Real alex_bound = ten_to_minus(ctx.target_digits() - 5, c.bits());
  const Real ek = exp(kappa(c.bits()));
  for (int b = 0; b <= 3; ++b) {
    const LaurentPoly alex = alexander_cable(b);
    c.residual("alexander_cable_zero " + tag("b", b), "Delta(E^(2,2b+1); e^kappa) = 0", abs(eval(alex, ek, ctx)),
               alex_bound);
    c.boolean("alexander_cable_normalized " + tag("b", b), "Delta(E^(2,2b+1); 1) = 1",
              sum_of_coefficients(alex) == 1 && mirror(alex) == alex);
  }
}

void asymptotics_suite(Collector& c, const PrecisionContext& ctx, const VerifyOptions& options) {
  const Real boundary = c.num("1e-15");
  const Real k = kappa(c.bits());
  c.residual("phi_at_kappa", "phi(kappa) = 0", abs(phi(k)), boundary);
  c.residual("S_near_kappa", "S(kappa + 1e-20) -> 0", abs(S_of_xi(k + c.num("1e-20"))), boundary);
  for (const char* xi : {"0.6", "1.0", "2.0"}) {
    c.boolean(std::string("S_positive xi=") + xi, "S(xi) > 0", S_of_xi(c.num(xi)).sign() > 0);
  }

  for (const char* xi_text : {"0.6", "1.0", "2.0"}) {
    for (int N : {200, 500, 1000, 2000}) {
      const std::string where = tag("xi", xi_text) + " " + tag("N", N);
      c.guarded("max_term " + where, "argmax of the last row", [&] {
        const MaxTermReport r = max_term(N, c.num(xi_text));
        const std::string detail = "predicted=" + std::to_string(r.predicted) +
                                   " observed=" + std::to_string(r.observed) +
                                   " step_threshold=" + std::to_string(r.ratio_threshold);
        c.boolean("max_term_floor_law " + where, "argmax_l f_{N-1,l} = floor(phi N/xi) - 1", r.predicted_matches(),
                  detail);
        c.boolean("max_term_step_law " + where,
                  "argmax_l f_{N-1,l} = ceil(l*) - 1, cosh(l* xi/N) = cosh(2xi - xi/N) - 1/2",
                  r.observed == r.ratio_threshold, detail);
      });
    }
  }
  for (const char* xi_text : {"0.2", "0.48"}) {
    const MaxTermReport r = max_term(500, c.num(xi_text), true);
    c.boolean(std::string("max_term_subcritical xi=") + xi_text, "argmax is 0 when xi <= kappa", r.observed == 0,
              "observed=" + std::to_string(r.observed));
  }

  std::mt19937_64 rng(kSampleSeed);
  const Real ratio_bound = ten_to_minus(ctx.target_digits() - 5, c.bits());
  int monotone_fail = 0;
  int sandwich_fail = 0;
  int step_fail = 0;
  Real worst_ratio(c.bits());
  constexpr int kSamples = 40;
  for (int i = 0; i < kSamples; ++i) {
    const int N = std::uniform_int_distribution<int>(2, 40)(rng);
    const int b = std::uniform_int_distribution<int>(0, 3)(rng);
    const Real xi = Real::ratio(std::uniform_int_distribution<long>(10, 300)(rng), 100, c.bits());
    const CableSpec spec{N, b};

    const int d = std::uniform_int_distribution<int>(1, N - 1)(rng);
    const int l = std::uniform_int_distribution<int>(0, 2 * d - 2)(rng);
    if (!(eval_f({d, l}, spec, xi) > eval_f({d - 1, l}, spec, xi))) {
      ++monotone_fail;
    }
    if (!sandwich_bounds(spec, xi).holds()) {
      ++sandwich_fail;
    }
    const int step = std::uniform_int_distribution<int>(1, 2 * N - 2)(rng);
    const Real direct = eval_f({N - 1, step}, spec, xi) / eval_f({N - 1, step - 1}, spec, xi);
    worst_ratio = max(worst_ratio, relative_gap(direct, last_row_step_ratio(N, step, xi)));
    const StepCheck sc = check_last_row_step(N, step, xi, c.num("0.01"));
    if (sc.branch == StepBranch::Decreasing && !sc.conclusion_held) {
      ++step_fail;
    }
  }
  const std::string samples = std::to_string(kSamples) + " samples";
  c.boolean("row_increases_with_d", "f_{d,l} > f_{d-1,l} for 0 <= l <= 2d-2", monotone_fail == 0,
            std::to_string(monotone_fail) + " failures in " + samples);
  c.boolean("sandwich", "(1 - e^{-xi/2}) f_max < S < N^2 f_max", sandwich_fail == 0,
            std::to_string(sandwich_fail) + " failures in " + samples);
  c.residual("step_ratio_identity", "f_{N-1,l}/f_{N-1,l-1} = 2cosh(2xi - xi/N) - 2cosh(l xi/N)", worst_ratio,
             ratio_bound);
  c.boolean("last_row_decreasing_branch", "cosh(l xi/N) >= cosh(2xi) - 1/2 implies f_{N-1,l-1} > f_{N-1,l}",
            step_fail == 0, std::to_string(step_fail) + " failures in " + samples);

  c.guarded("alexander_limit", "J_N(E; e^{0.1/N}) -> 1/Delta(E; e^{0.1})", [&] {
    const Real eta = c.num("0.1");
    const Real target = 1L / eval(alexander_fig8(), exp(eta), ctx);
    std::vector<Real> gaps;
    for (int N : {100, 400, 1600}) {
      gaps.push_back(abs(eval_fig8_jones(N, eta).value() - target));
    }
    const bool ok = gaps[1] < gaps[0] * Real::ratio(1, 2, c.bits()) && gaps[2] < gaps[1] * Real::ratio(1, 2, c.bits());
    c.boolean("alexander_limit", "J_N(E; e^{0.1/N}) -> 1/Delta(E; e^{0.1}), gap ratio < 1/2 per quadrupling", ok,
              "gaps " + gaps[0].to_string(4) + ", " + gaps[1].to_string(4) + ", " + gaps[2].to_string(4));
  });

  if (!options.deep) {
    return;
  }
  const std::array<int, 4> Ns{500, 1000, 2000, 4000};
  const TableOptions table{options.threads};
  for (const char* xi_text : {"0.6", "1.0", "1.5"}) {
    for (int b : {0, 1}) {
      const std::string where = tag("xi", xi_text) + " " + tag("b", b);
      c.guarded("growth " + where, "(xi/N) log J_N -> S(xi)", [&] {
        const auto rows = growth_table(b, c.num(xi_text), Ns, table);
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          detail += (i ? ", " : "") + rows[i].gap.to_string(4);
          if (i > 0 && !(rows[i].gap < rows[i - 1].gap * Real::ratio(7, 10, c.bits()))) {
            ok = false;
          }
        }
        c.boolean("growth " + where, "(xi/N) log J_N -> S(xi), gap(2N)/gap(N) < 0.7", ok, "gaps " + detail);
      });
    }
  }
  for (const char* eta_text : {"1.2", "2.0"}) {
    c.guarded(std::string("growth_fig8 eta=") + eta_text, "(eta/N) log J_N(E) -> S(eta/2)", [&] {
      const auto rows = growth_table_fig8(c.num(eta_text), Ns, table);
      bool ok = true;
      std::string detail;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        detail += (i ? ", " : "") + rows[i].gap.to_string(4);
        if (i > 0 && !(rows[i].gap < rows[i - 1].gap * Real::ratio(7, 10, c.bits()))) {
          ok = false;
        }
      }
      c.boolean(std::string("growth_fig8 eta=") + eta_text, "(eta/N) log J_N(E) -> S(eta/2), gap ratio < 0.7", ok,
                "gaps " + detail);
    });
  }
  c.guarded("critical_growth", "J_N(E; e^{2kappa/N}) / N^{2/3} -> Gamma(1/3)/(6 kappa)^{2/3}", [&] {
    const Real value = poly_growth_check(10000, ctx);
    const Real target = critical_growth_constant(ctx);
    c.residual("critical_growth N=10000", "J_N(E; e^{2kappa/N}) / N^{2/3} -> Gamma(1/3)/(6 kappa)^{2/3}",
               relative_gap(value, target), c.num("0.1"));
  });
}

void rep_suite(Collector& c, const PrecisionContext& ctx) {
  const Real bound = ten_to_minus(ctx.target_digits() - 5, c.bits());
  const Real k = kappa(c.bits());
  c.residual("ell_at_kappa", "l(kappa) = 1", abs(ell(k) - 1L), bound);
  c.residual("delta_at_kappa", "delta(kappa) = 0", abs(delta(k)), bound);

  for (const char* u_text : {"0.6", "1.0", "2.0", "5.0"}) {
    const Real u = c.num(u_text);
    const std::string where = tag("u", u_text);
    const Real l = ell(u);
    const Real c2 = cosh(u * 2L);
    c.boolean("ell_lower_bound " + where, "l(u) > 2cosh^2(2u) - cosh(2u) - 2 > 1",
              l > square(c2) * 2L - c2 - 2L && square(c2) * 2L - c2 - 2L > 1);
    c.residual("ell_forms_agree " + where, "l(u) = cosh 4u - cosh 2u - 1 + 2 sinh 2u sinh phi(u)",
               relative_gap(ell_hyperbolic(u), l), bound);
    const Real t3 = exp(u * 2L) + exp(-u * 2L) - 3L;
    const Real dl = delta(u);
    c.residual("delta_quadratic " + where, "delta^2 - (T-3) delta - (T-3) = 0, T = e^{2u} + e^{-2u}",
               abs(square(dl) - t3 * dl - t3) / max(square(dl), Real(1, c.bits())), bound);
    c.residual("a_poly_fig8 " + where, "l - (m^4 - m^2 - 2 - m^-2 + m^-4) + l^-1 = 0 at m = e^u",
               a_poly_fig8_residual(u), bound);
    c.residual("a_poly_cable " + where, "l^2 + l^-2 = (e^{4u} - e^{2u} - 2 - e^{-2u} + e^{-4u})^2 - 2",
               a_poly_cable_check(u), bound);
    c.residual("a_poly_cable_factor " + where,
               "L - ((M^8 - M^4 - 2 - M^-4 + M^-8)^2 - 2) + L^-1 = 0 at M = e^{u/2}, L = l^2",
               a_poly_cable_factor(u), bound);
    for (int b : {0, 1, 3}) {
      const RepData rep = build_rep(u, b);
      for (const auto& r : verify_relations(rep)) {
        c.residual("relation " + r.name + " " + where + " " + tag("b", b), "matrix identity in SL(2;R)", r.residual,
                   bound);
      }
    }
  }
}

void cs_suite(Collector& c, const PrecisionContext& ctx) {
  (void)ctx;
  const Real tol = c.num("1e-12");
  const Real loose = c.num("1e-10");
  for (const char* u_text : {"0.6", "1.0", "2.0", "4.0"}) {
    c.guarded(std::string("S_equals_integral u=") + u_text, "S(u) = 2 int_kappa^u log l(s) ds", [&] {
      const Real u = c.num(u_text);
      const Real gap = abs(S_of_xi(u) - integral_log_ell(u, tol) * 2L);
      c.residual(std::string("S_equals_integral u=") + u_text, "S(u) = 2 int_kappa^u log l(s) ds", gap, loose);
    });
  }
  for (const char* u_text : {"0.6", "1.0", "3.0"}) {
    const DerivativeCheck d = verify_derivative_identity(c.num(u_text), c.num("1e-8"));
    c.residual(std::string("derivative_identity u=") + u_text, "exp(dS/du) = l(u)^2", d.finite_difference,
               c.num("1e-6"));
    c.residual(std::string("derivative_intermediate u=") + u_text,
               "(e^phi - e^{-2u})/(1 - e^{phi-2u}) = e^{phi+2u} + e^{-phi-2u} - 2", d.intermediate,
               ten_to_minus(ctx.target_digits() - 5, c.bits()));
  }
  for (const char* xi_text : {"0.6", "1.0", "2.0"}) {
    c.guarded(std::string("cs_cable_fig8 xi=") + xi_text, "CS of the cable at xi = CS of E at 2xi", [&] {
      const Real xi = c.num(xi_text);
      const CSResult cable = cs_cable(xi, tol);
      const CSResult fig8 = cs_fig8(xi * 2L, tol);
      c.residual(std::string("cs_cable_fig8 xi=") + xi_text,
                 "S(xi) - xi v(xi)/4 = S(xi) - 2xi v_E(2xi)/4, v = 4 log l(xi), v_E(2xi) = 2 log l(xi)",
                 abs(cable.cs - fig8.cs), loose);
      c.residual(std::string("cs_routes xi=") + xi_text, "2 int log l - u log l = S(u) - u v/4",
                 abs(cable.cs - cable.cs_other_route), loose);
    });
  }
  for (const char* u_text : {"0.6", "1.0", "2.0"}) {
    c.guarded(std::string("path_variation u=") + u_text, "variation formula along u_t", [&] {
      const PathVariation pv = path_variation_check(c.num(u_text), tol);
      c.residual(std::string("path_variation u=") + u_text,
                 "int_0^1 (u v' - u' v) dt = 4u log l(u) - 8 int_kappa^u log l", pv.residual, loose);
    });
  }
  c.guarded("cs_near_threshold", "CS -> 0 as u -> kappa", [&] {
    const CSResult r = cs_cable(kappa(c.bits()) + c.num("1e-34"), tol);
    c.residual("cs_near_threshold", "CS -> 0 as u -> kappa", abs(r.cs), c.num("1e-15"));
  });
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"id", c.id}, {"reference", c.reference}, {"value", c.value}, {"pass", c.pass}});
  }
  json out;
  out["suite"] = suite;
  out["pass"] = pass();
  out["checks"] = std::move(checks_json);
  return out.dump(2);
}

VerifyReport run_suite(const std::string& suite, const PrecisionContext& ctx, const VerifyOptions& options) {
  static const std::array<std::string, 5> kSuites{"poly", "asymptotics", "rep", "cs", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
    throw std::invalid_argument("unknown suite '" + suite + "' (expected poly, asymptotics, rep, cs or all)");
  }
  VerifyReport report;
  report.suite = suite;
  Collector c(report, ctx);
  const bool all = suite == "all";
  if (all || suite == "poly") {
    poly_suite(c, ctx, options);
  }
  if (all || suite == "asymptotics") {
    asymptotics_suite(c, ctx, options);
  }
  if (all || suite == "rep") {
    rep_suite(c, ctx);
  }
  if (all || suite == "cs") {
    cs_suite(c, ctx);
  }
  return report;
}

}  // namespace cablejones
