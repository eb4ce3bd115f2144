// Acceptance suite. Prints one PASS/FAIL line per criterion; with
// --criterion N only that criterion runs. Exit status is 0 iff all ran criteria pass.

#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cablejones/asymptotics.hpp"
#include "cablejones/chern_simons.hpp"
#include "cablejones/jones.hpp"
#include "cablejones/laurent.hpp"
#include "cablejones/representation.hpp"

using namespace cablejones;

namespace {

const PrecisionContext kCtx;
const Real::Bits kBits = static_cast<Real::Bits>(kCtx.working_bits());

Real num(const char* text) { return Real::from_string(text, kBits); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::string fmt(const Real& x) { return x.to_string(4); }

mpz_class coefficient_sum(const LaurentPoly& p) {
  mpz_class s = 0;
  for (const auto& [e, c] : p.terms()) {
    s += c;
  }
  return s;
}

// Exact-formula integrity: zero remainder for N <= 12, b <= 3, all within a minute.
Outcome exact_division() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int b = 0; b <= 3; ++b) {
    for (int N = 1; N <= 12; ++N) {
      try {
        const LaurentPoly p = cable_poly({N, b});
        o.require(coefficient_sum(p) == 1, "J_N(1) != 1 at N=" + std::to_string(N) + " b=" + std::to_string(b));
      } catch (const NotDivisible& e) {
        o.require(false, "remainder at N=" + std::to_string(N) + " b=" + std::to_string(b));
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  o.notes.push_back("48 polynomials in " + std::to_string(secs) + " s");
  return o;
}

// Cross-pipeline agreement at 1e-20 relative.
Outcome cross_pipeline() {
  Outcome o;
  const Real bound = num("1e-20");
  Real worst(kBits);
  for (const char* xi_text : {"0.3", "1.0", "2.0"}) {
    const Real xi = num(xi_text);
    for (int b = 0; b <= 2; ++b) {
      for (int N = 1; N <= 12; ++N) {
        const Real exact = eval(cable_poly({N, b}), exp(xi / static_cast<long>(N)), kCtx);
        const Real gap = relative_gap(eval_cable_jones({N, b}, xi).value(), exact);
        worst = max(worst, gap);
        o.require(gap < bound, "cable N=" + std::to_string(N) + " b=" + std::to_string(b) + " xi=" + xi_text +
                                   " gap " + fmt(gap));
      }
    }
    for (int m = 1; m <= 10; ++m) {
      const Real exact = eval(habiro_fig8_poly(m), exp(xi / static_cast<long>(m)), kCtx);
      const Real gap = relative_gap(eval_fig8_jones(m, xi).value(), exact);
      worst = max(worst, gap);
      o.require(gap < bound, "fig8 m=" + std::to_string(m) + " eta=" + xi_text + " gap " + fmt(gap));
    }
  }
  o.notes.push_back("worst relative gap " + fmt(worst));
  return o;
}

const std::array<int, 4> kGrowthNs{500, 1000, 2000, 4000};

void check_gaps(Outcome& o, const std::vector<GrowthRow>& rows, const std::string& where) {
  std::string gaps;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    gaps += (i ? " " : "") + fmt(rows[i].gap);
    if (i == 0) {
      continue;
    }
    o.require(rows[i].gap < rows[i - 1].gap, where + ": gap not decreasing at N=" + std::to_string(rows[i].N));
    o.require(rows[i].gap < rows[i - 1].gap * Real::ratio(7, 10, kBits),
              where + ": gap ratio >= 0.7 at N=" + std::to_string(rows[i].N));
  }
  o.notes.push_back(where + " gaps " + gaps);
}

// Cable growth rate converges to S(xi); b-independence at N = 4000.
Outcome cable_convergence() {
  Outcome o;
  for (const char* xi_text : {"0.6", "1.0", "1.5"}) {
    for (int b : {0, 1}) {
      check_gaps(o, growth_table(b, num(xi_text), kGrowthNs),
                 std::string("xi=") + xi_text + " b=" + std::to_string(b));
    }
  }
  const std::array<int, 1> last{4000};
  std::vector<GrowthRow> rows;
  for (int b : {0, 1, 2}) {
    rows.push_back(growth_table(b, num("1.0"), last).front());
  }
  Real largest_gap = max(max(rows[0].gap, rows[1].gap), rows[2].gap);
  Real spread(kBits);
  for (const auto& a : rows) {
    for (const auto& c : rows) {
      spread = max(spread, abs(a.rate - c.rate));
    }
  }
  o.require(spread < largest_gap * 2L, "b-spread " + fmt(spread) + " vs 2 x gap " + fmt(largest_gap * 2L));
  o.notes.push_back("b-spread at N=4000 " + fmt(spread) + ", largest gap " + fmt(largest_gap));
  return o;
}

// Figure-eight growth rate converges to S(eta/2) and matches the cable at 2xi.
Outcome fig8_convergence() {
  Outcome o;
  for (const char* eta_text : {"1.2", "2.0"}) {
    check_gaps(o, growth_table_fig8(num(eta_text), kGrowthNs), std::string("eta=") + eta_text);
  }
  const std::array<int, 1> last{4000};
  for (const char* xi_text : {"0.6", "1.0"}) {
    const Real xi = num(xi_text);
    const GrowthRow cable = growth_table(0, xi, last).front();
    const GrowthRow fig8 = growth_table_fig8(xi * 2L, last).front();
    o.require(cable.limit == fig8.limit, std::string("limits differ at xi=") + xi_text);
    o.require(abs(cable.rate - fig8.rate) <= cable.gap + fig8.gap,
              std::string("rates at xi=") + xi_text + " differ by more than the combined gaps");
  }
  return o;
}

// Largest last-row term sits at floor(phi N/xi) - 1; at 0 below kappa.
Outcome max_term_law() {
  Outcome o;
  for (const char* xi_text : {"0.6", "1.0", "2.0"}) {
    for (int N : {200, 500, 1000, 2000}) {
      const MaxTermReport r = max_term(N, num(xi_text));
      o.require(r.predicted_matches(), std::string("xi=") + xi_text + " N=" + std::to_string(N) +
                                           ": predicted " + std::to_string(r.predicted) + ", observed " +
                                           std::to_string(r.observed) + ", step-ratio threshold " +
                                           std::to_string(r.ratio_threshold));
    }
  }
  for (const char* xi_text : {"0.2", "0.48"}) {
    for (int N : {200, 2000}) {
      const MaxTermReport r = max_term(N, num(xi_text), true);
      o.require(r.observed == 0, std::string("subcritical xi=") + xi_text + " argmax " + std::to_string(r.observed));
    }
  }
  return o;
}

// Row monotonicity in d, the sandwich bound and the step-ratio identity on 1000 instances each.
Outcome term_inequalities() {
  Outcome o;
  std::mt19937_64 rng(0xacce97ULL);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto pick_xi = [&] { return Real::ratio(std::uniform_int_distribution<long>(5, 400)(rng), 100, kBits); };
  int monotone = 0;
  int sandwich = 0;
  int ratio = 0;
  const Real ratio_bound = num("1e-25");
  for (int i = 0; i < 1000; ++i) {
    const int N = pick(2, 60);
    const CableSpec spec{N, pick(0, 3)};
    const Real xi = pick_xi();
    const int d = pick(1, N - 1);
    const int l = pick(0, 2 * d - 2);
    if (!(eval_f({d, l}, spec, xi) > eval_f({d - 1, l}, spec, xi))) {
      ++monotone;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const int N = pick(2, 40);
    if (!sandwich_bounds({N, pick(0, 3)}, pick_xi()).holds()) {
      ++sandwich;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const int N = pick(2, 60);
    const CableSpec spec{N, pick(0, 3)};
    const Real xi = pick_xi();
    const int l = pick(1, 2 * N - 2);
    const Real direct = eval_f({N - 1, l}, spec, xi) / eval_f({N - 1, l - 1}, spec, xi);
    if (!(relative_gap(direct, last_row_step_ratio(N, l, xi)) < ratio_bound)) {
      ++ratio;
    }
  }
  o.require(monotone == 0, std::to_string(monotone) + " failures of f_{d,l} > f_{d-1,l}");
  o.require(sandwich == 0, std::to_string(sandwich) + " sandwich failures");
  o.require(ratio == 0, std::to_string(ratio) + " step-ratio identity failures");
  return o;
}

// Representation relations, A-polynomials, Alexander zero.
Outcome representation_suite() {
  Outcome o;
  const Real bound = num("1e-25");
  Real worst(kBits);
  for (const char* u_text : {"0.6", "1.0", "2.0", "5.0"}) {
    const Real u = num(u_text);
    for (int b : {0, 1, 3}) {
      for (const auto& r : verify_relations(build_rep(u, b))) {
        worst = max(worst, r.residual);
        o.require(r.residual < bound, r.name + " u=" + u_text + " b=" + std::to_string(b) + " " + fmt(r.residual));
      }
    }
    for (const Real& r : {a_poly_fig8_residual(u), a_poly_cable_check(u), a_poly_cable_factor(u)}) {
      worst = max(worst, r);
      o.require(r < bound, std::string("A-polynomial residual u=") + u_text + " " + fmt(r));
    }
  }
  const Real t = exp(kappa(kBits));
  for (int b = 0; b <= 3; ++b) {
    const Real v = abs(eval(alexander_cable(b), t, kCtx));
    o.require(v < bound, "Alexander at e^kappa, b=" + std::to_string(b) + " " + fmt(v));
  }
  o.notes.push_back("worst residual " + fmt(worst));
  return o;
}

// Chern-Simons identities.
Outcome cs_suite() {
  Outcome o;
  const Real tol = num("1e-12");
  const Real bound = num("1e-10");
  for (const char* u_text : {"0.6", "1.0", "2.0", "4.0"}) {
    const Real u = num(u_text);
    const Real gap = abs(S_of_xi(u) - integral_log_ell(u, tol) * 2L);
    o.require(gap < bound, std::string("S vs 2 int log l at u=") + u_text + " " + fmt(gap));
  }
  for (const char* u_text : {"0.6", "1.0", "3.0"}) {
    const DerivativeCheck d = verify_derivative_identity(num(u_text), num("1e-8"));
    o.require(d.finite_difference < num("1e-6"), std::string("exp(dS/du) vs l^2 at u=") + u_text);
  }
  for (const char* xi_text : {"0.6", "1.0", "2.0"}) {
    const Real xi = num(xi_text);
    const CSResult cable = cs_cable(xi, tol);
    const CSResult fig8 = cs_fig8(xi * 2L, tol);
    const Real gap = abs(cable.cs - fig8.cs);
    o.require(gap < bound, std::string("cs_cable vs cs_fig8 at xi=") + xi_text + " " + fmt(gap));
    o.require(abs(cable.cs - cable.cs_other_route) < bound, std::string("cable routes at xi=") + xi_text);
    o.require(abs(fig8.cs - fig8.cs_other_route) < bound, std::string("fig8 routes at eta=2*") + xi_text);
    const PathVariation path = path_variation_check(xi, tol);
    o.require(path.residual < bound, std::string("path variation at u=") + xi_text + " " + fmt(path.residual));
  }
  const Real k = kappa(kBits);
  o.require(abs(S_of_xi(k + num("1e-20"))) < num("1e-15"), "S near kappa");
  o.require(abs(phi(k)) < num("1e-15"), "phi(kappa)");
  return o;
}

// Small-parameter limit 1/Delta(E; e^{0.1}).
Outcome alexander_limit() {
  Outcome o;
  const Real eta = num("0.1");
  const Real target = 1L / eval(alexander_fig8(), exp(eta), kCtx);
  std::vector<Real> gaps;
  for (int N : {100, 400, 1600}) {
    gaps.push_back(abs(eval_fig8_jones(N, eta).value() - target));
  }
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    o.require(gaps[i] < gaps[i - 1] * Real::ratio(1, 2, kBits), "gap ratio >= 0.5 at step " + std::to_string(i));
  }
  o.notes.push_back("gaps " + fmt(gaps[0]) + " " + fmt(gaps[1]) + " " + fmt(gaps[2]));
  return o;
}

// Critical-point growth within 10% at N = 1e4 (non-blocking in spirit, reported as is).
Outcome critical_growth() {
  Outcome o;
  const Real value = poly_growth_check(10000, kCtx);
  const Real target = critical_growth_constant(kCtx);
  const Real gap = relative_gap(value, target);
  o.require(gap < num("0.1"), "relative gap " + fmt(gap));
  o.notes.push_back("J_N/N^(2/3) = " + value.to_string(8) + ", constant " + target.to_string(8));
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"exact polynomial integrity", exact_division},
      {"cross-pipeline agreement", cross_pipeline},
      {"cable growth convergence", cable_convergence},
      {"figure-eight growth convergence", fig8_convergence},
      {"max-term location law", max_term_law},
      {"term inequalities", term_inequalities},
      {"representation relations", representation_suite},
      {"Chern-Simons identities", cs_suite},
      {"small-parameter Alexander limit", alexander_limit},
      {"critical-point growth", critical_growth},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "criterion must be in 1.." << criteria.size() << "\n";
    return 2;
  }

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::ostringstream line;
    line << "criterion " << (i + 1) << " (" << criteria[i].name << "): " << (o.pass ? "PASS" : "FAIL") << " ["
         << secs << " s]";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) {
      std::cout << "    " << n << "\n";
    }
  }
  return all ? 0 : 1;
}
