#include "cablejones/harness/run.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cablejones/asymptotics.hpp"
#include "cablejones/chern_simons.hpp"
#include "cablejones/errors.hpp"
#include "cablejones/harness/poly_cache.hpp"
#include "cablejones/harness/verify.hpp"
#include "cablejones/jones.hpp"
#include "cablejones/laurent.hpp"

namespace cablejones {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const char* knot_name(Knot k) { return k == Knot::Cable ? "cable" : "fig8"; }

struct Context {
  const RunConfig& config;
  PrecisionContext precision;
  Real::Bits bits;
  unsigned digits;

  std::string str(const Real& x) const { return x.to_string(digits); }

  Real parse(const std::optional<std::string>& text, const char* flag) const {
    if (!text) {
      throw UsageError(std::string("missing --") + flag);
    }
    try {
      return Real::from_string(*text, bits);
    } catch (const DomainError&) {
      throw UsageError(std::string("--") + flag + ": not a decimal number: '" + *text + "'");
    }
  }

  int single_N() const {
    if (config.Ns.size() != 1) {
      throw UsageError("this command takes exactly one --N");
    }
    return config.Ns.front();
  }

  void require_Ns() const {
    if (config.Ns.empty()) {
      throw UsageError("missing --N or --N-list");
    }
  }
};

std::string poly_command(const Context& cx, std::ostream& err) {
  const int N = cx.single_N();
  LaurentPoly p;
  if (!cx.config.cache_dir.empty()) {
    const PolyCache cache(cx.config.cache_dir);
    const auto found = cx.config.knot == Knot::Cable ? cache.cable({N, cx.config.b}) : cache.fig8(N);
    err << json{{"cache", found.hit ? "hit" : "miss"}, {"path", found.path.string()}}.dump() << '\n';
    p = found.poly;
  } else {
    p = cx.config.knot == Knot::Cable ? cable_poly({N, cx.config.b}) : habiro_fig8_poly(N);
  }
  json out;
  out["knot"] = knot_name(cx.config.knot);
  out["N"] = N;
  if (cx.config.knot == Knot::Cable) {
    out["b"] = cx.config.b;
  }
  out["coeffs"] = json::parse(to_json(p));
  return out.dump() + "\n";
}

std::string eval_command(const Context& cx) {
  cx.require_Ns();
  const bool cable = cx.config.knot == Knot::Cable;
  const Real param = cable ? cx.parse(cx.config.xi, "xi") : cx.parse(cx.config.eta, "eta");
  const SumOptions sum{cx.config.threads};
  std::ostringstream csv;
  csv << "N,sign,log_abs,value\n";
  json rows = json::array();
  for (int N : cx.config.Ns) {
    const JonesValue j = cable ? eval_cable_jones({N, cx.config.b}, param, sum) : eval_fig8_jones(N, param);
    const std::string log_abs = cx.str(j.log_abs);
    const std::string value = cx.str(j.value());
    csv << N << ',' << j.sign << ',' << log_abs << ',' << value << '\n';
    rows.push_back({{"N", N}, {"sign", j.sign}, {"log_abs", log_abs}, {"value", value}});
  }
  if (cx.config.format == Format::Csv) {
    return csv.str();
  }
  json out;
  out["knot"] = knot_name(cx.config.knot);
  if (cable) {
    out["b"] = cx.config.b;
    out["xi"] = *cx.config.xi;
  } else {
    out["eta"] = *cx.config.eta;
  }
  out["values"] = std::move(rows);
  return out.dump(2) + "\n";
}

std::string growth_command(const Context& cx) {
  cx.require_Ns();
  const bool cable = cx.config.knot == Knot::Cable;
  const TableOptions table{cx.config.threads};
  const std::vector<GrowthRow> rows =
      cable ? growth_table(cx.config.b, cx.parse(cx.config.xi, "xi"), cx.config.Ns, table)
            : growth_table_fig8(cx.parse(cx.config.eta, "eta"), cx.config.Ns, table);
  if (cx.config.format == Format::Csv) {
    std::ostringstream csv;
    csv << "N,rate,limit,gap\n";
    for (const auto& r : rows) {
      csv << r.N << ',' << cx.str(r.rate) << ',' << cx.str(r.limit) << ',' << cx.str(r.gap) << '\n';
    }
    return csv.str();
  }
  json out;
  out["knot"] = knot_name(cx.config.knot);
  if (cable) {
    out["b"] = cx.config.b;
    out["xi"] = *cx.config.xi;
  } else {
    out["eta"] = *cx.config.eta;
  }
  json list = json::array();
  for (const auto& r : rows) {
    list.push_back({{"N", r.N}, {"rate", cx.str(r.rate)}, {"limit", cx.str(r.limit)}, {"gap", cx.str(r.gap)}});
  }
  out["rows"] = std::move(list);
  return out.dump(2) + "\n";
}

std::string cs_command(const Context& cx) {
  const Real tol = cx.config.tol ? cx.parse(cx.config.tol, "tol") : Real::from_string("1e-12", cx.bits);
  CSResult r;
  json out;
  if (cx.config.knot == Knot::Cable) {
    const Real u = cx.config.u ? cx.parse(cx.config.u, "u") : cx.parse(cx.config.xi, "u");
    r = cs_cable(u, tol);
    out["knot"] = "cable";
    out["u"] = cx.str(r.u);
  } else {
    r = cs_fig8(cx.parse(cx.config.eta, "eta"), tol);
    out["knot"] = "fig8";
    out["eta"] = cx.str(r.u);
  }
  out["ell"] = cx.str(r.ell);
  out["v"] = cx.str(r.v);
  out["S"] = cx.str(r.S);
  out["cs"] = cx.str(r.cs);
  out["cs_other_route"] = cx.str(r.cs_other_route);
  out["integral"] = cx.str(r.integral);
  out["integral_residual"] = cx.str(r.integral_residual);
  out["modulus"] = "pi^2 Z";
  return out.dump(2) + "\n";
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) {
    throw CacheError(config.output + ": cannot write output");
  }
}

int report_error(std::ostream& err, const char* kind, const std::string& message, int code) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

PrecisionContext resolve_precision(const RunConfig& config) {
  if (config.digits) {
    return PrecisionContext::from_digits(*config.digits);
  }
  return PrecisionContext::from_environment();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    PrecisionContext precision = [&] {
      try {
        return resolve_precision(config);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    const Context cx{config, precision, static_cast<Real::Bits>(precision.working_bits()),
                     precision.target_digits()};
    if (config.threads == 0) {
      throw UsageError("--threads must be at least 1");
    }
    switch (config.command) {
      case Command::Poly:
        emit(config, poly_command(cx, err), out);
        return kExitPass;
      case Command::Eval:
        emit(config, eval_command(cx), out);
        return kExitPass;
      case Command::Growth:
        emit(config, growth_command(cx), out);
        return kExitPass;
      case Command::Cs:
        emit(config, cs_command(cx), out);
        return kExitPass;
      case Command::Verify: {
        VerifyReport report;
        try {
          report = run_suite(config.suite, precision, {config.deep, config.threads});
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        emit(config, report.to_json() + "\n", out);
        return report.pass() ? kExitPass : kExitCheckFailed;
      }
    }
    return report_error(err, "internal", "unknown command", kExitInternal);
  } catch (const UsageError& e) {
    return report_error(err, "usage", e.what(), kExitUsage);
  } catch (const DomainError& e) {
    return report_error(err, "usage", e.what(), kExitUsage);
  } catch (const NotDivisible& e) {
    return report_error(err, "internal", e.what(), kExitInternal);
  } catch (const ConvergenceError& e) {
    return report_error(err, "internal", e.what(), kExitInternal);
  } catch (const CacheError& e) {
    return report_error(err, "io", e.what(), kExitInternal);
  } catch (const std::exception& e) {
    return report_error(err, "internal", e.what(), kExitInternal);
  }
}

}  // namespace cablejones
