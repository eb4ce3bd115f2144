#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "cablejones/harness/run.hpp"

namespace {

using cablejones::Command;
using cablejones::Format;
using cablejones::Knot;

void add_knot_options(CLI::App* sub, cablejones::RunConfig& cfg) {
  static const std::map<std::string, Knot> knots{{"cable", Knot::Cable}, {"fig8", Knot::Fig8}};
  sub->add_option("--knot", cfg.knot, "cable or fig8")
      ->transform(CLI::CheckedTransformer(knots, CLI::ignore_case));
  sub->add_option("--b", cfg.b, "cabling parameter, b >= 0");
}

void add_color_options(CLI::App* sub, std::vector<int>& single, std::vector<int>& list) {
  sub->add_option("--N", single, "color (repeatable)");
  sub->add_option("--N-list", list, "comma-separated colors")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  cablejones::RunConfig cfg;
  CLI::App app{"Colored Jones polynomials of the (2,2b+1)-cable of the figure-eight knot"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned digits = 0;
  std::string tol;
  std::string xi;
  std::string eta;
  std::string u;
  std::vector<int> single;
  std::vector<int> list;
  static const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};

  app.add_option("--digits", digits, "trusted decimal digits (default 30, or $CABLEJONES_DIGITS)");
  app.add_option("-o,--output", cfg.output, "write the result to this file");
  app.add_option("--format", cfg.format, "json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--threads", cfg.threads, "worker threads");
  app.add_option("--cache-dir", cfg.cache_dir, "directory for exact polynomial files");

  auto* poly = app.add_subcommand("poly", "exact colored Jones polynomial as JSON");
  add_knot_options(poly, cfg);
  add_color_options(poly, single, list);

  auto* eval = app.add_subcommand("eval", "J_N at t = e^{xi/N} (cable) or e^{eta/N} (fig8)");
  add_knot_options(eval, cfg);
  add_color_options(eval, single, list);
  eval->add_option("--xi", xi);
  eval->add_option("--eta", eta);

  auto* growth = app.add_subcommand("growth", "rates (xi/N) log J_N against their limit");
  add_knot_options(growth, cfg);
  add_color_options(growth, single, list);
  growth->add_option("--xi", xi);
  growth->add_option("--eta", eta);

  auto* cs = app.add_subcommand("cs", "Chern-Simons value of the cable (u) or figure-eight (eta) exterior");
  add_knot_options(cs, cfg);
  cs->add_option("--u,--xi", u);
  cs->add_option("--eta", eta);
  cs->add_option("--tol", tol, "quadrature tolerance (default 1e-12)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "poly, asymptotics, rep, cs or all")
      ->check(CLI::IsMember({"poly", "asymptotics", "rep", "cs", "all"}));
  verify->add_flag("--deep", cfg.deep, "include the large-N growth tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return cablejones::kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return cablejones::kExitPass;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    for (char& ch : message) {
      if (ch == '"' || ch == '\\' || ch == '\n') {
        ch = '\'';
      }
    }
    std::cerr << "{\"error\":\"usage\",\"message\":\"" << message << "\"}\n";
    return cablejones::kExitUsage;
  }

  if (poly->parsed()) {
    cfg.command = Command::Poly;
  } else if (eval->parsed()) {
    cfg.command = Command::Eval;
  } else if (growth->parsed()) {
    cfg.command = Command::Growth;
  } else if (cs->parsed()) {
    cfg.command = Command::Cs;
  } else {
    cfg.command = Command::Verify;
  }
  cfg.Ns = single;
  cfg.Ns.insert(cfg.Ns.end(), list.begin(), list.end());
  if (digits > 0) {
    cfg.digits = digits;
  }
  if (!tol.empty()) {
    cfg.tol = tol;
  }
  if (!xi.empty()) {
    cfg.xi = xi;
  }
  if (!eta.empty()) {
    cfg.eta = eta;
  }
  if (!u.empty()) {
    cfg.u = u;
  }
  return cablejones::run(cfg, std::cout, std::cerr);
}
