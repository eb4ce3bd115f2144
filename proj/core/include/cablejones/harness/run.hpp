#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cablejones/numerics/precision.hpp"

namespace cablejones {

enum class Command { Poly, Eval, Growth, Cs, Verify };
enum class Knot { Fig8, Cable };
enum class Format { Json, Csv };

struct RunConfig {
  Command command = Command::Verify;
  Knot knot = Knot::Cable;
  std::vector<int> Ns;
  int b = 0;
  /// Decimal strings, parsed at the working precision.
  std::optional<std::string> xi;
  std::optional<std::string> eta;
  std::optional<std::string> u;
  std::optional<unsigned> digits;
  std::optional<std::string> tol;
  /// Empty writes to the output stream.
  std::string output;
  Format format = Format::Json;
  std::string suite = "all";
  bool deep = false;
  /// Empty disables the polynomial cache.
  std::string cache_dir;
  unsigned threads = 1;
};

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitInternal = 3 };

/// Flags, then the environment, then the defaults.
PrecisionContext resolve_precision(const RunConfig& config);

/// Executes one command. Errors go to `err` as one JSON object per line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cablejones
