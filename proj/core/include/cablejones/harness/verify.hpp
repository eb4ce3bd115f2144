#pragma once

#include <string>
#include <vector>

#include "cablejones/numerics/precision.hpp"

namespace cablejones {

struct VerifyCheck {
  std::string id;
  /// The identity or inequality under test, written out.
  std::string reference;
  /// Decimal residual, or "true"/"false" for boolean checks.
  std::string value;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;
  bool pass() const;
  std::string to_json() const;
};

struct VerifyOptions {
  /// Adds the large-N growth tables.
  bool deep = false;
  unsigned threads = 1;
};

/// One of "poly", "asymptotics", "rep", "cs", or "all".
/// Throws std::invalid_argument for any other name.
VerifyReport run_suite(const std::string& suite, const PrecisionContext& ctx,
                       const VerifyOptions& options = {});

}  // namespace cablejones
