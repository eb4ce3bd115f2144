#pragma once

#include <string_view>

namespace cablejones {

/// Working-precision policy shared by every floating computation.
///
/// `working_bits` is the binary precision of scalars; `target_digits` is the
/// number of decimal digits callers may trust. The constructor enforces
/// working_bits >= ceil(target_digits * log2(10)) + kGuardBits.
class PrecisionContext {
 public:
  static constexpr unsigned kGuardBits = 32;
  static constexpr unsigned kDefaultDigits = 30;
  static constexpr unsigned kDefaultBits = 160;
  static constexpr std::string_view kDigitsEnv = "CABLEJONES_DIGITS";

  PrecisionContext() : PrecisionContext(kDefaultBits, kDefaultDigits) {}
  PrecisionContext(unsigned working_bits, unsigned target_digits);

  /// Bits chosen for `digits`: ceil(digits*log2 10) + 60, which is 160 at
  /// the default 30 digits.
  static PrecisionContext from_digits(unsigned digits);

  /// Reads CABLEJONES_DIGITS; falls back to the defaults when unset.
  static PrecisionContext from_environment();

  /// Same trusted digits, twice the working bits. Used for accuracy audits.
  PrecisionContext doubled() const { return {2 * working_bits_, target_digits_}; }

  PrecisionContext with_extra_bits(unsigned extra) const {
    return {working_bits_ + extra, target_digits_};
  }

  unsigned working_bits() const { return working_bits_; }
  unsigned target_digits() const { return target_digits_; }

  /// Smallest working_bits the invariant allows for `digits`.
  static unsigned minimum_bits(unsigned digits);

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  unsigned working_bits_;
  unsigned target_digits_;
};

}  // namespace cablejones
