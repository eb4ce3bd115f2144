#include "cablejones/numerics/precision.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cablejones {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

unsigned digits_to_bits(unsigned digits) {
  return static_cast<unsigned>(std::ceil(digits * kLog2Of10));
}

}  // namespace

PrecisionContext::PrecisionContext(unsigned working_bits, unsigned target_digits)
    : working_bits_(working_bits), target_digits_(target_digits) {
  if (target_digits == 0) {
    throw std::invalid_argument("target_digits must be positive");
  }
  if (working_bits < minimum_bits(target_digits)) {
    throw std::invalid_argument("working_bits " + std::to_string(working_bits) + " below the " +
                                std::to_string(minimum_bits(target_digits)) +
                                " required for " + std::to_string(target_digits) + " digits");
  }
}

unsigned PrecisionContext::minimum_bits(unsigned digits) {
  return digits_to_bits(digits) + kGuardBits;
}

PrecisionContext PrecisionContext::from_digits(unsigned digits) {
  if (digits == 0) {
    throw std::invalid_argument("target_digits must be positive");
  }
  return {digits_to_bits(digits) + 60, digits};
}

PrecisionContext PrecisionContext::from_environment() {
  const char* raw = std::getenv(std::string(kDigitsEnv).c_str());
  if (raw == nullptr || *raw == '\0') {
    return {};
  }
  const std::string text(raw);
  unsigned digits = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), digits);
  if (ec != std::errc{} || end != text.data() + text.size() || digits == 0) {
    throw std::invalid_argument(std::string(kDigitsEnv) + " must be a positive integer, got '" +
                                text + "'");
  }
  return from_digits(digits);
}

}  // namespace cablejones
