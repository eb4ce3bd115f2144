#include "cablejones/laurent.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include "cablejones/errors.hpp"

namespace cablejones {

namespace {

using Exponent = LaurentPoly::Exponent;

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("Laurent exponent overflow");
  }
  return out;
}

Exponent checked_neg(Exponent a) {
  if (a == std::numeric_limits<Exponent>::min()) {
    throw std::overflow_error("Laurent exponent overflow");
  }
  return -a;
}

std::string monomial_text(Exponent e) {
  if (e == 0) {
    return "";
  }
  std::string power;
  if (e % 2 == 0) {
    const Exponent whole = e / 2;
    if (whole == 1) {
      return "t";
    }
    power = std::to_string(whole);
  } else {
    power = "(" + std::to_string(e) + "/2)";
  }
  return "t^" + power;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, Exponent half_exp) {
  LaurentPoly p;
  p.add_term(half_exp, coeff);
  return p;
}

LaurentPoly LaurentPoly::symmetric_difference(Exponent k) {
  LaurentPoly p = monomial(1, k);
  p.add_term(checked_neg(k), -1);
  return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    p.add_term(e, c);
  }
  return p;
}

void LaurentPoly::add_term(Exponent e, const mpz_class& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

mpz_class LaurentPoly::coefficient(Exponent half_exp) const {
  const auto it = terms_.find(half_exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) {
    throw DomainError("min_exponent of the zero polynomial");
  }
  return terms_.begin()->first;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) {
    throw DomainError("max_exponent of the zero polynomial");
  }
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    add_term(e, c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    add_term(e, -c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) {
    c *= scalar;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  const Exponent lo = checked_add(a.min_exponent(), b.min_exponent());
  const Exponent hi = checked_add(a.max_exponent(), b.max_exponent());
  const auto span = static_cast<std::size_t>(hi - lo) + 1;
  LaurentPoly out;
  if (span <= 4 * a.size() * b.size()) {
    // Short-spanned products: accumulate into a dense window.
    std::vector<mpz_class> window(span);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        mpz_addmul(window[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(),
                   cb.get_mpz_t());
      }
    }
    auto hint = out.terms_.end();
    for (std::size_t i = 0; i < span; ++i) {
      if (window[i] != 0) {
        hint = out.terms_.emplace_hint(hint, lo + static_cast<Exponent>(i), std::move(window[i]));
      }
    }
    return out;
  }
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) {
    c = -c;
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
  LaurentPoly out;
  auto hint = out.terms_.end();
  for (const auto& [e, c] : terms_) {
    hint = out.terms_.emplace_hint(hint, checked_add(e, shift), c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const mpz_class mag = abs(c);
    if (first) {
      os << (c < 0 ? "-" : "");
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_text(e);
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) {
        os << mag.get_str() << "*";
      }
      os << mono;
    }
  }
  return os.str();
}

NotDivisible::NotDivisible(LaurentPoly remainder)
    : std::runtime_error("exact division left remainder " + remainder.to_string()),
      remainder_(std::move(remainder)) {}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) {
    throw DomainError("exact_div by the zero polynomial");
  }
  const auto& [lead_exp, lead_coeff] = *b.terms().rbegin();
  const Exponent divisor_span = b.max_exponent() - b.min_exponent();

  LaurentPoly::Terms rem = a.terms();
  LaurentPoly::Terms quotient;
  mpz_class q;
  while (!rem.empty()) {
    const auto top = std::prev(rem.end());
    if (top->first - rem.begin()->first < divisor_span ||
        mpz_divisible_p(top->second.get_mpz_t(), lead_coeff.get_mpz_t()) == 0) {
      throw NotDivisible(LaurentPoly::from_terms(std::move(rem)));
    }
    mpz_divexact(q.get_mpz_t(), top->second.get_mpz_t(), lead_coeff.get_mpz_t());
    const Exponent shift = top->first - lead_exp;
    quotient.emplace(shift, q);
    for (const auto& [e, c] : b.terms()) {
      auto [it, inserted] = rem.try_emplace(checked_add(e, shift), 0);
      mpz_submul(it->second.get_mpz_t(), q.get_mpz_t(), c.get_mpz_t());
      if (it->second == 0) {
        rem.erase(it);
      }
    }
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly mirror(const LaurentPoly& p) {
  LaurentPoly::Terms flipped;
  for (const auto& [e, c] : p.terms()) {
    flipped.emplace(checked_neg(e), c);
  }
  return LaurentPoly::from_terms(std::move(flipped));
}

Real eval(const LaurentPoly& p, const Real& t_value, const PrecisionContext& ctx) {
  if (t_value.sign() <= 0) {
    throw DomainError("eval: t must be positive, got " + t_value.to_string(10));
  }
  const auto working = static_cast<Real::Bits>(ctx.working_bits());
  if (p.is_zero()) {
    return Real(working);
  }
  std::size_t coeff_bits = 0;
  for (const auto& [e, c] : p.terms()) {
    coeff_bits = std::max(coeff_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  long extra = static_cast<long>(coeff_bits + std::bit_width(p.size())) + 32;
  for (int attempt = 0; attempt < 12; ++attempt) {
    const Real::Bits bits = working + extra;
    const Real s = sqrt(t_value.rounded(std::max(bits, t_value.bits())).rounded(bits));
    Real sum(bits);
    Real magnitude(bits);
    Real term(bits);
    for (const auto& [e, c] : p.terms()) {
      term = pow(s, static_cast<long>(e));
      mpfr_mul_z(term.get(), term.get(), c.get_mpz_t(), MPFR_RNDN);
      sum += term;
      magnitude += abs(term);
    }
    if (!sum.is_zero()) {
      const long loss = magnitude.exponent2() - sum.exponent2();
      if (extra >= loss + 24) {
        return sum.rounded(working);
      }
      extra = loss + 64;
    } else {
      extra *= 2;
    }
  }
  return Real(working);
}

std::string to_json(const LaurentPoly& p) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [e, c] : p.terms()) {
    obj[std::to_string(e)] = c.get_str();
  }
  return obj.dump();
}

LaurentPoly from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("polynomial JSON: expected an object of exponent/coefficient pairs");
  }
  LaurentPoly::Terms terms;
  for (const auto& [key, value] : doc.items()) {
    Exponent e = 0;
    const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
    if (ec != std::errc{} || end != key.data() + key.size()) {
      throw std::invalid_argument("polynomial JSON: key '" + key + "' is not an integer exponent");
    }
    if (!value.is_string()) {
      throw std::invalid_argument("polynomial JSON: key '" + key +
                                  "' must map to a decimal string");
    }
    mpz_class c;
    const auto& digits = value.get_ref<const std::string&>();
    if (digits.empty() || c.set_str(digits, 10) != 0) {
      throw std::invalid_argument("polynomial JSON: key '" + key + "' has non-integer coefficient '" +
                                  digits + "'");
    }
    if (c == 0) {
      throw std::invalid_argument("polynomial JSON: key '" + key + "' has a zero coefficient");
    }
    terms.emplace(e, std::move(c));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace cablejones
