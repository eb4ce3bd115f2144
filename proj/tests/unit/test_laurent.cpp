#include <gtest/gtest.h>

#include <limits>
#include <vector>

#include "cablejones/errors.hpp"
#include "cablejones/laurent.hpp"
#include "oracles.hpp"

using namespace cablejones;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms, int span) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> exponent(-span, span);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  LaurentPoly p;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    p += LaurentPoly::monomial(coeff(rng), exponent(rng));
  }
  return p;
}

// Schoolbook product over a dense coefficient array.
LaurentPoly dense_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  const auto lo = a.min_exponent() + b.min_exponent();
  const auto hi = a.max_exponent() + b.max_exponent();
  std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
  for (auto ea = a.min_exponent(); ea <= a.max_exponent(); ++ea) {
    for (auto eb = b.min_exponent(); eb <= b.max_exponent(); ++eb) {
      dense[static_cast<std::size_t>(ea + eb - lo)] += a.coefficient(ea) * b.coefficient(eb);
    }
  }
  LaurentPoly::Terms terms;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) {
      terms.emplace(lo + static_cast<LaurentPoly::Exponent>(i), dense[i]);
    }
  }
  return LaurentPoly::from_terms(terms);
}

}  // namespace

TEST(Laurent, Basics) {
  const LaurentPoly zero;
  EXPECT_TRUE(zero.is_zero());
  const LaurentPoly d = LaurentPoly::symmetric_difference(3);
  EXPECT_EQ(d.coefficient(3), 1);
  EXPECT_EQ(d.coefficient(-3), -1);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE((d - d).is_zero());
  EXPECT_EQ(d.shifted(3), LaurentPoly::monomial(1, 6) - LaurentPoly::constant(1));
  EXPECT_EQ(mirror(d), -d);
}

TEST(Laurent, ToString) {
  const LaurentPoly p = LaurentPoly::monomial(1, 4) - LaurentPoly::monomial(1, 2) + LaurentPoly::constant(1) -
                        LaurentPoly::monomial(1, -2) + LaurentPoly::monomial(1, -4);
  EXPECT_EQ(p.to_string(), "t^2 - t + 1 - t^-1 + t^-2");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ((LaurentPoly::monomial(-3, 1)).to_string(), "-3*t^(1/2)");
}

TEST(Laurent, ProductMatchesDenseConvolution) {
  auto rng = oracle::rng();
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = random_poly(rng, 12, 40);
    const LaurentPoly b = random_poly(rng, 12, 40);
    ASSERT_EQ(a * b, dense_product(a, b));
    ASSERT_EQ(a * b, b * a);
  }
}

TEST(Laurent, RingAxiomsOnSamples) {
  auto rng = oracle::rng();
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random_poly(rng, 8, 20);
    const LaurentPoly b = random_poly(rng, 8, 20);
    const LaurentPoly c = random_poly(rng, 8, 20);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(mirror(a * b), mirror(a) * mirror(b));
  }
}

TEST(Laurent, ExactDivisionRoundTrip) {
  auto rng = oracle::rng();
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng, 10, 30);
    LaurentPoly b = random_poly(rng, 6, 10);
    if (b.is_zero()) {
      b = LaurentPoly::symmetric_difference(1);
    }
    ASSERT_EQ(exact_div(a * b, b), a);
  }
}

TEST(Laurent, NotDivisibleCarriesRemainder) {
  const LaurentPoly a = LaurentPoly::monomial(1, 2) + LaurentPoly::constant(1);
  const LaurentPoly b = LaurentPoly::symmetric_difference(1);
  try {
    (void)exact_div(a, b);
    FAIL() << "expected NotDivisible";
  } catch (const NotDivisible& e) {
    EXPECT_FALSE(e.remainder().is_zero());
  }
  EXPECT_THROW(exact_div(a, LaurentPoly()), DomainError);
  EXPECT_THROW(exact_div(LaurentPoly::monomial(1, 2), LaurentPoly::monomial(2, 0)), NotDivisible);
}

TEST(Laurent, ExponentOverflowThrows) {
  const auto big = std::numeric_limits<LaurentPoly::Exponent>::max() - 1;
  const LaurentPoly p = LaurentPoly::monomial(1, big);
  EXPECT_THROW(p * p, std::overflow_error);
  EXPECT_THROW(p.shifted(10), std::overflow_error);
}

TEST(Laurent, EvalMatchesExactRational) {
  auto rng = oracle::rng();
  const PrecisionContext ctx;
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = random_poly(rng, 20, 60);
    // s = 3/2, so t = 9/4.
    const mpq_class s(3, 2);
    const Real exact = oracle::from_mpq(oracle::eval_exact(p, s), 200);
    const Real got = eval(p, Real::ratio(9, 4, 160), ctx);
    ASSERT_TRUE(relative_gap(got, exact) < oracle::num("1e-30") || (exact.is_zero() && got.is_zero()));
  }
}

TEST(Laurent, EvalSurvivesHeavyCancellation) {
  // (s - 1/s)^40 near s = 1 is tiny while its coefficients reach C(40, 20).
  LaurentPoly p = LaurentPoly::constant(1);
  for (int i = 0; i < 40; ++i) {
    p *= LaurentPoly::symmetric_difference(1);
  }
  const Real t = oracle::num("1.0001");
  const Real s = sqrt(t.rounded(400));
  const Real expected = pow(s - 1L / s, 40);
  const Real got = eval(p, t, PrecisionContext());
  EXPECT_TRUE(relative_gap(got, expected) < oracle::num("1e-29")) << got.to_string(20);
}

TEST(Laurent, JsonRoundTrip) {
  const LaurentPoly p = LaurentPoly::monomial(mpz_class("123456789012345678901234567890"), -7) +
                        LaurentPoly::monomial(-5, 3) + LaurentPoly::constant(2);
  const std::string text = to_json(p);
  EXPECT_EQ(text, R"({"-7":"123456789012345678901234567890","0":"2","3":"-5"})");
  EXPECT_EQ(from_json(text), p);
  EXPECT_EQ(from_json(to_json(LaurentPoly())), LaurentPoly());
}

TEST(Laurent, JsonErrorsNameTheKey) {
  auto message = [](const char* text) {
    try {
      (void)from_json(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"x1":"2"})").find("x1"), std::string::npos);
  EXPECT_NE(message(R"({"4":"2q"})").find("4"), std::string::npos);
  EXPECT_NE(message(R"({"5":7})").find("5"), std::string::npos);
  EXPECT_NE(message(R"({"6":"0"})").find("6"), std::string::npos);
  EXPECT_FALSE(message("[1,2]").empty());
  EXPECT_FALSE(message("{not json").empty());
}
