#include <gtest/gtest.h>

#include <cmath>

#include "cablejones/errors.hpp"
#include "cablejones/jones.hpp"
#include "oracles.hpp"

using namespace cablejones;
using oracle::num;

namespace {

mpz_class coefficient_sum(const LaurentPoly& p) {
  mpz_class s = 0;
  for (const auto& [e, c] : p.terms()) {
    s += c;
  }
  return s;
}

}  // namespace

TEST(Fig8Poly, SmallColors) {
  EXPECT_EQ(habiro_fig8_poly(1), LaurentPoly::constant(1));
  EXPECT_EQ(habiro_fig8_poly(2).to_string(), "t^2 - t + 1 - t^-1 + t^-2");
  EXPECT_EQ(habiro_fig8_poly(3).to_string(),
            "t^6 - t^5 - t^4 + 2*t^3 - t^2 - t + 3 - t^-1 - t^-2 + 2*t^-3 - t^-4 - t^-5 + t^-6");
}

TEST(Fig8Poly, SymmetricAndNormalized) {
  for (int m = 1; m <= 12; ++m) {
    const LaurentPoly p = habiro_fig8_poly(m);
    EXPECT_EQ(mirror(p), p) << m;
    EXPECT_EQ(coefficient_sum(p), 1) << m;
    for (const auto& [e, c] : p.terms()) {
      EXPECT_EQ(e % 2, 0) << m;
    }
  }
}

TEST(Fig8Poly, MatchesExactHabiroSum) {
  const mpq_class s(5, 3);
  for (int m = 1; m <= 9; ++m) {
    EXPECT_EQ(oracle::eval_exact(habiro_fig8_poly(m), s), oracle::fig8_exact(m, s)) << m;
  }
}

TEST(CablePoly, MatchesExactRationalOracle) {
  for (const mpq_class& s : {mpq_class(2), mpq_class(3, 2), mpq_class(-7, 5)}) {
    for (int b = 0; b <= 3; ++b) {
      for (int N = 1; N <= 7; ++N) {
        EXPECT_EQ(oracle::eval_exact(cable_poly({N, b}), s), oracle::cable_exact(N, b, s))
            << "N=" << N << " b=" << b << " s=" << s.get_str();
      }
    }
  }
}

TEST(CablePoly, TrivialColorAndValueAtOne) {
  for (int b = 0; b <= 3; ++b) {
    EXPECT_EQ(cable_poly({1, b}), LaurentPoly::constant(1));
    for (int N = 2; N <= 10; ++N) {
      EXPECT_EQ(coefficient_sum(cable_poly({N, b})), 1) << N << " " << b;
    }
  }
}

TEST(CablePoly, DomainAndCap) {
  EXPECT_THROW(cable_poly({0, 0}), DomainError);
  EXPECT_THROW(cable_poly({3, -1}), DomainError);
  EXPECT_THROW(cable_poly({16, 0}), DomainError);
  EXPECT_NO_THROW(cable_poly({16, 0}, {.max_N = 16}));
}

TEST(Terms, RecurrenceMatchesDirectProduct) {
  const Real xi = num("1.3");
  for (const CableSpec spec : {CableSpec{7, 0}, CableSpec{12, 2}}) {
    for (int d = 0; d < spec.N; ++d) {
      const auto row = row_terms(spec, d, xi);
      ASSERT_EQ(row.size(), static_cast<std::size_t>(2 * d + 1));
      for (int l = 0; l <= 2 * d; ++l) {
        ASSERT_TRUE(relative_gap(row[l], eval_f({d, l}, spec, xi)) < num("1e-40"));
        ASSERT_GT(row[l].sign(), 0);
      }
    }
  }
  EXPECT_THROW(eval_f({3, 7}, {5, 0}, xi), DomainError);
  EXPECT_THROW(eval_f({5, 0}, {5, 0}, xi), DomainError);
  EXPECT_THROW(eval_f({1, 0}, {5, 0}, num("0")), DomainError);
}

TEST(AlternatingSum, MatchesNaiveSummation) {
  const Real xi = num("0.8");
  const CableSpec spec{15, 1};
  Real naive(oracle::kBits * 2);
  for (int d = 0; d < spec.N; ++d) {
    for (int l = 0; l <= 2 * d; ++l) {
      const Real f = eval_f({d, l}, spec, xi.rounded(oracle::kBits * 2));
      naive += (d % 2 == 0 ? f : -f);
    }
  }
  if (spec.N % 2 == 0) {
    naive = -naive;
  }
  const AlternatingSum sum = eval_S_sum_detailed(spec, xi);
  EXPECT_TRUE(relative_gap(sum.value, naive) < num("1e-35"));
  EXPECT_EQ(sum.argmax.d, spec.N - 1);
  // Negative when the total outweighs its largest term, i.e. nothing was lost.
  EXPECT_TRUE(std::isfinite(sum.cancellation_bits));
}

TEST(AlternatingSum, ThreadCountDoesNotChangeBits) {
  const Real xi = num("1.0");
  const CableSpec spec{300, 1};
  const Real one = eval_S_sum(spec, xi, {1});
  EXPECT_TRUE(eval_S_sum(spec, xi, {2}) == one);
  EXPECT_TRUE(eval_S_sum(spec, xi, {5}) == one);
}

TEST(CableJones, AgreesWithExactPolynomial) {
  const PrecisionContext ctx;
  for (const char* xi_text : {"0.3", "1.0", "2.0"}) {
    const Real xi = num(xi_text);
    for (int b = 0; b <= 2; ++b) {
      for (int N = 1; N <= 9; ++N) {
        const Real exact = eval(cable_poly({N, b}), exp(xi / static_cast<long>(N)), ctx);
        const JonesValue j = eval_cable_jones({N, b}, xi);
        ASSERT_TRUE(relative_gap(j.value(), exact) < num("1e-25")) << N << " " << b << " " << xi_text;
      }
    }
  }
}

TEST(CableJones, LogFormHandlesLargeN) {
  const JonesValue j = eval_cable_jones({3000, 0}, num("1.0"));
  EXPECT_EQ(j.sign, 1);
  EXPECT_GT(j.log_abs.to_double(), 5000.0);
  EXPECT_THROW(eval_cable_jones({5, 0}, num("-1")), DomainError);
}

TEST(Fig8Jones, AgreesWithExactPolynomial) {
  const PrecisionContext ctx;
  for (const char* eta_text : {"0.3", "1.0", "2.0"}) {
    const Real eta = num(eta_text);
    for (int m = 1; m <= 10; ++m) {
      const Real exact = eval(habiro_fig8_poly(m), exp(eta / static_cast<long>(m)), ctx);
      ASSERT_TRUE(relative_gap(eval_fig8_jones(m, eta).value(), exact) < num("1e-25")) << m;
    }
  }
}

TEST(Alexander, Polynomials) {
  EXPECT_EQ(alexander_fig8().to_string(), "-t + 3 - t^-1");
  EXPECT_EQ(alexander_cable(0).to_string(), "-t^2 + 3 - t^-2");
  for (int b = 0; b <= 5; ++b) {
    const LaurentPoly a = alexander_cable(b);
    EXPECT_EQ(coefficient_sum(a), 1) << b;
    EXPECT_EQ(mirror(a), a) << b;
  }
  // (t^{3/2} + t^{-3/2}) / (t^{1/2} + t^{-1/2}) = t - 1 + t^{-1}.
  EXPECT_EQ(alexander_cable(1), alexander_cable(0) * (LaurentPoly::monomial(1, 2) - LaurentPoly::constant(1) +
                                                     LaurentPoly::monomial(1, -2)));
}

TEST(Fig8Jones, SmallParameterLimit) {
  const PrecisionContext ctx;
  const Real eta = num("0.1");
  const Real target = 1L / eval(alexander_fig8(), exp(eta), ctx);
  Real previous = abs(eval_fig8_jones(50, eta).value() - target);
  for (int N : {200, 800}) {
    const Real gap = abs(eval_fig8_jones(N, eta).value() - target);
    EXPECT_TRUE(gap < previous * Real::ratio(1, 2, oracle::kBits));
    previous = gap;
  }
}
