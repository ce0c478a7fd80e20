#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "pqapprox/errors.hpp"
#include "pqapprox/pq_core.hpp"

using namespace pqapprox;

namespace {

const PqParams kStd(0.5, 0.4);

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST(PqParams, RejectsOutOfRange) {
  EXPECT_THROW(PqParams(0.4, 0.5), DomainError);
  EXPECT_THROW(PqParams(0.5, 0.5), DomainError);
  EXPECT_THROW(PqParams(1.1, 0.5), DomainError);
  EXPECT_THROW(PqParams(0.5, 0.0), DomainError);
  EXPECT_THROW(PqParams(0.5, -0.1), DomainError);
  EXPECT_THROW(PqParams(std::nan(""), 0.1), DomainError);
  EXPECT_THROW(PqParams(0.5, 0.5 - 1e-8), DomainError);
  EXPECT_NO_THROW(PqParams(1.0, 0.999999));
  EXPECT_NO_THROW(PqParams(0.5, 0.5 - 1e-6));
}

TEST(PqParams, Ratio) {
  EXPECT_DOUBLE_EQ(kStd.ratio(), 0.8);
  EXPECT_DOUBLE_EQ(kStd.log_p(), std::log(0.5));
}

TEST(SignedLogValue, RoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-300.0, 300.0);
  for (int i = 0; i < 2000; ++i) {
    const double v = (i % 2 ? -1.0 : 1.0) * std::pow(10.0, exponent(rng));
    const double back = SignedLogValue::from_real(v).to_real();
    // exp(log|v|) carries the rounding of log|v|, scaled by |log|v||.
    const double allowed = 4.0 * std::numeric_limits<double>::epsilon() *
                           (1.0 + std::fabs(std::log(std::fabs(v))));
    EXPECT_LE(rel(back, v), allowed) << v;
  }
}

TEST(SignedLogValue, ZeroAndSigns) {
  EXPECT_TRUE(SignedLogValue::from_real(0.0).is_zero());
  EXPECT_EQ(SignedLogValue::from_real(0.0).to_real(), 0.0);
  EXPECT_EQ(SignedLogValue::from_real(-2.0).sign(), -1);
  EXPECT_THROW(SignedLogValue::from_real(std::nan("")), DomainError);
  const auto a = SignedLogValue::from_real(-3.0);
  const auto b = SignedLogValue::from_real(2.0);
  EXPECT_NEAR((a * b).to_real(), -6.0, 1e-14);
  EXPECT_NEAR((a / b).to_real(), -1.5, 1e-14);
  EXPECT_THROW(a / SignedLogValue::from_real(0.0), DomainError);
  EXPECT_TRUE((a * SignedLogValue::from_real(0.0)).is_zero());
}

TEST(SignedLogValue, ExtremeProductsDoNotOverflow) {
  const auto big = SignedLogValue::from_log(1, 800.0);
  const auto small = SignedLogValue::from_log(1, -790.0);
  EXPECT_NEAR((big * small).to_real(), std::exp(10.0), 1e-9);
}

TEST(PqNumber, Examples) {
  EXPECT_EQ(pq_number(0, kStd), 0.0);
  EXPECT_EQ(pq_number(1, kStd), 1.0);
  EXPECT_NEAR(pq_number(3, kStd), 0.61, 1e-15);
  EXPECT_THROW(pq_number(-1, kStd), DomainError);
}

TEST(PqNumber, MatchesPowerDifference) {
  for (double p : {0.3, 0.5, 0.75, 1.0}) {
    for (double q : {0.05, 0.25, p - 0.05}) {
      if (!(q < p)) continue;
      const PqParams params(p, q);
      for (int n = 1; n <= 50; ++n) {
        const double closed = (std::pow(p, n) - std::pow(q, n)) / (p - q);
        EXPECT_LE(rel(pq_number(n, params), closed), 1e-12) << p << ' ' << q << ' ' << n;
        EXPECT_LE(rel(pq_number(n, params), static_cast<double>(oracle::number(n, p, q))), 1e-13);
      }
    }
  }
}

TEST(PqNumber, NormalizedAndScaledForms) {
  for (int n = 1; n <= 40; ++n) {
    const double direct = pq_number(n, kStd);
    EXPECT_LE(rel(normalized_pq_number(n, kStd) * std::pow(0.5, n - 1), direct), 1e-13);
    EXPECT_LE(rel(scaled_pq_number(n, kStd).to_real(kStd), direct), 1e-13);
  }
}

TEST(PqNumber, ClassicalLimit) {
  const PqParams near(1.0, 0.999999);
  for (int n = 1; n <= 20; ++n) EXPECT_LE(rel(pq_number(n, near), n), 1e-4);
}

TEST(OneMinusRatioPower, NoCancellation) {
  const PqParams tight(1.0, 1.0 - 1e-6);
  const double r = tight.ratio();
  EXPECT_NEAR(one_minus_ratio_power(1, tight) / (1.0 - r), 1.0, 1e-9);
  EXPECT_EQ(one_minus_ratio_power(0, kStd), 0.0);
  EXPECT_NEAR(one_minus_ratio_power(400, kStd), 1.0, 1e-15);
}

TEST(PqFactorial, Examples) {
  EXPECT_EQ(pq_factorial(0, kStd), 1.0);
  EXPECT_NEAR(pq_factorial(3, kStd), 0.549, 1e-15);
  EXPECT_NEAR(pq_factorial(2, PqParams(1.0, 0.999999)), 2.0, 1e-5);
  EXPECT_THROW(pq_factorial(-1, kStd), DomainError);
}

TEST(PqFactorial, LogAndScaledFormsMatchOracle) {
  for (int n = 0; n <= 30; ++n) {
    const double o = static_cast<double>(oracle::factorial(n, 0.5L, 0.4L));
    EXPECT_LE(rel(pq_factorial(n, kStd), o), 1e-12);
    EXPECT_LE(rel(log_pq_factorial(n, kStd).to_real(), o), 1e-12);
    EXPECT_LE(rel(scaled_pq_factorial(n, kStd).to_real(kStd), o), 1e-12);
  }
}

TEST(PqFactorial, LogFormSurvivesUnderflow) {
  // [n]! for p = 0.5 falls below the double range near n = 45.
  const SignedLogValue v = log_pq_factorial(200, kStd);
  EXPECT_EQ(v.sign(), 1);
  double expected = 0.0;
  for (int i = 1; i <= 200; ++i) expected += std::log(static_cast<double>(oracle::number(i, 0.5L, 0.4L)));
  EXPECT_NEAR(v.log_magnitude(), expected, 1e-9 * std::fabs(expected));
}

TEST(PqBinomial, Examples) {
  EXPECT_EQ(pq_binomial(5, 0, kStd), 1.0);
  EXPECT_NEAR(pq_binomial(3, 1, kStd), 0.61, 1e-14);
  EXPECT_NEAR(pq_binomial(4, 2, kStd), 0.2501, 1e-14);
  EXPECT_THROW(pq_binomial(3, 4, kStd), DomainError);
  EXPECT_THROW(pq_binomial(3, -1, kStd), DomainError);
}

TEST(PqBinomial, SymmetricAndMatchesOracle) {
  for (int n = 0; n <= 25; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(pq_binomial(n, k, kStd), pq_binomial(n, n - k, kStd));
      EXPECT_LE(rel(pq_binomial(n, k, kStd),
                    static_cast<double>(oracle::binomial(n, k, 0.5L, 0.4L))),
                1e-12);
    }
  }
}

TEST(PqBinomial, ClassicalLimit) {
  const PqParams near(1.0, 0.999999);
  EXPECT_LE(rel(pq_binomial(10, 4, near), 210.0), 1e-4);
  EXPECT_LE(rel(pq_binomial(8, 3, near), 56.0), 1e-4);
}

TEST(PqPowerBasis, Examples) {
  EXPECT_EQ(pq_power_basis(0.3, 0.7, 0, kStd).to_real(), 1.0);
  EXPECT_TRUE(pq_power_basis(1.0, 1.0, 2, kStd).is_zero());
  EXPECT_NEAR(pq_power_basis(1.0, 0.5, 2, kStd).to_real(), 0.15, 1e-15);
  EXPECT_THROW(pq_power_basis(1.0, 0.5, -1, kStd), DomainError);
}

TEST(PqPowerBasis, SignsAndOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    const double a = u(rng);
    const int n = i % 15;
    const double o = static_cast<double>(oracle::power_basis(x, a, n, 0.5L, 0.4L));
    const SignedLogValue v = pq_power_basis(x, a, n, kStd);
    EXPECT_EQ(v.sign(), (o > 0) - (o < 0));
    if (o != 0.0) EXPECT_LE(rel(v.to_real(), o), 1e-11);
  }
}

TEST(PqPowerBasis, SplittingIdentity) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double p : {0.5, 1.0}) {
    const PqParams params(p, 0.4 * p);
    for (int n = 1; n <= 10; ++n) {
      for (int m = 1; m <= 10; ++m) {
        const double a = u(rng), b = u(rng);
        const SignedLogValue whole = pq_power_basis(a, b, n + m, params);
        const SignedLogValue split =
            pq_power_basis(a, b, n, params) *
            pq_power_basis(a * std::pow(p, n), b * std::pow(0.4 * p, n), m, params);
        ASSERT_EQ(whole.sign(), split.sign());
        EXPECT_NEAR(whole.log_magnitude(), split.log_magnitude(),
                    1e-12 * std::max(1.0, std::fabs(whole.log_magnitude())));
      }
    }
  }
}

TEST(ScaledPqValue, PowerCancellation) {
  // p^{-5000} * p^{5000} with p = 0.5 would overflow and underflow separately.
  ScaledPqValue v = ScaledPqValue::p_power(-5000);
  v *= ScaledPqValue::p_power(5000);
  v.absorb(-3.0);
  EXPECT_NEAR(v.to_real(kStd), -3.0, 1e-14);
  EXPECT_THROW(v /= ScaledPqValue::zero(), DomainError);
}

TEST(PqLogTable, MatchesDirectForms) {
  const PqLogTable table(30, kStd);
  for (int n = 0; n <= 30; ++n) {
    EXPECT_LE(rel(table.factorial(n).to_real(kStd), pq_factorial(n, kStd)), 1e-12);
    for (int k = 0; k <= n; ++k) {
      EXPECT_LE(rel(table.binomial(n, k).to_real(kStd), pq_binomial(n, k, kStd)), 1e-12);
    }
  }
  EXPECT_THROW(table.factorial(31), DomainError);
}
