#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pqapprox/errors.hpp"
#include "pqapprox/kernels.hpp"
#include "pqapprox/moduli.hpp"
#include "pqapprox/operators.hpp"

using namespace pqapprox;

namespace {

const FunctionSpec kQuad = FunctionSpec::polynomial({5.0, -4.0, 9.0});
const FunctionSpec kSinmix = FunctionSpec::builtin("sinmix");

oracle::Fn as_oracle(const FunctionSpec& f) {
  return [f](oracle::Real t) { return static_cast<oracle::Real>(f.evaluate_unchecked(static_cast<double>(t))); };
}

}  // namespace

TEST(UniformGrid, EndpointsExact) {
  const auto xs = uniform_grid(0.0, 0.3, 7);
  ASSERT_EQ(xs.size(), 7u);
  EXPECT_EQ(xs.front(), 0.0);
  EXPECT_EQ(xs.back(), 0.3);
  EXPECT_THROW(uniform_grid(0.0, 1.0, 1), DomainError);
  EXPECT_THROW(uniform_grid(1.0, 1.0, 5), DomainError);
}

TEST(EvaluateOnGrid, SerialAndParallelAgree) {
  const DurrmeyerOperator op(kSinmix, 30, PqParams(0.5, 0.4));
  const auto xs = uniform_grid(0.0, 1.0, 501);
  const auto fn = [&](double x) { return op(x); };
  EXPECT_EQ(evaluate_on_grid(fn, xs, Execution::serial), evaluate_on_grid(fn, xs, Execution::parallel));
}

TEST(EvaluateOnGrid, RethrowsLowestFailingIndex) {
  const auto xs = uniform_grid(0.0, 1.0, 101);
  try {
    evaluate_on_grid([](double x) -> double {
      if (x > 0.5) throw EvaluationError("too far", x);
      return x;
    }, xs);
    FAIL();
  } catch (const EvaluationError& e) {
    EXPECT_DOUBLE_EQ(e.at(), 0.51);
  }
}

TEST(EmpiricalModulus, Examples) {
  EXPECT_EQ(empirical_modulus(FunctionSpec::polynomial({3.0}), 0.3, 128), 0.0);
  EXPECT_NEAR(empirical_modulus(FunctionSpec::monomial(1), 0.25, 128), 0.25, 1.0 / 128);
  EXPECT_NEAR(empirical_modulus(kQuad, 0.1, 200), 1.31, 1e-12);
  EXPECT_NEAR(empirical_modulus(kQuad, 0.1, 128), 1.31, 9 * 2.0 / 128);
}

TEST(EmpiricalModulus, MatchesBruteForceLattice) {
  for (const auto& f : {kQuad, kSinmix}) {
    for (double delta : {0.01, 0.05, 0.2, 0.5, 1.0}) {
      EXPECT_NEAR(empirical_modulus(f, delta, 100),
                  static_cast<double>(oracle::modulus(as_oracle(f), delta, 100)), 1e-12);
      EXPECT_NEAR(empirical_second_modulus(f, delta, 100),
                  static_cast<double>(oracle::second_modulus(as_oracle(f), delta, 100)), 1e-12);
    }
  }
}

TEST(EmpiricalModulus, ClosedFormsForSquare) {
  // omega(x^2, h) = 2h - h^2 and omega_2(x^2, h) = 2h^2 at lattice steps.
  const auto sq = FunctionSpec::monomial(2);
  for (int j : {1, 5, 16, 40}) {
    const double h = j / 128.0;
    EXPECT_NEAR(empirical_modulus(sq, h, 128), 2 * h - h * h, 1e-14);
    EXPECT_NEAR(empirical_second_modulus(sq, h, 128), 2 * h * h, 1e-14);
  }
}

TEST(EmpiricalModulus, MonotoneInDelta) {
  double previous = 0.0, previous2 = 0.0, previous_phi = 0.0, previous_psi = 0.0;
  for (int i = 1; i <= 60; ++i) {
    const double delta = i * 0.0173;
    const double w = empirical_modulus(kSinmix, delta, 96);
    const double w2 = empirical_second_modulus(kSinmix, delta, 96);
    const double wphi = ditzian_totik_second_modulus(kSinmix, delta, 96);
    const double wpsi = ditzian_totik_first_modulus(kSinmix, delta, 96);
    EXPECT_GE(w, previous);
    EXPECT_GE(w2, previous2);
    EXPECT_GE(wphi, previous_phi);
    EXPECT_GE(wpsi, previous_psi);
    previous = w, previous2 = w2, previous_phi = wphi, previous_psi = wpsi;
  }
}

TEST(EmpiricalModulus, BelowLatticeResolution) {
  const double tiny = 1e-4;
  EXPECT_NEAR(empirical_modulus(FunctionSpec::monomial(1), tiny, 64), tiny, 1e-15);
  EXPECT_LE(empirical_modulus(kSinmix, tiny, 64), empirical_modulus(kSinmix, 1.0 / 64, 64));
}

TEST(SecondModulus, AffineAndConstant) {
  const auto affine = FunctionSpec::polynomial({0.3, -2.0});
  EXPECT_NEAR(empirical_second_modulus(affine, 0.2, 128), 0.0, 1e-14);
  EXPECT_NEAR(ditzian_totik_second_modulus(affine, 0.2, 128), 0.0, 1e-14);
  const auto constant = FunctionSpec::polynomial({2.0});
  EXPECT_EQ(empirical_second_modulus(constant, 0.2, 128, SecondDifference::standard), 0.0);
  EXPECT_EQ(empirical_second_modulus(constant, 0.2, 128, SecondDifference::literal), 0.0);
  // the literal form is the first-difference sup
  EXPECT_EQ(empirical_second_modulus(affine, 0.2, 128, SecondDifference::literal),
            empirical_modulus(affine, 0.2, 128));
}

TEST(Moduli, SerialAndParallelAgree) {
  for (double delta : {0.003, 0.1, 0.7}) {
    EXPECT_EQ(empirical_modulus(kSinmix, delta, 256, Execution::serial),
              empirical_modulus(kSinmix, delta, 256, Execution::parallel));
    EXPECT_EQ(empirical_second_modulus(kSinmix, delta, 256, SecondDifference::standard, Execution::serial),
              empirical_second_modulus(kSinmix, delta, 256, SecondDifference::standard, Execution::parallel));
    EXPECT_EQ(ditzian_totik_second_modulus(kSinmix, delta, 256, Execution::serial),
              ditzian_totik_second_modulus(kSinmix, delta, 256, Execution::parallel));
    EXPECT_EQ(ditzian_totik_first_modulus(kSinmix, delta, 256, Execution::serial),
              ditzian_totik_first_modulus(kSinmix, delta, 256, Execution::parallel));
  }
}

TEST(Moduli, WeightedStepsStayInside) {
  // For x^2 with step h*x: |((1+h)x)^2 - x^2| is largest at x = 1/(1+h).
  const auto sq = FunctionSpec::monomial(2);
  const double h = 0.25;
  const double w = ditzian_totik_first_modulus(sq, h, 400);
  EXPECT_LE(w, (1 - 1 / ((1 + h) * (1 + h))) + 1e-12);
  EXPECT_GT(w, 0.3);
}

TEST(Moduli, RejectsBadArguments) {
  EXPECT_THROW(empirical_modulus(kQuad, 0.1, 10), DomainError);
  EXPECT_THROW(empirical_modulus(kQuad, 0.0, 128), DomainError);
  EXPECT_THROW(empirical_modulus(kQuad, std::nan(""), 128), DomainError);
  EXPECT_THROW(empirical_modulus(FunctionSpec::polynomial({1.0}, {0.0, 0.5}), 0.1, 128),
               EvaluationError);
}
