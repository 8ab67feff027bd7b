#include <gtest/gtest.h>

#include "eqres/decompose.hpp"
#include "eqres/error.hpp"
#include "eqres/oracle.hpp"
#include "support.hpp"

using namespace eqres;
using eqres::testing::buse5;
using eqres::testing::disc4;

namespace {

VerifyOptions quick(std::size_t trials, std::uint64_t seed = 0) {
  VerifyOptions o;
  o.trials = trials;
  o.seed = seed;
  return o;
}

}  // namespace

TEST(Points, Deterministic) {
  const std::vector<std::string> names{"a", "b", "c"};
  const auto p1 = draw_point(names, 7, 3, 10);
  const auto p2 = draw_point(names, 7, 3, 10);
  const auto p3 = draw_point(names, 7, 4, 10);
  EXPECT_EQ(p1.values, p2.values);
  EXPECT_NE(p1.values, p3.values);
  for (const auto& [k, v] : p1.values) {
    EXPECT_LE(abs(v.get_num()), 10);
    EXPECT_GE(v.get_den(), 1);
    EXPECT_LE(v.get_den(), 10);
  }
}

TEST(Verify, WorkedResultantWithClosedForm) {
  const auto f = buse5();
  const auto sys = check_equivariance(f.system, f.context);
  const auto report = verify_decomposition(sys, quick(6), f.closed_form);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.completed + report.skipped, 6u);
  EXPECT_NE(report.sign, 0);
  EXPECT_NE(report.reference_sign, 0);
}

TEST(Verify, SerialAndParallelAgree) {
  const auto f = buse5();
  const auto sys = check_equivariance(f.system, f.context);
  auto serial = quick(4, 9);
  serial.parallel = false;
  const auto a = verify_decomposition(sys, serial);
  const auto b = verify_decomposition(sys, quick(4, 9));
  ASSERT_EQ(a.trials.size(), b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    EXPECT_EQ(a.trials[i].lhs, b.trials[i].lhs);
    EXPECT_EQ(a.trials[i].rhs, b.trials[i].rhs);
    EXPECT_EQ(a.trials[i].point.values, b.trials[i].point.values);
  }
}

TEST(Verify, CorruptedExponentIsCaught) {
  const auto f = buse5();
  const auto sys = check_equivariance(f.system, f.context);
  auto result = decompose_resultant(sys);
  result.factors[2].exponent = 2;
  const auto report = verify_decomposition(sys, result, quick(5));
  ASSERT_TRUE(report.counterexample.has_value());
  EXPECT_NE(report.counterexample->lhs, report.counterexample->rhs);
  EXPECT_FALSE(report.passed());
}

TEST(Verify, CorruptedMuIsCaught) {
  const auto f = buse5();
  const auto sys = check_equivariance(f.system, f.context);
  auto result = decompose_resultant(sys);
  result.constants[0].mu = 7;
  EXPECT_FALSE(verify_decomposition(sys, result, quick(5)).passed());
}

TEST(Verify, WrongClosedFormIsCaught) {
  const auto f = buse5();
  const auto sys = check_equivariance(f.system, f.context);
  const auto wrong = *f.closed_form * parse("a", f.closed_form->context());
  EXPECT_FALSE(verify_decomposition(sys, quick(4), wrong).passed());
}

TEST(Verify, WorkedDiscriminant) {
  const auto f = disc4();
  const auto report = verify_discriminant(*f.polynomial, f.context, quick(4), f.closed_form);
  EXPECT_TRUE(report.passed());
  EXPECT_NE(report.reference_sign, 0);
}

TEST(Verify, CorruptedPrefactorIsCaughtByClosedForm) {
  const auto f = disc4();
  auto result = decompose_discriminant(*f.polynomial, f.context);
  result.prefactor_exponent += 1;
  EXPECT_FALSE(verify_discriminant(*f.polynomial, result, quick(3), f.closed_form).passed());
}

TEST(Verify, PurePowersHavePositiveSign) {
  // f^{i} = x_i^d: every side equals 1.
  auto ctx = RingContext::make({"x1", "x2", "x3", "x4"}, {}, 3);
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < 4; ++i) polys.push_back(Polynomial::symbol(ctx, i).pow(2));
  const auto sys = check_equivariance(polys, ctx);
  const auto report = verify_decomposition(sys, quick(2));
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.sign, 1);
  EXPECT_EQ(report.trials[0].lhs, 1);
}

TEST(Verify, RandomGrid) {
  std::uint64_t seed = 100;
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t p = 1; p < n; ++p)
      for (unsigned d = 1; d <= 3; ++d) {
        if (n == 5 && d == 3) continue;
        const auto sys = random_equivariant_system(n, p, d, ++seed);
        const auto report = verify_decomposition(sys, quick(2, seed));
        EXPECT_TRUE(report.passed()) << n << " " << p << " " << d;
      }
}

TEST(Verify, ParametricGeneratorDegenerateRateIsLow) {
  const auto sys = random_equivariant_system(4, 2, 2, 5, CoefficientMode::Parameters, 5);
  EXPECT_FALSE(sys.context()->param_names().empty());
  const auto report = verify_decomposition(sys, quick(10, 3));
  EXPECT_TRUE(report.passed());
  EXPECT_LT(report.skipped * 5, report.requested);
}

TEST(Generator, Deterministic) {
  const auto a = random_equivariant_system(5, 3, 2, 42);
  const auto b = random_equivariant_system(5, 3, 2, 42);
  const auto c = random_equivariant_system(5, 3, 2, 43);
  EXPECT_EQ(a.polys(), b.polys());
  EXPECT_NE(a.polys(), c.polys());
}
