#include <random>

#include <gtest/gtest.h>

#include "eqres/decompose.hpp"
#include "eqres/equivariant.hpp"
#include "eqres/error.hpp"
#include "eqres/oracle.hpp"
#include "support.hpp"

using namespace eqres;
using eqres::testing::buse5;
using eqres::testing::disc4;

namespace {

EquivariantSystem buse_system() {
  auto f = buse5();
  return check_equivariance(f.system, f.context);
}

PartitionPair pair(std::vector<int> a, std::vector<int> b) {
  return PartitionPair{Partition(std::move(a)), Partition(std::move(b))};
}

}  // namespace

TEST(Permutation, BlockPreservation) {
  EXPECT_THROW(Permutation::transposition(5, 3, 2, 3), DomainError);
  EXPECT_THROW(Permutation({3, 1, 2, 0, 4, 5}, 3), DomainError);
  EXPECT_THROW(Permutation({0, 0, 2}, 1), DomainError);
  const auto t = Permutation::transposition(5, 3, 0, 2);
  EXPECT_EQ(t(0), 2u);
  EXPECT_EQ(t(2), 0u);
  EXPECT_EQ(t(4), 4u);
}

TEST(Permutation, ActsOnVariables) {
  auto ctx = RingContext::make({"x1", "x2", "x3"}, {"a"}, 2);
  const auto f = parse("a*x1^2*x3 + x2", ctx);
  const auto t = Permutation::transposition(3, 2, 0, 1);
  EXPECT_EQ(apply_permutation(t, f), parse("a*x2^2*x3 + x1", ctx));
  EXPECT_EQ(apply_permutation(t, apply_permutation(t, f)), f);
}

TEST(Equivariance, WorkedSystemIsAccepted) {
  const auto sys = buse_system();
  EXPECT_EQ(sys.n(), 5u);
  EXPECT_EQ(sys.p(), 3u);
  EXPECT_EQ(sys.q(), 2u);
  EXPECT_EQ(sys.degree(), 2u);
}

TEST(Equivariance, ViolationNamesTransposition) {
  auto f = buse5();
  auto polys = f.system;
  polys[4] = parse("p*x5^2 + 2*q*x4^2", f.context);
  try {
    check_equivariance(polys, f.context);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(4 5)"), std::string::npos) << e.what();
  }
}

TEST(Equivariance, RejectsShapeErrors) {
  auto f = buse5();
  auto polys = f.system;
  polys.pop_back();
  EXPECT_THROW(check_equivariance(polys, f.context), ValidationError);
  polys = f.system;
  polys[0] = polys[0] + Polynomial::symbol(f.context, "x1");
  EXPECT_THROW(check_equivariance(polys, f.context), ValidationError);
}

TEST(Equivariance, PartialsOfInvariantForm) {
  const auto f = disc4();
  const auto sys = partials_system(*f.polynomial, f.context);
  EXPECT_EQ(sys.degree(), 3u);
  EXPECT_EQ(sys.p(), 2u);
}

TEST(DividedDifference, WorkedExamples) {
  const auto sys = buse_system();
  const auto& ctx = sys.context();
  EXPECT_EQ(divided_difference(sys, {0, 1, 2}), parse("a", ctx));
  EXPECT_EQ(divided_difference(sys, {0, 2}), parse("(a+b)*(x1+x3) + b*x2", ctx));
  EXPECT_EQ(divided_difference(sys, {3, 4}), parse("(p-q)*(x4+x5)", ctx));
  EXPECT_EQ(divided_difference(sys, {0}), sys[0]);
}

TEST(DividedDifference, Errors) {
  const auto sys = buse_system();
  EXPECT_THROW(divided_difference(sys, {}), DomainError);
  EXPECT_THROW(divided_difference(sys, {0, 3}), DomainError);
  EXPECT_THROW(divided_difference(sys, {1, 1}), DomainError);
  EXPECT_THROW(divided_difference(sys, {9}), DomainError);
}

TEST(DividedDifference, PowerFamily) {
  // f^{i} = x_i^d: divided differences are complete homogeneous polynomials.
  auto ctx = RingContext::make({"x1", "x2", "x3", "x4"}, {}, 3);
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < 4; ++i) polys.push_back(Polynomial::symbol(ctx, i).pow(3));
  const auto sys = check_equivariance(polys, ctx);
  EXPECT_EQ(divided_difference(sys, {0, 1}), parse("x1^2 + x1*x2 + x2^2", ctx));
  EXPECT_EQ(divided_difference(sys, {0, 1, 2}), parse("x1 + x2 + x3", ctx));
  EXPECT_EQ(divided_difference(sys, {0, 1, 2}), divided_difference(sys, {2, 0, 1}));
}

TEST(DividedDifference, RandomSystemsOrderAndDegree) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t p = 3 + seed % 2;
    const unsigned d = 2 + seed % 3;
    const auto sys = random_equivariant_system(p + 2, p, d, seed);
    DividedDifferenceTable table(sys);
    const std::size_t k = std::min<std::size_t>(p, d + 1);
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    const auto base = divided_difference(sys, idx);
    std::reverse(idx.begin(), idx.end());
    EXPECT_EQ(divided_difference(sys, idx), base) << "seed " << seed;
    EXPECT_EQ(table.get(idx), base);
    const auto info = degree_and_homogeneity(base);
    if (!base.is_zero()) {
      EXPECT_TRUE(info.homogeneous);
      EXPECT_EQ(*info.degree, d + 1 - k);
    }
  }
}

TEST(Specialization, MapsFibersToLeftmostRepresentative) {
  const auto sys = buse_system();
  SpecializationMap map(sys.context(), pair({2, 1}, {1, 1}));
  EXPECT_EQ(map.variable_map(), (std::vector<std::size_t>{0, 0, 1, 2, 3}));
  EXPECT_EQ(map.first_representatives(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(map.second_representatives(), (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(map.target()->main_names(), (std::vector<std::string>{"y1", "y2", "y'1", "y'2"}));
  EXPECT_THROW(SpecializationMap(sys.context(), pair({2}, {2})), DomainError);
}

TEST(Specialization, FactorSystems) {
  const auto sys = buse_system();
  SpecializationMap m1(sys.context(), pair({2, 1}, {2}));
  const auto s1 = build_factor_system(sys, m1);
  ASSERT_EQ(s1.size(), 3u);
  EXPECT_EQ(s1[1], parse("(a+2*b)*y1 + (a+b)*y2", m1.target()));
  EXPECT_EQ(s1[2], parse("(p+q)*y'1^2", m1.target()));

  SpecializationMap m2(sys.context(), pair({3}, {1, 1}));
  const auto s2 = build_factor_system(sys, m2);
  ASSERT_EQ(s2.size(), 3u);
  EXPECT_EQ(s2[0], parse("(a+3*b+3*c)*y1^2 + y'1*y'2", m2.target()));
  EXPECT_EQ(s2[2], parse("(p-q)*y'1 + (p-q)*y'2", m2.target()));
}

TEST(Specialization, DiscriminantFactorDegrees) {
  const auto f = disc4();
  const auto sys = partials_system(*f.polynomial, f.context);
  SpecializationMap map(sys.context(), pair({1, 1}, {1, 1}));
  std::vector<unsigned> degrees;
  for (const auto& g : build_factor_system(sys, map)) degrees.push_back(*degree_and_homogeneity(g).degree);
  EXPECT_EQ(degrees, (std::vector<unsigned>{3, 2, 3, 2}));
}

TEST(Specialization, IsARingMap) {
  const auto sys = buse_system();
  SpecializationMap map(sys.context(), pair({2, 1}, {1, 1}));
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 5; ++rep) {
    const auto f = eqres::testing::random_polynomial(sys.context(), rng);
    const auto g = eqres::testing::random_polynomial(sys.context(), rng);
    EXPECT_EQ(rho_specialize(map, f * g), rho_specialize(map, f) * rho_specialize(map, g));
    EXPECT_EQ(rho_specialize(map, f + g), rho_specialize(map, f) + rho_specialize(map, g));
  }
}

TEST(ConstantDifference, Values) {
  const auto sys = buse_system();
  EXPECT_EQ(constant_divided_difference(sys, 1), parse("a", sys.context()));
  EXPECT_THROW(constant_divided_difference(sys, 2), DomainError);
  EXPECT_THROW(constant_divided_difference(sys, 3), DomainError);
}
