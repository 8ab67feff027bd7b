#include <random>

#include <gtest/gtest.h>

#include "eqres/determinant.hpp"
#include "eqres/error.hpp"

using namespace eqres;

namespace {

// Laplace expansion along the first row.
Scalar cofactor_det(const Matrix<Scalar>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Scalar total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix<Scalar> minor(n - 1, n - 1, Scalar(0));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Scalar term = m(0, c) * cofactor_det(minor);
    total += (c % 2 ? -term : term);
  }
  return total;
}

Matrix<Scalar> random_matrix(std::size_t n, std::mt19937_64& rng, bool rational) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  Matrix<Scalar> m(n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = make_scalar(num(rng), rational ? den(rng) : 1);
  return m;
}

}  // namespace

TEST(Determinant, Identity) {
  Matrix<Scalar> m(3, 3, Scalar(0));
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = 1;
  EXPECT_EQ(determinant(m), 1);
}

TEST(Determinant, KnownIntegerMatrix) {
  Matrix<Integer> m(4, 4, Integer(0));
  const int v[4][4] = {{2, -1, 0, 3}, {1, 4, -2, 0}, {0, 5, 1, -1}, {3, 0, 2, 2}};
  Matrix<Scalar> q(4, 4, Scalar(0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      m(i, j) = v[i][j];
      q(i, j) = v[i][j];
    }
  const Scalar expected = cofactor_det(q);
  EXPECT_EQ(Scalar(bareiss_determinant(m, Kernel::Serial)), expected);
  EXPECT_EQ(Scalar(bareiss_determinant(m, Kernel::OpenMP)), expected);
}

TEST(Determinant, SymbolicTwoByTwo) {
  auto ctx = RingContext::coefficients({"a", "b", "c", "d"});
  Matrix<Polynomial> m(2, 2, Polynomial(ctx));
  m(0, 0) = Polynomial::symbol(ctx, "a");
  m(0, 1) = Polynomial::symbol(ctx, "b");
  m(1, 0) = Polynomial::symbol(ctx, "c");
  m(1, 1) = Polynomial::symbol(ctx, "d");
  EXPECT_EQ(bareiss_determinant(m), parse("a*d - b*c", ctx));
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 7; ++n)
    for (int rep = 0; rep < 4; ++rep) {
      const auto m = random_matrix(n, rng, rep % 2 == 1);
      const Scalar expected = cofactor_det(m);
      EXPECT_EQ(determinant(m, Kernel::Serial), expected);
      EXPECT_EQ(determinant(m, Kernel::OpenMP), expected);
    }
}

TEST(Determinant, SingularAndPivoting) {
  Matrix<Scalar> m(3, 3, Scalar(0));
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(2, 2) = 5;
  EXPECT_EQ(determinant(m), -5);
  m(2, 2) = 0;
  EXPECT_EQ(determinant(m), 0);
  Matrix<Scalar> rect(2, 3, Scalar(1));
  EXPECT_THROW(determinant(rect), DomainError);
}

TEST(Determinant, SerialAndParallelKernelsMatchOnLargeMatrices) {
  std::mt19937_64 rng(23);
  for (std::size_t n : {30u, 60u}) {
    const auto m = random_matrix(n, rng, true);
    EXPECT_EQ(determinant(m, Kernel::Serial), determinant(m, Kernel::OpenMP));
  }
  auto ctx = RingContext::coefficients({"t"});
  Matrix<Polynomial> p(8, 8, Polynomial(ctx));
  std::uniform_int_distribution<int> num(-3, 3);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      p(i, j) = Polynomial::symbol(ctx, "t") * Scalar(num(rng)) + Polynomial::constant(ctx, num(rng));
  EXPECT_EQ(bareiss_determinant(p, Kernel::Serial), bareiss_determinant(p, Kernel::OpenMP));
}

TEST(Rank, RectangularMatrices) {
  Matrix<Scalar> m(3, 4, Scalar(0));
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(2, 3) = make_scalar(1, 3);
  EXPECT_EQ(rank(m), 2u);
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 5; ++rep) {
    const auto a = random_matrix(6, rng, true);
    EXPECT_EQ(rank(a) == 6, determinant(a) != 0);
  }
}
