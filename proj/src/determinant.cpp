#include "eqres/determinant.hpp"

#include <exception>

#ifdef EQRES_HAVE_OPENMP
#include <omp.h>
#endif

#include "eqres/error.hpp"

namespace eqres {
namespace {

// Element operations used by the elimination kernels.
struct IntegerOps {
  using T = Integer;
  static bool is_zero(const T& a) { return sgn(a) == 0; }
  static std::size_t weight(const T& a) { return mpz_sizeinbase(a.get_mpz_t(), 2); }
  // a = (pivot*a - lead*b) / prev
  static void update(T& a, const T& pivot, const T& lead, const T& b, const T& prev, T& scratch) {
    mpz_mul(scratch.get_mpz_t(), pivot.get_mpz_t(), a.get_mpz_t());
    mpz_submul(scratch.get_mpz_t(), lead.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), scratch.get_mpz_t(), prev.get_mpz_t());
  }
  static T one(const T&) { return 1; }
  static T zero(const T&) { return 0; }
};

struct PolynomialOps {
  using T = Polynomial;
  static bool is_zero(const T& a) { return a.is_zero(); }
  static std::size_t weight(const T& a) { return a.size(); }
  static void update(T& a, const T& pivot, const T& lead, const T& b, const T& prev, T&) {
    Polynomial num = pivot * a;
    if (!lead.is_zero() && !b.is_zero()) num -= lead * b;
    a = prev.is_constant() ? Polynomial(num * Scalar(1 / prev.constant_value()))
                           : exact_divide(num, prev);
  }
  static T one(const T& like) { return Polynomial::constant(like.context(), 1); }
  static T zero(const T& like) { return Polynomial(like.context()); }
};

template <class Ops>
void eliminate_row(Matrix<typename Ops::T>& m, std::size_t k, std::size_t i,
                   const typename Ops::T& prev, typename Ops::T& scratch) {
  const std::size_t n = m.rows();
  const auto& pivot = m(k, k);
  const auto& lead = m(i, k);
  const bool lead_zero = Ops::is_zero(lead);
  for (std::size_t j = k + 1; j < n; ++j) {
    // A zero entry stays zero when the leading entry of the row is zero.
    if (lead_zero && Ops::is_zero(m(i, j))) continue;
    Ops::update(m(i, j), pivot, lead, m(k, j), prev, scratch);
  }
}

template <class Ops>
typename Ops::T bareiss(Matrix<typename Ops::T> m, Kernel kernel) {
  using T = typename Ops::T;
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) throw DomainError("determinant of an empty matrix needs an explicit ring");
  bool negate = false;
  T prev = Ops::one(m(0, 0));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Lightest nonzero pivot in column k.
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (Ops::is_zero(m(i, k))) continue;
      if (best == n || Ops::weight(m(i, k)) < Ops::weight(m(best, k))) best = i;
    }
    if (best == n) return Ops::zero(m(0, 0));
    if (best != k) {
      m.swap_rows(best, k);
      negate = !negate;
    }
    if (kernel == Kernel::OpenMP && openmp_available()) {
      std::exception_ptr failure;
#ifdef EQRES_HAVE_OPENMP
#pragma omp parallel
      {
        T scratch = m(0, 0);
#pragma omp for schedule(dynamic, 1)
        for (std::size_t i = k + 1; i < n; ++i) {
          try {
            eliminate_row<Ops>(m, k, i, prev, scratch);
          } catch (...) {
#pragma omp critical(eqres_bareiss_failure)
            if (!failure) failure = std::current_exception();
          }
        }
      }
#endif
      if (failure) std::rethrow_exception(failure);
    } else {
      T scratch = m(0, 0);
      for (std::size_t i = k + 1; i < n; ++i) eliminate_row<Ops>(m, k, i, prev, scratch);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

}  // namespace

bool openmp_available() noexcept {
#ifdef EQRES_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

Integer bareiss_determinant(Matrix<Integer> m, Kernel kernel) {
  return bareiss<IntegerOps>(std::move(m), kernel);
}

Polynomial bareiss_determinant(Matrix<Polynomial> m, Kernel kernel) {
  return bareiss<PolynomialOps>(std::move(m), kernel);
}

namespace {

Matrix<Integer> clear_denominators(const Matrix<Scalar>& m, Integer* scale) {
  Matrix<Integer> ints(m.rows(), m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& den = m(i, j).get_den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      ints(i, j) = e.get_num() * (l / e.get_den());
    }
    if (scale) *scale *= l;
  }
  return ints;
}

}  // namespace

std::size_t rank(const Matrix<Scalar>& m) {
  Matrix<Integer> a = clear_denominators(m, nullptr);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  Integer scratch;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      if (best == rows || IntegerOps::weight(a(i, c)) < IntegerOps::weight(a(best, c))) best = i;
    }
    if (best == rows) continue;
    a.swap_rows(best, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const bool lead_zero = sgn(a(i, c)) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (lead_zero && sgn(a(i, j)) == 0) continue;
        IntegerOps::update(a(i, j), a(r, c), a(i, c), a(r, j), prev, scratch);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

Scalar determinant(const Matrix<Scalar>& m, Kernel kernel) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer scale = 1;
  Matrix<Integer> ints = clear_denominators(m, &scale);
  Integer det = bareiss_determinant(std::move(ints), kernel);
  return make_scalar(det, scale);
}

}  // namespace eqres
