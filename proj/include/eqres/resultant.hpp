#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eqres/determinant.hpp"
#include "eqres/polynomial.hpp"

namespace eqres {

/// m homogeneous polynomials in the m main variables of one context.
class HomogeneousSystem {
 public:
  /// Throws ValidationError unless the system is square and every polynomial
  /// is homogeneous of degree >= 1.
  explicit HomogeneousSystem(std::vector<Polynomial> polys);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Polynomial>& polys() const noexcept { return polys_; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return polys_.size(); }

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> polys_;
  std::vector<unsigned> degrees_;
};

/// Row/column structure of the Macaulay matrix for a degree vector.
struct MacaulayLayout {
  unsigned critical_degree = 0;
  /// Degree-nu monomials (main exponents only), decreasing lex order.
  std::vector<std::vector<Exponent>> columns;
  /// Polynomial multiplied into the row of each column monomial.
  std::vector<std::size_t> row_poly;
  /// Columns divisible by x_i^{d_i} for at least two i; rows/columns of M'.
  std::vector<std::size_t> nonreduced;

  std::size_t size() const noexcept { return columns.size(); }
};

MacaulayLayout macaulay_layout(const std::vector<unsigned>& degrees);

struct ResultantOptions {
  /// Largest Macaulay matrix computed over Q[parameters].
  std::size_t symbolic_cap = 64;
  /// Random linear changes of variables tried when det(M') vanishes.
  int max_retries = 5;
  std::uint64_t seed = 0x5eed;
  Kernel kernel = Kernel::OpenMP;
  /// Factor systems whose polynomials fall into variable-disjoint square
  /// groups are resolved group by group.
  bool split_disjoint = true;
};

/// Coefficient ring of resultants of polynomials in `ctx`: its parameters.
ContextPtr coefficient_context(const ContextPtr& ctx);

/// Res(f_1..f_m) = det(M)/det(M'). The result lives in
/// coefficient_context(sys.context()); it is a constant when no parameters
/// occur. Throws SymbolicCapExceeded for parametric systems above the cap and
/// DegenerateSpecialization when every retry keeps det(M') = 0.
Polynomial macaulay_resultant(const HomogeneousSystem& sys, const ResultantOptions& opts = {});

/// Same value as macaulay_resultant() for systems without parameters.
Scalar numeric_resultant(const HomogeneousSystem& sys, const ResultantOptions& opts = {});

/// Determinant of the Sylvester matrix of two bivariate forms.
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g);

/// f(A x): main variable i becomes sum_j A[i][j] x_j.
Polynomial linear_substitute(const Polynomial& f, const Matrix<Scalar>& a);

}  // namespace eqres
