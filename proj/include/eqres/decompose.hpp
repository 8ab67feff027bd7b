#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eqres/combinatorics.hpp"
#include "eqres/equivariant.hpp"
#include "eqres/resultant.hpp"

namespace eqres {

enum class Variant { Resultant, Discriminant };

/// Which of the four (p, q) versus d inequalities selected the formula.
enum class DecompositionCase { BothSmall, FirstLarge, SecondLarge, BothLarge };

std::string to_string(Variant v);
/// Text of the active inequalities, e.g. "p>d, q<=d" (or "p>=d, q<d" for the
/// discriminant variant).
std::string to_string(DecompositionCase c, Variant v);

/// (f^{1..D+1})^mu for the first or second block.
struct ConstantFactor {
  int block = 1;
  /// 1-based labels of the divided difference.
  std::vector<std::size_t> indices;
  Polynomial value;
  std::uint64_t mu = 0;
};

/// Res(f_Lambda^{1}, .., f_Lambda^{p+1..p+r2})^{m_lambda m_lambda'}.
struct ResultantFactor {
  PartitionPair pair;
  ContextPtr context;
  std::vector<Polynomial> system;
  std::uint64_t m_first = 1;
  std::uint64_t m_second = 1;
  std::uint64_t exponent = 1;

  std::vector<unsigned> degrees() const;
  std::size_t matrix_size() const;
};

struct DecompositionResult {
  Variant variant = Variant::Resultant;
  DecompositionCase selected = DecompositionCase::BothSmall;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  /// Degree of the equivariant system (d for resultants, d-1 for partials).
  unsigned system_degree = 0;
  /// Degree of the input polynomial (equals system_degree for resultants).
  unsigned input_degree = 0;
  ContextPtr context;
  std::vector<ConstantFactor> constants;
  std::vector<ResultantFactor> factors;
  /// Discriminant only: Res(partials) = base^exponent * Disc(f).
  unsigned prefactor_base = 1;
  mpz_class prefactor_exponent = 0;
};

/// mu_1 (block 1) or mu_2 (block 2) for the resultant
/// decomposition (`d` = system degree) or the discriminant one (`d` = degree of f).
mpz_class mu_exponent(std::size_t n, unsigned d, std::size_t p, std::size_t q, int block,
                      Variant variant);

/// a(n, d) = ((d-1)^n - (-1)^n) / d.
mpz_class a_exponent(std::size_t n, unsigned d);

DecompositionResult decompose_resultant(const EquivariantSystem& sys);

/// Builds the partial-derivative system of f and decomposes its resultant.
/// `ctx` must carry the block split. Throws ValidationError when f is not
/// invariant or has degree < 2.
DecompositionResult decompose_discriminant(const Polynomial& f, const ContextPtr& ctx);

/// Partial derivatives of f, validated as an equivariant system.
EquivariantSystem partials_system(const Polynomial& f, const ContextPtr& ctx);

/// Symbolic value of one factor resultant.
Polynomial evaluate_factor(const ResultantFactor& factor, const ResultantOptions& opts = {});
/// Factor resultant with all parameters specialized.
Scalar evaluate_factor_at(const ResultantFactor& factor, const Assignment& at,
                          const ResultantOptions& opts = {});

/// Symbolic values of every factor, nullopt where the size cap is exceeded.
/// Factors are evaluated in parallel; output order is the factor order.
std::vector<std::optional<Polynomial>> evaluate_factors(const DecompositionResult& result,
                                                        const ResultantOptions& opts = {});

/// Product of constants^mu and factor resultants^exponent at a point. For the
/// discriminant variant this is base^exponent * Disc(f).
Scalar product_at(const DecompositionResult& result, const Assignment& at,
                  const ResultantOptions& opts = {});

struct DegreeAuditLine {
  std::string label;
  std::uint64_t exponent = 0;
  /// Degree in the input coefficients from multidegree bookkeeping.
  std::uint64_t inferred_degree = 0;
  /// Parameter degree of the evaluated factor, when available.
  std::optional<std::int64_t> actual_degree;
};

struct DegreeAudit {
  std::vector<DegreeAuditLine> lines;
  std::uint64_t inferred_total = 0;
  /// n * D^{n-1} with D the system degree.
  std::uint64_t expected_total = 0;
  std::optional<std::int64_t> actual_total;
  bool consistent() const { return inferred_total == expected_total; }
};

/// `values` may hold symbolic factor values (from evaluate_factors) to report
/// actual parameter degrees next to the inferred ones.
DegreeAudit degree_audit(const DecompositionResult& result,
                         const std::vector<std::optional<Polynomial>>& values = {});

}  // namespace eqres
