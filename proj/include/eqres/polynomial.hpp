#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "eqres/ring_context.hpp"

namespace eqres {

/// Exact rational. gmpxx keeps every result in lowest terms with a positive
/// denominator; literal construction must go through make_scalar().
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar make_scalar(const Integer& num, const Integer& den = 1);
std::string to_string(const Scalar& s);

using Exponent = std::uint32_t;

/// Exponent vector over all symbols of one context (main variables first).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_symbols) : exps_(num_symbols, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const;
  /// Degree counting only the first `num_main` symbols.
  std::uint64_t main_degree(std::size_t num_main) const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<Exponent> exps_;
};

/// Graded lexicographic order on the declared symbol order.
/// Returns <0, 0, >0 like strcmp.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// Sparse polynomial with rational coefficients over a RingContext.
/// Terms are kept sorted by decreasing grlex order with no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Scalar coef;
    bool operator==(const Term& other) const { return mono == other.mono && coef == other.coef; }
  };

  explicit Polynomial(ContextPtr ctx);
  static Polynomial constant(ContextPtr ctx, const Scalar& value);
  static Polynomial symbol(ContextPtr ctx, std::size_t index);
  static Polynomial symbol(ContextPtr ctx, const std::string& name);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Throws DomainError unless is_constant().
  Scalar constant_value() const;
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

  bool operator==(const Polynomial& other) const;

  Polynomial pow(std::uint64_t e) const;

 private:
  ContextPtr ctx_;
  std::vector<Term> terms_;
};

/// f = q*g with zero remainder, or DivisionError.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Formal derivative with respect to a main variable.
Polynomial partial_derivative(const Polynomial& f, std::size_t main_var);
Polynomial partial_derivative(const Polynomial& f, const std::string& name);

/// Ring map sending main variable i of f's context to main variable
/// `main_map[i]` of `target`; parameters are matched by name.
Polynomial substitute_variables(const Polynomial& f, const std::vector<std::size_t>& main_map,
                                const ContextPtr& target);
Polynomial substitute_variables(const Polynomial& f,
                                const std::map<std::string, std::string>& renaming,
                                const ContextPtr& target);

/// Moves f into another context that declares every symbol f uses.
Polynomial change_context(const Polynomial& f, const ContextPtr& target);

using Assignment = std::map<std::string, Scalar>;

/// Partial evaluation; unassigned symbols stay symbolic. Names not declared
/// in f's context are ignored.
Polynomial evaluate(const Polynomial& f, const Assignment& at);

struct DegreeInfo {
  /// Degree in main variables; nullopt stands for the zero polynomial's -infinity.
  std::optional<std::uint64_t> degree;
  bool homogeneous = true;
};
DegreeInfo degree_and_homogeneity(const Polynomial& f);

/// Total degree over parameters only (main variables ignored); -1 for zero.
std::int64_t parameter_degree(const Polynomial& f);

/// Symbols (by index) with a nonzero exponent in some term.
std::vector<bool> used_symbols(const Polynomial& f);

std::string format(const Polynomial& f);
Polynomial parse(std::string_view text, const ContextPtr& ctx);

}  // namespace eqres
