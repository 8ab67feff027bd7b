#include "eqres/decompose.hpp"

#include <exception>

#include "eqres/error.hpp"

namespace eqres {

std::string to_string(Variant v) {
  return v == Variant::Resultant ? "resultant" : "discriminant";
}

std::string to_string(DecompositionCase c, Variant v) {
  const bool disc = v == Variant::Discriminant;
  const std::string large = disc ? ">=d" : ">d";
  const std::string small = disc ? "<d" : "<=d";
  switch (c) {
    case DecompositionCase::BothSmall: return "p" + small + ", q" + small;
    case DecompositionCase::FirstLarge: return "p" + large + ", q" + small;
    case DecompositionCase::SecondLarge: return "p" + small + ", q" + large;
    case DecompositionCase::BothLarge: return "p" + large + ", q" + large;
  }
  return "?";
}

std::vector<unsigned> ResultantFactor::degrees() const {
  std::vector<unsigned> out;
  for (const auto& f : system) out.push_back(static_cast<unsigned>(*degree_and_homogeneity(f).degree));
  return out;
}

std::size_t ResultantFactor::matrix_size() const { return macaulay_layout(degrees()).size(); }

namespace {

mpz_class power(long base, unsigned long e) {
  mpz_class r;
  mpz_class b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

std::uint64_t to_u64(const mpz_class& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p())
    throw DomainError(std::string(what) + " is not a nonnegative 64-bit integer: " + v.get_str());
  return v.get_ui();
}

// Printed mu formula with degree `deg`, block size `s`, other block size `t`.
mpz_class mu_formula(std::size_t n, long deg, std::size_t s, std::size_t t) {
  mpz_class mu = mpz_class(static_cast<unsigned long>(n)) * power(deg, n - 1);
  for (const auto& lambda : enumerate_partitions(static_cast<int>(s), static_cast<int>(deg))) {
    const int r = lambda.length();
    const mpz_class fall = falling_product(static_cast<int>(deg), r);
    mpz_class inner = 0;
    for (int j = 1; j <= r; ++j) inner += fall * power(deg, t) / (deg - j + 1);
    inner += fall * static_cast<unsigned long>(t) * power(deg, t - 1);
    mu -= mpz_class(static_cast<unsigned long>(multinomial_m(lambda))) * inner;
  }
  return mu;
}

DecompositionCase select_case(bool first_large, bool second_large) {
  if (first_large && second_large) return DecompositionCase::BothLarge;
  if (first_large) return DecompositionCase::FirstLarge;
  if (second_large) return DecompositionCase::SecondLarge;
  return DecompositionCase::BothSmall;
}

}  // namespace

mpz_class mu_exponent(std::size_t n, unsigned d, std::size_t p, std::size_t q, int block,
                      Variant variant) {
  if (block != 1 && block != 2) throw DomainError("block must be 1 or 2");
  if (p + q != n || p < 1 || q < 1) throw DomainError("mu needs p + q = n with p, q >= 1");
  const std::size_t s = block == 1 ? p : q;
  const std::size_t t = block == 1 ? q : p;
  if (variant == Variant::Resultant) {
    if (d < 1) throw DomainError("degree must be positive");
    if (s <= d)
      throw DomainError("mu_" + std::to_string(block) + " only occurs when the block size exceeds d");
    return mu_formula(n, d, s, t);
  }
  if (d < 2) throw DomainError("discriminant needs d >= 2");
  if (s < d)
    throw DomainError("mu_" + std::to_string(block) +
                      " only occurs when the block size is at least d (discriminant)");
  return mu_formula(n, static_cast<long>(d) - 1, s, t);
}

mpz_class a_exponent(std::size_t n, unsigned d) {
  if (n < 2 || d < 2) throw DomainError("a(n,d) needs n >= 2 and d >= 2");
  mpz_class num = power(static_cast<long>(d) - 1, n) - power(-1, n);
  if (num % d != 0) throw DomainError("a(n,d) is not an integer");
  return num / d;
}

DecompositionResult decompose_resultant(const EquivariantSystem& sys) {
  DecompositionResult out;
  out.variant = Variant::Resultant;
  out.n = sys.n();
  out.p = sys.p();
  out.q = sys.q();
  out.system_degree = sys.degree();
  out.input_degree = sys.degree();
  out.context = sys.context();
  const unsigned d = sys.degree();
  const bool first_large = out.p > d;
  const bool second_large = out.q > d;
  out.selected = select_case(first_large, second_large);

  DividedDifferenceTable table(sys);
  for (int block : {1, 2}) {
    if ((block == 1 && !first_large) || (block == 2 && !second_large)) continue;
    ConstantFactor c{block, {}, constant_divided_difference(sys, block, &table),
                     to_u64(mu_exponent(out.n, d, out.p, out.q, block, Variant::Resultant), "mu")};
    const std::size_t start = block == 1 ? 1 : out.p + 1;
    for (std::size_t k = 0; k <= d; ++k) c.indices.push_back(start + k);
    out.constants.push_back(std::move(c));
  }

  for (auto& pair : enumerate_pairs(static_cast<int>(out.p), static_cast<int>(out.q),
                                    static_cast<int>(d), static_cast<int>(d))) {
    SpecializationMap map(sys.context(), pair);
    ResultantFactor f{pair, map.target(), build_factor_system(sys, map, &table)};
    f.m_first = multinomial_m(pair.first);
    f.m_second = multinomial_m(pair.second);
    f.exponent = f.m_first * f.m_second;
    out.factors.push_back(std::move(f));
  }
  return out;
}

EquivariantSystem partials_system(const Polynomial& f, const ContextPtr& ctx) {
  if (!same_context(f.context(), ctx)) throw ContextError("polynomial is not in the given context");
  const auto info = degree_and_homogeneity(f);
  if (!info.degree || !info.homogeneous) throw ValidationError("f must be a nonzero homogeneous polynomial");
  if (*info.degree < 2) throw ValidationError("discriminant needs degree d >= 2");
  const std::size_t n = ctx->num_main();
  const std::size_t p = ctx->split();
  if (p < 1 || p >= n) throw ValidationError("context has no valid block split");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i + 1 == p) continue;
    const auto tau = Permutation::transposition(n, p, i, i + 1);
    if (apply_permutation(tau, f) != f)
      throw ValidationError("f is not invariant: transposition (" + std::to_string(i + 1) + " " +
                            std::to_string(i + 2) + ") changes it");
  }
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(partial_derivative(f, i));
  return check_equivariance(std::move(partials), ctx);
}

DecompositionResult decompose_discriminant(const Polynomial& f, const ContextPtr& ctx) {
  const auto sys = partials_system(f, ctx);
  DecompositionResult out = decompose_resultant(sys);
  const unsigned d = sys.degree() + 1;
  out.variant = Variant::Discriminant;
  out.input_degree = d;
  // Thresholds p >= d and caps r < d coincide with p > d-1 and r <= d-1 above;
  // only mu switches to the discriminant formula.
  for (auto& c : out.constants)
    c.mu = to_u64(mu_exponent(out.n, d, out.p, out.q, c.block, Variant::Discriminant), "mu");
  out.prefactor_base = d;
  out.prefactor_exponent = a_exponent(out.n, d);
  return out;
}

Polynomial evaluate_factor(const ResultantFactor& factor, const ResultantOptions& opts) {
  return macaulay_resultant(HomogeneousSystem(factor.system), opts);
}

Scalar evaluate_factor_at(const ResultantFactor& factor, const Assignment& at,
                          const ResultantOptions& opts) {
  std::vector<Polynomial> specialized;
  for (const auto& f : factor.system) {
    specialized.push_back(evaluate(f, at));
    // A form that vanishes at the point makes every Macaulay row of it zero.
    if (specialized.back().is_zero()) return 0;
  }
  return numeric_resultant(HomogeneousSystem(std::move(specialized)), opts);
}

std::vector<std::optional<Polynomial>> evaluate_factors(const DecompositionResult& result,
                                                        const ResultantOptions& opts) {
  const std::size_t count = result.factors.size();
  std::vector<std::optional<Polynomial>> values(count);
  std::vector<std::exception_ptr> failures(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      values[i] = evaluate_factor(result.factors[i], opts);
    } catch (const SymbolicCapExceeded&) {
      values[i].reset();
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto& e : failures)
    if (e) std::rethrow_exception(e);
  return values;
}

Scalar product_at(const DecompositionResult& result, const Assignment& at,
                  const ResultantOptions& opts) {
  const std::size_t count = result.factors.size();
  std::vector<Scalar> values(count);
  std::vector<std::exception_ptr> failures(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      values[i] = evaluate_factor_at(result.factors[i], at, opts);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto& e : failures)
    if (e) std::rethrow_exception(e);

  auto raise = [](const Scalar& base, std::uint64_t e) {
    Scalar r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
  };
  // Reduce in factor order so the result does not depend on the schedule.
  Scalar product = 1;
  for (const auto& c : result.constants) {
    const Scalar v = evaluate(c.value, at).constant_value();
    product *= raise(v, c.mu);
  }
  for (std::size_t i = 0; i < count; ++i) product *= raise(values[i], result.factors[i].exponent);
  return product;
}

DegreeAudit degree_audit(const DecompositionResult& result,
                         const std::vector<std::optional<Polynomial>>& values) {
  DegreeAudit audit;
  bool all_actual = true;
  std::int64_t actual_total = 0;
  for (const auto& c : result.constants) {
    DegreeAuditLine line;
    line.label = "f^{";
    for (std::size_t k = 0; k < c.indices.size(); ++k)
      line.label += (k ? "," : "") + std::to_string(c.indices[k]);
    line.label += "}";
    line.exponent = c.mu;
    line.inferred_degree = 1;
    line.actual_degree = parameter_degree(c.value);
    actual_total += static_cast<std::int64_t>(c.mu) * std::max<std::int64_t>(*line.actual_degree, 0);
    audit.inferred_total += c.mu;
    audit.lines.push_back(std::move(line));
  }
  for (std::size_t i = 0; i < result.factors.size(); ++i) {
    const auto& f = result.factors[i];
    const auto degs = f.degrees();
    // Res is homogeneous of degree prod_{j != i} d_j in the coefficients of f_i.
    std::uint64_t inferred = 0;
    for (std::size_t k = 0; k < degs.size(); ++k) {
      std::uint64_t prod = 1;
      for (std::size_t j = 0; j < degs.size(); ++j)
        if (j != k) prod *= degs[j];
      inferred += prod;
    }
    DegreeAuditLine line;
    line.label = "Res_" + to_string(f.pair);
    line.exponent = f.exponent;
    line.inferred_degree = inferred;
    if (i < values.size() && values[i]) {
      line.actual_degree = std::max<std::int64_t>(parameter_degree(*values[i]), 0);
      actual_total += static_cast<std::int64_t>(f.exponent) * *line.actual_degree;
    } else {
      all_actual = false;
    }
    audit.inferred_total += f.exponent * inferred;
    audit.lines.push_back(std::move(line));
  }
  std::uint64_t expected = result.n;
  for (std::size_t k = 0; k + 1 < result.n; ++k) expected *= result.system_degree;
  audit.expected_total = expected;
  if (all_actual) audit.actual_total = actual_total;
  return audit;
}

}  // namespace eqres
