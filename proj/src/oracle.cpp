#include "eqres/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <random>

#include "eqres/error.hpp"

namespace eqres {

SpecializationPoint draw_point(const std::vector<std::string>& params, std::uint64_t seed,
                               std::uint64_t index, int bound) {
  if (bound < 1) throw DomainError("bound must be at least 1");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  SpecializationPoint point{seed, index, {}};
  for (const auto& name : params) {
    const long a = num(rng);
    const long b = den(rng);
    point.values[name] = make_scalar(Integer(a), Integer(b));
  }
  return point;
}

namespace {

using Clock = std::chrono::steady_clock;

// Res of the specialized forms, 0 when one of them vanishes at the point.
Scalar direct_at(const std::vector<Polynomial>& polys, const Assignment& at,
                 const ResultantOptions& opts) {
  std::vector<Polynomial> specialized;
  for (const auto& f : polys) {
    specialized.push_back(evaluate(f, at));
    if (specialized.back().is_zero()) return 0;
  }
  ResultantOptions direct = opts;
  direct.split_disjoint = false;
  return numeric_resultant(HomogeneousSystem(std::move(specialized)), direct);
}

Scalar power(const Scalar& base, const mpz_class& e) {
  Scalar r;
  const unsigned long k = e.get_ui();
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  return r;
}

// Sign s with a = s*b, 0 if both vanish, nullopt if no such sign exists.
std::optional<int> relative_sign(const Scalar& a, const Scalar& b) {
  if (a == 0 && b == 0) return 0;
  if (a == b) return 1;
  if (a == -b) return -1;
  return std::nullopt;
}

struct TrialPlan {
  std::vector<std::string> params;
  std::function<Scalar(const Assignment&)> lhs;
  std::function<Scalar(const Assignment&)> rhs;
  std::function<Scalar(const Assignment&)> reference;
};

VerificationReport run_trials(const TrialPlan& plan, const VerifyOptions& opts) {
  VerificationReport report;
  report.requested = opts.trials;
  report.trials.resize(opts.trials);
  std::vector<std::exception_ptr> failures(opts.trials);

#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
  for (std::size_t i = 0; i < opts.trials; ++i) {
    auto& rec = report.trials[i];
    const auto start = Clock::now();
    rec.index = i;
    rec.point = draw_point(plan.params, opts.seed, i, opts.bound);
    try {
      rec.lhs = plan.lhs(rec.point.values);
      rec.rhs = plan.rhs(rec.point.values);
      if (plan.reference) rec.reference = plan.reference(rec.point.values);
    } catch (const DegenerateSpecialization&) {
      rec.status = TrialStatus::Degenerate;
    } catch (...) {
      failures[i] = std::current_exception();
    }
    rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  }
  for (const auto& e : failures)
    if (e) std::rethrow_exception(e);

  // Reduce in index order so the verdict does not depend on the schedule.
  auto fail = [&](const TrialRecord& rec, const Scalar& other, std::string reason) {
    if (report.counterexample) return;
    report.counterexample = Counterexample{rec.index, rec.point.values, rec.lhs, other,
                                           std::move(reason)};
  };
  for (const auto& rec : report.trials) {
    if (rec.status == TrialStatus::Degenerate) {
      ++report.skipped;
      continue;
    }
    ++report.completed;
    const auto s = relative_sign(rec.lhs, rec.rhs);
    if (!s) {
      fail(rec, rec.rhs, "direct resultant and decomposition product differ");
    } else if (*s != 0) {
      if (report.sign == 0) report.sign = *s;
      else if (report.sign != *s) fail(rec, rec.rhs, "sign differs from earlier trials");
    }
    if (rec.reference) {
      const auto r = relative_sign(rec.lhs, *rec.reference);
      if (!r) {
        fail(rec, *rec.reference, "direct resultant and closed form differ");
      } else if (*r != 0) {
        if (report.reference_sign == 0) report.reference_sign = *r;
        else if (report.reference_sign != *r) fail(rec, *rec.reference, "closed form sign differs from earlier trials");
      }
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_decomposition(const EquivariantSystem& sys, const VerifyOptions& opts,
                                        const std::optional<Polynomial>& closed_form) {
  return verify_decomposition(sys, decompose_resultant(sys), opts, closed_form);
}

VerificationReport verify_decomposition(const EquivariantSystem& sys,
                                        const DecompositionResult& result,
                                        const VerifyOptions& opts,
                                        const std::optional<Polynomial>& closed_form) {
  TrialPlan plan;
  plan.params = sys.context()->param_names();
  const auto ropts = opts.resultant;
  plan.lhs = [&sys, ropts](const Assignment& at) { return direct_at(sys.polys(), at, ropts); };
  plan.rhs = [&result, ropts](const Assignment& at) { return product_at(result, at, ropts); };
  if (closed_form)
    plan.reference = [&closed_form](const Assignment& at) {
      return evaluate(*closed_form, at).constant_value();
    };
  return run_trials(plan, opts);
}

VerificationReport verify_discriminant(const Polynomial& f, const ContextPtr& ctx,
                                       const VerifyOptions& opts,
                                       const std::optional<Polynomial>& closed_form) {
  return verify_discriminant(f, decompose_discriminant(f, ctx), opts, closed_form);
}

VerificationReport verify_discriminant(const Polynomial& f, const DecompositionResult& result,
                                       const VerifyOptions& opts,
                                       const std::optional<Polynomial>& closed_form) {
  if (result.variant != Variant::Discriminant)
    throw DomainError("verify_discriminant needs a discriminant decomposition");
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < f.context()->num_main(); ++i) partials.push_back(partial_derivative(f, i));
  TrialPlan plan;
  plan.params = f.context()->param_names();
  const auto ropts = opts.resultant;
  plan.lhs = [partials, ropts](const Assignment& at) { return direct_at(partials, at, ropts); };
  plan.rhs = [&result, ropts](const Assignment& at) { return product_at(result, at, ropts); };
  if (closed_form) {
    const Scalar prefactor = power(Scalar(result.prefactor_base), result.prefactor_exponent);
    plan.reference = [&closed_form, prefactor](const Assignment& at) -> Scalar {
      return prefactor * evaluate(*closed_form, at).constant_value();
    };
  }
  return run_trials(plan, opts);
}

namespace {

// e_1..e_k of the listed main variables.
std::vector<Polynomial> elementary_symmetric(const ContextPtr& ctx,
                                             const std::vector<std::size_t>& vars) {
  std::vector<Polynomial> e(vars.size() + 1, Polynomial(ctx));
  e[0] = Polynomial::constant(ctx, 1);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const auto x = Polynomial::symbol(ctx, vars[v]);
    for (std::size_t k = v + 1; k >= 1; --k) e[k] += e[k - 1] * x;
  }
  e.erase(e.begin());
  return e;
}

struct Generator {
  Polynomial value;
  unsigned weight;
};

// Every product of generators with total weight d.
void weighted_products(const std::vector<Generator>& gens, std::size_t from, unsigned remaining,
                       const Polynomial& acc, std::vector<Polynomial>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t g = from; g < gens.size(); ++g)
    if (gens[g].weight <= remaining)
      weighted_products(gens, g, remaining - gens[g].weight, acc * gens[g].value, out);
}

// Random invariant seed for the block starting at `lead`.
Polynomial seed_form(const ContextPtr& ctx, std::size_t lead, const std::vector<std::size_t>& rest,
                     const std::vector<std::size_t>& other, unsigned d, CoefficientMode mode,
                     const std::string& prefix, std::mt19937_64& rng, int bound) {
  std::vector<Generator> gens{{Polynomial::symbol(ctx, lead), 1}};
  for (const auto* set : {&rest, &other}) {
    const auto e = elementary_symmetric(ctx, *set);
    for (std::size_t k = 0; k < e.size(); ++k) gens.push_back({e[k], static_cast<unsigned>(k + 1)});
  }
  std::vector<Polynomial> products;
  weighted_products(gens, 0, d, Polynomial::constant(ctx, 1), products);
  std::uniform_int_distribution<long> num(1, bound);
  std::uniform_int_distribution<long> den(1, bound);
  std::bernoulli_distribution neg(0.5);
  Polynomial f(ctx);
  for (std::size_t k = 0; k < products.size(); ++k) {
    if (mode == CoefficientMode::Parameters) {
      f += Polynomial::symbol(ctx, prefix + std::to_string(k + 1)) * products[k];
    } else {
      const long a = num(rng) * (neg(rng) ? -1 : 1);
      f += make_scalar(Integer(a), Integer(den(rng))) * products[k];
    }
  }
  return f;
}

// Number of weighted products seed_form() draws coefficients for.
std::size_t count_products(std::size_t block, std::size_t other, unsigned d) {
  std::vector<unsigned> weights{1};
  for (std::size_t k = 1; k < block; ++k) weights.push_back(static_cast<unsigned>(k));
  for (std::size_t k = 1; k <= other; ++k) weights.push_back(static_cast<unsigned>(k));
  std::function<std::size_t(std::size_t, unsigned)> count = [&](std::size_t from, unsigned left) {
    if (left == 0) return std::size_t{1};
    std::size_t total = 0;
    for (std::size_t g = from; g < weights.size(); ++g)
      if (weights[g] <= left) total += count(g, left - weights[g]);
    return total;
  };
  return count(0, d);
}

}  // namespace

EquivariantSystem random_equivariant_system(std::size_t n, std::size_t p, unsigned d,
                                            std::uint64_t seed, CoefficientMode mode, int bound) {
  if (p < 1 || p >= n) throw DomainError("random system needs 1 <= p < n");
  if (d < 1) throw DomainError("random system needs d >= 1");
  if (bound < 1) throw DomainError("bound must be at least 1");
  const std::size_t q = n - p;
  std::vector<std::string> mains;
  for (std::size_t i = 1; i <= n; ++i) mains.push_back("x" + std::to_string(i));
  std::vector<std::string> params;
  if (mode == CoefficientMode::Parameters) {
    for (std::size_t k = 1; k <= count_products(p, q, d); ++k) params.push_back("a" + std::to_string(k));
    for (std::size_t k = 1; k <= count_products(q, p, d); ++k) params.push_back("b" + std::to_string(k));
  }
  const auto ctx = RingContext::make(mains, params, p);

  std::vector<std::size_t> block1, block2;
  for (std::size_t i = 0; i < p; ++i) block1.push_back(i);
  for (std::size_t i = p; i < n; ++i) block2.push_back(i);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);

  const auto f1 = seed_form(ctx, 0, {block1.begin() + 1, block1.end()}, block2, d, mode, "a", rng, bound);
  const auto g1 = seed_form(ctx, p, {block2.begin() + 1, block2.end()}, block1, d, mode, "b", rng, bound);
  std::vector<Polynomial> polys;
  polys.push_back(f1);
  for (std::size_t i = 1; i < p; ++i)
    polys.push_back(apply_permutation(Permutation::transposition(n, p, 0, i), f1));
  polys.push_back(g1);
  for (std::size_t i = p + 1; i < n; ++i)
    polys.push_back(apply_permutation(Permutation::transposition(n, p, p, i), g1));
  return check_equivariance(std::move(polys), ctx);
}

std::uint64_t brute_force_multinomial(const Partition& lambda) {
  const int p = lambda.total();
  if (p > 9) throw DomainError("brute-force enumeration is limited to p <= 9");
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(p, 0);
  std::uint64_t count = 0;
  std::function<void(int, int)> walk = [&](int i, int top) {
    if (i == p) {
      std::vector<int> sizes(top + 1, 0);
      for (int v : a) ++sizes[v];
      std::sort(sizes.begin(), sizes.end(), std::greater<>());
      if (sizes == lambda.parts()) ++count;
      return;
    }
    for (int v = 0; v <= top + 1; ++v) {
      a[i] = v;
      walk(i + 1, std::max(top, v));
    }
  };
  if (p == 0) return lambda.length() == 0 ? 1 : 0;
  walk(1, 0);
  return count;
}

}  // namespace eqres
