// One line per criterion; exit status is the number of failures.
#include <chrono>
#include <functional>
#include <iostream>
#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

#include "eqres/decompose.hpp"
#include "eqres/error.hpp"
#include "eqres/oracle.hpp"
#include "eqres/system_file.hpp"

using namespace eqres;

namespace {

std::string fixture(const std::string& name) { return std::string(EQRES_FIXTURE_DIR) + "/" + name; }

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

bool up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

ContextPtr vars(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("x" + std::to_string(i + 1));
  return RingContext::make_unsplit(names, {});
}

Polynomial random_form(const ContextPtr& ctx, unsigned d, std::mt19937_64& rng, int bound = 4) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  const std::size_t m = ctx->num_main();
  std::vector<Polynomial::Term> out;
  std::vector<Exponent> cur(m, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == m) {
      cur[var] = left;
      out.push_back({Monomial(cur), Scalar(coef(rng))});
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, d);
  auto f = Polynomial::from_terms(ctx, out);
  if (f.is_zero()) f = Polynomial::symbol(ctx, 0).pow(d);
  return f;
}

Scalar abs_value(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

Scalar power(Scalar b, unsigned e) {
  Scalar r = 1;
  while (e--) r *= b;
  return r;
}

// Completed trials where the direct side is nonzero.
std::size_t nonzero_trials(const VerificationReport& r, const std::function<bool(const Assignment&)>& keep) {
  std::size_t k = 0;
  for (const auto& t : r.trials)
    if (t.status == TrialStatus::Completed && t.lhs != 0 && keep(t.point.values)) ++k;
  return k;
}

void ac1(Outcome& o) {
  const auto file = load_system_file(fixture("buse5.json"));
  const auto sys = check_equivariance(file.system, file.context);
  const auto result = decompose_resultant(sys);
  std::multiset<std::uint64_t> exps;
  for (const auto& f : result.factors) exps.insert(f.exponent);
  o.require(exps == std::multiset<std::uint64_t>{1, 1, 3, 3}, "factor exponents");
  o.require(result.constants.size() == 1 && result.constants[0].mu == 8, "constant a^8");
  VerifyOptions opts;
  opts.trials = 40;
  opts.seed = 2024;
  const auto report = verify_decomposition(sys, result, opts, file.closed_form);
  const auto good = nonzero_trials(report, [](const Assignment& at) { return at.at("p") != at.at("q"); });
  o.require(report.passed(), "direct = +-product at every point");
  o.require(report.reference_sign != 0, "closed form compared");
  o.require(good >= 20, "20 nonzero points with p != q");
  o.note << good << " nonzero points with p!=q, sign " << report.sign << ", closed-form sign "
         << report.reference_sign;
}

void ac2(Outcome& o) {
  const auto file = load_system_file(fixture("buse5.json"));
  const auto result = decompose_resultant(check_equivariance(file.system, file.context));
  const auto values = evaluate_factors(result);
  for (const auto& v : values) o.require(v.has_value(), "symbolic factor within cap");
  if (!o.ok) return;
  const auto ctx = values[0]->context();
  const auto cubic = parse("a^3+3*a^2*b+3*a^2*c+2*a*b^2+8*a*b*c+6*b^2*c", ctx);
  const std::vector<Polynomial> printed{
      parse("(3*b+3*c+a)^2*(p+q)^2", ctx), parse("(p+q)^2", ctx) * cubic.pow(2),
      parse("(p+q)^2*(p-q)^4*(3*b+3*c+a)^2", ctx)};
  std::vector<bool> used(values.size(), false);
  for (const auto& want : printed) {
    bool hit = false;
    for (std::size_t i = 0; i < values.size() && !hit; ++i)
      if (!used[i] && up_to_sign(*values[i], want)) used[i] = hit = true;
    o.require(hit, "printed factor " + format(want));
  }
  int e = -1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (used[i]) continue;
    for (int k = 0; k <= 12; ++k)
      if (up_to_sign(*values[i], parse("(p+q)^2*(p-q)^4", ctx) * cubic.pow(k))) e = k;
  }
  o.require(e == 2, "fourth factor has cubic exponent 2");
  o.require(mu_exponent(5, 2, 3, 2, 1, Variant::Resultant) == 8, "mu1 = 8");
  const auto audit = degree_audit(result, values);
  o.require(audit.consistent() && audit.actual_total == 80, "degree ledger 80");
  o.note << "fourth factor cubic exponent " << e << ", degree ledger " << audit.inferred_total << "/"
         << audit.expected_total;
}

void ac3(Outcome& o) {
  const auto file = load_system_file(fixture("disc4.json"));
  const auto result = decompose_discriminant(*file.polynomial, file.context);
  const auto values = evaluate_factors(result);
  for (const auto& v : values) o.require(v.has_value(), "symbolic factor within cap");
  if (!o.ok) return;
  const auto ctx = values[0]->context();
  const std::vector<Polynomial> printed{
      parse("512*(2*a+b)^3*(c+1)^3", ctx),
      parse("8589934592*a^6*(2*a+b)^3*(2*a-b)^6*(c+1)^6", ctx),
      parse("262144*(2*a+b)^6*(c-1)^3*(8*c^2+1)^6", ctx),
      parse("73786976294838206464*a^12*(2*a+b)^6*(2*a-b)^12*(c-1)^6*(8*c^2+1)^12", ctx)};
  for (const auto& want : printed) {
    bool hit = false;
    for (const auto& v : values) hit = hit || up_to_sign(*v, want);
    o.require(hit, "printed factor " + format(want).substr(0, 24));
  }
  o.require(a_exponent(4, 4) == 20 && result.prefactor_exponent == 20, "a(4,4) = 20");
  VerifyOptions opts;
  opts.trials = 30;
  opts.seed = 77;
  const auto report = verify_discriminant(*file.polynomial, result, opts, file.closed_form);
  const auto good = nonzero_trials(report, [](const Assignment&) { return true; });
  o.require(report.passed(), "4^20 * product = +-Res(partials)");
  o.require(report.reference_sign != 0, "closed form compared");
  o.require(good >= 20, "20 nonzero points");
  o.note << good << " nonzero points, sign " << report.sign << ", closed-form sign " << report.reference_sign;
}

void ac4(Outcome& o) {
  const std::vector<std::array<unsigned, 3>> grid{{3, 1, 2}, {3, 2, 2}, {4, 2, 2}, {4, 2, 3}, {4, 1, 3}, {5, 3, 2}};
  std::size_t runs = 0;
  for (const auto& [n, p, d] : grid)
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto sys = random_equivariant_system(n, p, d, seed * 1000 + n * 100 + p * 10 + d);
      VerifyOptions opts;
      opts.trials = 12;
      opts.seed = seed;
      const auto r = verify_decomposition(sys, opts);
      std::ostringstream what;
      what << "(n,p,d)=(" << n << "," << p << "," << d << ") seed " << seed;
      o.require(r.passed() && r.completed >= 10 && r.sign != 0, what.str());
      ++runs;
    }
  o.note << runs << " generated systems";
}

void ac5(Outcome& o) {
  const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int p = 1; p <= 8; ++p) {
    std::uint64_t sum = 0;
    for (const auto& l : enumerate_partitions(p)) {
      sum += multinomial_m(l);
      if (p <= 7) o.require(multinomial_m(l) == brute_force_multinomial(l), "m of " + to_string(l));
    }
    o.require(sum == bell[p], "Bell(" + std::to_string(p) + ")");
  }
  o.note << "p<=7 brute force, Bell up to 4140";
}

void ac6(Outcome& o) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<unsigned> deg(1, 5);
  const auto c2 = vars(2);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_form(c2, deg(rng), rng);
    const auto g = random_form(c2, deg(rng), rng);
    o.require(abs_value(numeric_resultant(HomogeneousSystem({f, g}))) ==
                  abs_value(sylvester_resultant(f, g).constant_value()),
              "Sylvester agreement");
  }
  std::size_t pure = 0;
  ResultantOptions whole;
  whole.split_disjoint = false;
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto ctx = vars(m);
    std::vector<unsigned> d(m, 1);
    while (true) {
      std::vector<Polynomial> polys;
      for (std::size_t i = 0; i < m; ++i) polys.push_back(Polynomial::symbol(ctx, i).pow(d[i]));
      o.require(numeric_resultant(HomogeneousSystem(polys), whole) == 1, "pure powers");
      ++pure;
      std::size_t k = 0;
      while (k < m && d[k] == 4) d[k++] = 1;
      if (k == m) break;
      ++d[k];
    }
  }
  std::uniform_int_distribution<unsigned> small(1, 3);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int i = 0; i < 20; ++i) {
    const std::size_t m = 2 + i % 2;
    const auto ctx = vars(m);
    std::vector<Polynomial> polys;
    std::vector<unsigned> d;
    for (std::size_t k = 0; k < m; ++k) {
      d.push_back(small(rng));
      polys.push_back(random_form(ctx, d.back(), rng));
    }
    const Scalar base = numeric_resultant(HomogeneousSystem(polys));
    const Scalar lambda = make_scalar(entry(rng) + 5, 3);
    unsigned others = 1;
    for (std::size_t k = 1; k < m; ++k) others *= d[k];
    auto scaled = polys;
    scaled[0] *= lambda;
    o.require(numeric_resultant(HomogeneousSystem(scaled)) == power(lambda, others) * base, "scaling law");
    Matrix<Scalar> a(m, m, Scalar(0));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) a(r, c) = entry(rng);
    const Scalar det = determinant(a);
    if (det == 0) a(0, 0) += 7;
    unsigned all = 1;
    for (auto v : d) all *= v;
    std::vector<Polynomial> moved;
    for (const auto& f : polys) moved.push_back(linear_substitute(f, a));
    o.require(abs_value(numeric_resultant(HomogeneousSystem(moved))) ==
                  abs_value(power(determinant(a), all) * base),
              "change of variables law");
  }
  o.note << "50 Sylvester, " << pure << " pure-power, 20 scaling and 20 change-of-variables systems";
}

void ac7(Outcome& o) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; checked < 50; ++seed) {
    const std::size_t n = 3 + seed % 3;
    const std::size_t p = 2 + seed % (n - 2);
    const unsigned d = 1 + seed % 3;
    const auto sys = random_equivariant_system(n, p, d, 500 + seed);
    const std::size_t k = std::min<std::size_t>(p, d + 1);
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    const auto base = divided_difference(sys, idx);
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    o.require(divided_difference(sys, idx) == base, "order invariance");
    const auto info = degree_and_homogeneity(base);
    o.require(base.is_zero() || (info.homogeneous && *info.degree == d + 1 - k), "degree law");
    ++checked;
  }
  const auto file = load_system_file(fixture("buse5.json"));
  const auto sys = check_equivariance(file.system, file.context);
  SpecializationMap map(sys.context(), PartitionPair{Partition({2, 1}), Partition({2})});
  const auto rho = rho_specialize(map, divided_difference(sys, {0, 2}));
  o.require(rho == parse("(a+2*b)*y1 + (a+b)*y2", map.target()), "rho of f^{1,3}");
  o.require(build_factor_system(sys, map)[1] == rho, "factor system uses rho of f^{1,3}");
  o.note << checked << " generated systems, rho(f^{1,3}) = " << format(rho);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria{
      {"AC1 worked resultant end to end", ac1}, {"AC2 worked symbolic factors", ac2},
      {"AC3 worked discriminant", ac3},         {"AC4 generated systems", ac4},
      {"AC5 combinatorial oracles", ac5},       {"AC6 resultant engine laws", ac6},
      {"AC7 divided differences", ac7}};
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << " (" << o.note.str() << "; " << s << " s)"
              << std::endl;
    failures += o.ok ? 0 : 1;
  }
  return failures;
}
