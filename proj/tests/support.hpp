#pragma once

#include <random>
#include <string>
#include <vector>

#include "eqres/polynomial.hpp"
#include "eqres/system_file.hpp"

namespace eqres::testing {

inline std::string fixture(const std::string& name) { return std::string(EQRES_FIXTURE_DIR) + "/" + name; }

inline SystemFile buse5() { return load_system_file(fixture("buse5.json")); }
inline SystemFile disc4() { return load_system_file(fixture("disc4.json")); }

// Random polynomial with small integer or rational coefficients over every symbol.
inline Polynomial random_polynomial(const ContextPtr& ctx, std::mt19937_64& rng, int terms = 4,
                                    int max_exp = 2) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::vector<Polynomial::Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<Exponent> e(ctx->num_symbols());
    for (auto& v : e) v = static_cast<Exponent>(ex(rng));
    out.push_back({Monomial(e), make_scalar(coef(rng), den(rng))});
  }
  return Polynomial::from_terms(ctx, out);
}

// Random homogeneous form of degree d in the main variables of ctx.
inline Polynomial random_form(const ContextPtr& ctx, unsigned d, std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  const std::size_t m = ctx->num_main();
  std::vector<Polynomial::Term> out;
  std::vector<Exponent> cur(ctx->num_symbols(), 0);
  // All exponent vectors of total degree d.
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

}  // namespace eqres::testing
