#include "eqres/resultant.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "eqres/error.hpp"

namespace eqres {

HomogeneousSystem::HomogeneousSystem(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) throw ValidationError("a resultant needs at least one polynomial");
  ctx_ = polys_.front().context();
  if (ctx_->num_main() != polys_.size())
    throw ValidationError("system is not square: " + std::to_string(polys_.size()) +
                          " polynomials in " + std::to_string(ctx_->num_main()) + " variables");
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (!same_context(polys_[i].context(), ctx_))
      throw ContextError("system polynomials belong to different ring contexts");
    const auto info = degree_and_homogeneity(polys_[i]);
    if (!info.degree || *info.degree == 0)
      throw ValidationError("polynomial " + std::to_string(i + 1) +
                            " must have positive degree in the main variables");
    if (!info.homogeneous)
      throw ValidationError("polynomial " + std::to_string(i + 1) + " is not homogeneous");
    degrees_.push_back(static_cast<unsigned>(*info.degree));
  }
}

namespace {

void monomials_rec(std::size_t var, unsigned remaining, std::vector<Exponent>& cur,
                   std::vector<std::vector<Exponent>>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    monomials_rec(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

// (main exponents, coefficient in the parameter ring) per term.
using CoefficientList = std::vector<std::pair<std::vector<Exponent>, Polynomial>>;

CoefficientList coefficients_of(const Polynomial& f, const ContextPtr& coeff_ctx) {
  const auto& ctx = *f.context();
  const std::size_t nm = ctx.num_main();
  std::map<std::vector<Exponent>, std::vector<Polynomial::Term>> grouped;
  for (const auto& t : f.terms()) {
    std::vector<Exponent> mains(t.mono.exponents().begin(),
                                t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(nm));
    std::vector<Exponent> params(t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(nm),
                                 t.mono.exponents().end());
    grouped[mains].push_back(Polynomial::Term{Monomial(std::move(params)), t.coef});
  }
  CoefficientList out;
  for (auto& [mains, terms] : grouped)
    out.emplace_back(mains, Polynomial::from_terms(coeff_ctx, std::move(terms)));
  return out;
}

template <class T>
Matrix<T> build_macaulay(const MacaulayLayout& layout, const std::vector<unsigned>& degrees,
                         const std::vector<std::vector<std::pair<std::vector<Exponent>, T>>>& coeffs,
                         const T& zero) {
  const std::size_t size = layout.size();
  std::map<std::vector<Exponent>, std::size_t> column_of;
  for (std::size_t c = 0; c < size; ++c) column_of.emplace(layout.columns[c], c);
  Matrix<T> m(size, size, zero);
  for (std::size_t r = 0; r < size; ++r) {
    const std::size_t i = layout.row_poly[r];
    std::vector<Exponent> shift = layout.columns[r];
    shift[i] -= degrees[i];
    for (const auto& [mono, coef] : coeffs[i]) {
      std::vector<Exponent> target(shift);
      for (std::size_t v = 0; v < target.size(); ++v) target[v] += mono[v];
      m(r, column_of.at(target)) = coef;
    }
  }
  return m;
}

Matrix<Scalar> random_change_of_variables(std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  for (;;) {
    Matrix<Scalar> a(m, m, Scalar(0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = dist(rng);
    if (determinant(a, Kernel::Serial) != 0) return a;
  }
}

Polynomial scalar_power_inverse(const Scalar& base, std::uint64_t exp, const ContextPtr& ctx) {
  Scalar r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  r.canonicalize();
  return Polynomial::constant(ctx, Scalar(1 / r));
}

std::uint64_t degree_product(const std::vector<unsigned>& degrees, std::size_t skip = SIZE_MAX) {
  std::uint64_t prod = 1;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (i != skip) prod *= degrees[i];
  return prod;
}

// Groups of polynomials connected through shared main variables.
struct Component {
  std::vector<std::size_t> polys;
  std::vector<std::size_t> vars;
};

std::vector<Component> disjoint_components(const HomogeneousSystem& sys) {
  const std::size_t m = sys.size();
  std::vector<std::vector<bool>> uses(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto used = used_symbols(sys.polys()[i]);
    used.resize(m);
    uses[i] = std::move(used);
  }
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t v = 0; v < m; ++v) {
    std::size_t first = SIZE_MAX;
    for (std::size_t i = 0; i < m; ++i) {
      if (!uses[i][v]) continue;
      if (first == SIZE_MAX) {
        first = i;
      } else {
        parent[find(i)] = find(first);
      }
    }
  }
  std::map<std::size_t, Component> by_root;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = find(i);
    if (!by_root.count(r)) order.push_back(r);
    by_root[r].polys.push_back(i);
  }
  std::vector<Component> out;
  for (auto r : order) {
    Component c = by_root[r];
    for (std::size_t v = 0; v < m; ++v)
      for (auto i : c.polys)
        if (uses[i][v]) {
          c.vars.push_back(v);
          break;
        }
    out.push_back(std::move(c));
  }
  return out;
}

Polynomial split_resultant(const HomogeneousSystem& sys, const std::vector<Component>& comps,
                           const ResultantOptions& opts);

Polynomial resultant_impl(const HomogeneousSystem& sys, const ResultantOptions& opts) {
  const auto coeff_ctx = coefficient_context(sys.context());
  const std::size_t m = sys.size();
  if (opts.split_disjoint && m > 1) {
    auto comps = disjoint_components(sys);
    const bool square = std::all_of(comps.begin(), comps.end(), [](const Component& c) {
      return c.polys.size() == c.vars.size();
    });
    if (comps.size() > 1 && square) return split_resultant(sys, comps, opts);
  }

  std::vector<CoefficientList> coeffs;
  bool numeric = true;
  for (const auto& f : sys.polys()) {
    coeffs.push_back(coefficients_of(f, coeff_ctx));
    for (const auto& [mono, c] : coeffs.back()) numeric = numeric && c.is_constant();
  }
  const auto layout = macaulay_layout(sys.degrees());
  if (!numeric && layout.size() > opts.symbolic_cap)
    throw SymbolicCapExceeded("Macaulay matrix of size " + std::to_string(layout.size()) +
                              " exceeds the symbolic cap " + std::to_string(opts.symbolic_cap) +
                              "; specialize the parameters first");

  if (numeric) {
    std::vector<std::vector<std::pair<std::vector<Exponent>, Scalar>>> scalars;
    for (const auto& list : coeffs) {
      scalars.emplace_back();
      for (const auto& [mono, c] : list) scalars.back().emplace_back(mono, c.constant_value());
    }
    auto mat = build_macaulay<Scalar>(layout, sys.degrees(), scalars, Scalar(0));
    Scalar minor = layout.nonreduced.empty()
                       ? Scalar(1)
                       : determinant(mat.submatrix(layout.nonreduced), opts.kernel);
    if (minor == 0) throw DegenerateSpecialization("reduced Macaulay minor vanishes");
    return Polynomial::constant(coeff_ctx, Scalar(determinant(mat, opts.kernel) / minor));
  }

  auto mat = build_macaulay<Polynomial>(layout, sys.degrees(), coeffs, Polynomial(coeff_ctx));
  Polynomial minor = layout.nonreduced.empty()
                         ? Polynomial::constant(coeff_ctx, 1)
                         : bareiss_determinant(mat.submatrix(layout.nonreduced), opts.kernel);
  if (minor.is_zero()) throw DegenerateSpecialization("reduced Macaulay minor vanishes identically");
  return exact_divide(bareiss_determinant(std::move(mat), opts.kernel), minor);
}

// For numeric systems: Res = 0 exactly when the multiples of degree nu do not
// span every monomial of degree nu (nu is past the regularity bound).
bool numeric_common_root(const HomogeneousSystem& sys) {
  const auto coeff_ctx = coefficient_context(sys.context());
  const auto layout = macaulay_layout(sys.degrees());
  std::map<std::vector<Exponent>, std::size_t> column_of;
  for (std::size_t c = 0; c < layout.size(); ++c) column_of.emplace(layout.columns[c], c);
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    std::vector<std::pair<std::vector<Exponent>, Scalar>> coeffs;
    for (const auto& [mono, c] : coefficients_of(sys.polys()[i], coeff_ctx)) {
      if (!c.is_constant()) return false;
      coeffs.emplace_back(mono, c.constant_value());
    }
    std::vector<std::vector<Exponent>> shifts;
    std::vector<Exponent> cur(sys.size(), 0);
    monomials_rec(0, layout.critical_degree - sys.degrees()[i], cur, shifts);
    for (const auto& shift : shifts) {
      rows.emplace_back();
      for (const auto& [mono, c] : coeffs) {
        std::vector<Exponent> target(shift);
        for (std::size_t v = 0; v < target.size(); ++v) target[v] += mono[v];
        rows.back().emplace_back(column_of.at(target), c);
      }
    }
  }
  Matrix<Scalar> m(rows.size(), layout.size(), Scalar(0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m(r, c) = v;
  return rank(m) < layout.size();
}

Polynomial resultant_with_retries(const HomogeneousSystem& sys, const ResultantOptions& opts) {
  try {
    return resultant_impl(sys, opts);
  } catch (const DegenerateSpecialization&) {
    if (opts.max_retries <= 0) throw;
  }
  // Res(f o A) = det(A)^{d_1...d_m} Res(f).
  std::mt19937_64 rng(opts.seed);
  const std::uint64_t exponent = degree_product(sys.degrees());
  ResultantOptions inner = opts;
  inner.split_disjoint = false;
  for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
    const auto a = random_change_of_variables(sys.size(), rng);
    std::vector<Polynomial> moved;
    for (const auto& f : sys.polys()) moved.push_back(linear_substitute(f, a));
    try {
      Polynomial res = resultant_impl(HomogeneousSystem(std::move(moved)), inner);
      return res * scalar_power_inverse(determinant(a, Kernel::Serial), exponent, res.context());
    } catch (const DegenerateSpecialization&) {
    }
  }
  if (numeric_common_root(sys)) return Polynomial(coefficient_context(sys.context()));
  throw DegenerateSpecialization("reduced Macaulay minor vanished after " +
                                 std::to_string(opts.max_retries) +
                                 " random changes of variables (degenerate specialization)");
}

Polynomial split_resultant(const HomogeneousSystem& sys, const std::vector<Component>& comps,
                           const ResultantOptions& opts) {
  // Res(F, G) = Res(F)^{prod deg G} * Res(G)^{prod deg F} for systems in
  // disjoint variable sets (up to sign).
  const auto& ctx = sys.context();
  const auto coeff_ctx = coefficient_context(ctx);
  Polynomial result = Polynomial::constant(coeff_ctx, 1);
  const std::uint64_t total = degree_product(sys.degrees());
  for (const auto& c : comps) {
    std::vector<std::string> names;
    for (auto v : c.vars) names.push_back(ctx->main_names()[v]);
    auto sub_ctx = RingContext::make_unsplit(names, ctx->param_names());
    std::vector<Polynomial> sub;
    std::uint64_t inside = 1;
    for (auto i : c.polys) {
      sub.push_back(change_context(sys.polys()[i], sub_ctx));
      inside *= sys.degrees()[i];
    }
    Polynomial part = resultant_with_retries(HomogeneousSystem(std::move(sub)), opts);
    result *= change_context(part, coeff_ctx).pow(total / inside);
  }
  return result;
}

}  // namespace

MacaulayLayout macaulay_layout(const std::vector<unsigned>& degrees) {
  if (degrees.empty()) throw DomainError("empty degree vector");
  MacaulayLayout layout;
  unsigned nu = 1;
  for (auto d : degrees) {
    if (d == 0) throw DomainError("degrees must be positive");
    nu += d - 1;
  }
  layout.critical_degree = nu;
  std::vector<Exponent> cur(degrees.size(), 0);
  monomials_rec(0, nu, cur, layout.columns);
  for (std::size_t c = 0; c < layout.columns.size(); ++c) {
    const auto& alpha = layout.columns[c];
    std::size_t hits = 0;
    std::size_t first = degrees.size();
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (alpha[i] >= degrees[i]) {
        if (hits == 0) first = i;
        ++hits;
      }
    }
    // nu exceeds sum(d_i - 1), so some x_i^{d_i} always divides.
    layout.row_poly.push_back(first);
    if (hits >= 2) layout.nonreduced.push_back(c);
  }
  return layout;
}

ContextPtr coefficient_context(const ContextPtr& ctx) {
  return RingContext::coefficients(ctx->param_names());
}

Polynomial macaulay_resultant(const HomogeneousSystem& sys, const ResultantOptions& opts) {
  return resultant_with_retries(sys, opts);
}

Scalar numeric_resultant(const HomogeneousSystem& sys, const ResultantOptions& opts) {
  Polynomial r = macaulay_resultant(sys, opts);
  if (!r.is_constant())
    throw DomainError("numeric_resultant called on a system with free parameters");
  return r.constant_value();
}

Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g) {
  const auto& ctx = f.context();
  if (!same_context(ctx, g.context())) throw ContextError("operands in different contexts");
  if (ctx->num_main() != 2)
    throw DomainError("Sylvester resultant needs exactly two main variables");
  HomogeneousSystem sys({f, g});
  const unsigned d1 = sys.degrees()[0];
  const unsigned d2 = sys.degrees()[1];
  const auto coeff_ctx = coefficient_context(ctx);
  // Coefficient of x^{d-k} y^k.
  auto coefficient_row = [&](const Polynomial& h, unsigned d) {
    std::vector<Polynomial> row(d + 1, Polynomial(coeff_ctx));
    for (const auto& [mono, c] : coefficients_of(h, coeff_ctx)) row[mono[1]] = c;
    return row;
  };
  const auto a = coefficient_row(f, d1);
  const auto b = coefficient_row(g, d2);
  const std::size_t n = d1 + d2;
  Matrix<Polynomial> m(n, n, Polynomial(coeff_ctx));
  for (std::size_t r = 0; r < d2; ++r)
    for (std::size_t k = 0; k <= d1; ++k) m(r, r + k) = a[k];
  for (std::size_t r = 0; r < d1; ++r)
    for (std::size_t k = 0; k <= d2; ++k) m(d2 + r, r + k) = b[k];
  return bareiss_determinant(std::move(m), Kernel::Serial);
}

Polynomial linear_substitute(const Polynomial& f, const Matrix<Scalar>& a) {
  const auto& ctx = f.context();
  const std::size_t m = ctx->num_main();
  if (a.rows() != m || a.cols() != m) throw DomainError("change of variables has wrong size");
  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial l(ctx);
    for (std::size_t j = 0; j < m; ++j)
      if (a(i, j) != 0) l += Polynomial::symbol(ctx, j) * a(i, j);
    forms.push_back(std::move(l));
  }
  // Cache powers of each linear form.
  std::vector<std::vector<Polynomial>> powers(m);
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& list = powers[i];
    if (list.empty()) list.push_back(Polynomial::constant(ctx, 1));
    while (list.size() <= e) list.push_back(list.back() * forms[i]);
    return list[e];
  };
  Polynomial out(ctx);
  for (const auto& t : f.terms()) {
    Monomial params(t.mono);
    for (std::size_t i = 0; i < m; ++i) params[i] = 0;
    Polynomial term = Polynomial::from_terms(ctx, {Polynomial::Term{params, t.coef}});
    for (std::size_t i = 0; i < m; ++i)
      if (t.mono[i] != 0) term *= power(i, t.mono[i]);
    out += term;
  }
  return out;
}

}  // namespace eqres
