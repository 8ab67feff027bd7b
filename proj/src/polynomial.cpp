#include "eqres/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "eqres/error.hpp"

namespace eqres {

// ---- RingContext ----------------------------------------------------------

RingContext::RingContext(std::vector<std::string> main, std::vector<std::string> params,
                         std::size_t split)
    : main_(std::move(main)), params_(std::move(params)), split_(split) {
  std::unordered_set<std::string> seen;
  for (const auto* names : {&main_, &params_}) {
    for (const auto& n : *names) {
      if (n.empty()) throw ContextError("empty symbol name");
      if (!seen.insert(n).second) throw ContextError("duplicate symbol name '" + n + "'");
    }
  }
}

ContextPtr RingContext::make(std::vector<std::string> main, std::vector<std::string> params,
                             std::size_t split) {
  if (split < 1 || split >= main.size())
    throw ContextError("block split must satisfy 1 <= p < n (p=" + std::to_string(split) +
                       ", n=" + std::to_string(main.size()) + ")");
  return ContextPtr(new RingContext(std::move(main), std::move(params), split));
}

ContextPtr RingContext::make_unsplit(std::vector<std::string> main,
                                     std::vector<std::string> params) {
  return ContextPtr(new RingContext(std::move(main), std::move(params), 0));
}

ContextPtr RingContext::coefficients(std::vector<std::string> params) {
  return ContextPtr(new RingContext({}, std::move(params), 0));
}

const std::string& RingContext::name(std::size_t symbol) const {
  if (symbol < main_.size()) return main_[symbol];
  return params_.at(symbol - main_.size());
}

std::optional<std::size_t> RingContext::find(const std::string& name) const {
  for (std::size_t i = 0; i < main_.size(); ++i)
    if (main_[i] == name) return i;
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return main_.size() + i;
  return std::nullopt;
}

std::size_t RingContext::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw ContextError("unknown symbol '" + name + "'");
  return *i;
}

// ---- Scalars and monomials ------------------------------------------------

Scalar make_scalar(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionError("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::uint64_t Monomial::main_degree(std::size_t num_main) const {
  return std::accumulate(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(num_main),
                         std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(other.exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// ---- Polynomial -----------------------------------------------------------

namespace {

using Term = Polynomial::Term;

void require_same(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw ContextError("polynomials belong to different ring contexts");
}

// Merge two sorted term lists, b scaled by `sign` (+1 or -1).
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = grlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coef = -out.back().coef;
    } else {
      Scalar s = sign > 0 ? Scalar(a[i].coef + b[j].coef) : Scalar(a[i].coef - b[j].coef);
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coef = -out.back().coef;
  }
  return out;
}

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_compare(x.mono, y.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms = std::move(out);
}

}  // namespace

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw ContextError("null ring context");
}

Polynomial Polynomial::constant(ContextPtr ctx, const Scalar& value) {
  Polynomial p(std::move(ctx));
  if (value != 0) p.terms_.push_back(Term{Monomial(p.ctx_->num_symbols()), value});
  return p;
}

Polynomial Polynomial::symbol(ContextPtr ctx, std::size_t index) {
  Polynomial p(std::move(ctx));
  if (index >= p.ctx_->num_symbols()) throw ContextError("symbol index out of range");
  Monomial m(p.ctx_->num_symbols());
  m[index] = 1;
  p.terms_.push_back(Term{std::move(m), Scalar(1)});
  return p;
}

Polynomial Polynomial::symbol(ContextPtr ctx, const std::string& name) {
  const auto i = ctx->index(name);
  return symbol(std::move(ctx), i);
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Polynomial p(std::move(ctx));
  for (const auto& t : terms)
    if (t.mono.size() != p.ctx_->num_symbols())
      throw ContextError("monomial length does not match context");
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Scalar Polynomial::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant: " + format(*this));
  return terms_.empty() ? Scalar(0) : terms_.front().coef;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same(ctx_, other.ctx_);
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same(ctx_, other.ctx_);
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= s;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.ctx_, b.ctx_);
  Polynomial r(a.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  // Each row small[i]*large is already sorted; merge rows pairwise.
  std::vector<std::vector<Term>> rows;
  rows.reserve(small.size());
  for (const auto& s : small.terms_) {
    std::vector<Term> row;
    row.reserve(large.size());
    for (const auto& l : large.terms_) row.push_back(Term{s.mono * l.mono, s.coef * l.coef});
    rows.push_back(std::move(row));
  }
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2)
      next.push_back(merge_terms(rows[i], rows[i + 1], +1));
    if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  r.terms_ = std::move(rows.front());
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(ctx_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same(f.context(), g.context());
  if (g.is_zero()) throw DivisionError("division by zero polynomial");
  const auto& ctx = f.context();
  if (g.is_constant()) {
    Polynomial q = f;
    q *= Scalar(1 / g.constant_value());
    return q;
  }
  const Term& lead = g.leading_term();
  std::vector<Term> rem = f.terms();
  std::vector<Term> quot;
  std::vector<Term> scaled;
  while (!rem.empty()) {
    const Term& r0 = rem.front();
    if (!lead.mono.divides(r0.mono))
      throw DivisionError("division is not exact: " + format(f) + " by " + format(g));
    Term t{lead.mono.quotient_of(r0.mono), r0.coef / lead.coef};
    scaled.clear();
    scaled.reserve(g.size());
    for (const auto& gt : g.terms()) scaled.push_back(Term{t.mono * gt.mono, t.coef * gt.coef});
    rem = merge_terms(rem, scaled, -1);
    quot.push_back(std::move(t));
  }
  // Quotient terms were produced in decreasing order already.
  return Polynomial::from_terms(ctx, std::move(quot));
}

Polynomial partial_derivative(const Polynomial& f, std::size_t main_var) {
  const auto& ctx = f.context();
  if (main_var >= ctx->num_main())
    throw DomainError("derivative variable must be a main variable");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const Exponent e = t.mono[main_var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m[main_var] = e - 1;
    out.push_back(Term{std::move(m), t.coef * e});
  }
  return Polynomial::from_terms(ctx, std::move(out));
}

Polynomial partial_derivative(const Polynomial& f, const std::string& name) {
  const auto idx = f.context()->find(name);
  if (!idx) throw ContextError("unknown symbol '" + name + "'");
  if (!f.context()->is_main(*idx))
    throw DomainError("'" + name + "' is a parameter, not a main variable");
  return partial_derivative(f, *idx);
}

Polynomial substitute_variables(const Polynomial& f, const std::vector<std::size_t>& main_map,
                                const ContextPtr& target) {
  const auto& src = *f.context();
  if (main_map.size() != src.num_main())
    throw ContextError("substitution map must cover every main variable");
  std::vector<std::size_t> where(src.num_symbols());
  for (std::size_t i = 0; i < src.num_main(); ++i) {
    if (main_map[i] >= target->num_main())
      throw ContextError("substitution target is not a main variable of the target context");
    where[i] = main_map[i];
  }
  for (std::size_t k = 0; k < src.num_params(); ++k) {
    const auto& name = src.param_names()[k];
    auto j = target->find(name);
    if (!j || target->is_main(*j))
      throw ContextError("parameter '" + name + "' is not declared in the target context");
    where[src.num_main() + k] = *j;
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->num_symbols());
    for (std::size_t s = 0; s < t.mono.size(); ++s) m[where[s]] += t.mono[s];
    out.push_back(Term{std::move(m), t.coef});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial substitute_variables(const Polynomial& f,
                                const std::map<std::string, std::string>& renaming,
                                const ContextPtr& target) {
  const auto& src = *f.context();
  std::vector<std::size_t> main_map(src.num_main());
  for (std::size_t i = 0; i < src.num_main(); ++i) {
    const auto& from = src.main_names()[i];
    auto it = renaming.find(from);
    const std::string& to = it == renaming.end() ? from : it->second;
    auto j = target->find(to);
    if (!j) throw ContextError("substitution target '" + to + "' is not declared");
    main_map[i] = *j;
  }
  return substitute_variables(f, main_map, target);
}

Polynomial change_context(const Polynomial& f, const ContextPtr& target) {
  if (same_context(f.context(), target)) return f;
  const auto& src = *f.context();
  const auto used = used_symbols(f);
  std::vector<std::size_t> where(src.num_symbols(), 0);
  for (std::size_t s = 0; s < src.num_symbols(); ++s) {
    if (!used[s]) continue;
    auto j = target->find(src.name(s));
    if (!j) throw ContextError("symbol '" + src.name(s) + "' is not declared in target context");
    where[s] = *j;
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->num_symbols());
    for (std::size_t s = 0; s < t.mono.size(); ++s)
      if (t.mono[s] != 0) m[where[s]] += t.mono[s];
    out.push_back(Term{std::move(m), t.coef});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial evaluate(const Polynomial& f, const Assignment& at) {
  const auto& ctx = *f.context();
  std::vector<std::pair<std::size_t, const Scalar*>> assigned;
  for (const auto& [name, value] : at) {
    if (auto i = ctx.find(name)) assigned.emplace_back(*i, &value);
  }
  if (assigned.empty()) return f;
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Term r = t;
    for (const auto& [idx, value] : assigned) {
      const Exponent e = r.mono[idx];
      if (e == 0) continue;
      Scalar pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value->get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), value->get_den_mpz_t(), e);
      r.coef *= pw;
      r.mono[idx] = 0;
    }
    out.push_back(std::move(r));
  }
  return Polynomial::from_terms(f.context(), std::move(out));
}

DegreeInfo degree_and_homogeneity(const Polynomial& f) {
  DegreeInfo info;
  const auto nm = f.context()->num_main();
  for (const auto& t : f.terms()) {
    const auto d = t.mono.main_degree(nm);
    if (!info.degree) {
      info.degree = d;
    } else if (*info.degree != d) {
      info.homogeneous = false;
      info.degree = std::max(*info.degree, d);
    }
  }
  return info;
}

std::int64_t parameter_degree(const Polynomial& f) {
  std::int64_t best = -1;
  const auto nm = f.context()->num_main();
  for (const auto& t : f.terms()) {
    const auto d = static_cast<std::int64_t>(t.mono.total_degree() - t.mono.main_degree(nm));
    best = std::max(best, d);
  }
  return best;
}

std::vector<bool> used_symbols(const Polynomial& f) {
  std::vector<bool> used(f.context()->num_symbols(), false);
  for (const auto& t : f.terms())
    for (std::size_t s = 0; s < t.mono.size(); ++s)
      if (t.mono[s] != 0) used[s] = true;
  return used;
}

std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& ctx = *f.context();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Scalar c = t.coef;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t s = 0; s < t.mono.size(); ++s) {
      if (t.mono[s] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx.name(s);
      if (t.mono[s] > 1) mono += "^" + std::to_string(t.mono[s]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace eqres
