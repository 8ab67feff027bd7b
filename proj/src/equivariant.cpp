#include "eqres/equivariant.hpp"

#include <algorithm>
#include <numeric>

#include "eqres/error.hpp"

namespace eqres {

// ---- permutations ---------------------------------------------------------

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.image_.resize(n);
  std::iota(p.image_.begin(), p.image_.end(), std::size_t{0});
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t split, std::size_t i,
                                       std::size_t j) {
  if (i >= n || j >= n) throw DomainError("transposition index out of range");
  if ((i < split) != (j < split)) throw DomainError("transposition crosses the block split");
  Permutation p = identity(n);
  std::swap(p.image_[i], p.image_[j]);
  return p;
}

Permutation::Permutation(std::vector<std::size_t> image, std::size_t split)
    : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    const auto k = image_[i];
    if (k >= image_.size() || hit[k]) throw DomainError("not a permutation");
    hit[k] = true;
    if ((i < split) != (k < split)) throw DomainError("permutation does not preserve the blocks");
  }
}

Polynomial apply_permutation(const Permutation& sigma, const Polynomial& f) {
  if (sigma.size() != f.context()->num_main())
    throw DomainError("permutation size does not match the number of main variables");
  return substitute_variables(f, sigma.image(), f.context());
}

// ---- equivariance check ---------------------------------------------------

namespace {

std::string transposition_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ")";
}

}  // namespace

EquivariantSystem check_equivariance(std::vector<Polynomial> polys, const ContextPtr& ctx) {
  const std::size_t n = ctx->num_main();
  const std::size_t p = ctx->split();
  if (p < 1 || p >= n) throw ValidationError("context has no valid block split");
  if (polys.size() != n)
    throw ValidationError("expected " + std::to_string(n) + " polynomials, got " +
                          std::to_string(polys.size()));
  std::optional<std::uint64_t> degree;
  for (std::size_t k = 0; k < n; ++k) {
    if (!same_context(polys[k].context(), ctx))
      throw ValidationError("f^{" + std::to_string(k + 1) + "} is in a different ring context");
    const auto info = degree_and_homogeneity(polys[k]);
    if (!info.degree)
      throw ValidationError("f^{" + std::to_string(k + 1) + "} is the zero polynomial");
    if (!info.homogeneous)
      throw ValidationError("f^{" + std::to_string(k + 1) + "} is not homogeneous");
    if (*info.degree == 0)
      throw ValidationError("f^{" + std::to_string(k + 1) + "} has degree 0");
    if (!degree) {
      degree = info.degree;
    } else if (*degree != *info.degree) {
      throw ValidationError("degree mismatch: f^{1} has degree " + std::to_string(*degree) +
                            " but f^{" + std::to_string(k + 1) + "} has degree " +
                            std::to_string(*info.degree));
    }
  }

  auto check_generator = [&](std::size_t i) {
    const auto tau = Permutation::transposition(n, p, i, i + 1);
    for (std::size_t k = 0; k < n; ++k) {
      if (apply_permutation(tau, polys[k]) != polys[tau(k)])
        throw ValidationError("equivariance violated: transposition " +
                              transposition_label(i, i + 1) + " maps f^{" + std::to_string(k + 1) +
                              "} to a polynomial different from f^{" + std::to_string(tau(k) + 1) +
                              "}");
    }
  };
  for (std::size_t i = 0; i + 1 < p; ++i) check_generator(i);
  for (std::size_t i = p; i + 1 < n; ++i) check_generator(i);

  EquivariantSystem sys;
  sys.ctx_ = ctx;
  sys.polys_ = std::move(polys);
  sys.degree_ = static_cast<unsigned>(*degree);
  return sys;
}

// ---- divided differences --------------------------------------------------

namespace {

void validate_indices(const EquivariantSystem& sys, const std::vector<std::size_t>& idx) {
  if (idx.empty()) throw DomainError("divided difference needs at least one index");
  const std::size_t p = sys.p();
  const bool first_block = idx.front() < p;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= sys.n()) throw DomainError("divided difference index out of range");
    if ((idx[k] < p) != first_block) throw DomainError("divided difference indices cross blocks");
    for (std::size_t l = 0; l < k; ++l)
      if (idx[l] == idx[k]) throw DomainError("divided difference indices must be distinct");
  }
  if (idx.size() > sys.degree() + 1)
    throw DomainError("divided difference over " + std::to_string(idx.size()) +
                      " indices exceeds d+1 = " + std::to_string(sys.degree() + 1));
}

Polynomial dd_rec(const EquivariantSystem& sys, const std::vector<std::size_t>& idx,
                  std::map<std::vector<std::size_t>, Polynomial>& memo) {
  if (auto it = memo.find(idx); it != memo.end()) return it->second;
  Polynomial result(sys.context());
  if (idx.size() == 1) {
    result = sys[idx.front()];
  } else {
    const std::size_t k = idx.size();
    std::vector<std::size_t> head(idx.begin(), idx.end() - 1);
    std::vector<std::size_t> swapped(head);
    swapped.back() = idx.back();
    const auto& ctx = sys.context();
    Polynomial num = dd_rec(sys, head, memo) - dd_rec(sys, swapped, memo);
    Polynomial den = Polynomial::symbol(ctx, idx[k - 2]) - Polynomial::symbol(ctx, idx[k - 1]);
    result = exact_divide(num, den);
  }
  memo.emplace(idx, result);
  return result;
}

}  // namespace

Polynomial divided_difference(const EquivariantSystem& sys, const std::vector<std::size_t>& indices) {
  validate_indices(sys, indices);
  std::map<std::vector<std::size_t>, Polynomial> memo;
  return dd_rec(sys, indices, memo);
}

Polynomial DividedDifferenceTable::get(const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> key(indices);
  std::sort(key.begin(), key.end());
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Polynomial value = divided_difference(*sys_, key);
  std::lock_guard lock(mutex_);
  return cache_.emplace(std::move(key), std::move(value)).first->second;
}

// ---- specialization -------------------------------------------------------

namespace {

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  std::string name = base;
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name = "_" + name;
  return name;
}

}  // namespace

SpecializationMap::SpecializationMap(const ContextPtr& source, PartitionPair lambda)
    : pair_(std::move(lambda)), source_(source) {
  const std::size_t n = source->num_main();
  const std::size_t p = source->split();
  if (p < 1 || p >= n) throw DomainError("specialization needs a block-split context");
  if (static_cast<std::size_t>(pair_.first.total()) != p ||
      static_cast<std::size_t>(pair_.second.total()) != n - p)
    throw DomainError("partition pair " + to_string(pair_) + " does not match the split (" +
                      std::to_string(p) + "," + std::to_string(n - p) + ")");
  const auto r1 = static_cast<std::size_t>(pair_.first.length());
  const auto r2 = static_cast<std::size_t>(pair_.second.length());
  const auto& params = source->param_names();
  std::vector<std::string> names;
  for (std::size_t t = 0; t < r1; ++t) names.push_back(fresh_name("y" + std::to_string(t + 1), params));
  for (std::size_t t = 0; t < r2; ++t)
    names.push_back(fresh_name("y'" + std::to_string(t + 1), params));
  target_ = RingContext::make(std::move(names), params, r1);

  map_.resize(n);
  std::size_t x = 0;
  for (std::size_t t = 0; t < r1; ++t) {
    reps1_.push_back(x);
    for (int u = 0; u < pair_.first[t]; ++u) map_[x++] = t;
  }
  for (std::size_t t = 0; t < r2; ++t) {
    reps2_.push_back(x);
    for (int u = 0; u < pair_.second[t]; ++u) map_[x++] = r1 + t;
  }
}

Polynomial rho_specialize(const SpecializationMap& map, const Polynomial& f) {
  return substitute_variables(f, map.variable_map(), map.target());
}

std::vector<Polynomial> build_factor_system(const EquivariantSystem& sys,
                                            const SpecializationMap& map,
                                            DividedDifferenceTable* table) {
  if (!same_context(sys.context(), map.source()))
    throw ContextError("specialization map was built for a different context");
  const auto d = static_cast<std::size_t>(sys.degree());
  const auto& reps1 = map.first_representatives();
  const auto& reps2 = map.second_representatives();
  if (reps1.size() > d || reps2.size() > d)
    throw DomainError("partition pair " + to_string(map.pair()) + " exceeds the degree cap r <= " +
                      std::to_string(d));
  std::vector<Polynomial> out;
  out.reserve(reps1.size() + reps2.size());
  for (const auto* reps : {&reps1, &reps2}) {
    std::vector<std::size_t> idx;
    for (std::size_t r : *reps) {
      idx.push_back(r);
      Polynomial dd = table ? table->get(idx) : divided_difference(sys, idx);
      out.push_back(rho_specialize(map, dd));
    }
  }
  return out;
}

Polynomial constant_divided_difference(const EquivariantSystem& sys, int block,
                                       DividedDifferenceTable* table) {
  if (block != 1 && block != 2) throw DomainError("block must be 1 or 2");
  const std::size_t size = block == 1 ? sys.p() : sys.q();
  const std::size_t start = block == 1 ? 0 : sys.p();
  const std::size_t d = sys.degree();
  if (size <= d)
    throw DomainError("block " + std::to_string(block) + " has size " + std::to_string(size) +
                      " <= d = " + std::to_string(d) + "; no constant divided difference");
  std::vector<std::size_t> idx(d + 1);
  std::iota(idx.begin(), idx.end(), start);
  return table ? table->get(idx) : divided_difference(sys, idx);
}

}  // namespace eqres
