#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eqres/combinatorics.hpp"
#include "eqres/polynomial.hpp"

namespace eqres {

/// Block-preserving permutation of {0..n-1} (0-based internally).
class Permutation {
 public:
  static Permutation identity(std::size_t n);
  /// Swap of two indices of the same block; throws DomainError otherwise.
  static Permutation transposition(std::size_t n, std::size_t split, std::size_t i, std::size_t j);
  /// Throws DomainError unless `image` is a bijection that preserves both blocks.
  Permutation(std::vector<std::size_t> image, std::size_t split);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_.at(i); }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

 private:
  Permutation() = default;
  std::vector<std::size_t> image_;
};

/// sigma(f)(x_1..x_n) = f(x_sigma(1), .., x_sigma(n)).
Polynomial apply_permutation(const Permutation& sigma, const Polynomial& f);

/// n homogeneous polynomials f^{1..n} of common degree d, equivariant under
/// S_{1..p} x S_{p+1..n}. Only check_equivariance() constructs validated ones.
class EquivariantSystem {
 public:
  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Polynomial>& polys() const noexcept { return polys_; }
  const Polynomial& operator[](std::size_t i) const { return polys_[i]; }
  std::size_t n() const noexcept { return polys_.size(); }
  std::size_t p() const noexcept { return ctx_->split(); }
  std::size_t q() const noexcept { return n() - p(); }
  unsigned degree() const noexcept { return degree_; }

 private:
  friend EquivariantSystem check_equivariance(std::vector<Polynomial>, const ContextPtr&);
  EquivariantSystem() = default;
  ContextPtr ctx_;
  std::vector<Polynomial> polys_;
  unsigned degree_ = 0;
};

/// Validates homogeneity, common degree and sigma(f^k) = f^sigma(k) on the
/// adjacent transpositions of both blocks. Throws ValidationError naming the
/// failing transposition and label.
EquivariantSystem check_equivariance(std::vector<Polynomial> polys, const ContextPtr& ctx);

/// Iterated divided difference f^(i_1..i_k) over 0-based indices of one block.
/// Recursion replaces i_{k-1} by i_k at each level.
Polynomial divided_difference(const EquivariantSystem& sys, const std::vector<std::size_t>& indices);

/// Thread-safe memo of divided differences keyed by the sorted index set.
class DividedDifferenceTable {
 public:
  explicit DividedDifferenceTable(const EquivariantSystem& sys) : sys_(&sys) {}
  Polynomial get(const std::vector<std::size_t>& indices);

 private:
  const EquivariantSystem* sys_;
  std::mutex mutex_;
  std::map<std::vector<std::size_t>, Polynomial> cache_;
};

/// The collapsing map x_i -> y_t / y'_t for a partition pair.
class SpecializationMap {
 public:
  SpecializationMap(const ContextPtr& source, PartitionPair lambda);

  const PartitionPair& pair() const noexcept { return pair_; }
  const ContextPtr& source() const noexcept { return source_; }
  const ContextPtr& target() const noexcept { return target_; }
  /// Target main-variable index of each source main variable.
  const std::vector<std::size_t>& variable_map() const noexcept { return map_; }
  /// Leftmost source index of each fiber: first block then second block.
  const std::vector<std::size_t>& first_representatives() const noexcept { return reps1_; }
  const std::vector<std::size_t>& second_representatives() const noexcept { return reps2_; }

 private:
  PartitionPair pair_;
  ContextPtr source_;
  ContextPtr target_;
  std::vector<std::size_t> map_;
  std::vector<std::size_t> reps1_;
  std::vector<std::size_t> reps2_;
};

Polynomial rho_specialize(const SpecializationMap& map, const Polynomial& f);

/// [rho(f^(i1)), rho(f^(i1,i2)), .., rho(f^(i1..ir1)), rho(f^(j1)), .., rho(f^(j1..jr2))].
/// Requires r1 <= d and r2 <= d. The optional table shares divided differences
/// across calls.
std::vector<Polynomial> build_factor_system(const EquivariantSystem& sys,
                                            const SpecializationMap& map,
                                            DividedDifferenceTable* table = nullptr);

/// The degree-0 divided difference over the first d+1 indices of block 1 or 2.
Polynomial constant_divided_difference(const EquivariantSystem& sys, int block,
                                       DividedDifferenceTable* table = nullptr);

}  // namespace eqres
