#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eqres {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept { return total_; }
  /// Number of parts (r in the decomposition formulas).
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Count of parts equal to `size`.
  int multiplicity(int size) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

std::string to_string(const Partition& lambda);

struct PartitionPair {
  Partition first;
  Partition second;
  bool operator==(const PartitionPair&) const = default;
};

std::string to_string(const PartitionPair& pair);

/// All partitions of p in descending lexicographic order, optionally limited
/// to at most `max_length` parts.
std::vector<Partition> enumerate_partitions(int p, std::optional<int> max_length = std::nullopt);

/// Number of set partitions of a p-element set with block sizes lambda:
/// p! / (prod_j s_j! * prod_i lambda_i!).
std::uint64_t multinomial_m(const Partition& lambda);

/// First-major Cartesian product of the partitions of p and q under the caps.
std::vector<PartitionPair> enumerate_pairs(int p, int q, std::optional<int> cap1 = std::nullopt,
                                           std::optional<int> cap2 = std::nullopt);

/// d (d-1) ... (d-r+1); r factors.
mpz_class falling_product(int d, int r);

}  // namespace eqres
