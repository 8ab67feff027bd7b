#include "eqres/combinatorics.hpp"

#include <algorithm>

#include "eqres/error.hpp"

namespace eqres {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("a partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
    total_ += parts_[i];
  }
}

int Partition::multiplicity(int size) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), size));
}

std::string to_string(const Partition& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + ")";
}

std::string to_string(const PartitionPair& pair) {
  return "(" + to_string(pair.first) + "," + to_string(pair.second) + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::optional<int> max_length, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_length && static_cast<int>(prefix.size()) >= *max_length) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, max_length, out);
    prefix.pop_back();
  }
}

mpz_class factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int p, std::optional<int> max_length) {
  if (p <= 0) throw DomainError("can only partition a positive integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(p, p, prefix, max_length, out);
  return out;
}

std::uint64_t multinomial_m(const Partition& lambda) {
  mpz_class denom = 1;
  for (int j = 1; j <= lambda.total(); ++j) denom *= factorial(lambda.multiplicity(j));
  for (int part : lambda.parts()) denom *= factorial(part);
  mpz_class m = factorial(lambda.total()) / denom;
  if (!m.fits_ulong_p()) throw DomainError("multinomial coefficient overflows 64 bits");
  return m.get_ui();
}

std::vector<PartitionPair> enumerate_pairs(int p, int q, std::optional<int> cap1,
                                           std::optional<int> cap2) {
  const auto firsts = enumerate_partitions(p, cap1);
  const auto seconds = enumerate_partitions(q, cap2);
  std::vector<PartitionPair> out;
  out.reserve(firsts.size() * seconds.size());
  for (const auto& a : firsts)
    for (const auto& b : seconds) out.push_back(PartitionPair{a, b});
  return out;
}

mpz_class falling_product(int d, int r) {
  if (r < 1) throw DomainError("falling product needs at least one factor");
  mpz_class v = 1;
  for (int i = 0; i < r; ++i) v *= d - i;
  return v;
}

}  // namespace eqres
