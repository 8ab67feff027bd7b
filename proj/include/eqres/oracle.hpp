#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqres/decompose.hpp"

namespace eqres {

/// Parameter values of one trial; reproducible from (seed, index).
struct SpecializationPoint {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  Assignment values;
};

/// Numerators in [-bound, bound], denominators in [1, bound].
SpecializationPoint draw_point(const std::vector<std::string>& params, std::uint64_t seed,
                               std::uint64_t index, int bound);

enum class TrialStatus { Completed, Degenerate };

struct TrialRecord {
  std::uint64_t index = 0;
  SpecializationPoint point;
  TrialStatus status = TrialStatus::Completed;
  /// Direct resultant (discriminant: Res of the partials).
  Scalar lhs = 0;
  /// Decomposition product (discriminant: d^a times the product).
  Scalar rhs = 0;
  /// Closed-form reference value when one was supplied.
  std::optional<Scalar> reference;
  double seconds = 0;
};

struct Counterexample {
  std::uint64_t index = 0;
  Assignment point;
  Scalar lhs = 0;
  Scalar rhs = 0;
  std::string reason;
};

struct VerificationReport {
  std::size_t requested = 0;
  std::size_t completed = 0;
  std::size_t skipped = 0;
  /// +1 or -1 once fixed by a trial with both sides nonzero, else 0.
  int sign = 0;
  /// Sign relating the closed form to the direct side, when one was checked.
  int reference_sign = 0;
  std::optional<Counterexample> counterexample;
  std::vector<TrialRecord> trials;

  bool passed() const noexcept { return completed > 0 && !counterexample; }
};

struct VerifyOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  int bound = 10;
  ResultantOptions resultant;
  /// Run trials concurrently. Records are reduced in index order either way.
  bool parallel = true;
};

/// Checks Res(system) = +-(product of the decomposition) at random points.
/// An optional closed form (in the parameters) is compared with the direct side
/// up to its own global sign.
VerificationReport verify_decomposition(const EquivariantSystem& sys, const VerifyOptions& opts,
                                        const std::optional<Polynomial>& closed_form = std::nullopt);

/// Same, against an explicitly supplied (possibly altered) decomposition.
VerificationReport verify_decomposition(const EquivariantSystem& sys,
                                        const DecompositionResult& result,
                                        const VerifyOptions& opts,
                                        const std::optional<Polynomial>& closed_form = std::nullopt);

/// Checks d^a * product = +-Res(partials); a closed form of Disc(f) is checked
/// as d^a * Disc = +-Res(partials).
VerificationReport verify_discriminant(const Polynomial& f, const ContextPtr& ctx,
                                       const VerifyOptions& opts,
                                       const std::optional<Polynomial>& closed_form = std::nullopt);

VerificationReport verify_discriminant(const Polynomial& f, const DecompositionResult& result,
                                       const VerifyOptions& opts,
                                       const std::optional<Polynomial>& closed_form = std::nullopt);

enum class CoefficientMode { Parameters, Rationals };

/// f^{1} is a random degree-d form in x1, e_k(x2..xp) and e_k(x_{p+1}..xn);
/// f^{i} = (1 i) f^{1}. Block 2 is seeded the same way from x_{p+1}.
/// Parameter mode names the coefficients a1, a2, .. and b1, b2, ..
EquivariantSystem random_equivariant_system(std::size_t n, std::size_t p, unsigned d,
                                            std::uint64_t seed,
                                            CoefficientMode mode = CoefficientMode::Rationals,
                                            int bound = 10);

/// Counts set partitions of {1..p} with block sizes lambda by enumeration.
/// Throws DomainError for p > 9.
std::uint64_t brute_force_multinomial(const Partition& lambda);

}  // namespace eqres
