#pragma once

#include <cstdint>
#include <vector>

#include "solenoid/point.hpp"

namespace solenoid {

/// The fiber of h^k over the identity, truncated to a fixed depth.
struct FiberReport {
  Integer k;
  Integer degree;
  /// Sorted with coords_less; representatives.size() == degree.
  std::vector<TruncatedPoint> representatives;
  /// From this level on, fiber coordinates are canonical lifts of the ones
  /// below, so truncation at any depth >= this level is injective on the fiber.
  std::uint64_t stabilization_level;
};

/// h^k: coordinatewise z -> z^k. k >= 1.
TruncatedPoint potency(const TruncatedPoint& x, const Integer& k);

/// Degree of h^k: the part of k built from primes that occur only finitely
/// often in the sequence. 1 exactly when h^k is a homeomorphism, k exactly
/// when it is a k-fold covering.
Integer degree(const PrimeSeqSpec& seq, const Integer& k);

/// 1 + the last index whose term divides degree(seq, k) (1 if none does).
std::uint64_t stabilization_level(const PrimeSeqSpec& seq, const Integer& k);

/// Constructs the fiber from the generator with coordinate 1/s at the
/// stabilization level (s = degree), lifted canonically above it and pushed
/// down by the bonding maps below it. Throws DepthTooShallow when depth is
/// below the stabilization level.
FiberReport fiber_over_identity(const PrimeSeqSpec& seq, const Integer& k, std::uint64_t depth);

/// Smallest depth fiber_oracle accepts: prefix + cycle length * (largest
/// exponent in k) + 1 for cyclic tails, prefix + 1 for universal tails.
std::uint64_t oracle_min_depth(const PrimeSeqSpec& seq, const Integer& k);

/// Brute-force fiber: enumerates k-torsion coordinate tuples and keeps those
/// whose top coordinate survives in the stable image of the bonding maps
/// beyond `depth`, walking a horizon fixed from the sequence description.
/// Shares no code with degree() or fiber_over_identity(). k is limited to
/// values whose residues can be enumerated (k <= 2^24).
FiberReport fiber_oracle(const PrimeSeqSpec& seq, const Integer& k, std::uint64_t depth);

bool admits_k_fold(const PrimeSeqSpec& seq, const Integer& k);
bool is_homeomorphism(const PrimeSeqSpec& seq, const Integer& k);

}  // namespace solenoid
