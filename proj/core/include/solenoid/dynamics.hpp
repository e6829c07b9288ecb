#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "solenoid/circle.hpp"
#include "solenoid/point.hpp"

namespace solenoid {

/// Euler's function via the canonical factorization; euler_totient(1) == 1.
Integer euler_totient(const Integer& m);

/// Structure of the periodic points of h^k.
struct PeriodicClass {
  enum class Kind { AllPoints, OnlyIdentity, Dense };

  Kind kind;
  /// Which of the three periodic-point propositions applies: 5 (every prime
  /// occurs infinitely often), 6 (infinitely many finitely-occurring primes)
  /// or 7 (finitely many). 0 for k == 1, where every point is periodic.
  int proposition;
  /// Dense: the prime used for witnesses (smallest finitely-occurring prime
  /// not dividing k). OnlyIdentity under proposition 7: the finitely
  /// occurring primes, all of which divide k.
  std::vector<Prime> primes;

  friend bool operator==(const PeriodicClass&, const PeriodicClass&) = default;
};

PeriodicClass classify_periodic(const PrimeSeqSpec& seq, const Integer& k);

/// Smallest prime q in S(P) with q not dividing k, if one exists.
std::optional<Prime> usable_prime(const PrimeSeqSpec& seq, const Integer& k);

struct PeriodicWitness {
  TruncatedPoint point;
  Integer k;
  Prime q;
  unsigned m;
  /// q^(m-1) (q - 1): an exponent n with (h^k)^n fixing the point.
  Integer claimed_period;
  /// Multiplicative order of k modulo the order of the point.
  Integer least_period;
  std::uint64_t arc_level;
  Arc arc;
  /// Level n at which the q^m-torsion coordinate was placed; no later term is q.
  std::uint64_t construction_level;
};

/// Builds a periodic point of h^k whose arc_level coordinate lies strictly
/// inside `arc`. The point is q^m-torsion with m minimal for the first
/// preimage component of the arc at the construction level. Depth is
/// max(construction_level + 3, min_depth).
///
/// Throws Error(QNotUsable) unless q is finitely occurring and coprime to k,
/// Error(NotPrime) if q is not prime.
PeriodicWitness construct_periodic_witness(const PrimeSeqSpec& seq, const Integer& k,
                                           std::uint64_t arc_level, const Arc& arc, Prime q,
                                           std::uint64_t min_depth = 0);

/// Number of points with (h^k)^m(x) == x: the kernel size of h^(k^m - 1).
Integer count_periodic(const PrimeSeqSpec& seq, const Integer& k, unsigned m);

struct OrbitRecord {
  /// Steps before the orbit enters its cycle; meaningful when period is set.
  std::uint64_t pre_period = 0;
  /// nullopt when no repeat was found within max_steps applications.
  std::optional<std::uint64_t> period;
};

/// Iterates h^k from x and reports the first exact repeat among the truncated points.
OrbitRecord orbit(const TruncatedPoint& x, const Integer& k, std::uint64_t max_steps);

}  // namespace solenoid
