#include "solenoid/dynamics.hpp"

#include <map>

#include "solenoid/covering.hpp"
#include "solenoid/error.hpp"
#include "solenoid/numtheory.hpp"

namespace solenoid {

Integer euler_totient(const Integer& m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "totient needs m >= 1, got " + m.str());
  return nt::totient(m);
}

std::optional<Prime> usable_prime(const PrimeSeqSpec& seq, const Integer& k) {
  if (const auto* u = seq.universal_tail()) {
    for (Prime q : u->excluded) {
      if (k % q != 0) return q;
    }
    return std::nullopt;
  }
  // Infinitely many primes miss both the cycle and k, so this terminates.
  for (std::size_t i = 0;; ++i) {
    Prime q = nt::prime_at(i);
    if (in_S(seq, q) && k % q != 0) return q;
  }
}

PeriodicClass classify_periodic(const PrimeSeqSpec& seq, const Integer& k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1, got " + k.str());
  if (k == 1) return {PeriodicClass::Kind::AllPoints, 0, {}};
  const SClassification s = s_classification(seq);
  const int proposition = s.kind == SClassification::Kind::Empty      ? 5
                          : s.kind == SClassification::Kind::Infinite ? 6
                                                                      : 7;
  if (auto q = usable_prime(seq, k)) return {PeriodicClass::Kind::Dense, proposition, {*q}};
  return {PeriodicClass::Kind::OnlyIdentity, proposition, s.primes};
}

PeriodicWitness construct_periodic_witness(const PrimeSeqSpec& seq, const Integer& k,
                                           std::uint64_t arc_level, const Arc& arc, Prime q,
                                           std::uint64_t min_depth) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "witness construction needs k >= 2");
  if (arc_level < 1) throw Error(ErrorKind::BadIndex, "arc level must be >= 1");
  if (!in_S(seq, q)) {
    throw Error(ErrorKind::QNotUsable,
                std::to_string(q) + " occurs infinitely often in " + seq.to_string());
  }
  if (k % q == 0) {
    throw Error(ErrorKind::QNotUsable, std::to_string(q) + " divides k = " + k.str());
  }

  const std::uint64_t level = std::max(arc_level, last_occurrence(seq, q) + 1);
  const Arc component = arc_preimage_component(arc, term_product(seq, arc_level, level), 0);

  // The open component has positive length, so some q^m exceeds its
  // reciprocal and the search ends.
  unsigned m = 1;
  Integer torsion = q;
  std::optional<Angle> z = first_root_of_unity_in_arc(torsion, component);
  while (!z) {
    ++m;
    torsion *= q;
    z = first_root_of_unity_in_arc(torsion, component);
  }

  const std::uint64_t depth = std::max(level + 3, min_depth);
  TruncatedPoint at_level = TruncatedPoint::from_top(seq, level, *z);
  TruncatedPoint point = extend_back(at_level, depth);

  return PeriodicWitness{
      point,
      k,
      q,
      m,
      euler_totient(torsion),
      nt::multiplicative_order(k, point.order()),
      arc_level,
      arc,
      level,
  };
}

Integer count_periodic(const PrimeSeqSpec& seq, const Integer& k, unsigned m) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "count_periodic needs k >= 2");
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "count_periodic needs m >= 1");
  return degree(seq, nt::ipow(k, m) - 1);
}

OrbitRecord orbit(const TruncatedPoint& x, const Integer& k, std::uint64_t max_steps) {
  std::map<std::vector<Angle>, std::uint64_t> seen;
  TruncatedPoint current = x;
  seen.emplace(current.coords(), 0);
  for (std::uint64_t step = 1; step <= max_steps; ++step) {
    current = potency(current, k);
    auto [it, inserted] = seen.emplace(current.coords(), step);
    if (!inserted) return OrbitRecord{it->second, step - it->second};
  }
  return OrbitRecord{};
}

}  // namespace solenoid
