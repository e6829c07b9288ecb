#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "solenoid/integer.hpp"

namespace solenoid::nt {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

// The index-th prime, 0-based: prime_at(0) == 2. Thread-safe; the backing
// table grows on demand.
Prime prime_at(std::size_t index);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Inverse of a modulo m in [0, m). Throws Error(NotCoprime) when gcd(a, m) > 1.
Integer mod_inverse(const Integer& a, const Integer& m);

Integer pow_mod(Integer base, Integer exp, const Integer& m);
Integer ipow(const Integer& base, unsigned exp);

// Largest e with p^e | n (n != 0, p >= 2).
unsigned valuation(Integer n, const Integer& p);

// n with every factor p removed.
Integer strip_factor(Integer n, const Integer& p);

struct PrimePower {
  Integer prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization by trial division, primes ascending. n >= 1;
// factorize(1) is empty. Intended for the moderate sizes this library sees
// (totients, orders of constructed torsion points).
std::vector<PrimePower> factorize(Integer n);

// Euler's function from the canonical factorization:
// prod q^(l-1) (q - 1), with totient(1) == 1.
Integer totient(const Integer& n);

// Least t >= 1 with k^t == 1 (mod n). Requires gcd(k, n) == 1; order mod 1 is 1.
Integer multiplicative_order(const Integer& k, const Integer& n);

}  // namespace solenoid::nt
