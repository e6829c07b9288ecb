#pragma once

// Shared sequence families, random generators and independent oracles for
// the test suites. Nothing here calls the library's decision procedures.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "solenoid/point.hpp"
#include "solenoid/primeseq.hpp"

namespace solenoid::testing {

// The sequences named by the acceptance grid.
inline std::vector<PrimeSeqSpec> acceptance_grid() {
  return {
      PrimeSeqSpec::parse("cycle=[2]"),
      PrimeSeqSpec::parse("cycle=[3]"),
      PrimeSeqSpec::parse("cycle=[2,3]"),
      PrimeSeqSpec::parse("prefix=[5];cycle=[2]"),
      PrimeSeqSpec::parse("prefix=[3];cycle=[2]"),
      PrimeSeqSpec::parse("universal"),
      PrimeSeqSpec::parse("universal=exclude[2]"),
      PrimeSeqSpec::parse("universal=exclude[2,3]"),
  };
}

// A wider family for property tests.
inline std::vector<PrimeSeqSpec> spec_family() {
  std::vector<PrimeSeqSpec> out = acceptance_grid();
  for (const char* text : {"prefix=[5,7];cycle=[2]", "prefix=[2,2,3];cycle=[5]", "cycle=[2,2,3]",
                           "cycle=[7,5]", "prefix=[3,3];universal=exclude[3]",
                           "prefix=[2];universal=exclude[2,5]", "prefix=[5,5];cycle=[2]",
                           "universal=exclude[7]"}) {
    out.push_back(PrimeSeqSpec::parse(text));
  }
  return out;
}

inline PrimeSeqSpec random_spec(std::mt19937_64& rng) {
  static const std::vector<Prime> small{2, 3, 5, 7, 11};
  auto pick = [&] { return small[rng() % small.size()]; };
  std::vector<Prime> prefix(rng() % 4);
  for (auto& p : prefix) p = pick();
  if (rng() % 2 == 0) {
    std::vector<Prime> cycle(1 + rng() % 3);
    for (auto& p : cycle) p = pick();
    return PrimeSeqSpec::cycle(prefix, cycle);
  }
  std::vector<Prime> excluded;
  for (Prime p : {2, 3, 5}) {
    if (rng() % 3 == 0) excluded.push_back(p);
  }
  return PrimeSeqSpec::universal(prefix, excluded);
}

// A compatible torsion point: random top coordinate of order <= max_den,
// lower levels by the bonding maps.
inline TruncatedPoint random_point(std::mt19937_64& rng, const PrimeSeqSpec& seq,
                                   std::uint64_t depth, std::uint64_t max_den = 60) {
  std::uint64_t den = 1 + rng() % max_den;
  std::uint64_t num = rng() % den;
  return TruncatedPoint::from_top(seq, depth, Angle::from_fraction(num, den));
}

inline std::vector<Prime> first_terms(const PrimeSeqSpec& seq, std::uint64_t count) {
  std::vector<Prime> out;
  TermCursor cursor(seq);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(cursor.next());
  return out;
}

// Bounded-horizon equivalence oracle: count each prime <= 100 among the first
// `horizon` terms; a prime still present in the second half of the window is
// treated as occurring infinitely often. Equivalent iff both sequences agree
// on which primes are infinite.
inline bool equivalent_by_counting(const PrimeSeqSpec& a, const PrimeSeqSpec& b,
                                   std::uint64_t horizon = 10000) {
  auto infinite_primes = [&](const PrimeSeqSpec& s) {
    std::map<Prime, std::uint64_t> late;
    TermCursor cursor(s);
    for (std::uint64_t i = 1; i <= horizon; ++i) {
      Prime p = cursor.next();
      if (i > horizon / 2 && p <= 100) ++late[p];
    }
    std::vector<Prime> out;
    for (const auto& [p, count] : late) out.push_back(p);
    return out;
  };
  return infinite_primes(a) == infinite_primes(b);
}

// Search-based membership: does den divide p_1 ... p_n for some n <= horizon?
inline bool member_by_search(const PrimeSeqSpec& seq, Integer den, std::uint64_t horizon = 3000) {
  TermCursor cursor(seq);
  for (std::uint64_t i = 0; i < horizon && den != 1; ++i) {
    Prime p = cursor.next();
    if (den % p == 0) den /= p;
  }
  return den == 1;
}

inline std::uint64_t brute_totient(std::uint64_t m) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= m; ++a) {
    std::uint64_t x = a, y = m;
    while (y != 0) {
      std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    if (x == 1) ++count;
  }
  return count;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace solenoid::testing
