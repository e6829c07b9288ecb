#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "solenoid/integer.hpp"

namespace solenoid {

/// Tail that repeats `primes` forever.
struct CycleTail {
  std::vector<Prime> primes;

  friend bool operator==(const CycleTail&, const CycleTail&) = default;
};

/// Tail that emits blocks B_first, B_first+1, ... where B_i lists the first i
/// primes not in `excluded`, ascending. Every admissible prime therefore
/// occurs infinitely often. `first_block` is 1 for sequences written by hand;
/// it only moves when a sequence is shifted past part of its tail.
struct UniversalTail {
  std::vector<Prime> excluded;  // sorted, unique
  std::uint64_t first_block = 1;

  friend bool operator==(const UniversalTail&, const UniversalTail&) = default;
};

/// Finite description of an infinite prime sequence p_1, p_2, ...: a finite
/// prefix followed by a structured tail.
///
/// Text form (whitespace-insensitive):
///   [prefix=[p,...];](cycle=[p,...] | universal[=exclude[p,...]])[;start=N]
/// where `;start=N` is only valid after a universal tail.
class PrimeSeqSpec {
 public:
  using Tail = std::variant<CycleTail, UniversalTail>;

  /// Throws Error(NotPrime) on a composite entry and Error(InvalidArgument)
  /// on an empty cycle.
  static PrimeSeqSpec cycle(std::vector<Prime> prefix, std::vector<Prime> primes);
  static PrimeSeqSpec universal(std::vector<Prime> prefix, std::vector<Prime> excluded = {},
                                std::uint64_t first_block = 1);

  /// Throws ParseError (SyntaxError or NotPrime) with the offending position.
  static PrimeSeqSpec parse(std::string_view text);

  const std::vector<Prime>& prefix() const noexcept { return prefix_; }
  const Tail& tail() const noexcept { return tail_; }
  const CycleTail* cycle_tail() const noexcept { return std::get_if<CycleTail>(&tail_); }
  const UniversalTail* universal_tail() const noexcept { return std::get_if<UniversalTail>(&tail_); }

  /// Canonical text form; parse(to_string()) reproduces the sequence exactly.
  std::string to_string() const;

  friend bool operator==(const PrimeSeqSpec&, const PrimeSeqSpec&) = default;

 private:
  PrimeSeqSpec(std::vector<Prime> prefix, Tail tail);

  std::vector<Prime> prefix_;
  Tail tail_;
};

/// Sequential reader over p_start, p_start+1, ...; cheaper than repeated
/// nth_prime calls for long walks.
class TermCursor {
 public:
  explicit TermCursor(const PrimeSeqSpec& spec, std::uint64_t start = 1);

  /// Index of the term the next call to next() returns.
  std::uint64_t index() const noexcept { return index_; }
  Prime next();

 private:
  Prime admissible(std::uint64_t j);

  PrimeSeqSpec spec_;
  std::uint64_t index_;
  // Universal tails: current block and offset within it.
  std::uint64_t block_ = 0;
  std::uint64_t offset_ = 0;
  std::vector<Prime> admissible_;
  std::size_t prime_index_ = 0;
};

/// p_n, n >= 1.
Prime nth_prime(const PrimeSeqSpec& spec, std::uint64_t n);

/// p_m * p_{m+1} * ... * p_{n-1}; 1 when m == n.
Integer term_product(const PrimeSeqSpec& spec, std::uint64_t m, std::uint64_t n);

struct InfOccurSet {
  enum class Kind { AllPrimesExcept, ExactlySet };

  Kind kind;
  std::vector<Prime> primes;  // sorted, unique

  bool contains(Prime q) const;

  friend bool operator==(const InfOccurSet&, const InfOccurSet&) = default;
};

/// The primes occurring infinitely often.
InfOccurSet infinitely_occurring(const PrimeSeqSpec& spec);
/// S(P): the primes occurring only finitely often (possibly zero times).
InfOccurSet finitely_occurring(const PrimeSeqSpec& spec);

/// Both throw Error(NotPrime) when q is not prime.
bool occurs_infinitely_often(const PrimeSeqSpec& spec, Prime q);
bool in_S(const PrimeSeqSpec& spec, Prime q);

struct SClassification {
  enum class Kind { Empty, FiniteNonempty, Infinite };

  Kind kind;
  std::vector<Prime> primes;  // populated for FiniteNonempty

  friend bool operator==(const SClassification&, const SClassification&) = default;
};

SClassification s_classification(const PrimeSeqSpec& spec);

/// P ~ Q: finitely many deletions make every prime occur equally often.
/// Decided on the sets of infinitely occurring primes.
bool equivalent(const PrimeSeqSpec& p, const PrimeSeqSpec& q);

/// The sequence with its first m terms removed.
PrimeSeqSpec shift(const PrimeSeqSpec& spec, std::uint64_t m);

/// For q in S(P): index of the last term equal to q, or 0 when q never
/// occurs. Throws Error(InvalidArgument) if q occurs infinitely often.
std::uint64_t last_occurrence(const PrimeSeqSpec& spec, Prime q);

/// For q in S(P): the total number of terms equal to q.
std::uint64_t occurrence_count(const PrimeSeqSpec& spec, Prime q);

}  // namespace solenoid
