#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "solenoid/integer.hpp"
#include "solenoid/primeseq.hpp"

namespace solenoid {

/// A reduced rational num/den, den >= 1. Whether it belongs to the group of
/// P-adic rationals m / (p_1 ... p_n) is a separate question (is_member).
class PadicRational {
 public:
  PadicRational() = default;
  PadicRational(const Integer& num, const Integer& den);
  explicit PadicRational(const Rational& value);

  /// "num/den" or a bare integer; sign allowed on num. Throws ParseError.
  static PadicRational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  Rational value() const { return Rational(num_, den_); }
  std::string to_string() const { return num_.str() + "/" + den_.str(); }

  friend PadicRational operator+(const PadicRational& a, const PadicRational& b) {
    return PadicRational(a.value() + b.value());
  }

  friend bool operator==(const PadicRational&, const PadicRational&) = default;

 private:
  Integer num_{0};
  Integer den_{1};
};

/// den(x) divides p_1 ... p_n for some n.
bool is_member(const PrimeSeqSpec& seq, const PadicRational& x);

/// The group is q-divisible exactly when q occurs infinitely often.
/// Throws Error(NotPrime).
bool is_q_divisible(const PrimeSeqSpec& seq, Prime q);

/// x / q when it is still a member, otherwise nullopt. Throws Error(NotMember)
/// if x itself is not a member and Error(NotPrime) if q is not prime.
std::optional<PadicRational> divide_witness(const PrimeSeqSpec& seq, const PadicRational& x,
                                            Prime q);

}  // namespace solenoid
