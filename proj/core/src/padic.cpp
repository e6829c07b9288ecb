#include "solenoid/padic.hpp"

#include "scan.hpp"
#include "solenoid/error.hpp"
#include "solenoid/numtheory.hpp"

namespace solenoid {

namespace {

Rational checked_ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "denominator must be nonzero");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

}  // namespace

PadicRational::PadicRational(const Integer& num, const Integer& den)
    : PadicRational(checked_ratio(num, den)) {}

PadicRational::PadicRational(const Rational& value)
    : num_(numerator(value)), den_(denominator(value)) {}

PadicRational PadicRational::parse(std::string_view text) {
  detail::Scanner scan(text);
  Rational value = scan.fraction(/*allow_sign=*/true);
  scan.expect_end();
  return PadicRational(value);
}

bool is_member(const PrimeSeqSpec& seq, const PadicRational& x) {
  if (const auto* c = seq.cycle_tail()) {
    // Cycle primes supply any power; what is left must come from the prefix.
    Integer rest = x.den();
    for (Prime p : c->primes) rest = nt::strip_factor(rest, p);
    Integer available = 1;
    for (Prime p : seq.prefix()) available *= p;
    return available % rest == 0;
  }
  // Every prime outside the excluded set occurs infinitely often; an excluded
  // q is available only as often as the prefix lists it.
  for (Prime q : seq.universal_tail()->excluded) {
    if (nt::valuation(x.den(), q) > occurrence_count(seq, q)) return false;
  }
  return true;
}

bool is_q_divisible(const PrimeSeqSpec& seq, Prime q) { return occurs_infinitely_often(seq, q); }

std::optional<PadicRational> divide_witness(const PrimeSeqSpec& seq, const PadicRational& x,
                                            Prime q) {
  if (!nt::is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
  if (!is_member(seq, x)) {
    throw Error(ErrorKind::NotMember,
                x.to_string() + " is not a P-adic rational for " + seq.to_string());
  }
  PadicRational candidate(x.value() / Rational(Integer(q)));
  if (!is_member(seq, candidate)) return std::nullopt;
  return candidate;
}

}  // namespace solenoid
