#include "solenoid/circle.hpp"

#include <algorithm>

#include "scan.hpp"
#include "solenoid/error.hpp"
#include "solenoid/numtheory.hpp"

namespace solenoid {
namespace {

Integer floor_of(const Rational& r) {
  const Integer& n = numerator(r);
  const Integer& d = denominator(r);
  Integer q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Integer ceil_of(const Rational& r) { return -floor_of(-r); }

// Frac part in [0, 1).
Rational frac_of(const Rational& r) { return r - Rational(floor_of(r)); }

}  // namespace

Angle Angle::from_fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "angle denominator must be non-zero");
  Integer n = num;
  Integer d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  n = mod_floor(n, d);
  if (n == 0) return Angle{};
  Integer g = nt::gcd(n, d);
  return Angle(n / g, d / g);
}

Angle Angle::from_rational(const Rational& value) {
  return from_fraction(numerator(value), denominator(value));
}

Angle Angle::parse(std::string_view text) {
  detail::Scanner scan(text);
  Rational value = scan.fraction(/*allow_sign=*/true);
  scan.expect_end();
  return from_rational(value);
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Angle angle_add(const Angle& a, const Angle& b) {
  return Angle::from_fraction(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Angle angle_negate(const Angle& a) { return Angle::from_fraction(-a.num(), a.den()); }

Angle angle_scale(const Angle& a, const Integer& k) {
  return Angle::from_fraction(mod_floor(k, a.den()) * a.num(), a.den());
}

Angle angle_unscale(const Angle& a, const Integer& p) {
  if (nt::gcd(mod_floor(p, a.den()), a.den()) != 1) {
    throw Error(ErrorKind::NotCoprime,
                "cannot unscale " + a.to_string() + " by " + p.str() +
                    ": gcd(p, order) > 1");
  }
  return Angle::from_fraction(a.num() * nt::mod_inverse(p, a.den()), a.den());
}

Arc::Arc(Rational start, Rational length) : start_(std::move(start)), length_(std::move(length)) {
  if (start_ < 0 || start_ >= 1) {
    throw Error(ErrorKind::InvalidArgument, "arc start must lie in [0, 1)");
  }
  if (length_ <= 0 || length_ > 1) {
    throw Error(ErrorKind::InvalidArgument, "arc length must lie in (0, 1]");
  }
}

Arc Arc::parse(std::string_view text) {
  detail::Scanner scan(text);
  std::size_t start_pos = scan.position();
  Rational start = scan.fraction(/*allow_sign=*/false);
  scan.expect('+', "'+' between arc start and length");
  std::size_t length_pos = scan.position();
  Rational length = scan.fraction(/*allow_sign=*/false);
  scan.expect_end();
  if (start >= 1) {
    throw ParseError(ErrorKind::SyntaxError, start_pos,
                     "parse error at position " + std::to_string(start_pos) +
                         ": arc start must lie in [0, 1)");
  }
  if (length <= 0 || length > 1) {
    throw ParseError(ErrorKind::SyntaxError, length_pos,
                     "parse error at position " + std::to_string(length_pos) +
                         ": arc length must lie in (0, 1]");
  }
  return Arc(start, length);
}

bool Arc::contains(const Rational& t) const {
  Rational offset = frac_of(t - start_);
  return offset > 0 && offset < length_;
}

std::string Arc::to_string() const {
  return solenoid::to_string(start_) + "+" + solenoid::to_string(length_);
}

namespace {

// Integer range (lo, hi) of numerators a with start < a/n < start + length,
// before reduction mod n. Has at most n elements since length <= 1.
std::pair<Integer, Integer> numerator_range(const Integer& n, const Arc& arc) {
  Rational lo = arc.start() * n;
  Rational hi = (arc.start() + arc.length()) * n;
  return {floor_of(lo) + 1, ceil_of(hi) - 1};
}

}  // namespace

std::vector<Angle> roots_of_unity_in_arc(const Integer& n, const Arc& arc) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "torsion order must be >= 1");
  auto [first, last] = numerator_range(n, arc);
  std::vector<Integer> residues;
  for (Integer a = first; a <= last; ++a) residues.push_back(mod_floor(a, n));
  std::sort(residues.begin(), residues.end());
  std::vector<Angle> out;
  out.reserve(residues.size());
  for (const auto& a : residues) out.push_back(Angle::from_fraction(a, n));
  return out;
}

std::optional<Angle> first_root_of_unity_in_arc(const Integer& n, const Arc& arc) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "torsion order must be >= 1");
  auto [first, last] = numerator_range(n, arc);
  if (first > last) return std::nullopt;
  // A multiple of n inside the range means the arc covers angle 0.
  Integer last_multiple = (last / n) * n;
  if (last_multiple >= first) return Angle{};
  return Angle::from_fraction(mod_floor(first, n), n);
}

Arc arc_preimage_component(const Arc& arc, const Integer& c, const Integer& which) {
  if (c < 1) throw Error(ErrorKind::InvalidArgument, "preimage degree must be >= 1");
  if (which < 0 || which >= c) {
    throw Error(ErrorKind::IndexOutOfRange,
                "component " + which.str() + " out of range for degree " + c.str());
  }
  return Arc((arc.start() + Rational(which)) / Rational(c), arc.length() / Rational(c));
}

}  // namespace solenoid
