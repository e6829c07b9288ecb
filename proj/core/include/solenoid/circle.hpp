#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solenoid/integer.hpp"

namespace solenoid {

/// A torsion point of the circle group, written additively as Q/Z: the
/// fraction num/den of a full turn. Always reduced with 0 <= num < den; the
/// zero angle is 0/1. The order of the point in the circle group is den.
class Angle {
 public:
  Angle() = default;

  /// Reduces num/den mod 1. den must be non-zero; signs are normalized.
  static Angle from_fraction(const Integer& num, const Integer& den);
  static Angle from_rational(const Rational& value);

  /// Parses "num/den" (or a bare integer). Throws ParseError.
  static Angle parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  const Integer& order() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  Rational value() const { return Rational(num_, den_); }

  std::string to_string() const { return num_.str() + "/" + den_.str(); }

  friend bool operator==(const Angle&, const Angle&) = default;
  // Ordered by position in [0, 1).
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

 private:
  Angle(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {}

  Integer num_{0};
  Integer den_{1};
};

Angle angle_add(const Angle& a, const Angle& b);
Angle angle_negate(const Angle& a);

/// k * a mod 1: the additive form of z -> z^k.
Angle angle_scale(const Angle& a, const Integer& k);

/// The unique b with den(b) == den(a) and p * b == a, i.e. the inverse of
/// z -> z^p on the den(a)-th roots of unity. Throws Error(NotCoprime) when
/// gcd(p, den(a)) > 1.
Angle angle_unscale(const Angle& a, const Integer& p);

/// Open arc { t mod 1 : start < t < start + length }, 0 <= start < 1,
/// 0 < length <= 1. A length-1 arc is the circle minus its start point.
class Arc {
 public:
  Arc(Rational start, Rational length);

  /// Parses "start+length", e.g. "1/10+1/10". Throws ParseError.
  static Arc parse(std::string_view text);

  const Rational& start() const noexcept { return start_; }
  const Rational& length() const noexcept { return length_; }

  bool contains(const Rational& t) const;
  bool contains(const Angle& a) const { return contains(a.value()); }

  std::string to_string() const;

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  Rational start_;
  Rational length_;
};

/// Every N-torsion angle a/N strictly inside the arc, ascending in [0, 1).
std::vector<Angle> roots_of_unity_in_arc(const Integer& n, const Arc& arc);

/// The smallest element of roots_of_unity_in_arc(n, arc), without building
/// the whole list.
std::optional<Angle> first_root_of_unity_in_arc(const Integer& n, const Arc& arc);

/// Component `which` (0 <= which < c) of the preimage of `arc` under t -> c*t:
/// start (start + which) / c, length length / c.
/// Throws Error(IndexOutOfRange).
Arc arc_preimage_component(const Arc& arc, const Integer& c, const Integer& which);

}  // namespace solenoid
