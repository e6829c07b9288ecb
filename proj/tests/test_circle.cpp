#include <doctest.h>

#include <vector>

#include "solenoid/circle.hpp"
#include "solenoid/error.hpp"

using namespace solenoid;

namespace {

Angle A(const char* text) { return Angle::parse(text); }
Arc arc(const char* text) { return Arc::parse(text); }

std::vector<Angle> all_angles_up_to(int max_den) {
  std::vector<Angle> out;
  for (int d = 1; d <= max_den; ++d) {
    for (int n = 0; n < d; ++n) {
      Angle a = Angle::from_fraction(n, d);
      if (a.den() == d) out.push_back(a);
    }
  }
  return out;
}

// Brute-force reference for roots_of_unity_in_arc: test every a/N directly.
std::vector<Angle> roots_by_enumeration(int n, const Arc& a) {
  std::vector<Angle> out;
  for (int i = 0; i < n; ++i) {
    Angle x = Angle::from_fraction(i, n);
    if (a.contains(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("angles are stored reduced in [0, 1)") {
  CHECK(Angle::from_fraction(15, 25) == A("3/5"));
  CHECK(Angle::from_fraction(-1, 4) == A("3/4"));
  CHECK(Angle::from_fraction(7, 7).to_string() == "0/1");
  CHECK(Angle::from_fraction(5, -3) == A("1/3"));
  CHECK(A("6/8").den() == 4);
  CHECK(A("0").to_string() == "0/1");
  CHECK_THROWS_AS(A("1/0"), ParseError);
  CHECK_THROWS_AS(A("x"), ParseError);
}

TEST_CASE("angle_add") {
  CHECK(angle_add(A("1/3"), A("1/3")) == A("2/3"));
  CHECK(angle_add(A("1/2"), A("1/2")).to_string() == "0/1");
  CHECK(angle_add(A("3/25"), A("14/25")) == A("17/25"));
}

TEST_CASE("angle_scale") {
  CHECK(angle_scale(A("1/6"), 3) == A("1/2"));
  CHECK(angle_scale(A("5/7"), 1) == A("5/7"));
  CHECK(angle_scale(A("3/25"), 5) == A("3/5"));
  CHECK(angle_scale(A("3/25"), 0).is_zero());
}

TEST_CASE("angle_unscale") {
  // 2^-1 = 13 mod 25 and 3 * 13 = 39 = 14 mod 25.
  CHECK(angle_unscale(A("3/25"), 2) == A("14/25"));
  CHECK(angle_scale(A("14/25"), 2) == A("3/25"));
  CHECK(angle_unscale(A("0/1"), 7).is_zero());
  CHECK(angle_unscale(A("0/1"), 2).is_zero());

  try {
    angle_unscale(A("1/2"), 2);
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCoprime);
  }
}

TEST_CASE("group axioms hold exhaustively for denominators <= 60") {
  const auto angles = all_angles_up_to(60);
  const Angle zero;
  // Associativity over a sparser sub-grid keeps the cubic loop affordable.
  std::vector<Angle> sparse;
  for (std::size_t i = 0; i < angles.size(); i += 13) sparse.push_back(angles[i]);

  for (const auto& a : angles) {
    CHECK(angle_add(a, zero) == a);
    Angle inv = Angle::from_fraction(a.den() - a.num(), a.den());
    CHECK(angle_add(a, inv).is_zero());
    CHECK(angle_negate(a) == inv);
  }
  for (const auto& a : sparse) {
    for (const auto& b : angles) {
      CHECK(angle_add(a, b) == angle_add(b, a));
      for (const auto& c : sparse) {
        CHECK(angle_add(angle_add(a, b), c) == angle_add(a, angle_add(b, c)));
      }
    }
  }
}

TEST_CASE("scale order formula and unscale round trip") {
  for (const auto& a : all_angles_up_to(60)) {
    for (int k = 0; k <= 12; ++k) {
      Integer expected = a.den() / boost::multiprecision::gcd(Integer(k), a.den());
      CHECK(angle_scale(a, k).order() == expected);
    }
    for (int p : {2, 3, 5, 7, 11, 13}) {
      if (boost::multiprecision::gcd(Integer(p), a.den()) != 1) continue;
      CHECK(angle_scale(angle_unscale(a, p), p) == a);
      CHECK(angle_unscale(angle_scale(a, p), p) == a);
      CHECK(angle_unscale(a, p).den() == a.den());
    }
  }
}

TEST_CASE("arcs are open and wrap mod 1") {
  Arc a = arc("9/10+1/5");
  CHECK(a.contains(A("0/1")));
  CHECK(a.contains(A("19/20")));
  CHECK(a.contains(A("1/20")));
  CHECK_FALSE(a.contains(A("9/10")));
  CHECK_FALSE(a.contains(A("1/10")));
  CHECK(a.to_string() == "9/10+1/5");

  Arc full = arc("1/4+1");
  CHECK_FALSE(full.contains(A("1/4")));
  CHECK(full.contains(A("1/5")));

  CHECK_THROWS_AS(arc("1+1/2"), ParseError);
  CHECK_THROWS_AS(arc("0+0"), ParseError);
  CHECK_THROWS_AS(arc("0+3/2"), ParseError);
  CHECK_THROWS_AS(arc("1/2"), ParseError);
  CHECK_THROWS_AS(Arc(Rational(1, 2), Rational(0)), Error);
}

TEST_CASE("roots_of_unity_in_arc") {
  CHECK(roots_of_unity_in_arc(25, arc("1/10+1/10")) == std::vector<Angle>{A("3/25"), A("4/25")});
  CHECK(roots_of_unity_in_arc(5, arc("1/10+1/10")).empty());
  CHECK(roots_of_unity_in_arc(1, arc("9/10+1/5")) == std::vector<Angle>{A("0/1")});
  CHECK(first_root_of_unity_in_arc(25, arc("1/10+1/10")) == A("3/25"));
  CHECK_FALSE(first_root_of_unity_in_arc(5, arc("1/10+1/10")).has_value());
  CHECK(first_root_of_unity_in_arc(7, arc("9/10+1/5")) == A("0/1"));
}

TEST_CASE("roots_of_unity_in_arc matches direct enumeration") {
  const std::vector<const char*> arcs{"0+1", "1/3+1", "1/10+1/10", "9/10+1/5", "7/11+2/3",
                                      "0+1/7", "1/2+1/2", "99/100+1/50", "1/6+1/3"};
  for (const char* text : arcs) {
    Arc a = arc(text);
    for (int n = 1; n <= 40; ++n) {
      auto expected = roots_by_enumeration(n, a);
      CHECK(roots_of_unity_in_arc(n, a) == expected);
      auto first = first_root_of_unity_in_arc(n, a);
      CHECK(first.has_value() == !expected.empty());
      if (first) CHECK(*first == expected.front());
    }
  }
}

TEST_CASE("a full circle minus a non-torsion point holds every N-torsion point") {
  // Start 1/97 is not N-torsion for N < 97.
  Arc a = arc("1/97+1");
  for (int n = 1; n <= 60; ++n) {
    CHECK(roots_of_unity_in_arc(n, a).size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("arc_preimage_component") {
  CHECK(arc_preimage_component(arc("1/10+1/10"), 2, 0) == arc("1/20+1/20"));
  CHECK(arc_preimage_component(arc("1/10+1/10"), 2, 1) == arc("11/20+1/20"));
  CHECK(arc_preimage_component(arc("0+1"), 3, 0) == arc("0+1/3"));
  CHECK_THROWS_AS(arc_preimage_component(arc("0+1"), 3, 3), Error);

  // Every component lands inside the original arc under t -> c t; sample
  // the midpoint of each component.
  for (const char* text : {"1/10+1/10", "9/10+1/5", "0+1", "2/7+3/5"}) {
    Arc base = arc(text);
    for (int c = 1; c <= 12; ++c) {
      for (int which = 0; which < c; ++which) {
        Arc comp = arc_preimage_component(base, c, which);
        Rational mid = comp.start() + comp.length() / 2;
        CHECK(base.contains(Rational(c) * mid));
      }
    }
  }
}
