#include <doctest.h>

#include <random>

#include "solenoid/covering.hpp"
#include "solenoid/dynamics.hpp"
#include "solenoid/error.hpp"
#include "solenoid/numtheory.hpp"
#include "support/fixtures.hpp"

using namespace solenoid;

namespace {

PrimeSeqSpec S(const char* text) { return PrimeSeqSpec::parse(text); }
Angle A(const char* text) { return Angle::parse(text); }
Arc arc(const char* text) { return Arc::parse(text); }

TruncatedPoint iterate(TruncatedPoint x, const Integer& k, const Integer& times) {
  for (Integer i = 0; i < times; ++i) x = potency(x, k);
  return x;
}

// Least n >= 1 with (h^k)^n(x) == x, by iteration.
Integer period_by_iteration(const TruncatedPoint& x, const Integer& k, const Integer& bound) {
  TruncatedPoint y = x;
  for (Integer n = 1; n <= bound; ++n) {
    y = potency(y, k);
    if (y == x) return n;
  }
  return 0;
}

}  // namespace

TEST_CASE("euler_totient") {
  CHECK(euler_totient(1) == 1);
  CHECK(euler_totient(25) == 20);
  CHECK(euler_totient(9) == 6);
  for (std::uint64_t m = 1; m <= 500; ++m) {
    CHECK(euler_totient(m) == solenoid::testing::brute_totient(m));
  }
  CHECK_THROWS_AS(euler_totient(0), Error);
}

TEST_CASE("Euler's theorem for prime powers") {
  for (int q : {2, 3, 5, 7, 11, 13}) {
    for (unsigned m = 1; m <= 3; ++m) {
      const Integer qm = nt::ipow(q, m);
      for (int k = 1; k <= 50; ++k) {
        if (k % q == 0) continue;
        const auto phi = static_cast<unsigned>(euler_totient(qm));
        CHECK((nt::ipow(k, phi) - 1) % qm == 0);
      }
    }
  }
}

TEST_CASE("classify_periodic") {
  using K = PeriodicClass::Kind;
  CHECK(classify_periodic(S("universal"), 2) == PeriodicClass{K::OnlyIdentity, 5, {}});
  CHECK(classify_periodic(S("cycle=[2]"), 3) == PeriodicClass{K::Dense, 6, {5}});
  CHECK(classify_periodic(S("cycle=[2]"), 2) == PeriodicClass{K::Dense, 6, {3}});
  CHECK(classify_periodic(S("universal=exclude[2]"), 2) == PeriodicClass{K::OnlyIdentity, 7, {2}});
  CHECK(classify_periodic(S("universal=exclude[2]"), 3) == PeriodicClass{K::Dense, 7, {2}});
  CHECK(classify_periodic(S("cycle=[2]"), 1).kind == K::AllPoints);
  CHECK(usable_prime(S("cycle=[2,3]"), 5) == Prime{7});
  CHECK_FALSE(usable_prime(S("universal=exclude[2,3]"), 12).has_value());
}

TEST_CASE("witness for the dyadic solenoid, k = 3") {
  const auto w = construct_periodic_witness(S("cycle=[2]"), 3, 1, arc("1/10+1/10"), 5);
  CHECK(w.point.at(1) == A("3/25"));
  CHECK(w.m == 2);
  CHECK(w.construction_level == 1);
  CHECK(w.claimed_period == 20);
  CHECK(w.least_period == 20);
  CHECK(iterate(w.point, 3, 20) == w.point);
  CHECK(period_by_iteration(w.point, 3, 100) == 20);
  CHECK(orbit(w.point, 3, 100).period == std::uint64_t{20});
  CHECK(orbit(w.point, 3, 100).pre_period == 0);
}

TEST_CASE("witness in an arc around 0 may be the identity") {
  const auto w = construct_periodic_witness(S("cycle=[2]"), 3, 1, arc("9/10+1/5"), 5);
  CHECK(w.arc.contains(w.point.at(1)));
  CHECK(w.point.is_identity());
  CHECK(w.least_period == 1);
}

TEST_CASE("witness placed past the last occurrence of q") {
  const auto seq = S("prefix=[5,5];cycle=[2]");
  const auto w = construct_periodic_witness(seq, 3, 1, arc("1/10+1/10"), 5);
  CHECK(w.construction_level == 3);
  CHECK(w.point.at(1) == angle_scale(w.point.at(3), 25));
  CHECK(w.point.at(2) == angle_scale(w.point.at(3), 5));
  CHECK(w.arc.contains(w.point.at(1)));
  CHECK(iterate(w.point, 3, w.claimed_period) == w.point);
  CHECK(w.claimed_period % w.least_period == 0);
}

TEST_CASE("witness errors") {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind([] { construct_periodic_witness(S("cycle=[2]"), 3, 1, arc("0+1/2"), 2); }) ==
        ErrorKind::QNotUsable);
  CHECK(kind([] { construct_periodic_witness(S("cycle=[2]"), 5, 1, arc("0+1/2"), 5); }) ==
        ErrorKind::QNotUsable);
  CHECK(kind([] { construct_periodic_witness(S("cycle=[2]"), 3, 1, arc("0+1/2"), 9); }) ==
        ErrorKind::NotPrime);
}

TEST_CASE("witnesses are sound over random arcs") {
  std::mt19937_64 rng(41);
  for (const auto& seq : solenoid::testing::spec_family()) {
    for (int k = 2; k <= 12; ++k) {
      const auto cls = classify_periodic(seq, k);
      if (cls.kind != PeriodicClass::Kind::Dense) continue;
      for (int i = 0; i < 5; ++i) {
        const std::uint64_t den = 1000;
        const Rational start(static_cast<long>(rng() % den), den);
        const Rational length(static_cast<long>(1 + rng() % 250), den);
        const std::uint64_t level = 1 + rng() % 5;
        const auto w = construct_periodic_witness(seq, k, level, Arc(start, length), cls.primes[0]);
        CHECK(w.arc.contains(w.point.at(level)));
        CHECK(w.claimed_period == nt::ipow(w.q, w.m - 1) * (w.q - 1));
        CHECK(w.claimed_period % w.least_period == 0);
        CHECK(nt::ipow(w.q, w.m) % w.point.order() == 0);
        CHECK(period_by_iteration(w.point, k, w.claimed_period) == w.least_period);
      }
    }
  }
}

TEST_CASE("count_periodic") {
  CHECK(count_periodic(S("cycle=[2]"), 3, 1) == 1);
  CHECK(count_periodic(S("cycle=[2]"), 3, 4) == 5);
  for (int k = 2; k <= 9; ++k) {
    for (unsigned m = 1; m <= 6; ++m) CHECK(count_periodic(S("universal"), k, m) == 1);
  }
  for (int k : {2, 4, 6, 8}) {
    for (unsigned m = 1; m <= 6; ++m) {
      CHECK(count_periodic(S("universal=exclude[2]"), k, m) == 1);
      CHECK(count_periodic(S("universal=exclude[2,3]"), k, m) >= 1);
    }
  }
  CHECK_THROWS_AS(count_periodic(S("cycle=[2]"), 1, 1), Error);
  CHECK_THROWS_AS(count_periodic(S("cycle=[2]"), 3, 0), Error);
}

TEST_CASE("count_periodic matches the size of the oracle fiber of h^(k^m - 1)") {
  for (const auto& seq : solenoid::testing::acceptance_grid()) {
    for (int k = 2; k <= 6; ++k) {
      for (unsigned m = 1; m <= 3; ++m) {
        const Integer n = nt::ipow(k, m) - 1;
        const auto fiber = fiber_oracle(seq, n, oracle_min_depth(seq, n));
        CHECK(count_periodic(seq, k, m) == fiber.degree);
      }
    }
  }
}

TEST_CASE("orbit") {
  const auto e = identity(S("cycle=[2]"), 3);
  auto r = orbit(e, 5, 10);
  CHECK(r.pre_period == 0);
  CHECK(r.period == std::uint64_t{1});

  const auto half = TruncatedPoint(S("cycle=[3]"), {A("1/2"), A("1/2"), A("1/2")});
  r = orbit(half, 2, 10);
  CHECK(r.pre_period == 1);
  CHECK(r.period == std::uint64_t{1});

  const auto x = TruncatedPoint::from_top(S("cycle=[2]"), 4, A("1/7"));
  r = orbit(x, 3, 2);
  CHECK_FALSE(r.period.has_value());
  r = orbit(x, 3, 20);
  CHECK(r.period == std::uint64_t{6});
}
