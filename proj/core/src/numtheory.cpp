#include "solenoid/numtheory.hpp"

#include <array>
#include <mutex>

#include "solenoid/error.hpp"

namespace solenoid {

std::string to_string(const Rational& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace solenoid

namespace solenoid::nt {
namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod_u64(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool witness_passes(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = pow_mod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : kBases) {
    if (!witness_passes(n, a, d, s)) return false;
  }
  return true;
}

Prime prime_at(std::size_t index) {
  static std::mutex mutex;
  static std::vector<Prime> table{2, 3, 5, 7, 11, 13};
  std::lock_guard lock(mutex);
  while (table.size() <= index) {
    Prime candidate = table.back() + 2;
    while (!is_prime(candidate)) candidate += 2;
    table.push_back(candidate);
  }
  return table[index];
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  // Extended Euclid on (a mod m, m).
  Integer old_r = mod_floor(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer quotient = old_r / r;
    Integer tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(ErrorKind::NotCoprime,
                a.str() + " has no inverse modulo " + m.str());
  }
  return mod_floor(old_s, m);
}

Integer pow_mod(Integer base, Integer exp, const Integer& m) {
  return boost::multiprecision::powm(mod_floor(base, m), exp, m);
}

Integer ipow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

unsigned valuation(Integer n, const Integer& p) {
  unsigned e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

Integer strip_factor(Integer n, const Integer& p) {
  while (n != 0 && n % p == 0) n /= p;
  return n;
}

std::vector<PrimePower> factorize(Integer n) {
  std::vector<PrimePower> out;
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument, "factorize expects n >= 1, got " + n.str());
  }
  auto take = [&](const Integer& p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.push_back({p, e});
  };
  take(2);
  take(3);
  // 6j +/- 1 wheel.
  for (Integer d = 5; d * d <= n; d += 6) {
    take(d);
    take(d + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

Integer totient(const Integer& n) {
  Integer result = 1;
  for (const auto& [q, l] : factorize(n)) {
    result *= ipow(q, l - 1) * (q - 1);
  }
  return result;
}

Integer multiplicative_order(const Integer& k, const Integer& n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "order modulus must be >= 1");
  if (n == 1) return 1;
  if (gcd(mod_floor(k, n), n) != 1) {
    throw Error(ErrorKind::NotCoprime, k.str() + " is not a unit modulo " + n.str());
  }
  Integer order = totient(n);
  for (const auto& [r, e] : factorize(order)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(k, order / r, n) != 1) break;
      order /= r;
    }
  }
  return order;
}

}  // namespace solenoid::nt
