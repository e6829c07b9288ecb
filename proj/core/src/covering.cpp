#include "solenoid/covering.hpp"

#include <algorithm>
#include <set>

#include "solenoid/error.hpp"
#include "solenoid/numtheory.hpp"

namespace solenoid {
namespace {

void require_positive(const Integer& k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1, got " + k.str());
}

std::vector<Prime> first_terms(const PrimeSeqSpec& seq, std::uint64_t count) {
  std::vector<Prime> out;
  out.reserve(count);
  TermCursor cursor(seq);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(cursor.next());
  return out;
}

void require_depth(std::uint64_t depth, std::uint64_t minimum) {
  if (depth < minimum) {
    throw Error(ErrorKind::DepthTooShallow, "depth " + std::to_string(depth) +
                                                " is below the required level " +
                                                std::to_string(minimum));
  }
}

}  // namespace

TruncatedPoint potency(const TruncatedPoint& x, const Integer& k) {
  require_positive(k);
  std::vector<Angle> coords;
  coords.reserve(x.depth());
  for (const auto& a : x.coords()) coords.push_back(angle_scale(a, k));
  // Scaling commutes with the bonding maps, so compatibility is preserved.
  return detail::unchecked_point(x.seq(), std::move(coords));
}

Integer degree(const PrimeSeqSpec& seq, const Integer& k) {
  require_positive(k);
  if (const auto* c = seq.cycle_tail()) {
    Integer s = k;
    for (Prime p : c->primes) s = nt::strip_factor(s, p);
    return s;
  }
  Integer s = 1;
  for (Prime q : seq.universal_tail()->excluded) {
    s *= nt::ipow(q, nt::valuation(k, q));
  }
  return s;
}

std::uint64_t stabilization_level(const PrimeSeqSpec& seq, const Integer& k) {
  Integer s = degree(seq, k);
  const auto& prefix = seq.prefix();
  for (std::size_t i = prefix.size(); i > 0; --i) {
    if (s % prefix[i - 1] == 0) return i + 1;
  }
  return 1;
}

FiberReport fiber_over_identity(const PrimeSeqSpec& seq, const Integer& k, std::uint64_t depth) {
  const Integer s = degree(seq, k);
  const std::uint64_t level = stabilization_level(seq, k);
  require_depth(depth, level);

  const std::vector<Prime> terms = first_terms(seq, depth);
  std::vector<Angle> coords(depth);
  coords[level - 1] = Angle::from_fraction(1, s);
  for (std::uint64_t n = level + 1; n <= depth; ++n) {
    coords[n - 1] = angle_unscale(coords[n - 2], terms[n - 2]);
  }
  for (std::uint64_t n = level - 1; n >= 1; --n) {
    coords[n - 1] = angle_scale(coords[n], terms[n - 1]);
  }
  const TruncatedPoint generator = detail::unchecked_point(seq, std::move(coords));

  FiberReport report{k, s, {}, level};
  TruncatedPoint power = identity(seq, depth);
  for (Integer j = 0; j < s; ++j) {
    report.representatives.push_back(power);
    power = multiply(power, generator);
  }
  std::sort(report.representatives.begin(), report.representatives.end(), coords_less);
  return report;
}

std::uint64_t oracle_min_depth(const PrimeSeqSpec& seq, const Integer& k) {
  require_positive(k);
  const std::uint64_t prefix_len = seq.prefix().size();
  if (const auto* c = seq.cycle_tail()) {
    unsigned max_exponent = 0;
    for (const auto& pp : nt::factorize(k)) max_exponent = std::max(max_exponent, pp.exponent);
    return prefix_len + c->primes.size() * max_exponent + 1;
  }
  return prefix_len + 1;
}

FiberReport fiber_oracle(const PrimeSeqSpec& seq, const Integer& k, std::uint64_t depth) {
  require_positive(k);
  if (k > (Integer(1) << 24)) {
    throw Error(ErrorKind::InvalidArgument, "fiber oracle enumerates Z/k; k = " + k.str() +
                                                " is too large");
  }
  require_depth(depth, oracle_min_depth(seq, k));
  const auto modulus = static_cast<std::uint64_t>(k);
  const std::uint64_t prefix_len = seq.prefix().size();

  unsigned max_exponent = 1;
  for (const auto& pp : nt::factorize(k)) max_exponent = std::max(max_exponent, pp.exponent);

  // Number of terms p_depth, p_depth+1, ... after which the image chain in
  // Z/k can no longer shrink.
  std::uint64_t horizon = 0;
  if (const auto* c = seq.cycle_tail()) {
    horizon = (depth <= prefix_len ? prefix_len - depth + 1 : 0) +
              c->primes.size() * max_exponent;
  } else {
    const auto& u = *seq.universal_tail();
    // Only admissible primes dividing k act non-bijectively on Z/k. Block r
    // onward contains all of them, r being the admissible index of the largest.
    Prime largest = 0;
    for (const auto& pp : nt::factorize(k)) {
      const auto q = static_cast<Prime>(pp.prime);
      if (!std::binary_search(u.excluded.begin(), u.excluded.end(), q)) largest = q;
    }
    std::uint64_t r = 0;
    for (std::size_t i = 0; largest != 0 && nt::prime_at(i) <= largest; ++i) {
      if (!std::binary_search(u.excluded.begin(), u.excluded.end(), nt::prime_at(i))) ++r;
    }
    if (r != 0) {
      const std::uint64_t tail_pos = depth - prefix_len;  // 1-based tail index of p_depth
      std::uint64_t block = u.first_block;
      std::uint64_t consumed = 0;  // tail terms in blocks before `block`
      while (consumed + block < tail_pos) {
        consumed += block;
        ++block;
      }
      const std::uint64_t last_block = std::max(block + 1, r) + max_exponent - 1;
      std::uint64_t end = consumed;
      for (std::uint64_t b = block; b <= last_block; ++b) end += b;
      horizon = end - (tail_pos - 1);
    }
  }

  std::vector<char> image(modulus, 1);
  TermCursor cursor(seq, depth);
  for (std::uint64_t t = 0; t < horizon; ++t) {
    const std::uint64_t p = cursor.next() % modulus;
    std::vector<char> next(modulus, 0);
    for (std::uint64_t a = 0; a < modulus; ++a) {
      if (image[a] != 0) {
        next[p * a % modulus] = 1;  // both factors < 2^24
      }
    }
    image.swap(next);
  }

  const std::vector<Prime> terms = first_terms(seq, depth);
  FiberReport report{k, 0, {}, 1};
  for (std::uint64_t top = 0; top < modulus; ++top) {
    if (image[top] == 0) continue;
    std::vector<std::uint64_t> residues(depth);
    residues[depth - 1] = top;
    for (std::uint64_t n = depth - 1; n >= 1; --n) {
      residues[n - 1] = terms[n - 1] % modulus * residues[n] % modulus;
    }
    std::vector<Angle> coords;
    coords.reserve(depth);
    for (auto a : residues) coords.push_back(Angle::from_fraction(a, k));
    report.representatives.push_back(TruncatedPoint(seq, std::move(coords)));
  }
  report.degree = report.representatives.size();
  std::sort(report.representatives.begin(), report.representatives.end(), coords_less);

  // Smallest level at which truncation still separates the fiber.
  for (std::uint64_t level = 1; level <= depth; ++level) {
    std::set<std::vector<Angle>> seen;
    for (const auto& r : report.representatives) {
      seen.emplace(r.coords().begin(), r.coords().begin() + static_cast<std::ptrdiff_t>(level));
    }
    if (seen.size() == report.representatives.size()) {
      report.stabilization_level = level;
      break;
    }
  }
  return report;
}

bool admits_k_fold(const PrimeSeqSpec& seq, const Integer& k) { return degree(seq, k) == k; }

bool is_homeomorphism(const PrimeSeqSpec& seq, const Integer& k) { return degree(seq, k) == 1; }

}  // namespace solenoid
