#include "solenoid/primeseq.hpp"

#include <algorithm>
#include <limits>

#include "scan.hpp"
#include "solenoid/error.hpp"
#include "solenoid/numtheory.hpp"

namespace solenoid {
namespace {

void require_primes(const std::vector<Prime>& primes) {
  for (Prime p : primes) {
    if (!nt::is_prime(p)) {
      throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
  }
}

void require_prime(Prime q) {
  if (!nt::is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
}

std::vector<Prime> support(std::vector<Prime> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

bool sorted_contains(const std::vector<Prime>& sorted, Prime q) {
  return std::binary_search(sorted.begin(), sorted.end(), q);
}

std::string join(const std::vector<Prime>& primes) {
  std::string out = "[";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(primes[i]);
  }
  return out + "]";
}

// Reads "[p, ...]" validating primality of each entry.
std::vector<Prime> parse_prime_list(detail::Scanner& scan) {
  std::vector<Prime> out;
  scan.expect('[', "'['");
  if (scan.consume(']')) return out;
  do {
    std::size_t at = 0;
    Integer value = scan.unsigned_integer(&at);
    if (value > std::numeric_limits<Prime>::max() ||
        !nt::is_prime(static_cast<Prime>(value))) {
      throw ParseError(ErrorKind::NotPrime, at,
                       "parse error at position " + std::to_string(at) + ": NotPrime(" +
                           value.str() + ")");
    }
    out.push_back(static_cast<Prime>(value));
  } while (scan.consume(','));
  scan.expect(']', "',' or ']'");
  return out;
}

}  // namespace

PrimeSeqSpec::PrimeSeqSpec(std::vector<Prime> prefix, Tail tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {}

PrimeSeqSpec PrimeSeqSpec::cycle(std::vector<Prime> prefix, std::vector<Prime> primes) {
  require_primes(prefix);
  require_primes(primes);
  if (primes.empty()) throw Error(ErrorKind::InvalidArgument, "cycle must be non-empty");
  return PrimeSeqSpec(std::move(prefix), CycleTail{std::move(primes)});
}

PrimeSeqSpec PrimeSeqSpec::universal(std::vector<Prime> prefix, std::vector<Prime> excluded,
                                     std::uint64_t first_block) {
  require_primes(prefix);
  require_primes(excluded);
  if (first_block < 1) throw Error(ErrorKind::InvalidArgument, "first block index must be >= 1");
  std::vector<Prime> unique = support(excluded);
  if (unique.size() != excluded.size()) {
    throw Error(ErrorKind::InvalidArgument, "excluded primes must not repeat");
  }
  return PrimeSeqSpec(std::move(prefix), UniversalTail{std::move(unique), first_block});
}

PrimeSeqSpec PrimeSeqSpec::parse(std::string_view text) {
  detail::Scanner scan(text);
  std::vector<Prime> prefix;
  if (scan.consume("prefix")) {
    scan.expect('=', "'='");
    prefix = parse_prime_list(scan);
    scan.expect(';', "';'");
  }
  if (scan.consume("cycle")) {
    scan.expect('=', "'='");
    std::size_t at = scan.position();
    std::vector<Prime> primes = parse_prime_list(scan);
    if (primes.empty()) {
      throw ParseError(ErrorKind::SyntaxError, at,
                       "parse error at position " + std::to_string(at) +
                           ": expected a non-empty cycle");
    }
    scan.expect_end();
    return cycle(std::move(prefix), std::move(primes));
  }
  if (scan.consume("universal")) {
    std::vector<Prime> excluded;
    std::size_t at = 0;
    if (scan.consume('=')) {
      scan.expect("exclude");
      scan.skip_ws();
      at = scan.position();
      excluded = parse_prime_list(scan);
    }
    if (support(excluded).size() != excluded.size()) {
      throw ParseError(ErrorKind::SyntaxError, at,
                       "parse error at position " + std::to_string(at) +
                           ": excluded primes must not repeat");
    }
    std::uint64_t first_block = 1;
    if (scan.consume(';')) {
      scan.expect("start");
      scan.expect('=', "'='");
      std::size_t start_at = 0;
      Integer value = scan.unsigned_integer(&start_at);
      if (value < 1 || value > std::numeric_limits<std::uint64_t>::max()) {
        throw ParseError(ErrorKind::SyntaxError, start_at,
                         "parse error at position " + std::to_string(start_at) +
                             ": expected a block index >= 1");
      }
      first_block = static_cast<std::uint64_t>(value);
    }
    scan.expect_end();
    return universal(std::move(prefix), std::move(excluded), first_block);
  }
  scan.fail("'cycle=[...]' or 'universal'");
}

std::string PrimeSeqSpec::to_string() const {
  std::string out;
  if (!prefix_.empty()) out += "prefix=" + join(prefix_) + ";";
  if (const auto* c = cycle_tail()) {
    out += "cycle=" + join(c->primes);
  } else {
    const auto& u = *universal_tail();
    out += "universal";
    if (!u.excluded.empty()) out += "=exclude" + join(u.excluded);
    if (u.first_block != 1) out += ";start=" + std::to_string(u.first_block);
  }
  return out;
}

TermCursor::TermCursor(const PrimeSeqSpec& spec, std::uint64_t start)
    : spec_(spec), index_(1) {
  if (start < 1) throw Error(ErrorKind::BadIndex, "sequence indices start at 1");
  if (const auto* u = spec_.universal_tail()) block_ = u->first_block;
  const std::uint64_t prefix_len = spec_.prefix().size();
  if (start <= prefix_len + 1) {
    index_ = start;
    return;
  }
  // Jump over the prefix and whole tail blocks without materialising terms.
  std::uint64_t t = start - prefix_len - 1;  // tail terms to skip
  index_ = start;
  if (const auto* c = spec_.cycle_tail()) {
    offset_ = t % c->primes.size();
    return;
  }
  while (t >= block_) {
    t -= block_;
    ++block_;
  }
  offset_ = t;
}

Prime TermCursor::admissible(std::uint64_t j) {
  const auto& excluded = spec_.universal_tail()->excluded;
  while (admissible_.size() <= j) {
    Prime p = nt::prime_at(prime_index_++);
    if (!sorted_contains(excluded, p)) admissible_.push_back(p);
  }
  return admissible_[j];
}

Prime TermCursor::next() {
  const std::uint64_t prefix_len = spec_.prefix().size();
  const std::uint64_t n = index_++;
  if (n <= prefix_len) return spec_.prefix()[n - 1];
  if (const auto* c = spec_.cycle_tail()) {
    Prime p = c->primes[offset_];
    offset_ = (offset_ + 1) % c->primes.size();
    return p;
  }
  Prime p = admissible(offset_);
  if (++offset_ == block_) {
    offset_ = 0;
    ++block_;
  }
  return p;
}

Prime nth_prime(const PrimeSeqSpec& spec, std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::BadIndex, "sequence indices start at 1");
  TermCursor cursor(spec, n);
  return cursor.next();
}

Integer term_product(const PrimeSeqSpec& spec, std::uint64_t m, std::uint64_t n) {
  if (m < 1 || m > n) {
    throw Error(ErrorKind::BadIndices,
                "term product needs 1 <= m <= n, got m=" + std::to_string(m) +
                    " n=" + std::to_string(n));
  }
  Integer product = 1;
  TermCursor cursor(spec, m);
  for (std::uint64_t i = m; i < n; ++i) product *= cursor.next();
  return product;
}

bool InfOccurSet::contains(Prime q) const {
  bool listed = sorted_contains(primes, q);
  return kind == Kind::ExactlySet ? listed : !listed;
}

InfOccurSet infinitely_occurring(const PrimeSeqSpec& spec) {
  if (const auto* c = spec.cycle_tail()) {
    return {InfOccurSet::Kind::ExactlySet, support(c->primes)};
  }
  return {InfOccurSet::Kind::AllPrimesExcept, spec.universal_tail()->excluded};
}

InfOccurSet finitely_occurring(const PrimeSeqSpec& spec) {
  InfOccurSet inf = infinitely_occurring(spec);
  inf.kind = inf.kind == InfOccurSet::Kind::ExactlySet ? InfOccurSet::Kind::AllPrimesExcept
                                                       : InfOccurSet::Kind::ExactlySet;
  return inf;
}

bool occurs_infinitely_often(const PrimeSeqSpec& spec, Prime q) {
  require_prime(q);
  return infinitely_occurring(spec).contains(q);
}

bool in_S(const PrimeSeqSpec& spec, Prime q) { return !occurs_infinitely_often(spec, q); }

SClassification s_classification(const PrimeSeqSpec& spec) {
  if (spec.cycle_tail() != nullptr) return {SClassification::Kind::Infinite, {}};
  const auto& excluded = spec.universal_tail()->excluded;
  if (excluded.empty()) return {SClassification::Kind::Empty, {}};
  return {SClassification::Kind::FiniteNonempty, excluded};
}

bool equivalent(const PrimeSeqSpec& p, const PrimeSeqSpec& q) {
  return infinitely_occurring(p) == infinitely_occurring(q);
}

PrimeSeqSpec shift(const PrimeSeqSpec& spec, std::uint64_t m) {
  const auto& prefix = spec.prefix();
  if (m <= prefix.size()) {
    std::vector<Prime> rest(prefix.begin() + static_cast<std::ptrdiff_t>(m), prefix.end());
    if (const auto* c = spec.cycle_tail()) return PrimeSeqSpec::cycle(std::move(rest), c->primes);
    const auto& u = *spec.universal_tail();
    return PrimeSeqSpec::universal(std::move(rest), u.excluded, u.first_block);
  }
  std::uint64_t t = m - prefix.size();
  if (const auto* c = spec.cycle_tail()) {
    std::vector<Prime> rotated = c->primes;
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(t % rotated.size()),
                rotated.end());
    return PrimeSeqSpec::cycle({}, std::move(rotated));
  }
  // Universal: drop whole blocks, keep the remainder of a partially consumed
  // block as the new prefix.
  const auto& u = *spec.universal_tail();
  std::uint64_t block = u.first_block;
  while (t >= block) {
    t -= block;
    ++block;
  }
  std::vector<Prime> rest;
  if (t != 0) {
    TermCursor cursor(spec, m + 1);
    for (std::uint64_t i = t; i < block; ++i) rest.push_back(cursor.next());
    ++block;
  }
  return PrimeSeqSpec::universal(std::move(rest), u.excluded, block);
}

std::uint64_t last_occurrence(const PrimeSeqSpec& spec, Prime q) {
  if (occurs_infinitely_often(spec, q)) {
    throw Error(ErrorKind::InvalidArgument,
                std::to_string(q) + " occurs infinitely often; it has no last occurrence");
  }
  // Finitely occurring primes never appear in the tail.
  const auto& prefix = spec.prefix();
  for (std::size_t i = prefix.size(); i > 0; --i) {
    if (prefix[i - 1] == q) return i;
  }
  return 0;
}

std::uint64_t occurrence_count(const PrimeSeqSpec& spec, Prime q) {
  if (occurs_infinitely_often(spec, q)) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " occurs infinitely often");
  }
  const auto& prefix = spec.prefix();
  return static_cast<std::uint64_t>(std::count(prefix.begin(), prefix.end(), q));
}

}  // namespace solenoid
