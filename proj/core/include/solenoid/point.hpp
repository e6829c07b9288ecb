#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "solenoid/circle.hpp"
#include "solenoid/primeseq.hpp"

namespace solenoid {

class TruncatedPoint;

namespace detail {
// Skips the compatibility check; for operations that preserve it by construction.
TruncatedPoint unchecked_point(PrimeSeqSpec seq, std::vector<Angle> coords);
}  // namespace detail

/// The first `depth` coordinates (z_1, ..., z_depth) of a point of the
/// solenoid over `seq`, in angle form. Stands for every full point agreeing
/// up to that level.
///
/// Invariant: coords[n] == angle_scale(coords[n+1], p_n) for 1 <= n < depth
/// (1-based), checked on construction.
class TruncatedPoint {
 public:
  /// Throws Error(Incompatible) if the coordinates violate the bonding
  /// relation and Error(InvalidArgument) if coords is empty.
  TruncatedPoint(PrimeSeqSpec seq, std::vector<Angle> coords);

  /// The unique compatible point of the given depth whose last coordinate
  /// is `top`; lower levels follow by the bonding maps.
  static TruncatedPoint from_top(PrimeSeqSpec seq, std::uint64_t depth, const Angle& top);

  const PrimeSeqSpec& seq() const noexcept { return seq_; }
  std::uint64_t depth() const noexcept { return coords_.size(); }
  const std::vector<Angle>& coords() const noexcept { return coords_; }

  /// 1-based coordinate access without bounds checks beyond vector::at.
  const Angle& at(std::uint64_t n) const { return coords_.at(n - 1); }

  /// Order in the solenoid's torsion subgroup: the order of the top coordinate.
  const Integer& order() const noexcept { return coords_.back().den(); }

  bool is_identity() const;

  /// "(a/b, c/d, ...)".
  std::string to_string() const;

  friend bool operator==(const TruncatedPoint&, const TruncatedPoint&) = default;

 private:
  struct Unchecked {};
  TruncatedPoint(Unchecked, PrimeSeqSpec seq, std::vector<Angle> coords)
      : seq_(std::move(seq)), coords_(std::move(coords)) {}

  friend TruncatedPoint detail::unchecked_point(PrimeSeqSpec, std::vector<Angle>);

  PrimeSeqSpec seq_;
  std::vector<Angle> coords_;
};

/// Lexicographic by coordinate value; the sequence must match (it is not compared).
bool coords_less(const TruncatedPoint& a, const TruncatedPoint& b);

/// e truncated to `depth` (>= 1).
TruncatedPoint identity(const PrimeSeqSpec& seq, std::uint64_t depth);

/// Coordinatewise group operation. Throws MismatchedSpec / MismatchedDepth.
TruncatedPoint multiply(const TruncatedPoint& x, const TruncatedPoint& y);
TruncatedPoint inverse(const TruncatedPoint& x);

/// Deepens x to new_depth by canonical same-order lifts: each new coordinate
/// is angle_unscale(previous, p_n). Throws Error(NotCoprime) naming the level
/// where p_n shares a factor with the order of x.
TruncatedPoint extend_back(const TruncatedPoint& x, std::uint64_t new_depth);

/// f_m^n(a) = (p_m ... p_{n-1}) * a. Throws BadIndices unless 1 <= m <= n.
Angle bonding(const PrimeSeqSpec& seq, std::uint64_t m, std::uint64_t n, const Angle& a);

/// pi_n(x) = z_n. Throws BadIndex unless 1 <= n <= depth.
Angle project(const TruncatedPoint& x, std::uint64_t n);

/// Shift isomorphism onto the solenoid over shift(seq, m - 1):
/// (z_1, z_2, ...) -> (z_m, z_{m+1}, ...). Throws BadIndex unless 1 <= m <= depth.
TruncatedPoint shift_iso(const TruncatedPoint& x, std::uint64_t m);

}  // namespace solenoid
